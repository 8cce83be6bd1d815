#pragma once

#include <cstdint>
#include <cstdio>
#include <functional>

#include "hopf/gamma.hpp"
#include "hopf/group_models.hpp"

namespace hopf {

// The combinatorial seed of the group-like example family: a group G, a
// pointed magma X, a right G-set action on X fixing the base point, and a
// pointed map gamma : X -> G.
struct GSetDatum {
  FiniteGroup g;
  PointedMagma x;
  std::vector<std::vector<int>> act;  // act[x][g] = x <| g
  std::vector<int> gamma;             // gamma[x] in G

  int lhd(int xi, int gi) const { return act.at(xi).at(gi); }
};

// Checks the right G-set axioms, gamma(1_X) = 1_G, and the two
// compatibilities
//   (be1)  (x.y).z  = (x <| gamma(y) gamma(z) gamma(y.z)^{-1}) . (y.z)
//   (be3)  (x.y) <| g = (x <| gamma(y) g gamma(y <| g)^{-1}) . (y <| g)
// exhaustively, with tuple witnesses.
inline Report validate_gset_datum(const GSetDatum& d) {
  Report rep = validate_gset(RightGSet{d.x, d.act}, d.g);
  size_t nx = d.x.n, ng = d.g.n;
  bool shape = d.gamma.size() == nx;
  for (int v : d.gamma) shape = shape && v >= 0 && (size_t)v < ng;
  rep.add("gamma.shape", shape, Witness{{}, "gamma table", "", ""});
  if (!rep.ok()) return rep;

  rep.add("gamma.base", d.gamma[d.x.unit] == d.g.identity,
          Witness{{(size_t)d.x.unit}, "gamma(1_X)", std::to_string(d.gamma[d.x.unit]),
                  std::to_string(d.g.identity)});

  bool be1 = true;
  Witness w1;
  for (size_t x = 0; x < nx && be1; ++x)
    for (size_t y = 0; y < nx && be1; ++y)
      for (size_t z = 0; z < nx; ++z) {
        int lhs = d.x.op(d.x.op((int)x, (int)y), (int)z);
        int u = d.g.op(d.g.op(d.gamma[y], d.gamma[z]),
                       d.g.inv(d.gamma[d.x.op((int)y, (int)z)]));
        int rhs = d.x.op(d.lhd((int)x, u), d.x.op((int)y, (int)z));
        if (lhs != rhs) {
          be1 = false;
          w1 = Witness{{x, y, z},
                       "x=" + std::to_string(x) + ", y=" + std::to_string(y) +
                           ", z=" + std::to_string(z),
                       std::to_string(lhs), std::to_string(rhs)};
          break;
        }
      }
  rep.add("be1", be1, w1);

  bool be3 = true;
  Witness w3;
  for (size_t x = 0; x < nx && be3; ++x)
    for (size_t y = 0; y < nx && be3; ++y)
      for (size_t gi = 0; gi < ng; ++gi) {
        int lhs = d.lhd(d.x.op((int)x, (int)y), (int)gi);
        int u = d.g.op(d.g.op(d.gamma[y], (int)gi),
                       d.g.inv(d.gamma[d.lhd((int)y, (int)gi)]));
        int rhs = d.x.op(d.lhd((int)x, u), d.lhd((int)y, (int)gi));
        if (lhs != rhs) {
          be3 = false;
          w3 = Witness{{x, y, gi},
                       "x=" + std::to_string(x) + ", y=" + std::to_string(y) +
                           ", g=" + std::to_string(gi),
                       std::to_string(lhs), std::to_string(rhs)};
          break;
        }
      }
  rep.add("be3", be3, w3);
  return rep;
}

// Lifts the tables to a GammaDatum over k[G] and k[X].
inline GammaDatum to_gamma_datum(const GSetDatum& d, ScalarMode mode) {
  HopfAlgebra a = group_algebra(d.g, mode);
  FinBialgebra h = grouplike_carrier(d.x, mode);
  size_t nx = d.x.n, ng = d.g.n;
  LinMap lhd(tensor_space(h.space(), a.space()), h.space(), mode);
  for (size_t x = 0; x < nx; ++x)
    for (size_t gi = 0; gi < ng; ++gi)
      lhd.at(d.lhd((int)x, (int)gi), x * ng + gi) = Scalar::one(mode);
  LinMap gamma(h.space(), a.space(), mode);
  for (size_t x = 0; x < nx; ++x) gamma.at(d.gamma[x], x) = Scalar::one(mode);
  return GammaDatum{std::move(a), std::move(h), std::move(lhd), std::move(gamma)};
}

namespace detail {

inline ProductBialgebra gset_product_from_table(
    const GSetDatum& d, ScalarMode mode, Provenance kind,
    const std::function<std::pair<int, int>(int, int, int, int)>& table) {
  HopfAlgebra a = group_algebra(d.g, mode);
  FinBialgebra h = grouplike_carrier(d.x, mode);
  size_t ng = d.g.n, nx = d.x.n, np = ng * nx;
  FinCoalgebra pc = tensor_coalgebra(a.b.coa, h.coa);
  LinMap mult(tensor_space(pc.space, pc.space), pc.space, mode);
  for (size_t gi = 0; gi < ng; ++gi)
    for (size_t xi = 0; xi < nx; ++xi)
      for (size_t hi = 0; hi < ng; ++hi)
        for (size_t yi = 0; yi < nx; ++yi) {
          auto [go, xo] = table((int)gi, (int)xi, (int)hi, (int)yi);
          mult.at((size_t)go * nx + xo, (gi * nx + xi) * np + (hi * nx + yi)) =
              Scalar::one(mode);
        }
  Vec unit = zero_vec(np, mode);
  unit[(size_t)d.g.identity * nx + d.x.unit] = Scalar::one(mode);
  return ProductBialgebra{FinBialgebra{make_algebra(pc.space, mult, unit), pc}, kind,
                          a.space(), h.space()};
}

}  // namespace detail

// k[G] |x k[X] straight from the tables:
//   (g |x x)(h |x y) = g gamma(x) h gamma(y) gamma((x <| h).y)^{-1} |x (x <| h).y
inline ProductBialgebra build_gset_unified(const GSetDatum& d, ScalarMode mode) {
  Report v = validate_gset_datum(d);
  if (!v.ok()) throw std::invalid_argument("build_gset_unified: invalid datum\n" + v.str());
  return detail::gset_product_from_table(
      d, mode, Provenance::unified, [&d](int g, int x, int h, int y) {
        int xa = d.lhd(x, h);
        int xo = d.x.op(xa, y);
        int go = d.g.op(
            d.g.op(d.g.op(d.g.op(g, d.gamma[x]), h), d.gamma[y]), d.g.inv(d.gamma[xo]));
        return std::pair<int, int>(go, xo);
      });
}

// k[G] (*) k[X] from the group-like specialization of the general
// deformed multiplication:
//   (g (*) x)(h (*) y) = gh (*) (x <| (h gamma(y)^{-1})).y
inline ProductBialgebra build_gset_circled(const GSetDatum& d, ScalarMode mode) {
  Report v = validate_gset_datum(d);
  if (!v.ok()) throw std::invalid_argument("build_gset_circled: invalid datum\n" + v.str());
  return detail::gset_product_from_table(
      d, mode, Provenance::circled, [&d](int g, int x, int h, int y) {
        int u = d.g.op(h, d.g.inv(d.gamma[y]));
        return std::pair<int, int>(d.g.op(g, h), d.x.op(d.lhd(x, u), y));
      });
}

// The alternative parenthesized reading "x <| (h gamma(y))^{-1}" as it
// appears in print; kept only so the arbitration below can test it.
inline ProductBialgebra build_gset_circled_printed(const GSetDatum& d, ScalarMode mode) {
  return detail::gset_product_from_table(
      d, mode, Provenance::circled, [&d](int g, int x, int h, int y) {
        int u = d.g.inv(d.g.op(h, d.gamma[y]));
        return std::pair<int, int>(d.g.op(g, h), d.x.op(d.lhd(x, u), y));
      });
}

// Decides which reading of the deformed group-like multiplication the
// verified isomorphism phi(g |x x) = g gamma(x) (*) x actually validates.
struct CircledArbitration {
  bool formulas_differ = false;
  bool general_ok = false;  // the specialization of the deformed product law
  bool printed_ok = false;  // the printed parenthesization
  std::string detail;
};

inline CircledArbitration arbitrate_circled(const GSetDatum& d, ScalarMode mode) {
  CircledArbitration out;
  GammaDatum gd = to_gamma_datum(d, mode);
  InducedDatum ind = gamma_induced_datum(gd);
  if (!ind.datum) throw std::invalid_argument("arbitrate_circled: datum fails induction");
  ProductBialgebra unified = unified_product(*ind.datum).get();
  ProductBialgebra general = build_gset_circled(d, mode);
  ProductBialgebra printed = build_gset_circled_printed(d, mode);
  out.formulas_differ = general.b.alg.mult != printed.b.alg.mult;
  IsoResult ig = iso_to_circled(*ind.datum, gd.gamma, unified, general);
  IsoResult ip = iso_to_circled(*ind.datum, gd.gamma, unified, printed);
  out.general_ok = ig.ok();
  out.printed_ok = ip.ok();
  out.detail = std::string("candidates ") +
               (out.formulas_differ ? "differ" : "coincide") + "; deformed-law reading " +
               (out.general_ok ? "verified" : "refuted") + "; printed reading " +
               (out.printed_ok ? "verified" : "refuted");
  return out;
}

// ---------------------------------------------------------------------------
// Enumeration of the example family at desk scale
// ---------------------------------------------------------------------------

enum class OpFamily { piecewise, all };

struct GSetCatalogEntry {
  std::string group;
  size_t x_size = 0;
  std::string op;  // "piecewise" or "op<index>"
  size_t action_id = 0;
  std::vector<int> gamma;
  std::string fingerprint;
};

struct GSetCatalog {
  std::vector<GSetCatalogEntry> entries;
  // valid-gamma count per (group, |X|, op, action), in enumeration order
  std::vector<std::pair<std::string, size_t>> counts;
};

namespace detail {

// All right G-set action tables on the pointed set {0..n-1} with base 0:
// assignments g |-> permutation of {1..n-1}, composed contravariantly,
// enumerated by DFS with full closure propagation. Deterministic order.
inline std::vector<std::vector<std::vector<int>>> enumerate_actions(const FiniteGroup& g,
                                                                    size_t n) {
  std::vector<std::vector<int>> perms;  // permutations of 0..n-1 fixing 0
  {
    std::vector<int> p(n);
    for (size_t i = 0; i < n; ++i) p[i] = (int)i;
    // lexicographic over the images of 1..n-1
    std::vector<int> rest(p.begin() + (n > 0 ? 1 : 0), p.end());
    std::sort(rest.begin(), rest.end());
    do {
      std::vector<int> full(1, 0);
      full.insert(full.end(), rest.begin(), rest.end());
      perms.push_back(full);
    } while (std::next_permutation(rest.begin(), rest.end()));
  }
  auto pcompose = [&](const std::vector<int>& p, const std::vector<int>& q) {
    std::vector<int> r(n);
    for (size_t i = 0; i < n; ++i) r[i] = p[q[i]];
    return r;
  };
  size_t ng = g.n;
  std::vector<std::vector<std::vector<int>>> actions;
  std::vector<std::optional<std::vector<int>>> assign(ng);
  std::vector<int> identity_perm(n);
  for (size_t i = 0; i < n; ++i) identity_perm[i] = (int)i;

  std::function<bool()> close = [&]() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (size_t u = 0; u < ng; ++u) {
        if (!assign[u]) continue;
        for (size_t v = 0; v < ng; ++v) {
          if (!assign[v]) continue;
          // p_{u.v} = p_v o p_u (right action)
          std::vector<int> want = pcompose(*assign[v], *assign[u]);
          size_t w = (size_t)g.op((int)u, (int)v);
          if (!assign[w]) {
            assign[w] = want;
            changed = true;
          } else if (*assign[w] != want) {
            return false;
          }
        }
      }
    }
    return true;
  };

  std::function<void()> dfs = [&]() {
    size_t next = ng;
    for (size_t u = 0; u < ng; ++u)
      if (!assign[u]) {
        next = u;
        break;
      }
    if (next == ng) {
      std::vector<std::vector<int>> table(n, std::vector<int>(ng));
      for (size_t xi = 0; xi < n; ++xi)
        for (size_t u = 0; u < ng; ++u) table[xi][u] = (*assign[u])[xi];
      actions.push_back(std::move(table));
      return;
    }
    for (const auto& cand : perms) {
      auto saved = assign;
      assign[next] = cand;
      if (close()) dfs();
      assign = saved;
    }
  };

  assign[(size_t)g.identity] = identity_perm;
  if (close()) dfs();
  return actions;
}

// All unital operation tables on {0..n-1} with unit 0; the free cells are
// filled lexicographically. Intended for n <= 3.
inline std::vector<PointedMagma> enumerate_unital_ops(size_t n) {
  std::vector<PointedMagma> out;
  size_t cells = (n - 1) * (n - 1);
  size_t total = 1;
  for (size_t i = 0; i < cells; ++i) total *= n;
  for (size_t code = 0; code < total; ++code) {
    PointedMagma m;
    m.n = n;
    m.unit = 0;
    m.table.assign(n, std::vector<int>(n, 0));
    for (size_t a = 0; a < n; ++a) {
      m.table[a][0] = (int)a;
      m.table[0][a] = (int)a;
    }
    size_t rem = code;
    for (size_t a = 1; a < n; ++a)
      for (size_t b = 1; b < n; ++b) {
        m.table[a][b] = (int)(rem % n);
        rem /= n;
      }
    out.push_back(std::move(m));
  }
  return out;
}

inline std::string fnv_fingerprint(const ProductBialgebra& p) {
  uint64_t h = 1469598103934665603ull;
  auto feed = [&](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ull;
    }
  };
  feed(std::to_string(p.b.dim()) + ";");
  const LinMap& m = p.b.alg.mult;
  for (size_t r = 0; r < m.rows(); ++r)
    for (size_t c = 0; c < m.cols(); ++c)
      if (!m.at(r, c).is_zero())
        feed(std::to_string(r) + "," + std::to_string(c) + "=" + m.at(r, c).str() + ";");
  char buf[17];
  snprintf(buf, sizeof buf, "%016llx", (unsigned long long)h);
  return std::string(buf);
}

}  // namespace detail

// Iterates groups from the built-in catalog, pointed magmas from the
// requested family, valid actions, and gamma maps in lexicographic
// order; emits every datum passing (be1)/(be3) with a structure-constant
// fingerprint of its unified product. The all-ops family is desk-bounded
// to |X| <= 3.
inline GSetCatalog enumerate_gset_data(size_t max_g, size_t max_x, OpFamily fam,
                                       ScalarMode mode) {
  if (max_g > 8 || max_x > 5)
    throw std::invalid_argument("enumerate_gset_data: bounds exceed |G| <= 8, |X| <= 5");
  GSetCatalog cat;
  for (const FiniteGroup& g : small_groups(max_g)) {
    for (size_t nx = 1; nx <= max_x; ++nx) {
      std::vector<std::pair<std::string, PointedMagma>> ops;
      if (fam == OpFamily::piecewise) {
        ops.emplace_back("piecewise", piecewise_magma(nx));
      } else {
        if (nx > 3) continue;
        auto all = detail::enumerate_unital_ops(nx);
        for (size_t i = 0; i < all.size(); ++i)
          ops.emplace_back("op" + std::to_string(i), all[i]);
      }
      auto actions = detail::enumerate_actions(g, nx);
      for (auto& [opname, magma] : ops) {
        for (size_t ai = 0; ai < actions.size(); ++ai) {
          size_t valid = 0;
          // gamma maps with gamma(base) = identity, lexicographic
          size_t total = 1;
          for (size_t i = 1; i < nx; ++i) total *= g.n;
          for (size_t code = 0; code < total; ++code) {
            std::vector<int> gamma(nx, g.identity);
            size_t rem = code;
            for (size_t i = 1; i < nx; ++i) {
              gamma[i] = (int)(rem % g.n);
              rem /= g.n;
            }
            GSetDatum d{g, magma, actions[ai], gamma};
            if (!validate_gset_datum(d).ok()) continue;
            ++valid;
            GSetCatalogEntry e;
            e.group = g.name;
            e.x_size = nx;
            e.op = opname;
            e.action_id = ai;
            e.gamma = gamma;
            e.fingerprint = detail::fnv_fingerprint(build_gset_unified(d, mode));
            cat.entries.push_back(std::move(e));
          }
          cat.counts.emplace_back(g.name + "|X" + std::to_string(nx) + "|" + opname +
                                      "|a" + std::to_string(ai),
                                  valid);
        }
      }
    }
  }
  return cat;
}

}  // namespace hopf
