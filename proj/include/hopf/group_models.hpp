#pragma once

#include <string>
#include <vector>

#include "hopf/bialgebra.hpp"

namespace hopf {

// Finite group given by a Cayley table (entries are element indices).
struct FiniteGroup {
  std::string name;
  size_t n = 0;
  std::vector<std::vector<int>> table;
  int identity = 0;

  int op(int a, int b) const { return table.at(a).at(b); }

  int inv(int a) const {
    for (size_t b = 0; b < n; ++b)
      if (op(a, (int)b) == identity) return (int)b;
    throw std::invalid_argument("group element has no inverse");
  }
};

inline Report validate_group(const FiniteGroup& g) {
  Report rep;
  size_t n = g.n;
  bool shape = g.table.size() == n;
  for (auto& row : g.table) shape = shape && row.size() == n;
  if (shape)
    for (auto& row : g.table)
      for (int v : row) shape = shape && v >= 0 && (size_t)v < n;
  rep.add("group.table_shape", shape, Witness{{}, "table", "", ""});
  if (!shape) return rep;

  // Latin square
  bool latin = true;
  Witness lw;
  for (size_t i = 0; i < n && latin; ++i) {
    std::vector<bool> row(n, false), col(n, false);
    for (size_t j = 0; j < n; ++j) {
      if (row[g.table[i][j]] || col[g.table[j][i]]) {
        latin = false;
        lw = Witness{{i, j}, "row/col " + std::to_string(i), "", ""};
        break;
      }
      row[g.table[i][j]] = true;
      col[g.table[j][i]] = true;
    }
  }
  rep.add("group.latin_square", latin, lw);

  bool ident = g.identity >= 0 && (size_t)g.identity < n;
  for (size_t i = 0; i < n && ident; ++i)
    ident = g.op(g.identity, (int)i) == (int)i && g.op((int)i, g.identity) == (int)i;
  rep.add("group.identity", ident, Witness{{(size_t)g.identity}, "identity", "", ""});

  bool assoc = true;
  Witness aw;
  for (size_t a = 0; a < n && assoc; ++a)
    for (size_t b = 0; b < n && assoc; ++b)
      for (size_t c = 0; c < n; ++c)
        if (g.op(g.op((int)a, (int)b), (int)c) != g.op((int)a, g.op((int)b, (int)c))) {
          assoc = false;
          aw = Witness{{a, b, c},
                       "a=" + std::to_string(a) + ", b=" + std::to_string(b) +
                           ", c=" + std::to_string(c),
                       std::to_string(g.op(g.op((int)a, (int)b), (int)c)),
                       std::to_string(g.op((int)a, g.op((int)b, (int)c)))};
          break;
        }
  rep.add("group.assoc", assoc, aw);

  bool invs = true;
  Witness iw;
  if (latin && ident && assoc)
    for (size_t a = 0; a < n; ++a) {
      bool found = false;
      for (size_t b = 0; b < n; ++b)
        if (g.op((int)a, (int)b) == g.identity && g.op((int)b, (int)a) == g.identity)
          found = true;
      if (!found) {
        invs = false;
        iw = Witness{{a}, "a=" + std::to_string(a), "", ""};
        break;
      }
    }
  rep.add("group.inverses", invs, iw);
  return rep;
}

// Pointed set with a unital binary operation; associativity is not part
// of the contract.
struct PointedMagma {
  std::string name;
  size_t n = 0;
  std::vector<std::vector<int>> table;
  int unit = 0;

  int op(int a, int b) const { return table.at(a).at(b); }
};

inline Report validate_magma(const PointedMagma& x) {
  Report rep;
  bool shape = x.table.size() == x.n && x.unit >= 0 && (size_t)x.unit < x.n;
  for (auto& row : x.table) shape = shape && row.size() == x.n;
  if (shape)
    for (auto& row : x.table)
      for (int v : row) shape = shape && v >= 0 && (size_t)v < x.n;
  rep.add("magma.table_shape", shape, Witness{{}, "table", "", ""});
  if (!shape) return rep;
  bool unit = true;
  Witness w;
  for (size_t i = 0; i < x.n; ++i)
    if (x.op(x.unit, (int)i) != (int)i || x.op((int)i, x.unit) != (int)i) {
      unit = false;
      w = Witness{{i}, "x=" + std::to_string(i),
                  std::to_string(x.op(x.unit, (int)i)) + " / " +
                      std::to_string(x.op((int)i, x.unit)),
                  std::to_string(i)};
      break;
    }
  rep.add("magma.unit", unit, w);
  return rep;
}

// x . y = x when y is the base point, y otherwise. The base point is a
// two-sided unit and no other structure is imposed.
inline PointedMagma piecewise_magma(size_t n, const std::string& name = "piecewise") {
  PointedMagma x;
  x.name = name;
  x.n = n;
  x.unit = 0;
  x.table.assign(n, std::vector<int>(n, 0));
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b) x.table[a][b] = (b == 0) ? (int)a : (int)b;
  return x;
}

// Right G-set structure on a pointed magma's carrier: act[x][g] = x <| g.
struct RightGSet {
  PointedMagma x;
  std::vector<std::vector<int>> act;
};

inline Report validate_gset(const RightGSet& d, const FiniteGroup& g) {
  Report rep;
  size_t nx = d.x.n, ng = g.n;
  bool shape = d.act.size() == nx;
  for (auto& row : d.act) shape = shape && row.size() == ng;
  if (shape)
    for (auto& row : d.act)
      for (int v : row) shape = shape && v >= 0 && (size_t)v < nx;
  rep.add("gset.table_shape", shape, Witness{{}, "action table", "", ""});
  if (!shape) return rep;

  bool unit_act = true;
  Witness uw;
  for (size_t x = 0; x < nx; ++x)
    if (d.act[x][g.identity] != (int)x) {
      unit_act = false;
      uw = Witness{{x}, "x=" + std::to_string(x), std::to_string(d.act[x][g.identity]),
                   std::to_string(x)};
      break;
    }
  rep.add("gset.unit", unit_act, uw);

  bool compat = true;
  Witness cw;
  for (size_t x = 0; x < nx && compat; ++x)
    for (size_t a = 0; a < ng && compat; ++a)
      for (size_t b = 0; b < ng; ++b) {
        int lhs = d.act[d.act[x][a]][b];
        int rhs = d.act[x][g.op((int)a, (int)b)];
        if (lhs != rhs) {
          compat = false;
          cw = Witness{{x, a, b},
                       "x=" + std::to_string(x) + ", g=" + std::to_string(a) +
                           ", h=" + std::to_string(b),
                       std::to_string(lhs), std::to_string(rhs)};
          break;
        }
      }
  rep.add("gset.compat", compat, cw);

  bool base = true;
  Witness bw;
  for (size_t a = 0; a < ng; ++a)
    if (d.act[d.x.unit][a] != d.x.unit) {
      base = false;
      bw = Witness{{a}, "g=" + std::to_string(a), std::to_string(d.act[d.x.unit][a]),
                   std::to_string(d.x.unit)};
      break;
    }
  rep.add("gset.base_fixed", base, bw);
  return rep;
}

// ---------------------------------------------------------------------------
// Builders into structure constants
// ---------------------------------------------------------------------------

// k[G]: basis indexed by group elements, Delta(g) = g (x) g, eps(g) = 1,
// S(g) = g^{-1}.
inline HopfAlgebra group_algebra(const FiniteGroup& g, ScalarMode mode) {
  Report v = validate_group(g);
  if (!v.ok()) throw std::invalid_argument("group_algebra: invalid group data\n" + v.str());
  size_t n = g.n;
  VectorSpace s = make_space("g", n);
  LinMap mult(tensor_space(s, s), s, mode);
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b)
      mult.at(g.op((int)a, (int)b), a * n + b) = Scalar::one(mode);
  Vec unit = basis_vec(n, g.identity, mode);
  LinMap comult(s, tensor_space(s, s), mode);
  LinMap counit(s, ground_space(), mode);
  for (size_t a = 0; a < n; ++a) {
    comult.at(a * n + a, a) = Scalar::one(mode);
    counit.at(0, a) = Scalar::one(mode);
  }
  LinMap antipode(s, s, mode);
  for (size_t a = 0; a < n; ++a) antipode.at(g.inv((int)a), a) = Scalar::one(mode);
  return HopfAlgebra{FinBialgebra{make_algebra(s, mult, unit), make_coalgebra(s, comult, counit)},
                     antipode};
}

// k[X] for a pointed magma: group-like coalgebra plus the (possibly
// nonassociative) unital product from the table.
inline FinBialgebra grouplike_carrier(const PointedMagma& x, ScalarMode mode) {
  Report v = validate_magma(x);
  if (!v.ok()) throw std::invalid_argument("grouplike_carrier: invalid magma data\n" + v.str());
  size_t n = x.n;
  VectorSpace s = make_space("x", n);
  LinMap mult(tensor_space(s, s), s, mode);
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b)
      mult.at(x.op((int)a, (int)b), a * n + b) = Scalar::one(mode);
  Vec unit = basis_vec(n, x.unit, mode);
  LinMap comult(s, tensor_space(s, s), mode);
  LinMap counit(s, ground_space(), mode);
  for (size_t a = 0; a < n; ++a) {
    comult.at(a * n + a, a) = Scalar::one(mode);
    counit.at(0, a) = Scalar::one(mode);
  }
  return FinBialgebra{make_algebra(s, mult, unit, /*assoc_required=*/false),
                      make_coalgebra(s, comult, counit)};
}

inline std::pair<FinCoalgebra, FinAlgebra> grouplike_coalgebra(const PointedMagma& x,
                                                               ScalarMode mode) {
  FinBialgebra b = grouplike_carrier(x, mode);
  return {b.coa, b.alg};
}

// ---------------------------------------------------------------------------
// Built-in small groups (orders <= 8), keyed by canonical Cayley tables
// ---------------------------------------------------------------------------

inline FiniteGroup cyclic_group(size_t n) {
  FiniteGroup g;
  g.name = "C" + std::to_string(n);
  g.n = n;
  g.identity = 0;
  g.table.assign(n, std::vector<int>(n, 0));
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b) g.table[a][b] = (int)((a + b) % n);
  return g;
}

inline FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h,
                                  const std::string& name = "") {
  FiniteGroup p;
  p.name = name.empty() ? g.name + "x" + h.name : name;
  p.n = g.n * h.n;
  p.identity = g.identity * (int)h.n + h.identity;
  p.table.assign(p.n, std::vector<int>(p.n, 0));
  for (size_t a = 0; a < p.n; ++a)
    for (size_t b = 0; b < p.n; ++b) {
      int ga = (int)(a / h.n), ha = (int)(a % h.n);
      int gb = (int)(b / h.n), hb = (int)(b % h.n);
      p.table[a][b] = g.op(ga, gb) * (int)h.n + h.op(ha, hb);
    }
  return p;
}

// Symmetric group on 3 letters; elements ordered e, (123), (132), (12),
// (13), (23) with composition (s.t)(x) = s(t(x)).
inline FiniteGroup symmetric_group3() {
  const int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}};
  FiniteGroup g;
  g.name = "S3";
  g.n = 6;
  g.identity = 0;
  g.table.assign(6, std::vector<int>(6, 0));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      int comp[3];
      for (int x = 0; x < 3; ++x) comp[x] = perms[a][perms[b][x]];
      for (int c = 0; c < 6; ++c)
        if (comp[0] == perms[c][0] && comp[1] == perms[c][1] && comp[2] == perms[c][2])
          g.table[a][b] = c;
    }
  return g;
}

// Dihedral group of order 2n: indices 0..n-1 rotations, n..2n-1 reflections.
inline FiniteGroup dihedral_group(size_t n) {
  FiniteGroup g;
  g.name = "D" + std::to_string(n);
  g.n = 2 * n;
  g.identity = 0;
  g.table.assign(2 * n, std::vector<int>(2 * n, 0));
  auto idx = [n](bool refl, size_t k) { return (int)((refl ? n : 0) + k % n); };
  for (size_t a = 0; a < 2 * n; ++a)
    for (size_t b = 0; b < 2 * n; ++b) {
      bool ra = a >= n, rb = b >= n;
      size_t ka = a % n, kb = b % n;
      // r^i s^e . r^j s^f with s r = r^{-1} s
      if (!ra)
        g.table[a][b] = idx(rb, ka + kb);
      else
        g.table[a][b] = idx(!rb, n + ka - kb);
    }
  return g;
}

// Quaternion group {1, -1, i, -i, j, -j, k, -k} in that order.
inline FiniteGroup quaternion_group() {
  // encode +-1 as sign, axes 0=1, 1=i, 2=j, 3=k
  auto mulq = [](int a, int b) {
    int sa = a % 2, sb = b % 2;     // 0 = +, 1 = -
    int xa = a / 2, xb = b / 2;     // axis
    static const int axis[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    // extra minus from i*i = j*j = k*k = -1, j*i = -k, k*j = -i, i*k = -j
    static const int extra[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
    int s = (sa + sb + extra[xa][xb]) % 2;
    return 2 * axis[xa][xb] + s;
  };
  FiniteGroup g;
  g.name = "Q8";
  g.n = 8;
  g.identity = 0;
  g.table.assign(8, std::vector<int>(8, 0));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) g.table[a][b] = mulq(a, b);
  return g;
}

// All groups of order <= max_order from the built-in catalog, in a fixed
// deterministic order.
inline std::vector<FiniteGroup> small_groups(size_t max_order) {
  std::vector<FiniteGroup> out;
  auto push = [&](FiniteGroup g) {
    if (g.n <= max_order) out.push_back(std::move(g));
  };
  push(cyclic_group(1));
  push(cyclic_group(2));
  push(cyclic_group(3));
  push(cyclic_group(4));
  push(direct_product(cyclic_group(2), cyclic_group(2), "V4"));
  push(cyclic_group(5));
  push(cyclic_group(6));
  push(symmetric_group3());
  push(cyclic_group(7));
  push(cyclic_group(8));
  push(direct_product(cyclic_group(4), cyclic_group(2)));
  push(direct_product(direct_product(cyclic_group(2), cyclic_group(2), "V4"), cyclic_group(2),
                      "C2xC2xC2"));
  push(dihedral_group(4));
  push(quaternion_group());
  std::stable_sort(out.begin(), out.end(),
                   [](const FiniteGroup& a, const FiniteGroup& b) { return a.n < b.n; });
  return out;
}

}  // namespace hopf
