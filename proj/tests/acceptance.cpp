// Acceptance suite: one line per criterion, exit 0 iff everything holds.
// All checks are exact; no tolerances appear anywhere.

#include <chrono>
#include <iostream>
#include <sstream>

#include "hopf/io.hpp"
#include "hopf/reconstruction.hpp"

using namespace hopf;

namespace {

const ScalarMode Q = rational_mode();

struct Outcome {
  bool pass = true;
  std::string note;

  void fail(const std::string& why) {
    pass = false;
    if (!note.empty()) note += "; ";
    note += why;
  }
};

// ---------------------------------------------------------------------------
// corpus construction
// ---------------------------------------------------------------------------

std::vector<GSetDatum> gset_corpus(size_t max_g, size_t max_x, OpFamily fam) {
  std::vector<GSetDatum> data;
  for (const FiniteGroup& g : small_groups(max_g)) {
    for (size_t nx = 1; nx <= max_x; ++nx) {
      std::vector<PointedMagma> ops;
      if (fam == OpFamily::piecewise)
        ops.push_back(piecewise_magma(nx));
      else if (nx <= 3)
        ops = detail::enumerate_unital_ops(nx);
      auto actions = detail::enumerate_actions(g, nx);
      for (const PointedMagma& m : ops)
        for (const auto& act : actions) {
          size_t total = 1;
          for (size_t i = 1; i < nx; ++i) total *= g.n;
          for (size_t code = 0; code < total; ++code) {
            std::vector<int> gamma(nx, g.identity);
            size_t rem = code;
            for (size_t i = 1; i < nx; ++i) {
              gamma[i] = (int)(rem % g.n);
              rem /= g.n;
            }
            GSetDatum d{g, m, act, gamma};
            if (validate_gset_datum(d).ok()) data.push_back(std::move(d));
          }
        }
    }
  }
  return data;
}

// Conjugate a datum by invertible basis changes on A and H; the result is
// an isomorphic datum whose structure constants are no longer 0/1.
ExtendingDatum transport_datum(const ExtendingDatum& om, const LinMap& ta, const LinMap& th) {
  LinMap tai = *inverse(ta), thi = *inverse(th);
  auto conj2 = [&](const LinMap& f, const LinMap& u, const LinMap& v, const LinMap& w) {
    // w o f o (u^{-1} (x) v^{-1})
    return compose(w, compose(f, tensor_map(u, v)));
  };
  HopfAlgebra a2{
      FinBialgebra{
          make_algebra(om.a.space(), conj2(om.a.b.alg.mult, tai, tai, ta),
                       ta.apply(om.a.b.alg.unit)),
          make_coalgebra(om.a.space(),
                         compose(tensor_map(ta, ta), compose(om.a.b.coa.comult, tai)),
                         compose(om.a.b.coa.counit, tai))},
      compose(ta, compose(om.a.antipode, tai))};
  FinBialgebra h2{
      make_algebra(om.h.space(), conj2(om.h.alg.mult, thi, thi, th), th.apply(om.h.alg.unit),
                   false),
      make_coalgebra(om.h.space(),
                     compose(tensor_map(th, th), compose(om.h.coa.comult, thi)),
                     compose(om.h.coa.counit, thi))};
  return ExtendingDatum{a2, h2, conj2(om.lhd, thi, tai, th), conj2(om.rhd, thi, tai, ta),
                        conj2(om.cocycle, thi, thi, ta)};
}

LinMap elementary_shear(const VectorSpace& s, size_t from, size_t to) {
  LinMap t = LinMap::identity(s, Q);
  t.at(to, from) = Scalar::rational(1, 1);
  return t;
}

bool is_grouplike_comult(const FinCoalgebra& c) {
  for (size_t i = 0; i < c.dim(); ++i)
    if (c.comult.col_nonzeros(i).size() != 1) return false;
  return true;
}

// independent validator for (be1)/(be3), straight table loops
bool brute_be(const GSetDatum& d) {
  size_t nx = d.x.n, ng = d.g.n;
  if (d.gamma[d.x.unit] != d.g.identity) return false;
  for (size_t x = 0; x < nx; ++x)
    for (size_t y = 0; y < nx; ++y) {
      for (size_t z = 0; z < nx; ++z) {
        int u = d.g.op(d.g.op(d.gamma[y], d.gamma[z]),
                       d.g.inv(d.gamma[d.x.op((int)y, (int)z)]));
        if (d.x.op(d.x.op((int)x, (int)y), (int)z) !=
            d.x.op(d.act[x][u], d.x.op((int)y, (int)z)))
          return false;
      }
      for (size_t gi = 0; gi < ng; ++gi) {
        int u = d.g.op(d.g.op(d.gamma[y], (int)gi),
                       d.g.inv(d.gamma[d.act[y][gi]]));
        if (d.act[d.x.op((int)x, (int)y)][gi] !=
            d.x.op(d.act[x][u], d.act[y][gi]))
          return false;
      }
    }
  return true;
}

size_t count_be_failures(const Report& be, std::string* which) {
  size_t n = 0;
  for (const char* l : {"BE1", "BE2", "BE3", "BE4", "BE5", "BE6", "BE7"})
    if (!be.passed(l)) {
      ++n;
      if (which) *which = l;
    }
  return n;
}

bool side_conditions_pass(const Report& be) {
  return be.passed("DeltaH.algebra_map") && be.passed("epsH.algebra_map") &&
         be.passed("lhd.right_module");
}

}  // namespace

// ---------------------------------------------------------------------------

int main() {
  std::vector<std::pair<std::string, Outcome>> results;
  auto run = [&](const std::string& title, auto body) {
    Outcome out;
    auto t0 = std::chrono::steady_clock::now();
    body(out);
    auto t1 = std::chrono::steady_clock::now();
    double secs = std::chrono::duration<double>(t1 - t0).count();
    std::ostringstream line;
    line << (out.pass ? "[PASS] " : "[FAIL] ") << title;
    if (!out.note.empty()) line << " -- " << out.note;
    line << " (" << secs << " s)";
    std::cout << line.str() << std::endl;
    results.emplace_back(title, out);
  };

  // shared corpora
  std::vector<ExtendingDatum> corpus;          // passing data, group-like and not
  std::vector<ExtendingDatum> single_failure;  // exactly one (BE) broken
  std::vector<std::string> failure_labels;
  {
    for (const GSetDatum& d : gset_corpus(4, 3, OpFamily::piecewise)) {
      InducedDatum ind = gamma_induced_datum(to_gamma_datum(d, Q));
      if (ind.datum) corpus.push_back(std::move(*ind.datum));
    }
    for (const GSetDatum& d : gset_corpus(3, 2, OpFamily::all)) {
      InducedDatum ind = gamma_induced_datum(to_gamma_datum(d, Q));
      if (ind.datum) corpus.push_back(std::move(*ind.datum));
    }
    // non-group-like data by transport along shears on H (and A)
    size_t added = 0;
    size_t base = corpus.size();
    for (size_t k = 0; k < base && added < 12; ++k) {
      const ExtendingDatum& om = corpus[k];
      if (om.nh() < 2 || om.na() < 2) continue;
      LinMap th = elementary_shear(om.h.space(), 1, 0);
      LinMap ta = (k % 2 == 0) ? elementary_shear(om.a.space(), 1, 0)
                               : LinMap::identity(om.a.space(), Q);
      ExtendingDatum t = transport_datum(om, ta, th);
      if (is_grouplike_comult(t.h.coa)) continue;
      corpus.push_back(std::move(t));
      ++added;
    }
  }

  // criterion 1 -------------------------------------------------------------
  run("criterion 1: BE suite <=> unified product is a bialgebra", [&](Outcome& out) {
    size_t passing = 0, grouplike = 0, general = 0;
    for (const ExtendingDatum& om : corpus) {
      if (om.na() > 6 || om.nh() > 4) continue;
      Report ext = check_extending_datum(om);
      Report be = check_BE(om);
      if (!ext.ok() || !be.ok()) {
        out.fail("corpus datum fails the BE suite");
        return;
      }
      BuildResult r = unified_product(om);
      if (!r.product || !check_bialgebra(r.product->b).ok()) {
        out.fail("unified product of a passing datum fails check_bialgebra");
        return;
      }
      ++passing;
      (is_grouplike_comult(om.h.coa) ? grouplike : general)++;
    }
    if (passing < 50) out.fail("only " + std::to_string(passing) + " passing data");
    if (general == 0) out.fail("no non-group-like data in the corpus");

    // single-(BE)-failure data by deterministic table perturbation
    for (size_t k = 0; k < corpus.size() && single_failure.size() < 10; ++k) {
      const ExtendingDatum& om = corpus[k];
      if (!is_grouplike_comult(om.h.coa) || om.nh() < 2) continue;
      std::vector<ExtendingDatum> candidates;
      // cocycle perturbations: move f(x, y) to another group element
      for (size_t x = 1; x < om.nh(); ++x)
        for (size_t y = 1; y < om.nh(); ++y)
          for (size_t gv = 0; gv < om.na(); ++gv) {
            Vec cur = om.cocycle.col(x * om.nh() + y);
            Vec cand = basis_vec(om.na(), gv, Q);
            if (cur == cand) continue;
            ExtendingDatum p = om;
            p.cocycle.set_col(x * om.nh() + y, cand);
            candidates.push_back(std::move(p));
          }
      // product-table perturbations on H
      for (size_t x = 1; x < om.nh(); ++x)
        for (size_t y = 1; y < om.nh(); ++y)
          for (size_t v = 0; v < om.nh(); ++v) {
            Vec cur = om.h.alg.mult.col(x * om.nh() + y);
            Vec cand = basis_vec(om.nh(), v, Q);
            if (cur == cand) continue;
            ExtendingDatum p = om;
            p.h.alg.mult.set_col(x * om.nh() + y, cand);
            candidates.push_back(std::move(p));
          }
      for (ExtendingDatum& p : candidates) {
        if (single_failure.size() >= 10) break;
        if (!check_extending_datum(p).ok()) continue;
        Report be = check_BE(p);
        std::string which;
        if (count_be_failures(be, &which) != 1 || !side_conditions_pass(be)) continue;
        single_failure.push_back(std::move(p));
        failure_labels.push_back(which);
      }
    }
    if (single_failure.size() < 10) {
      out.fail("only " + std::to_string(single_failure.size()) + " single-failure data");
      return;
    }
    for (const ExtendingDatum& p : single_failure) {
      BuildResult r = unified_product(p, /*force=*/true);
      if (!r.product || check_bialgebra(r.product->b).ok()) {
        out.fail("forced build of a BE-violating datum still passes check_bialgebra");
        return;
      }
    }
    std::set<std::string> labels(failure_labels.begin(), failure_labels.end());
    std::string ls;
    for (auto& l : labels) ls += (ls.empty() ? "" : ",") + l;
    out.note = std::to_string(passing) + " passing data (" + std::to_string(grouplike) +
               " group-like, " + std::to_string(general) + " general), " +
               std::to_string(single_failure.size()) + " single-failure data [" + ls + "]";
  });

  // criterion 2 -------------------------------------------------------------
  run("criterion 2: factorization recovery round trip (+ k[S3])", [&](Outcome& out) {
    size_t trips = 0;
    for (const ExtendingDatum& om : corpus) {
      ProductBialgebra p = unified_product(om).get();
      FactorizationInput in{p.b, om.a, canonical_injection(om), om.h.space(),
                            LinMap(om.h.space(), p.b.space(), Q)};
      for (size_t j = 0; j < om.nh(); ++j)
        for (size_t ai = 0; ai < om.na(); ++ai)
          if (!om.a.b.alg.unit[ai].is_zero())
            in.embed_h.at(ai * om.nh() + j, j) = om.a.b.alg.unit[ai];
      RecoveredFactorization rec = recover_datum(in);
      if (!same_entries(rec.datum.lhd, om.lhd) || !same_entries(rec.datum.rhd, om.rhd) ||
          !same_entries(rec.datum.cocycle, om.cocycle) ||
          !same_entries(rec.datum.h.alg.mult, om.h.alg.mult) ||
          !same_entries(rec.datum.h.coa.comult, om.h.coa.comult)) {
        out.fail("recovered datum differs from the input datum");
        return;
      }
      ++trips;
    }

    // E = k[S3] through k[C3] and k[{e, t}]
    FiniteGroup s3 = symmetric_group3();
    HopfAlgebra e = group_algebra(s3, Q);
    HopfAlgebra c3 = group_algebra(cyclic_group(3), Q);
    FactorizationInput in{e.b, c3, LinMap(c3.space(), e.space(), Q), make_space("t", 2),
                          LinMap(make_space("t", 2), e.space(), Q)};
    for (size_t i = 0; i < 3; ++i) in.embed_a.at(i, i) = Scalar::one(Q);
    in.embed_h.at(0, 0) = Scalar::one(Q);
    in.embed_h.at(3, 1) = Scalar::one(Q);
    RecoveredFactorization rec = recover_datum(in);
    if (!rec.verification.ok()) {
      out.fail("k[S3] factorization failed verification");
      return;
    }
    if (is_trivial_rhd(rec.datum) || !is_trivial_lhd(rec.datum) ||
        !is_trivial_cocycle(rec.datum))
      out.fail("k[S3] datum shape unexpected");
    if (!solve_antipode(rec.product.b).has_value())
      out.fail("recovered k[S3] product has no antipode");
    out.note = std::to_string(trips) + " exact round trips + S3 factorization";
  });

  // criterion 3 -------------------------------------------------------------
  std::vector<SplitRecovery> split_recoveries;
  run("criterion 3: split-extension recovery + canonical-map biconditionals",
      [&](Outcome& out) {
        size_t trips = 0;
        for (const ExtendingDatum& om : corpus) {
          ProductBialgebra p = unified_product(om).get();
          SplitExtensionInput in{p.b, om.a, canonical_injection(om),
                                 canonical_projection(om)};
          SplitAnalysis an = split_extension_datum(in);
          if (!an.ok() || !an.recovery->verification.ok()) {
            out.fail("split recovery failed");
            return;
          }
          const SplitRecovery& rec = *an.recovery;
          if (!same_entries(rec.datum.lhd, om.lhd) ||
              !same_entries(rec.datum.rhd, om.rhd) ||
              !same_entries(rec.datum.cocycle, om.cocycle) ||
              !same_entries(rec.datum.h.alg.mult, om.h.alg.mult)) {
            out.fail("split recovery differs from the input datum");
            return;
          }
          // the canonical-map property suite, biconditionals included,
          // on every corpus datum
          CanonicalMaps cm = canonical_maps(p, om);
          if (!cm.props.ok()) {
            out.fail("canonical-map property suite failed on a corpus datum");
            return;
          }
          split_recoveries.push_back(std::move(*an.recovery));
          ++trips;
        }

        // Prop biconditionals over the four (rhd, f) triviality combos
        HopfAlgebra a2 = group_algebra(cyclic_group(2), Q);
        HopfAlgebra c3 = group_algebra(cyclic_group(3), Q);
        FinBialgebra hb = group_algebra(cyclic_group(2), Q).b;
        ExtendingDatum tt{a2, hb, trivial_lhd(hb, a2), trivial_rhd(hb, a2),
                          trivial_cocycle(hb, a2)};
        // rhd trivial, f nontrivial
        PointedMagma px = piecewise_magma(2);
        FinBialgebra hx = grouplike_carrier(px, Q);
        ExtendingDatum tf{a2, hx, trivial_lhd(hx, a2), trivial_rhd(hx, a2),
                          trivial_cocycle(hx, a2)};
        tf.cocycle.set_col(3, basis_vec(2, 1, Q));
        // rhd nontrivial, f trivial: the S3 = C3 . <t> datum
        PointedMagma pc2 = piecewise_magma(2);
        pc2.table[1][1] = 0;
        FinBialgebra hc = grouplike_carrier(pc2, Q);
        ExtendingDatum ft{c3, hc, trivial_lhd(hc, c3), trivial_rhd(hc, c3),
                          trivial_cocycle(hc, c3)};
        ft.rhd.set_col(1 * 3 + 1, basis_vec(3, 2, Q));
        ft.rhd.set_col(1 * 3 + 2, basis_vec(3, 1, Q));
        // both nontrivial: S3 gset with gamma(x) = a transposition
        GSetDatum ff_seed;
        ff_seed.g = symmetric_group3();
        ff_seed.x = piecewise_magma(2);
        ff_seed.act = {{0, 0, 0, 0, 0, 0}, {1, 1, 1, 1, 1, 1}};
        ff_seed.gamma = {0, 3};
        ExtendingDatum ff = *gamma_induced_datum(to_gamma_datum(ff_seed, Q)).datum;

        struct Combo {
          const ExtendingDatum* om;
          bool rhd_triv, f_triv;
        };
        for (const Combo& c :
             {Combo{&tt, true, true}, Combo{&tf, true, false}, Combo{&ft, false, true},
              Combo{&ff, false, false}}) {
          if (!check_BE(*c.om).ok()) {
            out.fail("combo datum fails BE");
            return;
          }
          if (is_trivial_rhd(*c.om) != c.rhd_triv ||
              is_trivial_cocycle(*c.om) != c.f_triv) {
            out.fail("combo datum has the wrong triviality signature");
            return;
          }
          ProductBialgebra p = unified_product(*c.om).get();
          CanonicalMaps cm = canonical_maps(p, *c.om);
          if (!cm.props.ok()) {
            out.fail("canonical-maps property suite failed on a combo");
            return;
          }
          bool bimap = is_bialgebra_map(cm.pi_a, p.b, c.om->a.b);
          if (bimap != (c.rhd_triv && c.f_triv)) {
            out.fail("pi_A bialgebra-map biconditional failed");
            return;
          }
        }
        out.note = std::to_string(trips) + " exact round trips; all four combos check";
      });

  // criterion 4 -------------------------------------------------------------
  run("criterion 4: corollary specializations", [&](Outcome& out) {
    size_t twisted = 0, smash = 0;
    for (const ExtendingDatum& om : corpus) {
      bool rhd_triv = is_trivial_rhd(om), f_triv = is_trivial_cocycle(om);
      if (!rhd_triv) continue;
      ProductBialgebra p = unified_product(om).get();
      SplitExtensionInput in{p.b, om.a, canonical_injection(om), canonical_projection(om)};
      if (!f_triv) {
        TwistedRecovery tw = bimodule_split(in);
        if (!tw.ok() || !is_trivial_rhd(tw.base.recovery->datum)) {
          out.fail("bimodule_split did not return a |>-trivial datum");
          return;
        }
        ++twisted;
      } else {
        SmashRecovery sm = normal_epi_split(in);
        if (!sm.ok()) {
          out.fail("normal_epi_split failed on a smash input");
          return;
        }
        ++smash;
      }
      if (twisted >= 8 && smash >= 8) break;
    }
    if (twisted < 3 || smash < 3) out.fail("too few corollary instances exercised");
    out.note = std::to_string(twisted) + " twisted + " + std::to_string(smash) +
               " smash recoveries";
  });

  // criterion 7 (uses the recoveries of criterion 3) -------------------------
  run("criterion 7: Hopf-module fundamental theorem on split extensions",
      [&](Outcome& out) {
        size_t n = 0;
        for (const SplitRecovery& rec : split_recoveries) {
          FundamentalMaps fm = fundamental_maps(rec.module);
          if (!fm.ok) {
            out.fail("phi_inv left A (x) M^co");
            return;
          }
          if (fm.coinv.dim() * rec.datum.na() != rec.module.space.dim) {
            out.fail("dim M != dim A * dim M^co");
            return;
          }
          if (compose(fm.phi, fm.phi_inv) != LinMap::identity(rec.module.space, Q) ||
              compose(fm.phi_inv, fm.phi) != LinMap::identity(fm.phi.domain(), Q)) {
            out.fail("fundamental maps are not exact mutual inverses");
            return;
          }
          ++n;
        }
        if (n == 0) out.fail("no split-extension instances available");
        out.note = std::to_string(n) + " instances, exact inverses";
      });

  // criterion 5 -------------------------------------------------------------
  run("criterion 5: full gamma pipeline over |G| <= 6, |X| <= 4", [&](Outcome& out) {
    size_t n = 0;
    for (const GSetDatum& d : gset_corpus(6, 4, OpFamily::piecewise)) {
      GammaDatum gd = to_gamma_datum(d, Q);
      InducedDatum ind = gamma_induced_datum(gd);
      if (!ind.datum) {
        out.fail("gamma induction failed on " + d.g.name);
        return;
      }
      const ExtendingDatum& om = *ind.datum;
      // gamma_induced_datum has already asserted the full BE suite
      ProductBialgebra p = unified_product(om, /*force=*/true).get();
      ProductBialgebra c = circled_product(gd.a, gd.h, gd.lhd, gd.gamma).get();
      IsoResult iso = iso_to_circled(om, gd.gamma, p, c);
      if (!iso.ok()) {
        out.fail("iso_to_circled failed on " + d.g.name);
        return;
      }
      BiproductIso bi = iso_to_biproduct(om, gd.gamma, p);
      if (!bi.extracted.checks.ok()) {
        out.fail("extract_L failed on " + d.g.name);
        return;
      }
      if (!bi.verification.ok()) {
        out.fail("iso_to_biproduct failed on " + d.g.name);
        return;
      }
      if (!check_bialgebra(bi.biproduct.b).ok()) {
        out.fail("biproduct fails check_bialgebra on " + d.g.name);
        return;
      }
      if (bi.extracted.basis.dim() * om.na() != p.b.dim()) {
        out.fail("dim L * dim A != dim product on " + d.g.name);
        return;
      }
      ++n;
    }
    out.note = std::to_string(n) + " data through the full pipeline";
  });

  // criterion 6 -------------------------------------------------------------
  run("criterion 6: piecewise-family counts |G|^{|X|-1}", [&](Outcome& out) {
    auto expect_pow = [](size_t g, size_t nx) {
      size_t v = 1;
      for (size_t i = 1; i < nx; ++i) v *= g;
      return v;
    };
    // catalog counts vs the closed form, |G| <= 4 and |X| <= 4
    GSetCatalog cat = enumerate_gset_data(4, 4, OpFamily::piecewise, Q);
    for (auto& [key, count] : cat.counts) {
      size_t sep1 = key.find("|X");
      size_t sep2 = key.find('|', sep1 + 1);
      size_t nx = std::stoul(key.substr(sep1 + 2, sep2 - sep1 - 2));
      std::string gname = key.substr(0, sep1);
      size_t order = 0;
      for (const FiniteGroup& g : small_groups(4))
        if (g.name == gname) order = g.n;
      if (count != expect_pow(order, nx)) {
        out.fail("catalog count mismatch at " + key);
        return;
      }
    }
    // pinned counts from the closed form
    GSetCatalog c2x5 = enumerate_gset_data(2, 5, OpFamily::piecewise, Q);
    size_t have16 = 0;
    for (auto& [key, count] : c2x5.counts)
      if (key.rfind("C2|X5", 0) == 0) {
        if (count != 16) {
          out.fail(key + " expected 16, got " + std::to_string(count));
          return;
        }
        ++have16;
      }
    GSetCatalog c6x3 = enumerate_gset_data(6, 3, OpFamily::piecewise, Q);
    size_t have36 = 0, have2 = 0;
    for (auto& [key, count] : c6x3.counts) {
      if (key.rfind("C6|X3", 0) == 0) {
        if (count != 36) {
          out.fail(key + " expected 36, got " + std::to_string(count));
          return;
        }
        ++have36;
      }
      if (key.rfind("C2|X2", 0) == 0) {
        if (count != 2) {
          out.fail(key + " expected 2, got " + std::to_string(count));
          return;
        }
        ++have2;
      }
    }
    if (have16 == 0 || have36 == 0 || have2 == 0) {
      out.fail("expected count keys missing");
      return;
    }

    // independent brute-force validator over raw tables
    for (const FiniteGroup& g : small_groups(6)) {
      for (size_t nx : {2ul, 3ul}) {
        PointedMagma m = piecewise_magma(nx);
        for (const auto& act : detail::enumerate_actions(g, nx)) {
          size_t total = 1, valid = 0;
          for (size_t i = 1; i < nx; ++i) total *= g.n;
          for (size_t code = 0; code < total; ++code) {
            std::vector<int> gamma(nx, g.identity);
            size_t rem = code;
            for (size_t i = 1; i < nx; ++i) {
              gamma[i] = (int)(rem % g.n);
              rem /= g.n;
            }
            if (brute_be(GSetDatum{g, m, act, gamma})) ++valid;
          }
          if (valid != expect_pow(g.n, nx)) {
            out.fail("brute-force count mismatch for " + g.name);
            return;
          }
        }
      }
    }
    out.note = "catalog and brute-force counts agree with |G|^{|X|-1}";
  });

  // criterion 8 -------------------------------------------------------------
  run("criterion 8: deformed-multiplication typo arbitration on S3", [&](Outcome& out) {
    FiniteGroup s3 = symmetric_group3();
    const int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1},
                             {1, 0, 2}, {2, 1, 0}, {0, 2, 1}};
    GSetDatum d;
    d.g = s3;
    d.x = piecewise_magma(4);
    d.act.assign(4, std::vector<int>(6));
    for (int gi = 0; gi < 6; ++gi) {
      int inv = s3.inv(gi);
      d.act[0][gi] = 0;
      for (int i = 0; i < 3; ++i) d.act[1 + i][gi] = 1 + perms[inv][i];
    }
    d.gamma = {0, 3, 0, 1};  // mixes a transposition and a 3-cycle
    if (!validate_gset_datum(d).ok()) {
      out.fail("arbitration datum invalid");
      return;
    }
    CircledArbitration arb = arbitrate_circled(d, Q);
    bool decisive = arb.formulas_differ && (arb.general_ok != arb.printed_ok);
    if (!decisive) {
      out.fail("arbitration not decisive: " + arb.detail);
      return;
    }
    out.note = arb.detail;
  });

  bool all = true;
  for (auto& [title, out] : results) all = all && out.pass;
  std::cout << (all ? "acceptance: all criteria PASS" : "acceptance: FAILURES present")
            << std::endl;
  return all ? 0 : 1;
}
