#pragma once

#include "hopf/products.hpp"

namespace hopf {

// ---------------------------------------------------------------------------
// Factorization recovery: E a bialgebra, A a Hopf subalgebra embedded by a
// bialgebra map, H a subcoalgebra containing 1_E embedded linearly, with
// the multiplication map u(a (x) h) = i(a) j(h) bijective. The extending
// datum is read off through u^{-1} and every theorem conclusion is
// re-verified rather than trusted.
// ---------------------------------------------------------------------------

struct FactorizationInput {
  FinBialgebra e;
  HopfAlgebra a;
  LinMap embed_a;        // A -> E, bialgebra map
  VectorSpace h_space;
  LinMap embed_h;        // H -> E, injective, image a subcoalgebra with 1_E
};

struct RecoveredFactorization {
  ExtendingDatum datum;
  LinMap u;        // A |x H -> E
  LinMap u_inv;
  ProductBialgebra product;
  Report verification;
};

namespace detail {

// Multiply two vectors of an algebra given by its mult map.
inline Vec alg_mult(const LinMap& mult, const Vec& x, const Vec& y, ScalarMode md) {
  return Tensor::from_vec(x, md).kron(Tensor::from_vec(y, md)).apply(mult, {0, 1}).flatten();
}

}  // namespace detail

inline RecoveredFactorization recover_datum(const FactorizationInput& in) {
  const FinBialgebra& e = in.e;
  const HopfAlgebra& a = in.a;
  size_t ne = e.dim(), na = a.dim(), nh = in.h_space.dim;
  ScalarMode md = e.mode();
  if (na * nh != ne)
    throw std::invalid_argument("recover_datum: dim A * dim H != dim E");
  if (!is_bialgebra_map(in.embed_a, a.b, e))
    throw std::invalid_argument("recover_datum: embed_a is not a bialgebra map");

  // u(a (x) h) = i(a) j(h)
  LinMap u(tensor_space(a.space(), in.h_space), e.space(), md);
  for (size_t ai = 0; ai < na; ++ai)
    for (size_t hi = 0; hi < nh; ++hi)
      u.set_col(ai * nh + hi, detail::alg_mult(e.alg.mult, in.embed_a.col(ai),
                                               in.embed_h.col(hi), md));
  auto u_inv = inverse(u);
  if (!u_inv) throw std::invalid_argument("recover_datum: u is not bijective");

  // H inherits its coalgebra structure from E: Delta_E j = (j (x) j) Delta_H
  LinMap jj(tensor_space(in.h_space, in.h_space), tensor_space(e.space(), e.space()), md);
  for (size_t x = 0; x < nh; ++x)
    for (size_t y = 0; y < nh; ++y) {
      Tensor t = Tensor::from_col(in.embed_h, x).kron(Tensor::from_col(in.embed_h, y));
      jj.set_col(x * nh + y, t.flatten());
    }
  auto comult_h = solve(jj, compose(e.coa.comult, in.embed_h));
  if (!comult_h)
    throw std::invalid_argument("recover_datum: image of embed_h is not a subcoalgebra");
  LinMap counit_h = compose(e.coa.counit, in.embed_h);
  auto unit_h = solve(in.embed_h, [&] {
    LinMap one(ground_space(), e.space(), md);
    one.set_col(0, e.alg.unit);
    return one;
  }());
  if (!unit_h) throw std::invalid_argument("recover_datum: 1_E is not in the image of embed_h");

  // mu(h (x) a) = u^{-1}(j(h) i(a)), nu(h (x) g) = u^{-1}(j(h) j(g));
  // then  |> = (id (x) eps) mu, <| = (eps (x) id) mu,
  //        f = (id (x) eps) nu,  . = (eps (x) id) nu
  LinMap lhd(tensor_space(in.h_space, a.space()), in.h_space, md);
  LinMap rhd(tensor_space(in.h_space, a.space()), a.space(), md);
  LinMap cocycle(tensor_space(in.h_space, in.h_space), a.space(), md);
  LinMap mult_h(tensor_space(in.h_space, in.h_space), in.h_space, md);
  auto split_pair = [&](const Vec& pre, LinMap& into_a, size_t col_a, LinMap& into_h,
                        size_t col_h) {
    // pre is u^{-1}(...) in A (x) H coordinates
    Vec va = zero_vec(na, md), vh = zero_vec(nh, md);
    for (size_t p = 0; p < na; ++p)
      for (size_t q = 0; q < nh; ++q) {
        const Scalar& c = pre[p * nh + q];
        if (c.is_zero()) continue;
        va[p] += c * counit_h.at(0, q);
        vh[q] += c * a.b.coa.counit.at(0, p);
      }
    into_a.set_col(col_a, va);
    into_h.set_col(col_h, vh);
  };
  for (size_t x = 0; x < nh; ++x) {
    for (size_t ai = 0; ai < na; ++ai) {
      Vec pre = u_inv->apply(
          detail::alg_mult(e.alg.mult, in.embed_h.col(x), in.embed_a.col(ai), md));
      split_pair(pre, rhd, x * na + ai, lhd, x * na + ai);
    }
    for (size_t y = 0; y < nh; ++y) {
      Vec pre = u_inv->apply(
          detail::alg_mult(e.alg.mult, in.embed_h.col(x), in.embed_h.col(y), md));
      split_pair(pre, cocycle, x * nh + y, mult_h, x * nh + y);
    }
  }

  FinBialgebra h{make_algebra(in.h_space, mult_h, unit_h->col(0), /*assoc_required=*/false),
                 make_coalgebra(in.h_space, *comult_h, counit_h)};
  ExtendingDatum om{a, h, lhd, rhd, cocycle};

  RecoveredFactorization out{om, u, *u_inv, ProductBialgebra{}, {}};
  out.verification.merge(check_extending_datum(om), "datum.");
  out.verification.merge(check_BE(om), "datum.");
  if (!out.verification.ok())
    throw std::invalid_argument("recover_datum: recovered datum fails the BE suite\n" +
                                out.verification.str());
  out.product = unified_product(om).get();
  IsoCheck iso = verify_bialgebra_iso(u, out.product.b, e);
  out.verification.merge(iso.report, "u.");
  if (!iso.ok())
    throw std::invalid_argument(
        "recover_datum: u is not a bialgebra isomorphism onto E\n" + iso.report.str());
  return out;
}

// ---------------------------------------------------------------------------
// Split extensions: i : A -> E with a normal left A-module coalgebra
// retraction pi. H is cut out as the coinvariants of pi and the datum is
// rebuilt from the theorem's formulas, each landing verified.
// ---------------------------------------------------------------------------

struct SplitExtensionInput {
  FinBialgebra e;
  HopfAlgebra a;   // antipode of A enters the recovery formulas
  LinMap incl;     // i : A -> E
  LinMap proj;     // pi : E -> A
};

struct SplitRecovery {
  Subspace h_in_e;         // RREF basis of H inside E
  ExtendingDatum datum;
  LinMap phi;              // A |x H -> E, a (x) h |-> i(a) h
  LinMap phi_inv;          // from pi(x1) (x) i(S pi(x2)) x3
  ProductBialgebra product;
  HopfModule module;       // E as a left-left A-Hopf module via (i, pi)
  Report verification;
};

struct SplitAnalysis {
  Report preconditions;
  std::optional<SplitRecovery> recovery;

  bool ok() const { return preconditions.ok() && recovery.has_value(); }
};

inline Report check_split_extension_input(const SplitExtensionInput& in) {
  Report rep;
  const FinBialgebra& e = in.e;
  const HopfAlgebra& a = in.a;
  ScalarMode md = e.mode();
  rep.add("i.bialgebra_map", is_bialgebra_map(in.incl, a.b, e), Witness{});
  rep.add("pi.coalgebra_map", is_coalgebra_map(in.proj, e.coa, a.b.coa), Witness{});
  rep.add("pi.section", compose(in.proj, in.incl) == LinMap::identity(a.space(), md),
          Witness{});
  // left module map for a . x = i(a) x
  size_t na = a.dim(), ne = e.dim();
  LinMap act(tensor_space(a.space(), e.space()), e.space(), md);
  for (size_t ai = 0; ai < na; ++ai)
    for (size_t x = 0; x < ne; ++x)
      act.set_col(ai * ne + x, detail::alg_mult(e.alg.mult, in.incl.col(ai),
                                                basis_vec(ne, x, md), md));
  rep.add("pi.left_module_map", is_left_module_map(in.proj, act, a.b.alg.mult), Witness{});
  rep.add("pi.normal", is_normal_coalgebra_map(in.proj, e.coa, a.b.alg), Witness{});
  return rep;
}

inline SplitAnalysis split_extension_datum(const SplitExtensionInput& in) {
  SplitAnalysis out;
  out.preconditions = check_split_extension_input(in);
  if (!out.preconditions.ok()) return out;

  const FinBialgebra& e = in.e;
  const HopfAlgebra& a = in.a;
  size_t na = a.dim(), ne = e.dim();
  ScalarMode md = e.mode();

  SplitRecovery rec;
  rec.h_in_e = coinvariant_like_subspace(in.proj, e.coa, a.b.alg);
  size_t nh = rec.h_in_e.dim();
  VectorSpace hs = make_space("h", nh);
  const Subspace& hb = rec.h_in_e;

  // 1_E lies in H and H is a subcoalgebra (normality); both are verified
  // as we read the structure off.
  auto unit_h = hb.coords(e.alg.unit);
  out.preconditions.add("H.contains_unit", unit_h.has_value(), Witness{});
  if (!unit_h) return out;

  LinMap comult_h(hs, tensor_space(hs, hs), md);
  bool sub = true;
  for (size_t k = 0; k < nh && sub; ++k) {
    Vec d = e.coa.comult.apply(hb.basis[k]);
    Vec col = zero_vec(nh * nh, md);
    // coordinates in H (x) H via pivot projection on both legs
    std::vector<Vec> half(nh, zero_vec(ne, md));
    for (size_t q = 0; q < ne; ++q) {
      Vec slice = zero_vec(ne, md);
      for (size_t p = 0; p < ne; ++p) slice[p] = d[p * ne + q];
      auto c = hb.coords(slice);
      if (!c) {
        sub = false;
        break;
      }
      for (size_t k1 = 0; k1 < nh; ++k1) half[k1][q] = (*c)[k1];
    }
    if (!sub) break;
    for (size_t k1 = 0; k1 < nh; ++k1) {
      auto c = hb.coords(half[k1]);
      if (!c) {
        sub = false;
        break;
      }
      for (size_t k2 = 0; k2 < nh; ++k2) col[k1 * nh + k2] = (*c)[k2];
    }
    comult_h.set_col(k, col);
  }
  out.preconditions.add("H.subcoalgebra", sub, Witness{});
  if (!sub) return out;

  LinMap counit_h(hs, ground_space(), md);
  for (size_t k = 0; k < nh; ++k) counit_h.at(0, k) = e.coa.counit.apply(hb.basis[k])[0];

  // theorem formulas, evaluated in E and re-expressed in the H basis:
  //   h.g    = i(S_A(pi(h1 g1))) h2 g2          f(h, g) = pi(h g)
  //   h <| a = i(S_A(pi(h1 i(a1)))) h2 i(a2)    h |> a  = pi(h i(a))
  LinMap mult_h(tensor_space(hs, hs), hs, md);
  LinMap cocycle(tensor_space(hs, hs), a.space(), md);
  LinMap lhd(tensor_space(hs, a.space()), hs, md);
  LinMap rhd(tensor_space(hs, a.space()), a.space(), md);

  auto twisted_pair = [&](const Tensor& uv) -> std::optional<Vec> {
    // uv has legs [u1 u2 v1 v2] in E; computes i(S pi(u1 v1)) u2 v2 and
    // returns its H coordinates
    Tensor t = uv.permute({0, 2, 1, 3})              // [u1 v1 u2 v2]
                   .apply(e.alg.mult, {0, 1})         // [u1v1 u2 v2]
                   .apply(in.proj, {0})
                   .apply(a.antipode, {0})
                   .apply(in.incl, {0})               // [i(S pi(u1v1)) u2 v2]
                   .apply(e.alg.mult, {1, 2})         // [.. u2v2]
                   .apply(e.alg.mult, {0, 1});
    return hb.coords(t.flatten());
  };

  bool lands = true;
  for (size_t k1 = 0; k1 < nh && lands; ++k1) {
    Tensor hk = sweedler_vec(e.coa, hb.basis[k1], 2);
    for (size_t k2 = 0; k2 < nh; ++k2) {
      Tensor gk = sweedler_vec(e.coa, hb.basis[k2], 2);
      auto prod = twisted_pair(hk.kron(gk));
      if (!prod) {
        lands = false;
        break;
      }
      mult_h.set_col(k1 * nh + k2, *prod);
      cocycle.set_col(k1 * nh + k2,
                      in.proj.apply(detail::alg_mult(e.alg.mult, hb.basis[k1],
                                                     hb.basis[k2], md)));
    }
    for (size_t ai = 0; ai < na; ++ai) {
      Tensor ak = sweedler_vec(e.coa, in.incl.col(ai), 2);
      auto act = twisted_pair(hk.kron(ak));
      if (!act) {
        lands = false;
        break;
      }
      lhd.set_col(k1 * na + ai, *act);
      rhd.set_col(k1 * na + ai,
                  in.proj.apply(detail::alg_mult(e.alg.mult, hb.basis[k1],
                                                 in.incl.col(ai), md)));
    }
  }
  out.preconditions.add("H.structure_lands_in_H", lands, Witness{});
  if (!lands) return out;

  FinBialgebra h{make_algebra(hs, mult_h, *unit_h, /*assoc_required=*/false),
                 make_coalgebra(hs, comult_h, counit_h)};
  rec.datum = ExtendingDatum{a, h, lhd, rhd, cocycle};
  rec.verification.merge(check_extending_datum(rec.datum), "datum.");
  rec.verification.merge(check_BE(rec.datum), "datum.");
  if (!rec.verification.ok()) {
    out.preconditions.add("datum.BE_suite", false, Witness{});
    return out;
  }
  rec.product = unified_product(rec.datum).get();

  // phi(a (x) h) = i(a) h, with the inverse read off Sweedler-wise:
  // phi^{-1}(x) = pi(x1) (x) i(S_A(pi(x2))) x3
  rec.phi = LinMap(rec.product.b.space(), e.space(), md);
  for (size_t ai = 0; ai < na; ++ai)
    for (size_t k = 0; k < nh; ++k)
      rec.phi.set_col(ai * nh + k,
                      detail::alg_mult(e.alg.mult, in.incl.col(ai), hb.basis[k], md));
  rec.phi_inv = LinMap(e.space(), rec.product.b.space(), md);
  bool inv_ok = true;
  for (size_t x = 0; x < ne; ++x) {
    Tensor t = sweedler(e.coa, x, 3)              // [x1 x2 x3]
                   .apply(in.proj, {1})
                   .apply(a.antipode, {1})
                   .apply(in.incl, {1})            // [x1 i(S pi(x2)) x3]
                   .apply(e.alg.mult, {1, 2})      // [x1 ..x3]
                   .apply(in.proj, {0});           // [pi(x1) ..]
    // second leg must land in H
    Vec flat = t.flatten();
    Vec col = zero_vec(na * nh, md);
    for (size_t p = 0; p < na; ++p) {
      Vec slice(flat.begin() + p * ne, flat.begin() + (p + 1) * ne);
      auto c = hb.coords(slice);
      if (!c) {
        inv_ok = false;
        break;
      }
      for (size_t k = 0; k < nh; ++k) col[p * nh + k] = (*c)[k];
    }
    if (!inv_ok) break;
    rec.phi_inv.set_col(x, col);
  }
  rec.verification.add("phi_inv.lands_in_AxH", inv_ok, Witness{});
  rec.verification.add("phi.inverse_right",
                       inv_ok && compose(rec.phi, rec.phi_inv) ==
                                     LinMap::identity(e.space(), md),
                       Witness{});
  rec.verification.add("phi.inverse_left",
                       inv_ok && compose(rec.phi_inv, rec.phi) ==
                                     LinMap::identity(rec.product.b.space(), md),
                       Witness{});
  IsoCheck iso = verify_bialgebra_iso(rec.phi, rec.product.b, e);
  rec.verification.merge(iso.report, "phi.");

  // E as a left-left A-Hopf module: a.x = i(a)x, rho(x) = pi(x1) (x) x2
  LinMap act(tensor_space(a.space(), e.space()), e.space(), md);
  for (size_t ai = 0; ai < na; ++ai)
    for (size_t x = 0; x < ne; ++x)
      act.set_col(ai * ne + x, detail::alg_mult(e.alg.mult, in.incl.col(ai),
                                                basis_vec(ne, x, md), md));
  LinMap coact(e.space(), tensor_space(a.space(), e.space()), md);
  for (size_t x = 0; x < ne; ++x)
    coact.set_col(x, sweedler(e.coa, x, 2).apply(in.proj, {0}).flatten());
  rec.module = HopfModule{a, e.space(), act, coact};
  rec.verification.merge(check_hopf_module(rec.module), "E.");

  out.recovery = std::move(rec);
  return out;
}

// ---------------------------------------------------------------------------
// Corollary specializations
// ---------------------------------------------------------------------------

struct TwistedRecovery {
  SplitAnalysis base;
  bool rhd_trivial = false;  // asserted by the corollary

  bool ok() const { return base.ok() && rhd_trivial; }
};

// pi additionally a right A-module map forces |> trivial and E ~ A <> H.
inline TwistedRecovery bimodule_split(const SplitExtensionInput& in) {
  TwistedRecovery out;
  // right module precondition: pi(x i(a)) = pi(x) a
  const FinBialgebra& e = in.e;
  const HopfAlgebra& a = in.a;
  size_t na = a.dim(), ne = e.dim();
  ScalarMode md = e.mode();
  LinMap ract(tensor_space(e.space(), a.space()), e.space(), md);
  for (size_t x = 0; x < ne; ++x)
    for (size_t ai = 0; ai < na; ++ai)
      ract.set_col(x * na + ai, detail::alg_mult(e.alg.mult, basis_vec(ne, x, md),
                                                 in.incl.col(ai), md));
  bool right = is_right_module_map(in.proj, ract, a.b.alg.mult);
  out.base.preconditions.add("pi.right_module_map", right, Witness{});
  if (!right) return out;

  SplitAnalysis rec = split_extension_datum(in);
  out.base.preconditions.merge(rec.preconditions);
  out.base.recovery = std::move(rec.recovery);
  if (!out.base.recovery) return out;
  out.rhd_trivial = is_trivial_rhd(out.base.recovery->datum);
  if (!out.rhd_trivial)
    throw std::logic_error("bimodule_split: recovered |> is not trivial");
  return out;
}

struct SmashRecovery {
  SplitAnalysis base;
  bool cocycle_trivial = false;
  bool rhd_trivial = false;
  bool lhd_simplified = false;  // h <| a = i(S_A(a1)) h i(a2)
  bool h_subalgebra = false;    // H closed under the product of E

  bool ok() const {
    return base.ok() && cocycle_trivial && rhd_trivial && lhd_simplified && h_subalgebra;
  }
};

// pi a normal split epimorphism of bialgebras: f and |> come out trivial,
// <| collapses to conjugation, and H is a subalgebra of E.
inline SmashRecovery normal_epi_split(const SplitExtensionInput& in) {
  SmashRecovery out;
  bool pi_alg = is_algebra_map(in.proj, in.e.alg, in.a.b.alg);
  out.base.preconditions.add("pi.algebra_map", pi_alg, Witness{});
  if (!pi_alg) return out;

  SplitAnalysis rec = split_extension_datum(in);
  out.base.preconditions.merge(rec.preconditions);
  out.base.recovery = std::move(rec.recovery);
  if (!out.base.recovery) return out;
  const SplitRecovery& r = *out.base.recovery;
  const ExtendingDatum& om = r.datum;
  out.cocycle_trivial = is_trivial_cocycle(om);
  out.rhd_trivial = is_trivial_rhd(om);

  // simplified action: h <| a = i(S_A(a1)) h i(a2), computed independently
  size_t na = in.a.dim(), nh = r.h_in_e.dim();
  ScalarMode md = in.e.mode();
  out.lhd_simplified = true;
  for (size_t k = 0; k < nh && out.lhd_simplified; ++k)
    for (size_t ai = 0; ai < na; ++ai) {
      Tensor t = sweedler(in.a.b.coa, ai, 2)          // [a1 a2]
                     .apply(in.a.antipode, {0})
                     .apply(in.incl, {0})              // [i(S a1) a2]
                     .apply(in.incl, {1})              // [i(S a1) i(a2)]
                     .kron(Tensor::from_vec(r.h_in_e.basis[k], md))  // [.. h]
                     .permute({0, 2, 1})               // [i(S a1) h i(a2)]
                     .apply(in.e.alg.mult, {0, 1})
                     .apply(in.e.alg.mult, {0, 1});
      auto c = r.h_in_e.coords(t.flatten());
      if (!c || *c != om.lhd.col(k * na + ai)) out.lhd_simplified = false;
    }

  // H is a subalgebra: the recovered product is the restriction of E's
  out.h_subalgebra = true;
  for (size_t k1 = 0; k1 < nh && out.h_subalgebra; ++k1)
    for (size_t k2 = 0; k2 < nh; ++k2) {
      Vec prod = detail::alg_mult(in.e.alg.mult, r.h_in_e.basis[k1], r.h_in_e.basis[k2], md);
      auto c = r.h_in_e.coords(prod);
      if (!c || *c != om.h.alg.mult.col(k1 * nh + k2)) {
        out.h_subalgebra = false;
        break;
      }
    }
  return out;
}

}  // namespace hopf
