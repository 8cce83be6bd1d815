#pragma once

#include <string>

#include "hopf/extending.hpp"

namespace hopf {

enum class Provenance { unified, twisted, smash, circled, biproduct };

inline std::string provenance_str(Provenance p) {
  switch (p) {
    case Provenance::unified: return "unified";
    case Provenance::twisted: return "twisted";
    case Provenance::smash: return "smash";
    case Provenance::circled: return "circled";
    case Provenance::biproduct: return "biproduct";
  }
  return "?";
}

// A bialgebra on the tensor product of the two factor spaces, with basis
// labels inherited pairwise from the factors so transported matrices stay
// comparable across builders. a_space is always the Hopf algebra A;
// h_space is the other factor (H, or L for a biproduct, where the
// underlying space is L (x) A).
struct ProductBialgebra {
  FinBialgebra b;
  Provenance kind = Provenance::unified;
  VectorSpace a_space, h_space;
};

// Builders gate on the verification suite of their input; `gate` carries
// the full report and `product` is present when the gate passed (or the
// caller forced the build to watch it fail downstream).
struct BuildResult {
  Report gate;
  std::optional<ProductBialgebra> product;

  const ProductBialgebra& get() const {
    if (!product) throw std::runtime_error("build refused:\n" + gate.str());
    return *product;
  }
};

namespace detail {

inline FinBialgebra product_shell(const ExtendingDatum& om, const LinMap& mult) {
  FinCoalgebra pc = tensor_coalgebra(om.a.b.coa, om.h.coa);
  size_t na = om.na(), nh = om.nh();
  Vec unit = zero_vec(na * nh, om.mode());
  for (size_t i = 0; i < na; ++i)
    for (size_t j = 0; j < nh; ++j) unit[i * nh + j] = om.a.b.alg.unit[i] * om.h.alg.unit[j];
  return FinBialgebra{make_algebra(pc.space, mult, unit), pc};
}

}  // namespace detail

// Unified product A |x H:
//   (a |x h)(c |x g) = a (h1 |> c1) f(h2 <| c2, g1) |x (h3 <| c3).g2
// with the tensor-product coalgebra and unit 1_A |x 1_H.
inline BuildResult unified_product(const ExtendingDatum& om, bool force = false) {
  BuildResult out;
  if (!force) {
    out.gate = check_extending_datum(om);
    out.gate.merge(check_BE(om));
    if (!out.gate.ok()) return out;
  }

  size_t na = om.na(), nh = om.nh();
  ScalarMode md = om.mode();
  VectorSpace p = tensor_space(om.a.space(), om.h.space());
  LinMap mult(tensor_space(p, p), p, md);
  const LinMap& ma = om.a.b.alg.mult;
  const LinMap& mh = om.h.alg.mult;
  std::vector<Tensor> h3, c3, g2, ea;
  for (size_t i = 0; i < nh; ++i) {
    h3.push_back(sweedler(om.h.coa, i, 3));
    g2.push_back(sweedler(om.h.coa, i, 2));
  }
  for (size_t i = 0; i < na; ++i) {
    c3.push_back(sweedler(om.a.b.coa, i, 3));
    ea.push_back(Tensor::basis({na}, {i}, md));
  }
  for (size_t hi = 0; hi < nh; ++hi)
    for (size_t ci = 0; ci < na; ++ci) {
      Tensor base = h3[hi].kron(c3[ci])        // [h1 h2 h3 c1 c2 c3]
                        .apply(om.rhd, {0, 3})   // [h1|>c1 h2 h3 c2 c3]
                        .apply(om.lhd, {1, 3})   // [h1|>c1 h2<|c2 h3 c3]
                        .apply(om.lhd, {2, 3});  // [h1|>c1 h2<|c2 h3<|c3]
      for (size_t gi = 0; gi < nh; ++gi) {
        Tensor mid = base.kron(g2[gi])           // [A H H g1 g2]
                         .apply(om.cocycle, {1, 3})  // [A f(h2<|c2,g1) H g2]
                         .apply(mh, {2, 3})          // [A f (h3<|c3).g2]
                         .apply(ma, {0, 1});         // [A*f, H]
        for (size_t ai = 0; ai < na; ++ai) {
          Tensor t = ea[ai].kron(mid).apply(ma, {0, 1});  // [a(..), H]
          mult.set_col((ai * nh + hi) * (na * nh) + (ci * nh + gi), t.flatten());
        }
      }
    }
  out.product = ProductBialgebra{detail::product_shell(om, mult), Provenance::unified,
                                 om.a.space(), om.h.space()};
  return out;
}

// Twisted product A <> H (trivial |>):
//   (a <> h)(c <> g) = a c1 f(h1 <| c2, g1) <> (h2 <| c3).g2
inline BuildResult twisted_product(const ExtendingDatum& om, bool force = false) {
  if (!is_trivial_rhd(om) && !force)
    throw std::invalid_argument("twisted_product: |> is not trivial");
  BuildResult out;
  if (!force) {
    out.gate = check_extending_datum(om);
    out.gate.merge(check_BE(om));
    if (!out.gate.ok()) return out;
  }

  size_t na = om.na(), nh = om.nh();
  ScalarMode md = om.mode();
  VectorSpace p = tensor_space(om.a.space(), om.h.space());
  LinMap mult(tensor_space(p, p), p, md);
  const LinMap& ma = om.a.b.alg.mult;
  const LinMap& mh = om.h.alg.mult;
  std::vector<Tensor> h2, c3, ea;
  for (size_t i = 0; i < nh; ++i) h2.push_back(sweedler(om.h.coa, i, 2));
  for (size_t i = 0; i < na; ++i) {
    c3.push_back(sweedler(om.a.b.coa, i, 3));
    ea.push_back(Tensor::basis({na}, {i}, md));
  }
  for (size_t hi = 0; hi < nh; ++hi)
    for (size_t ci = 0; ci < na; ++ci) {
      Tensor base = h2[hi].kron(c3[ci])        // [h1 h2 c1 c2 c3]
                        .apply(om.lhd, {0, 3})   // [h1<|c2 h2 c1 c3]
                        .apply(om.lhd, {1, 3});  // [h1<|c2 h2<|c3 c1]
      for (size_t gi = 0; gi < nh; ++gi) {
        Tensor mid = base.kron(h2[gi])           // [H1 H2 c1 g1 g2]
                         .apply(om.cocycle, {0, 3})  // [f(h1<|c2,g1) H2 c1 g2]
                         .apply(mh, {1, 3})          // [f (h2<|c3).g2 c1]
                         .permute({2, 0, 1})         // [c1 f H]
                         .apply(ma, {0, 1});         // [c1*f H]
        for (size_t ai = 0; ai < na; ++ai) {
          Tensor t = ea[ai].kron(mid).apply(ma, {0, 1});
          mult.set_col((ai * nh + hi) * (na * nh) + (ci * nh + gi), t.flatten());
        }
      }
    }
  out.product = ProductBialgebra{detail::product_shell(om, mult), Provenance::twisted,
                                 om.a.space(), om.h.space()};
  return out;
}

// Right smash product A # H (trivial |> and f):
//   (a # h)(c # g) = a c1 # (h <| c2) g
inline BuildResult smash_product(const HopfAlgebra& a, const FinBialgebra& h,
                                 const LinMap& lhd, bool force = false) {
  ExtendingDatum om{a, h, lhd, trivial_rhd(h, a), trivial_cocycle(h, a)};
  BuildResult out;
  if (!force) {
    out.gate = check_extending_datum(om);
    out.gate.merge(check_BE(om));
    // H itself must be a genuine bialgebra here (associative included)
    FinBialgebra strict = h;
    strict.alg.assoc_required = true;
    out.gate.merge(check_bialgebra(strict), "H.");
    if (!out.gate.ok()) return out;
  }

  size_t na = a.dim(), nh = h.dim();
  ScalarMode md = a.mode();
  VectorSpace p = tensor_space(a.space(), h.space());
  LinMap mult(tensor_space(p, p), p, md);
  for (size_t ai = 0; ai < na; ++ai)
    for (size_t hi = 0; hi < nh; ++hi)
      for (size_t ci = 0; ci < na; ++ci)
        for (size_t gi = 0; gi < nh; ++gi) {
          Tensor t = Tensor::basis({nh}, {hi}, md)
                         .kron(sweedler(a.b.coa, ci, 2))  // [h c1 c2]
                         .apply(lhd, {0, 2});             // [h<|c2 c1]
          t = t.kron(Tensor::basis({nh}, {gi}, md))       // [H c1 g]
                  .apply(h.alg.mult, {0, 2})              // [(h<|c2)g c1]
                  .permute({1, 0});                       // [c1 H]
          t = Tensor::basis({na}, {ai}, md).kron(t)       // [a c1 H]
                  .apply(a.b.alg.mult, {0, 1});           // [ac1 H]
          mult.set_col((ai * nh + hi) * (na * nh) + (ci * nh + gi), t.flatten());
        }
  out.product = ProductBialgebra{detail::product_shell(om, mult), Provenance::smash,
                                 a.space(), h.space()};
  return out;
}

// gamma-deformed smash product A (*) H for a unitary coalgebra map
// gamma : H -> A with gamma^{-1} = S_A o gamma:
//   (a (*) h)(c (*) g) = a c1 (*) (h <| (c2 gamma^{-1}(g1))).g2
//   Delta(a (*) h) = a1 (*) h2  (x)  a2 gamma^{-1}(h1) gamma(h3) (*) h4
//   eps = eps_A (x) eps_H
struct CircledGate {
  Report report;
  bool ok() const { return report.ok(); }
};

inline Report check_circled_input(const HopfAlgebra& a, const FinBialgebra& h,
                                  const LinMap& lhd, const LinMap& gamma) {
  Report rep;
  auto w = detail::coalgebra_map_witness(gamma, h.coa, a.b.coa);
  rep.add("gamma.coalgebra_map", !w, w ? *w : Witness{});
  rep.add("gamma.unitary", gamma.apply(h.alg.unit) == a.b.alg.unit,
          Witness{{}, "gamma(1_H)", vec_str(gamma.apply(h.alg.unit), a.space()),
                  vec_str(a.b.alg.unit, a.space())});
  auto lw = detail::pair_coalgebra_map_witness(lhd, h.coa, a.b.coa, h.coa);
  rep.add("lhd.coalgebra_map", !lw, lw ? *lw : Witness{});
  // (H, <|) a right A-module
  size_t na = a.dim(), nh = h.dim();
  ScalarMode md = a.mode();
  bool mod = true;
  for (size_t x = 0; x < nh && mod; ++x)
    for (size_t i = 0; i < na && mod; ++i)
      for (size_t j = 0; j < na; ++j) {
        Tensor l = Tensor::from_col(lhd, x * na + i)
                       .kron(Tensor::basis({na}, {j}, md))
                       .apply(lhd, {0, 1});
        Tensor r = Tensor::basis({nh}, {x}, md)
                       .kron(Tensor::from_col(a.b.alg.mult, i * na + j))
                       .apply(lhd, {0, 1});
        if (l != r) {
          mod = false;
          break;
        }
      }
  rep.add("lhd.right_module", mod, Witness{});
  return rep;
}

inline BuildResult circled_product(const HopfAlgebra& a, const FinBialgebra& h,
                                   const LinMap& lhd, const LinMap& gamma,
                                   bool force = false) {
  BuildResult out;
  if (!force) {
    out.gate = check_circled_input(a, h, lhd, gamma);
    if (!out.gate.ok()) return out;
  }

  size_t na = a.dim(), nh = h.dim();
  ScalarMode md = a.mode();
  LinMap gamma_inv = compose(a.antipode, gamma);
  VectorSpace p = tensor_space(a.space(), h.space());
  const LinMap& ma = a.b.alg.mult;
  const LinMap& mh = h.alg.mult;

  LinMap mult(tensor_space(p, p), p, md);
  std::vector<Tensor> c2, g2v, eh, ea;
  for (size_t i = 0; i < na; ++i) {
    c2.push_back(sweedler(a.b.coa, i, 2));
    ea.push_back(Tensor::basis({na}, {i}, md));
  }
  for (size_t i = 0; i < nh; ++i) {
    g2v.push_back(sweedler(h.coa, i, 2));
    eh.push_back(Tensor::basis({nh}, {i}, md));
  }
  for (size_t ci = 0; ci < na; ++ci)
    for (size_t gi = 0; gi < nh; ++gi) {
      Tensor base = c2[ci].kron(g2v[gi])       // [c1 c2 g1 g2]
                        .apply(gamma_inv, {2})  // [c1 c2 gamma^-1(g1) g2]
                        .apply(ma, {1, 2});     // [c1 c2*gi(g1) g2]
      for (size_t hi = 0; hi < nh; ++hi) {
        Tensor mid = eh[hi].kron(base)          // [h c1 A g2]
                         .apply(lhd, {0, 2})    // [h<|(..) c1 g2]
                         .apply(mh, {0, 2})     // [(h<|..).g2 c1]
                         .permute({1, 0});      // [c1 H]
        for (size_t ai = 0; ai < na; ++ai) {
          Tensor t = ea[ai].kron(mid).apply(ma, {0, 1});
          mult.set_col((ai * nh + hi) * (na * nh) + (ci * nh + gi), t.flatten());
        }
      }
    }

  LinMap comult(p, tensor_space(p, p), md);
  for (size_t ai = 0; ai < na; ++ai)
    for (size_t hi = 0; hi < nh; ++hi) {
      Tensor t = sweedler(a.b.coa, ai, 2)
                     .kron(sweedler(h.coa, hi, 4))  // [a1 a2 h1 h2 h3 h4]
                     .apply(gamma_inv, {2})          // [a1 a2 gi(h1) h2 h3 h4]
                     .apply(gamma, {4})              // [a1 a2 gi(h1) h2 g(h3) h4]
                     .apply(ma, {2, 4})              // [a1 a2 gi(h1)g(h3) h2 h4]
                     .apply(ma, {1, 2})              // [a1 A' h2 h4]
                     .permute({0, 2, 1, 3});         // [a1 h2 A' h4]
      comult.set_col(ai * nh + hi, t.flatten());
    }

  LinMap counit(p, ground_space(), md);
  for (size_t ai = 0; ai < na; ++ai)
    for (size_t hi = 0; hi < nh; ++hi)
      counit.at(0, ai * nh + hi) = a.b.coa.counit.at(0, ai) * h.coa.counit.at(0, hi);

  Vec unit = zero_vec(na * nh, md);
  for (size_t i = 0; i < na; ++i)
    for (size_t j = 0; j < nh; ++j) unit[i * nh + j] = a.b.alg.unit[i] * h.alg.unit[j];

  out.product = ProductBialgebra{FinBialgebra{make_algebra(p, mult, unit),
                                              make_coalgebra(p, comult, counit)},
                                 Provenance::circled, a.space(), h.space()};
  return out;
}

// Radford biproduct L * A for a bialgebra L in the Yetter-Drinfel'd
// category over A:
//   (l * a)(m * b)  = l (a1 . m) * a2 b
//   Delta(l * a)    = l1 * l2(-1) a1  (x)  l2(0) * a2
struct YDBialgebra {
  VectorSpace space;
  LinMap mult;      // L (x) L -> L
  Vec unit;
  LinMap comult;    // L -> L (x) L
  LinMap counit;
  LinMap action;    // A (x) L -> L
  LinMap coaction;  // L -> A (x) L
};

inline BuildResult radford_biproduct(const YDBialgebra& l, const HopfAlgebra& a,
                                     bool force = false) {
  BuildResult out;
  if (!force) {
    out.gate = check_yetter_drinfeld(YDModule{a, l.space, l.action, l.coaction});
    if (!out.gate.ok()) return out;
  }

  size_t nl = l.space.dim, na = a.dim();
  ScalarMode md = a.mode();
  VectorSpace p = tensor_space(l.space, a.space());
  const LinMap& ma = a.b.alg.mult;

  LinMap mult(tensor_space(p, p), p, md);
  std::vector<Tensor> a2, ea, el;
  for (size_t i = 0; i < na; ++i) {
    a2.push_back(sweedler(a.b.coa, i, 2));
    ea.push_back(Tensor::basis({na}, {i}, md));
  }
  for (size_t i = 0; i < nl; ++i) el.push_back(Tensor::basis({nl}, {i}, md));
  for (size_t ai = 0; ai < na; ++ai)
    for (size_t mi = 0; mi < nl; ++mi) {
      Tensor base = a2[ai].kron(el[mi])            // [a1 a2 m]
                        .apply(l.action, {0, 2});  // [a1.m a2]
      for (size_t li = 0; li < nl; ++li) {
        Tensor mid = el[li].kron(base)             // [l a1.m a2]
                         .apply(l.mult, {0, 1});   // [l(a1.m) a2]
        for (size_t bi = 0; bi < na; ++bi) {
          Tensor t = mid.kron(ea[bi]).apply(ma, {1, 2});  // [L a2b]
          mult.set_col((li * na + ai) * (nl * na) + (mi * na + bi), t.flatten());
        }
      }
    }

  LinMap comult(p, tensor_space(p, p), md);
  for (size_t li = 0; li < nl; ++li)
    for (size_t ai = 0; ai < na; ++ai) {
      Tensor t = Tensor::basis({nl}, {li}, md)
                     .apply(l.comult, {0})
                     .split(0, {nl, nl})                 // [l1 l2]
                     .apply(l.coaction, {1})
                     .split(1, {na, nl})                  // [l1 l2(-1) l2(0)]
                     .kron(sweedler(a.b.coa, ai, 2))      // [l1 l2(-1) l2(0) a1 a2]
                     .apply(ma, {1, 3})                   // [l1 l2(-1)a1 l2(0) a2]
                     ;                                    // order is already [L A L A]
      comult.set_col(li * na + ai, t.flatten());
    }

  LinMap counit(p, ground_space(), md);
  for (size_t li = 0; li < nl; ++li)
    for (size_t ai = 0; ai < na; ++ai)
      counit.at(0, li * na + ai) = l.counit.at(0, li) * a.b.coa.counit.at(0, ai);

  Vec unit = zero_vec(nl * na, md);
  for (size_t i = 0; i < nl; ++i)
    for (size_t j = 0; j < na; ++j) unit[i * na + j] = l.unit[i] * a.b.alg.unit[j];

  out.product = ProductBialgebra{FinBialgebra{make_algebra(p, mult, unit),
                                              make_coalgebra(p, comult, counit)},
                                 Provenance::biproduct, a.space(), l.space};
  return out;
}

// ---------------------------------------------------------------------------
// Canonical maps of the unified product and their property suite
// ---------------------------------------------------------------------------

struct CanonicalMaps {
  LinMap i_a;   // a |-> a |x 1_H
  LinMap pi_a;  // a |x h |-> eps(h) a
  Report props;
};

inline LinMap canonical_injection(const ExtendingDatum& om) {
  size_t na = om.na(), nh = om.nh();
  LinMap i(om.a.space(), tensor_space(om.a.space(), om.h.space()), om.mode());
  for (size_t ai = 0; ai < na; ++ai)
    for (size_t j = 0; j < nh; ++j)
      if (!om.h.alg.unit[j].is_zero()) i.at(ai * nh + j, ai) = om.h.alg.unit[j];
  return i;
}

inline LinMap canonical_projection(const ExtendingDatum& om) {
  size_t na = om.na(), nh = om.nh();
  LinMap pi(tensor_space(om.a.space(), om.h.space()), om.a.space(), om.mode());
  for (size_t ai = 0; ai < na; ++ai)
    for (size_t j = 0; j < nh; ++j) pi.at(ai, ai * nh + j) = om.h.coa.counit.at(0, j);
  return pi;
}

// Verifies the property suite of (i_A, pi_A):
//   i_A is a bialgebra map; pi_A is a normal left A-module coalgebra map;
//   pi_A o i_A = id; pi_A is a right module map iff |> is trivial; pi_A is
//   a bialgebra map iff |> and f are trivial. The two "iff" items compare
//   the morphism property against triviality of the maps, in both
//   directions.
inline CanonicalMaps canonical_maps(const ProductBialgebra& p, const ExtendingDatum& om) {
  CanonicalMaps out{canonical_injection(om), canonical_projection(om), {}};
  const LinMap& i = out.i_a;
  const LinMap& pi = out.pi_a;
  Report& rep = out.props;
  size_t na = om.na(), nh = om.nh();
  ScalarMode md = om.mode();

  rep.add("iA.algebra_map", is_algebra_map(i, om.a.b.alg, p.b.alg), Witness{});
  rep.add("iA.coalgebra_map", is_coalgebra_map(i, om.a.b.coa, p.b.coa), Witness{});
  rep.add("piA.coalgebra_map", is_coalgebra_map(pi, p.b.coa, om.a.b.coa), Witness{});
  rep.add("piA.normal", is_normal_coalgebra_map(pi, p.b.coa, om.a.b.alg), Witness{});
  rep.add("piA.section", compose(pi, i) == LinMap::identity(om.a.space(), md), Witness{});

  // left A-action on A |x H through i_A, regular action on A
  size_t np = na * nh;
  LinMap act_p(tensor_space(om.a.space(), p.b.space()), p.b.space(), md);
  for (size_t ai = 0; ai < na; ++ai)
    for (size_t x = 0; x < np; ++x) {
      Tensor t = Tensor::from_col(i, ai).kron(Tensor::basis({np}, {x}, md))
                     .apply(p.b.alg.mult, {0, 1});
      act_p.set_col(ai * np + x, t.flatten());
    }
  rep.add("piA.left_module_map", is_left_module_map(pi, act_p, om.a.b.alg.mult), Witness{});

  // right A-action via i_A on the product side
  LinMap ract_p(tensor_space(p.b.space(), om.a.space()), p.b.space(), md);
  for (size_t x = 0; x < np; ++x)
    for (size_t ai = 0; ai < na; ++ai) {
      Tensor t = Tensor::basis({np}, {x}, md).kron(Tensor::from_col(i, ai))
                     .apply(p.b.alg.mult, {0, 1});
      ract_p.set_col(x * na + ai, t.flatten());
    }
  LinMap ract_a(tensor_space(om.a.space(), om.a.space()), om.a.space(), md);
  for (size_t x = 0; x < na; ++x)
    for (size_t ai = 0; ai < na; ++ai)
      ract_a.set_col(x * na + ai, om.a.b.alg.mult.col(x * na + ai));
  bool right_mod = is_right_module_map(pi, ract_p, ract_a);
  bool rhd_triv = is_trivial_rhd(om);
  rep.add("piA.right_module_iff_rhd_trivial", right_mod == rhd_triv,
          Witness{{}, "right-module=" + std::to_string(right_mod) +
                          ", rhd trivial=" + std::to_string(rhd_triv),
                  "", ""});

  bool bimap = is_bialgebra_map(pi, p.b, om.a.b);
  bool smash = rhd_triv && is_trivial_cocycle(om);
  rep.add("piA.bialgebra_map_iff_smash", bimap == smash,
          Witness{{}, "bialgebra-map=" + std::to_string(bimap) +
                          ", smash datum=" + std::to_string(smash),
                  "", ""});
  return out;
}

}  // namespace hopf
