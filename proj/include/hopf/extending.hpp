#pragma once

#include <set>
#include <string>

#include "hopf/bialgebra.hpp"

namespace hopf {

// Extending datum of a Hopf algebra A: a carrier H that is a coalgebra
// and a unital (not necessarily associative) algebra, two actions and a
// cocycle, all as structure-constant matrices:
//   lhd     <| : H (x) A -> H
//   rhd     |> : H (x) A -> A
//   cocycle f  : H (x) H -> A
struct ExtendingDatum {
  HopfAlgebra a;
  FinBialgebra h;
  LinMap lhd;
  LinMap rhd;
  LinMap cocycle;

  ScalarMode mode() const { return a.mode(); }
  size_t na() const { return a.dim(); }
  size_t nh() const { return h.dim(); }
};

inline LinMap trivial_lhd(const FinBialgebra& h, const HopfAlgebra& a) {
  LinMap m(tensor_space(h.space(), a.space()), h.space(), a.mode());
  for (size_t x = 0; x < h.dim(); ++x)
    for (size_t i = 0; i < a.dim(); ++i)
      m.at(x, x * a.dim() + i) = a.b.coa.counit.at(0, i);
  return m;
}

inline LinMap trivial_rhd(const FinBialgebra& h, const HopfAlgebra& a) {
  LinMap m(tensor_space(h.space(), a.space()), a.space(), a.mode());
  for (size_t x = 0; x < h.dim(); ++x)
    for (size_t i = 0; i < a.dim(); ++i)
      m.at(i, x * a.dim() + i) = h.coa.counit.at(0, x);
  return m;
}

inline LinMap trivial_cocycle(const FinBialgebra& h, const HopfAlgebra& a) {
  LinMap m(tensor_space(h.space(), h.space()), a.space(), a.mode());
  for (size_t x = 0; x < h.dim(); ++x)
    for (size_t y = 0; y < h.dim(); ++y) {
      Scalar e = h.coa.counit.at(0, x) * h.coa.counit.at(0, y);
      for (size_t r = 0; r < a.dim(); ++r) m.at(r, x * h.dim() + y) = e * a.b.alg.unit[r];
    }
  return m;
}

inline bool is_trivial_rhd(const ExtendingDatum& om) {
  return om.rhd == trivial_rhd(om.h, om.a);
}

inline bool is_trivial_lhd(const ExtendingDatum& om) {
  return om.lhd == trivial_lhd(om.h, om.a);
}

inline bool is_trivial_cocycle(const ExtendingDatum& om) {
  return om.cocycle == trivial_cocycle(om.h, om.a);
}

namespace detail {

// Coalgebra-map property for phi : C1 (x) C2 -> D, contracted through
// sparse columns without materializing the tensor-product coalgebra.
inline std::optional<Witness> pair_coalgebra_map_witness(const LinMap& phi,
                                                         const FinCoalgebra& c1,
                                                         const FinCoalgebra& c2,
                                                         const FinCoalgebra& d) {
  size_t n1 = c1.dim(), n2 = c2.dim(), nd = d.dim();
  std::vector<SparseCol> pc = sparse_columns(phi);
  std::vector<SparseCol> d1 = sparse_columns(c1.comult);
  std::vector<SparseCol> d2 = sparse_columns(c2.comult);
  std::vector<SparseCol> dd = sparse_columns(d.comult);
  SparseAcc acc;
  for (size_t x = 0; x < n1; ++x)
    for (size_t i = 0; i < n2; ++i) {
      acc.clear();
      for (auto& [t1, v1] : d1[x]) {
        size_t x1 = t1 / n1, x2 = t1 % n1;
        for (auto& [t2, v2] : d2[i]) {
          size_t i1 = t2 / n2, i2 = t2 % n2;
          Scalar w = v1 * v2;
          for (auto& [r1, w1] : pc[x1 * n2 + i1]) {
            Scalar ww = w * w1;
            for (auto& [r2, w2] : pc[x2 * n2 + i2]) acc.add(r1 * nd + r2, ww * w2);
          }
        }
      }
      for (auto& [z, c] : pc[x * n2 + i])
        for (auto& [t, v] : dd[z]) acc.add(t, -(c * v));
      Scalar e = Scalar::zero(phi.mode());
      for (auto& [z, c] : pc[x * n2 + i]) e += c * d.counit.at(0, z);
      Scalar er = c1.counit.at(0, x) * c2.counit.at(0, i);
      if (!acc.is_zero() || e != er) {
        std::string where = "x=" + c1.space.labels[x] + ", y=" + c2.space.labels[i];
        if (!acc.is_zero())
          return Witness{{x, i}, where, "(phi (x) phi) Delta", "Delta phi"};
        return Witness{{x, i}, where + " (counit)", e.str(), er.str()};
      }
    }
  return std::nullopt;
}

inline std::optional<Witness> coalgebra_map_witness(const LinMap& phi, const FinCoalgebra& c,
                                                    const FinCoalgebra& d) {
  for (size_t i = 0; i < c.dim(); ++i) {
    Tensor lhs = sweedler(c, i, 2).apply(phi, {0}).apply(phi, {1});
    Tensor rhs = Tensor::from_col(phi, i).apply(d.comult, {0}).split(0, {d.dim(), d.dim()});
    VectorSpace out = tensor_space(d.space, d.space);
    if (lhs != rhs)
      return Witness{{i}, "x=" + c.space.labels[i], vec_str(lhs.flatten(), out),
                     vec_str(rhs.flatten(), out)};
    Vec le = compose(d.counit, phi).col(i), re = c.counit.col(i);
    if (le != re)
      return Witness{{i}, "x=" + c.space.labels[i] + " (counit)", vec_str(le, ground_space()),
                     vec_str(re, ground_space())};
  }
  return std::nullopt;
}

}  // namespace detail

// Coalgebra-map property of <|, |>, f plus the normalization laws
//   h |> 1 = eps(h) 1,  1 |> a = a,  1 <| a = eps(a) 1,  h <| 1 = h,
//   Delta(1) = 1 (x) 1,  f(h, 1) = f(1, h) = eps(h) 1.
inline Report check_extending_datum(const ExtendingDatum& om) {
  const HopfAlgebra& a = om.a;
  const FinBialgebra& h = om.h;
  size_t na = om.na(), nh = om.nh();
  ScalarMode md = om.mode();
  Report rep;

  auto w1 = detail::pair_coalgebra_map_witness(om.lhd, h.coa, a.b.coa, h.coa);
  rep.add("lhd.coalgebra_map", !w1, w1 ? *w1 : Witness{});
  auto w2 = detail::pair_coalgebra_map_witness(om.rhd, h.coa, a.b.coa, a.b.coa);
  rep.add("rhd.coalgebra_map", !w2, w2 ? *w2 : Witness{});
  auto w3 = detail::pair_coalgebra_map_witness(om.cocycle, h.coa, h.coa, a.b.coa);
  rep.add("cocycle.coalgebra_map", !w3, w3 ? *w3 : Witness{});

  Tensor oneA = unit_tensor(a.b.alg);
  Tensor oneH = Tensor::from_vec(h.alg.unit, md);

  bool f1 = false, f2 = false, f3 = false, f4 = false, f5 = false, f6 = false;
  for (size_t x = 0; x < nh; ++x) {
    Tensor ex = Tensor::basis({nh}, {x}, md);
    // h |> 1 = eps(h) 1
    detail::check_tuple(rep, "norm.rhd_unitA", ex.kron(oneA).apply(om.rhd, {0, 1}),
                        oneA.scaled(h.coa.counit.at(0, x)), a.space(), {x},
                        {{"h", h.space().labels[x]}}, f1);
    // h <| 1 = h
    detail::check_tuple(rep, "norm.lhd_unitA", ex.kron(oneA).apply(om.lhd, {0, 1}), ex,
                        h.space(), {x}, {{"h", h.space().labels[x]}}, f2);
    // f(h, 1) = f(1, h) = eps(h) 1
    detail::check_tuple(rep, "norm.cocycle_right", ex.kron(oneH).apply(om.cocycle, {0, 1}),
                        oneA.scaled(h.coa.counit.at(0, x)), a.space(), {x},
                        {{"h", h.space().labels[x]}}, f3);
    detail::check_tuple(rep, "norm.cocycle_left", oneH.kron(ex).apply(om.cocycle, {0, 1}),
                        oneA.scaled(h.coa.counit.at(0, x)), a.space(), {x},
                        {{"h", h.space().labels[x]}}, f4);
  }
  for (size_t i = 0; i < na; ++i) {
    Tensor ea = Tensor::basis({na}, {i}, md);
    // 1 |> a = a
    detail::check_tuple(rep, "norm.rhd_unitH", oneH.kron(ea).apply(om.rhd, {0, 1}), ea,
                        a.space(), {i}, {{"a", a.space().labels[i]}}, f5);
    // 1 <| a = eps(a) 1
    detail::check_tuple(rep, "norm.lhd_unitH", oneH.kron(ea).apply(om.lhd, {0, 1}),
                        oneH.scaled(a.b.coa.counit.at(0, i)), h.space(), {i},
                        {{"a", a.space().labels[i]}}, f6);
  }
  if (!f1) rep.add_pass("norm.rhd_unitA");
  if (!f2) rep.add_pass("norm.lhd_unitA");
  if (!f3) rep.add_pass("norm.cocycle_right");
  if (!f4) rep.add_pass("norm.cocycle_left");
  if (!f5) rep.add_pass("norm.rhd_unitH");
  if (!f6) rep.add_pass("norm.lhd_unitH");

  {
    bool fd = false;
    detail::check_tuple(rep, "norm.delta_unitH", sweedler_vec(h.coa, h.alg.unit, 2),
                        oneH.kron(oneH), tensor_space(h.space(), h.space()), {},
                        {{"h", "1"}}, fd);
    if (!fd) rep.add_pass("norm.delta_unitH");
  }
  return rep;
}

// The compatibility suite of a bialgebra extending structure:
// Delta_H and eps_H multiplicative, (H, <|) a right A-module, and the
// seven conditions (BE1)-(BE7), each contracted on basis tuples exactly
// as written. Sweedler legs are expanded with sweedler(); the
// intermediate leg layout is tracked in the comments.
inline Report check_BE(const ExtendingDatum& om) {
  const HopfAlgebra& a = om.a;
  const FinBialgebra& h = om.h;
  size_t na = om.na(), nh = om.nh();
  ScalarMode md = om.mode();
  const LinMap& mh = h.alg.mult;
  const LinMap& ma = a.b.alg.mult;
  const LinMap& lhd = om.lhd;
  const LinMap& rhd = om.rhd;
  const LinMap& f = om.cocycle;
  Report rep;

  auto hl = [&](size_t i) { return h.space().labels[i]; };
  auto al = [&](size_t i) { return a.space().labels[i]; };

  std::vector<Tensor> h2, h3, a2, a3;
  for (size_t i = 0; i < nh; ++i) {
    h2.push_back(sweedler(h.coa, i, 2));
    h3.push_back(sweedler(h.coa, i, 3));
  }
  for (size_t i = 0; i < na; ++i) {
    a2.push_back(sweedler(a.b.coa, i, 2));
    a3.push_back(sweedler(a.b.coa, i, 3));
  }
  auto eh = [&](size_t i) { return Tensor::basis({nh}, {i}, md); };
  auto ea = [&](size_t i) { return Tensor::basis({na}, {i}, md); };

  // Delta_H(g.h) = Delta_H(g) Delta_H(h), eps_H(g.h) = eps_H(g) eps_H(h)
  bool fdm = false, fem = false;
  for (size_t g = 0; g < nh; ++g)
    for (size_t x = 0; x < nh; ++x) {
      Tensor lhs = Tensor::from_col(mh, g * nh + x).apply(h.coa.comult, {0});
      Tensor rhs = h2[g].kron(h2[x])          // [g1 g2 h1 h2]
                       .permute({0, 2, 1, 3})  // [g1 h1 g2 h2]
                       .apply(mh, {0, 1})      // [g1h1 g2 h2]
                       .apply(mh, {1, 2});     // [g1h1 g2h2]
      detail::check_tuple_flat(rep, "DeltaH.algebra_map", lhs, rhs,
                               tensor_space(h.space(), h.space()), {g, x},
                               {{"g", hl(g)}, {"h", hl(x)}}, fdm);
      Vec le = h.coa.counit.apply(mh.col(g * nh + x));
      Scalar pe = h.coa.counit.at(0, g) * h.coa.counit.at(0, x);
      detail::check_tuple(rep, "epsH.algebra_map", Tensor::from_vec(le, md),
                          Tensor::from_vec({pe}, md), ground_space(), {g, x},
                          {{"g", hl(g)}, {"h", hl(x)}}, fem);
    }
  if (!fdm) rep.add_pass("DeltaH.algebra_map");
  if (!fem) rep.add_pass("epsH.algebra_map");

  // (h <| a) <| b = h <| (ab)
  bool fm = false;
  for (size_t x = 0; x < nh; ++x)
    for (size_t i = 0; i < na; ++i)
      for (size_t j = 0; j < na; ++j) {
        Tensor lhs = Tensor::from_col(lhd, x * na + i).kron(ea(j)).apply(lhd, {0, 1});
        Tensor rhs = eh(x).kron(Tensor::from_col(ma, i * na + j)).apply(lhd, {0, 1});
        detail::check_tuple(rep, "lhd.right_module", lhs, rhs, h.space(), {x, i, j},
                            {{"h", hl(x)}, {"a", al(i)}, {"b", al(j)}}, fm);
      }
  if (!fm) rep.add_pass("lhd.right_module");

  // BE1: (g.h).l = (g <| f(h1, l1)) . (h2.l2)
  bool f1 = false;
  for (size_t g = 0; g < nh && !f1; ++g)
    for (size_t x = 0; x < nh && !f1; ++x)
      for (size_t l = 0; l < nh; ++l) {
        Tensor lhs = Tensor::from_col(mh, g * nh + x).kron(eh(l)).apply(mh, {0, 1});
        Tensor rhs = h2[x].kron(h2[l])        // [h1 h2 l1 l2]
                         .apply(f, {0, 2})     // [f(h1,l1) h2 l2]
                         .apply(mh, {1, 2});   // [f(h1,l1) h2l2]
        rhs = eh(g).kron(rhs)                  // [g f h2l2]
                  .apply(lhd, {0, 1})          // [g<|f h2l2]
                  .apply(mh, {0, 1});          // [(g<|f).(h2l2)]
        if (!detail::check_tuple(rep, "BE1", lhs, rhs, h.space(), {g, x, l},
                                 {{"g", hl(g)}, {"h", hl(x)}, {"l", hl(l)}}, f1))
          break;
      }
  if (!f1) rep.add_pass("BE1");

  // BE2: g |> (ab) = (g1 |> a1)[(g2 <| a2) |> b]
  bool f2 = false;
  for (size_t g = 0; g < nh && !f2; ++g)
    for (size_t i = 0; i < na && !f2; ++i)
      for (size_t j = 0; j < na; ++j) {
        Tensor lhs = eh(g).kron(Tensor::from_col(ma, i * na + j)).apply(rhd, {0, 1});
        Tensor rhs = h2[g].kron(a2[i])          // [g1 g2 a1 a2]
                         .kron(ea(j))           // [g1 g2 a1 a2 b]
                         .apply(rhd, {0, 2})    // [g1|>a1 g2 a2 b]
                         .apply(lhd, {1, 2})    // [g1|>a1 g2<|a2 b]
                         .apply(rhd, {1, 2})    // [g1|>a1 (g2<|a2)|>b]
                         .apply(ma, {0, 1});    // [product]
        if (!detail::check_tuple(rep, "BE2", lhs, rhs, a.space(), {g, i, j},
                                 {{"g", hl(g)}, {"a", al(i)}, {"b", al(j)}}, f2))
          break;
      }
  if (!f2) rep.add_pass("BE2");

  // BE3: (g.h) <| a = [g <| (h1 |> a1)] . (h2 <| a2)
  bool f3 = false;
  for (size_t g = 0; g < nh && !f3; ++g)
    for (size_t x = 0; x < nh && !f3; ++x)
      for (size_t i = 0; i < na; ++i) {
        Tensor lhs = Tensor::from_col(mh, g * nh + x).kron(ea(i)).apply(lhd, {0, 1});
        Tensor rhs = h2[x].kron(a2[i])          // [h1 h2 a1 a2]
                         .apply(rhd, {0, 2});   // [h1|>a1 h2 a2]
        rhs = eh(g).kron(rhs)                   // [g h1|>a1 h2 a2]
                  .apply(lhd, {0, 1})           // [g<|(h1|>a1) h2 a2]
                  .apply(lhd, {1, 2})           // [g<|(h1|>a1) h2<|a2]
                  .apply(mh, {0, 1});
        if (!detail::check_tuple(rep, "BE3", lhs, rhs, h.space(), {g, x, i},
                                 {{"g", hl(g)}, {"h", hl(x)}, {"a", al(i)}}, f3))
          break;
      }
  if (!f3) rep.add_pass("BE3");

  // BE4: [g1 |> (h1 |> a1)] f(g2 <| (h2 |> a2), h3 <| a3)
  //      = f(g1, h1)[(g2.h2) |> a]
  bool f4 = false;
  for (size_t g = 0; g < nh && !f4; ++g)
    for (size_t x = 0; x < nh && !f4; ++x)
      for (size_t i = 0; i < na; ++i) {
        Tensor u = h3[x].kron(a3[i])          // [h1 h2 h3 a1 a2 a3]
                       .apply(rhd, {0, 3})     // [h1|>a1 h2 h3 a2 a3]
                       .apply(rhd, {1, 3})     // [h1|>a1 h2|>a2 h3 a3]
                       .apply(lhd, {2, 3});    // [h1|>a1 h2|>a2 h3<|a3]
        Tensor lhs = h2[g].kron(u)             // [g1 g2 h1|>a1 h2|>a2 h3<|a3]
                         .apply(rhd, {0, 2})   // [g1|>(h1|>a1) g2 h2|>a2 h3<|a3]
                         .apply(lhd, {1, 2})   // [.. g2<|(h2|>a2) h3<|a3]
                         .apply(f, {1, 2})     // [.. f(..)]
                         .apply(ma, {0, 1});
        Tensor rhs = h2[g].kron(h2[x])          // [g1 g2 h1 h2]
                         .permute({0, 2, 1, 3}) // [g1 h1 g2 h2]
                         .apply(f, {0, 1})      // [f(g1,h1) g2 h2]
                         .apply(mh, {1, 2});    // [f(g1,h1) g2h2]
        rhs = rhs.kron(ea(i))                   // [f g2h2 a]
                  .apply(rhd, {1, 2})           // [f (g2h2)|>a]
                  .apply(ma, {0, 1});
        if (!detail::check_tuple(rep, "BE4", lhs, rhs, a.space(), {g, x, i},
                                 {{"g", hl(g)}, {"h", hl(x)}, {"a", al(i)}}, f4))
          break;
      }
  if (!f4) rep.add_pass("BE4");

  // BE5: (g1 |> f(h1, l1)) f(g2 <| f(h2, l2), h3.l3) = f(g1, h1) f(g2.h2, l)
  bool f5 = false;
  for (size_t g = 0; g < nh && !f5; ++g)
    for (size_t x = 0; x < nh && !f5; ++x)
      for (size_t l = 0; l < nh; ++l) {
        Tensor u = h3[x].kron(h3[l])          // [h1 h2 h3 l1 l2 l3]
                       .apply(f, {0, 3})       // [f(h1,l1) h2 h3 l2 l3]
                       .apply(f, {1, 3})       // [f(h1,l1) f(h2,l2) h3 l3]
                       .apply(mh, {2, 3});     // [f(h1,l1) f(h2,l2) h3l3]
        Tensor lhs = h2[g].kron(u)             // [g1 g2 f1 f2 h3l3]
                         .apply(rhd, {0, 2})   // [g1|>f1 g2 f2 h3l3]
                         .apply(lhd, {1, 2})   // [g1|>f1 g2<|f2 h3l3]
                         .apply(f, {1, 2})     // [g1|>f1 f(g2<|f2, h3l3)]
                         .apply(ma, {0, 1});
        Tensor rhs = h2[g].kron(h2[x])          // [g1 g2 h1 h2]
                         .permute({0, 2, 1, 3}) // [g1 h1 g2 h2]
                         .apply(f, {0, 1})      // [f(g1,h1) g2 h2]
                         .apply(mh, {1, 2});    // [f(g1,h1) g2h2]
        rhs = rhs.kron(eh(l))                   // [f g2h2 l]
                  .apply(f, {1, 2})             // [f f(g2h2,l)]
                  .apply(ma, {0, 1});
        if (!detail::check_tuple(rep, "BE5", lhs, rhs, a.space(), {g, x, l},
                                 {{"g", hl(g)}, {"h", hl(x)}, {"l", hl(l)}}, f5))
          break;
      }
  if (!f5) rep.add_pass("BE5");

  // BE6: g1 <| a1 (x) g2 |> a2 = g2 <| a2 (x) g1 |> a1
  bool f6 = false;
  VectorSpace outha = tensor_space(h.space(), a.space());
  for (size_t g = 0; g < nh && !f6; ++g)
    for (size_t i = 0; i < na; ++i) {
      Tensor t = h2[g].kron(a2[i]);            // [g1 g2 a1 a2]
      Tensor lhs = t.apply(lhd, {0, 2})        // [g1<|a1 g2 a2]
                       .apply(rhd, {1, 2});    // [g1<|a1 g2|>a2]
      Tensor rhs = t.apply(lhd, {1, 3})        // [g1 g2<|a2 a1]
                       .apply(rhd, {0, 2})     // [g1|>a1 g2<|a2]
                       .permute({1, 0});       // [g2<|a2 g1|>a1]
      if (!detail::check_tuple(rep, "BE6", lhs, rhs, outha, {g, i},
                               {{"g", hl(g)}, {"a", al(i)}}, f6))
        break;
    }
  if (!f6) rep.add_pass("BE6");

  // BE7: g1.h1 (x) f(g2, h2) = g2.h2 (x) f(g1, h1)
  bool f7 = false;
  for (size_t g = 0; g < nh && !f7; ++g)
    for (size_t x = 0; x < nh; ++x) {
      Tensor t = h2[g].kron(h2[x]);            // [g1 g2 h1 h2]
      Tensor lhs = t.apply(mh, {0, 2})         // [g1h1 g2 h2]
                       .apply(f, {1, 2});      // [g1h1 f(g2,h2)]
      Tensor rhs = t.apply(mh, {1, 3})         // [g1 g2h2 h1]
                       .apply(f, {0, 2})       // [f(g1,h1) g2h2]
                       .permute({1, 0});       // [g2h2 f(g1,h1)]
      if (!detail::check_tuple(rep, "BE7", lhs, rhs, outha, {g, x},
                               {{"g", hl(g)}, {"h", hl(x)}}, f7))
        break;
    }
  if (!f7) rep.add_pass("BE7");

  return rep;
}

// twisted iff |> is trivial; smash iff additionally f is trivial.
inline std::set<std::string> classify_special_case(const ExtendingDatum& om) {
  std::set<std::string> out{"unified"};
  if (is_trivial_rhd(om)) {
    out.insert("twisted");
    if (is_trivial_cocycle(om)) out.insert("smash");
  }
  return out;
}

// Conditions (1)-(5) characterizing twisted bialgebra extending
// structures (trivial |>), together with the right module-algebra law.
// For any datum with trivial |> the verdict agrees with check_BE; the
// cross-test lives in the test suite.
inline Report check_twisted_conditions(const ExtendingDatum& om) {
  if (!is_trivial_rhd(om))
    throw std::invalid_argument("check_twisted_conditions: |> is not trivial");
  const HopfAlgebra& a = om.a;
  const FinBialgebra& h = om.h;
  size_t na = om.na(), nh = om.nh();
  ScalarMode md = om.mode();
  const LinMap& mh = h.alg.mult;
  const LinMap& ma = a.b.alg.mult;
  const LinMap& lhd = om.lhd;
  const LinMap& f = om.cocycle;
  Report rep;

  auto hl = [&](size_t i) { return h.space().labels[i]; };
  auto al = [&](size_t i) { return a.space().labels[i]; };
  std::vector<Tensor> h2, h3, a2, a3;
  for (size_t i = 0; i < nh; ++i) {
    h2.push_back(sweedler(h.coa, i, 2));
    h3.push_back(sweedler(h.coa, i, 3));
  }
  for (size_t i = 0; i < na; ++i) {
    a2.push_back(sweedler(a.b.coa, i, 2));
    a3.push_back(sweedler(a.b.coa, i, 3));
  }
  auto eh = [&](size_t i) { return Tensor::basis({nh}, {i}, md); };
  auto ea = [&](size_t i) { return Tensor::basis({na}, {i}, md); };

  // (g.h) <| a = (g <| a1).(h <| a2)
  bool fma = false;
  for (size_t g = 0; g < nh && !fma; ++g)
    for (size_t x = 0; x < nh && !fma; ++x)
      for (size_t i = 0; i < na; ++i) {
        Tensor lhs = Tensor::from_col(mh, g * nh + x).kron(ea(i)).apply(lhd, {0, 1});
        Tensor rhs = eh(g).kron(eh(x)).kron(a2[i])  // [g h a1 a2]
                         .apply(lhd, {0, 2})         // [g<|a1 h a2]
                         .apply(lhd, {1, 2})         // [g<|a1 h<|a2]
                         .apply(mh, {0, 1});
        if (!detail::check_tuple(rep, "module_algebra", lhs, rhs, h.space(), {g, x, i},
                                 {{"g", hl(g)}, {"h", hl(x)}, {"a", al(i)}}, fma))
          break;
      }
  if (!fma) rep.add_pass("module_algebra");

  // (1): same contraction as BE1
  bool f1 = false;
  for (size_t g = 0; g < nh && !f1; ++g)
    for (size_t x = 0; x < nh && !f1; ++x)
      for (size_t l = 0; l < nh; ++l) {
        Tensor lhs = Tensor::from_col(mh, g * nh + x).kron(eh(l)).apply(mh, {0, 1});
        Tensor rhs = h2[x].kron(h2[l]).apply(f, {0, 2}).apply(mh, {1, 2});
        rhs = eh(g).kron(rhs).apply(lhd, {0, 1}).apply(mh, {0, 1});
        if (!detail::check_tuple(rep, "(1)", lhs, rhs, h.space(), {g, x, l},
                                 {{"g", hl(g)}, {"h", hl(x)}, {"l", hl(l)}}, f1))
          break;
      }
  if (!f1) rep.add_pass("(1)");

  // (2): a1 f(g <| a2, h <| a3) = f(g, h) a
  bool f2 = false;
  for (size_t i = 0; i < na && !f2; ++i)
    for (size_t g = 0; g < nh && !f2; ++g)
      for (size_t x = 0; x < nh; ++x) {
        Tensor lhs = a3[i].kron(eh(g)).kron(eh(x))  // [a1 a2 a3 g h]
                         .apply(lhd, {3, 1})         // [a1 a3 g<|a2 h]
                         .apply(lhd, {3, 1})         // [a1 g<|a2 h<|a3]
                         .apply(f, {1, 2})           // [a1 f(..)]
                         .apply(ma, {0, 1});
        Tensor rhs = Tensor::from_col(f, g * nh + x).kron(ea(i)).apply(ma, {0, 1});
        if (!detail::check_tuple(rep, "(2)", lhs, rhs, a.space(), {i, g, x},
                                 {{"a", al(i)}, {"g", hl(g)}, {"h", hl(x)}}, f2))
          break;
      }
  if (!f2) rep.add_pass("(2)");

  // (3): f(h1, l1) f(g <| f(h2, l2), h3.l3) = f(g1, h1) f(g2.h2, l)
  bool f3 = false;
  for (size_t g = 0; g < nh && !f3; ++g)
    for (size_t x = 0; x < nh && !f3; ++x)
      for (size_t l = 0; l < nh; ++l) {
        Tensor u = h3[x].kron(h3[l])            // [h1 h2 h3 l1 l2 l3]
                       .apply(f, {0, 3})         // [f(h1,l1) h2 h3 l2 l3]
                       .apply(f, {1, 3})         // [f(h1,l1) f(h2,l2) h3 l3]
                       .apply(mh, {2, 3});       // [f(h1,l1) f(h2,l2) h3l3]
        Tensor lhs = u.kron(eh(g))               // [f1 f2 h3l3 g]
                         .apply(lhd, {3, 1})     // [f1 h3l3 g<|f2]
                         .apply(f, {2, 1})       // [f1 f(g<|f2, h3l3)]
                         .apply(ma, {0, 1});
        Tensor rhs = h2[g].kron(h2[x])
                         .permute({0, 2, 1, 3})
                         .apply(f, {0, 1})
                         .apply(mh, {1, 2});
        rhs = rhs.kron(eh(l)).apply(f, {1, 2}).apply(ma, {0, 1});
        if (!detail::check_tuple(rep, "(3)", lhs, rhs, a.space(), {g, x, l},
                                 {{"g", hl(g)}, {"h", hl(x)}, {"l", hl(l)}}, f3))
          break;
      }
  if (!f3) rep.add_pass("(3)");

  // (4): g <| a1 (x) a2 = g <| a2 (x) a1
  bool f4 = false;
  VectorSpace outha = tensor_space(h.space(), a.space());
  for (size_t g = 0; g < nh && !f4; ++g)
    for (size_t i = 0; i < na; ++i) {
      Tensor t = eh(g).kron(a2[i]);              // [g a1 a2]
      Tensor lhs = t.apply(lhd, {0, 1});         // [g<|a1 a2]
      Tensor rhs = t.apply(lhd, {0, 2});         // [g<|a2 a1]
      if (!detail::check_tuple(rep, "(4)", lhs, rhs, outha, {g, i},
                               {{"g", hl(g)}, {"a", al(i)}}, f4))
        break;
    }
  if (!f4) rep.add_pass("(4)");

  // (5): same contraction as BE7
  bool f5 = false;
  for (size_t g = 0; g < nh && !f5; ++g)
    for (size_t x = 0; x < nh; ++x) {
      Tensor t = h2[g].kron(h2[x]);
      Tensor lhs = t.apply(mh, {0, 2}).apply(f, {1, 2});
      Tensor rhs = t.apply(mh, {1, 3}).apply(f, {0, 2}).permute({1, 0});
      if (!detail::check_tuple(rep, "(5)", lhs, rhs, outha, {g, x},
                               {{"g", hl(g)}, {"h", hl(x)}}, f5))
        break;
    }
  if (!f5) rep.add_pass("(5)");

  return rep;
}

}  // namespace hopf
