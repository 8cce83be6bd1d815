#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hopf/scalar.hpp"

namespace hopf {

// Finite-dimensional space with an ordered basis of distinct labels.
struct VectorSpace {
  size_t dim = 0;
  std::vector<std::string> labels;

  friend bool operator==(const VectorSpace& a, const VectorSpace& b) {
    return a.dim == b.dim && a.labels == b.labels;
  }
  friend bool operator!=(const VectorSpace& a, const VectorSpace& b) { return !(a == b); }
};

inline VectorSpace space_from_labels(std::vector<std::string> labels) {
  std::set<std::string> seen(labels.begin(), labels.end());
  if (seen.size() != labels.size())
    throw std::invalid_argument("basis labels must be distinct");
  VectorSpace v;
  v.dim = labels.size();
  v.labels = std::move(labels);
  return v;
}

inline VectorSpace make_space(const std::string& prefix, size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (size_t i = 0; i < n; ++i) labels.push_back(prefix + std::to_string(i));
  return space_from_labels(std::move(labels));
}

// The ground field as a 1-dimensional space.
inline VectorSpace ground_space() { return space_from_labels({"k"}); }

// Row-major convention: basis index of e_i (x) e_j in V (x) W is i*dim(W) + j.
// Every tensor contraction in the library relies on this single ordering.
inline VectorSpace tensor_space(const VectorSpace& v, const VectorSpace& w) {
  VectorSpace t;
  t.dim = v.dim * w.dim;
  t.labels.reserve(t.dim);
  for (size_t i = 0; i < v.dim; ++i)
    for (size_t j = 0; j < w.dim; ++j)
      t.labels.push_back("(" + v.labels[i] + "," + w.labels[j] + ")");
  return t;
}

using Vec = std::vector<Scalar>;

inline Vec zero_vec(size_t n, ScalarMode m) { return Vec(n, Scalar::zero(m)); }

inline Vec basis_vec(size_t n, size_t i, ScalarMode m) {
  Vec v = zero_vec(n, m);
  v.at(i) = Scalar::one(m);
  return v;
}

inline bool is_zero_vec(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& c) { return c.is_zero(); });
}

inline std::string vec_str(const Vec& v, const VectorSpace& space) {
  std::ostringstream out;
  bool first = true;
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    if (!first) out << " + ";
    out << v[i].str() << "*" << space.labels.at(i);
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

// Linear map with an exact dense matrix; rows index the codomain basis,
// columns the domain basis.
class LinMap {
 public:
  LinMap() = default;

  LinMap(VectorSpace dom, VectorSpace cod, ScalarMode mode)
      : dom_(std::move(dom)),
        cod_(std::move(cod)),
        mode_(mode),
        a_(dom_.dim * cod_.dim, Scalar::zero(mode)) {}

  static LinMap identity(const VectorSpace& v, ScalarMode mode) {
    LinMap m(v, v, mode);
    for (size_t i = 0; i < v.dim; ++i) m.at(i, i) = Scalar::one(mode);
    return m;
  }

  const VectorSpace& domain() const { return dom_; }
  const VectorSpace& codomain() const { return cod_; }
  ScalarMode mode() const { return mode_; }
  size_t rows() const { return cod_.dim; }
  size_t cols() const { return dom_.dim; }

  Scalar& at(size_t r, size_t c) { return a_.at(r * dom_.dim + c); }
  const Scalar& at(size_t r, size_t c) const { return a_.at(r * dom_.dim + c); }

  void set_col(size_t c, const Vec& v) {
    if (v.size() != rows()) throw std::invalid_argument("column size mismatch");
    for (size_t r = 0; r < rows(); ++r) at(r, c) = v[r];
  }

  Vec col(size_t c) const {
    Vec v;
    v.reserve(rows());
    for (size_t r = 0; r < rows(); ++r) v.push_back(at(r, c));
    return v;
  }

  std::vector<std::pair<size_t, Scalar>> col_nonzeros(size_t c) const {
    std::vector<std::pair<size_t, Scalar>> nz;
    for (size_t r = 0; r < rows(); ++r)
      if (!at(r, c).is_zero()) nz.emplace_back(r, at(r, c));
    return nz;
  }

  Vec apply(const Vec& x) const {
    if (x.size() != cols()) throw std::invalid_argument("apply: dimension mismatch");
    Vec y = zero_vec(rows(), mode_);
    for (size_t c = 0; c < cols(); ++c) {
      if (x[c].is_zero()) continue;
      for (size_t r = 0; r < rows(); ++r) {
        if (at(r, c).is_zero()) continue;
        y[r] += at(r, c) * x[c];
      }
    }
    return y;
  }

  bool is_zero() const { return is_zero_vec(a_); }

  friend bool operator==(const LinMap& a, const LinMap& b) {
    return a.dom_ == b.dom_ && a.cod_ == b.cod_ && a.mode_ == b.mode_ && a.a_ == b.a_;
  }
  friend bool operator!=(const LinMap& a, const LinMap& b) { return !(a == b); }

 private:
  VectorSpace dom_, cod_;
  ScalarMode mode_;
  Vec a_;
};

using SparseCol = std::vector<std::pair<size_t, Scalar>>;

// All columns of m in sparse form; hot per-tuple loops extract this once.
inline std::vector<SparseCol> sparse_columns(const LinMap& m) {
  std::vector<SparseCol> cols(m.cols());
  for (size_t c = 0; c < m.cols(); ++c) cols[c] = m.col_nonzeros(c);
  return cols;
}

// Entrywise equality, ignoring basis labels; full operator== also
// compares the domain and codomain label sets.
inline bool same_entries(const LinMap& a, const LinMap& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.mode() != b.mode()) return false;
  for (size_t r = 0; r < a.rows(); ++r)
    for (size_t c = 0; c < a.cols(); ++c)
      if (a.at(r, c) != b.at(r, c)) return false;
  return true;
}

inline LinMap compose(const LinMap& f, const LinMap& g) {
  // f after g
  if (g.codomain() != f.domain()) throw std::invalid_argument("compose: shape mismatch");
  if (g.mode() != f.mode()) throw std::invalid_argument("compose: mode mismatch");
  LinMap h(g.domain(), f.codomain(), f.mode());
  for (size_t c = 0; c < g.cols(); ++c) {
    for (auto& [k, gkc] : g.col_nonzeros(c))
      for (size_t r = 0; r < f.rows(); ++r) {
        if (f.at(r, k).is_zero()) continue;
        h.at(r, c) += f.at(r, k) * gkc;
      }
  }
  return h;
}

inline LinMap add(const LinMap& f, const LinMap& g) {
  if (f.domain() != g.domain() || f.codomain() != g.codomain())
    throw std::invalid_argument("add: shape mismatch");
  LinMap h(f.domain(), f.codomain(), f.mode());
  for (size_t r = 0; r < f.rows(); ++r)
    for (size_t c = 0; c < f.cols(); ++c) h.at(r, c) = f.at(r, c) + g.at(r, c);
  return h;
}

inline LinMap scale(const Scalar& c, const LinMap& f) {
  LinMap h(f.domain(), f.codomain(), f.mode());
  for (size_t r = 0; r < f.rows(); ++r)
    for (size_t k = 0; k < f.cols(); ++k) h.at(r, k) = c * f.at(r, k);
  return h;
}

inline LinMap sub(const LinMap& f, const LinMap& g) {
  return add(f, scale(-Scalar::one(f.mode()), g));
}

// Kronecker product under the row-major convention:
// (f (x) g)(e_i (x) e_j) = f(e_i) (x) g(e_j). Intended for small factors;
// axiom checkers contract through tensors instead of building these.
inline LinMap tensor_map(const LinMap& f, const LinMap& g) {
  if (f.mode() != g.mode()) throw std::invalid_argument("tensor_map: mode mismatch");
  LinMap h(tensor_space(f.domain(), g.domain()), tensor_space(f.codomain(), g.codomain()),
           f.mode());
  for (size_t fc = 0; fc < f.cols(); ++fc)
    for (size_t gc = 0; gc < g.cols(); ++gc) {
      size_t c = fc * g.cols() + gc;
      for (auto& [fr, fv] : f.col_nonzeros(fc))
        for (auto& [gr, gv] : g.col_nonzeros(gc)) h.at(fr * g.rows() + gr, c) = fv * gv;
    }
  return h;
}

namespace detail {

// In-place reduced row echelon form with deterministic pivoting: scan
// columns left to right, take the first row with a nonzero entry.
// Returns the pivot columns.
inline std::vector<size_t> rref_rows(std::vector<Vec>& rows, ScalarMode mode) {
  std::vector<size_t> pivots;
  if (rows.empty()) return pivots;
  size_t ncols = rows[0].size();
  size_t r = 0;
  for (size_t c = 0; c < ncols && r < rows.size(); ++c) {
    size_t sel = r;
    while (sel < rows.size() && rows[sel][c].is_zero()) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    Scalar piv = rows[r][c].inv();
    for (size_t j = c; j < ncols; ++j) rows[r][j] *= piv;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      Scalar m = rows[i][c];
      for (size_t j = c; j < ncols; ++j) rows[i][j] -= m * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  (void)mode;
  rows.resize(pivots.size(), zero_vec(ncols, mode));
  return pivots;
}

}  // namespace detail

// A subspace held as an RREF basis; `pivots[k]` is the leading column of
// `basis[k]`. Membership and coordinates are pivot projections, so both
// are exact and O(dim * codim).
struct Subspace {
  std::vector<Vec> basis;
  std::vector<size_t> pivots;
  ScalarMode mode;

  size_t dim() const { return basis.size(); }

  std::optional<Vec> coords(const Vec& x) const {
    Vec c;
    c.reserve(basis.size());
    for (size_t k = 0; k < basis.size(); ++k) c.push_back(x.at(pivots[k]));
    // residual must vanish exactly
    Vec res = x;
    for (size_t k = 0; k < basis.size(); ++k) {
      if (c[k].is_zero()) continue;
      for (size_t j = 0; j < res.size(); ++j) res[j] -= c[k] * basis[k][j];
    }
    if (!is_zero_vec(res)) return std::nullopt;
    return c;
  }

  bool contains(const Vec& x) const { return coords(x).has_value(); }
};

inline Subspace rowspace(std::vector<Vec> rows, ScalarMode mode) {
  auto pivots = detail::rref_rows(rows, mode);
  return Subspace{std::move(rows), std::move(pivots), mode};
}

// Kernel of f, returned as a deterministic RREF basis (the raw
// free-variable vectors are re-reduced so the result is an RREF fixed
// point).
inline Subspace nullspace(const LinMap& f) {
  size_t n = f.cols();
  std::vector<Vec> rows;
  rows.reserve(f.rows());
  for (size_t r = 0; r < f.rows(); ++r) {
    Vec row;
    row.reserve(n);
    for (size_t c = 0; c < n; ++c) row.push_back(f.at(r, c));
    rows.push_back(std::move(row));
  }
  auto pivots = detail::rref_rows(rows, f.mode());
  std::vector<bool> is_pivot(n, false);
  for (size_t p : pivots) is_pivot[p] = true;
  std::vector<Vec> kern;
  for (size_t j = 0; j < n; ++j) {
    if (is_pivot[j]) continue;
    Vec v = zero_vec(n, f.mode());
    v[j] = Scalar::one(f.mode());
    for (size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -rows[k][j];
    kern.push_back(std::move(v));
  }
  return rowspace(std::move(kern), f.mode());
}

inline size_t rank(const LinMap& f) {
  std::vector<Vec> rows;
  rows.reserve(f.rows());
  for (size_t r = 0; r < f.rows(); ++r) {
    Vec row;
    row.reserve(f.cols());
    for (size_t c = 0; c < f.cols(); ++c) row.push_back(f.at(r, c));
    rows.push_back(std::move(row));
  }
  return detail::rref_rows(rows, f.mode()).size();
}

// Exact solution X of A X = B, or nullopt when the system is inconsistent.
// Free variables are set to zero, so the result is deterministic.
inline std::optional<LinMap> solve(const LinMap& a, const LinMap& b) {
  if (a.codomain() != b.codomain()) throw std::invalid_argument("solve: codomain mismatch");
  if (a.mode() != b.mode()) throw std::invalid_argument("solve: mode mismatch");
  size_t n = a.cols(), m = b.cols();
  std::vector<Vec> rows;
  rows.reserve(a.rows());
  for (size_t r = 0; r < a.rows(); ++r) {
    Vec row;
    row.reserve(n + m);
    for (size_t c = 0; c < n; ++c) row.push_back(a.at(r, c));
    for (size_t c = 0; c < m; ++c) row.push_back(b.at(r, c));
    rows.push_back(std::move(row));
  }
  std::vector<size_t> pivots = detail::rref_rows(rows, a.mode());
  // any pivot in the augmented block means inconsistency
  for (size_t p : pivots)
    if (p >= n) return std::nullopt;
  LinMap x(b.domain(), a.domain(), a.mode());
  for (size_t k = 0; k < pivots.size(); ++k)
    for (size_t c = 0; c < m; ++c) x.at(pivots[k], c) = rows[k][n + c];
  return x;
}

// Two-sided exact inverse; nullopt when f is not bijective.
inline std::optional<LinMap> inverse(const LinMap& f) {
  if (f.rows() != f.cols()) return std::nullopt;
  auto x = solve(f, LinMap::identity(f.codomain(), f.mode()));
  if (!x) return std::nullopt;
  LinMap inv(f.codomain(), f.domain(), f.mode());
  for (size_t r = 0; r < inv.rows(); ++r)
    for (size_t c = 0; c < inv.cols(); ++c) inv.at(r, c) = x->at(r, c);
  if (compose(f, inv) != LinMap::identity(f.codomain(), f.mode())) return std::nullopt;
  if (compose(inv, f) != LinMap::identity(f.domain(), f.mode())) return std::nullopt;
  return inv;
}

// Convolution product f * g = mult o (f (x) g) o comult, assembled
// column by column so no Kronecker matrix is materialized.
inline LinMap convolution(const LinMap& f, const LinMap& g, const LinMap& comult,
                          const LinMap& mult) {
  if (f.domain() != g.domain() || comult.domain() != f.domain())
    throw std::invalid_argument("convolution: domain mismatch");
  if (f.codomain() != g.codomain())
    throw std::invalid_argument("convolution: codomain mismatch");
  size_t n = f.domain().dim;
  size_t na = f.codomain().dim;
  if (comult.rows() != n * n) throw std::invalid_argument("convolution: comult shape");
  if (mult.cols() != na * na || mult.rows() != na)
    throw std::invalid_argument("convolution: mult shape");
  LinMap h(f.domain(), mult.codomain(), f.mode());
  for (size_t c = 0; c < n; ++c) {
    Vec acc = zero_vec(na, f.mode());
    for (auto& [t, dv] : comult.col_nonzeros(c)) {
      size_t i = t / n, j = t % n;
      for (auto& [fr, fv] : f.col_nonzeros(i))
        for (auto& [gr, gv] : g.col_nonzeros(j)) {
          Scalar w = dv * fv * gv;
          for (auto& [mr, mv] : mult.col_nonzeros(fr * na + gr)) acc[mr] += w * mv;
        }
    }
    h.set_col(c, acc);
  }
  return h;
}

}  // namespace hopf
