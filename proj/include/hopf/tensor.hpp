#pragma once

#include <algorithm>
#include <span>
#include <vector>

#include "hopf/linalg.hpp"

namespace hopf {

// Sparse tensor with an ordered list of legs. Entries are kept sorted by
// the row-major flat index over the shape; explicit zeros are never
// stored, so iteration cost tracks the number of nonzeros. This is what
// every Sweedler-style contraction in the library runs on: materializing
// Kronecker matrices of structure maps would be quadratically larger.
class Tensor {
 public:
  Tensor(std::vector<size_t> shape, ScalarMode mode)
      : shape_(std::move(shape)), mode_(mode) {}

  static Tensor basis(const std::vector<size_t>& shape, const std::vector<size_t>& idx,
                      ScalarMode mode) {
    Tensor t(shape, mode);
    t.add_at(idx, Scalar::one(mode));
    return t;
  }

  // One-legged tensor from a dense vector.
  static Tensor from_vec(const Vec& v, ScalarMode mode) {
    Tensor t({v.size()}, mode);
    for (size_t i = 0; i < v.size(); ++i)
      if (!v[i].is_zero()) t.data_.emplace_back(i, v[i]);
    return t;
  }

  static Tensor from_col(const LinMap& m, size_t col) {
    return from_vec(m.col(col), m.mode());
  }

  const std::vector<size_t>& shape() const { return shape_; }
  size_t legs() const { return shape_.size(); }
  ScalarMode mode() const { return mode_; }
  size_t nnz() const { return data_.size(); }
  bool is_zero() const { return data_.empty(); }

  size_t flat_size() const {
    size_t n = 1;
    for (size_t d : shape_) n *= d;
    return n;
  }

  void add_at(const std::vector<size_t>& idx, const Scalar& c) {
    if (c.is_zero()) return;
    accumulate(encode(idx), c);
  }

  void add_flat(size_t flat, const Scalar& c) {
    if (c.is_zero()) return;
    accumulate(flat, c);
  }

  // Concatenate legs: (this (x) other), nonzeros multiply pairwise. Both
  // inputs are sorted, so the output comes out sorted without merging.
  Tensor kron(const Tensor& other) const {
    std::vector<size_t> shape = shape_;
    shape.insert(shape.end(), other.shape_.begin(), other.shape_.end());
    Tensor out(std::move(shape), mode_);
    size_t oflat = other.flat_size();
    out.data_.reserve(data_.size() * other.data_.size());
    for (auto& [i, a] : data_)
      for (auto& [j, b] : other.data_) {
        Scalar v = a * b;
        if (!v.is_zero()) out.data_.emplace_back(i * oflat + j, std::move(v));
      }
    return out;
  }

  // Apply a linear map to the chosen legs, read in the order given.
  // The legs are removed and one new leg of dimension codomain(m) is
  // inserted where the first listed leg sat (counted within the
  // remaining legs). Domain dim of m must equal the product of the
  // chosen leg dims.
  Tensor apply(const LinMap& m, std::span<const size_t> legs) const {
    size_t k = legs.size();
    size_t dom = 1;
    for (size_t l : legs) dom *= shape_.at(l);
    if (m.cols() != dom) throw std::invalid_argument("Tensor::apply: domain mismatch");

    std::vector<bool> removed(shape_.size(), false);
    for (size_t l : legs) {
      if (removed[l]) throw std::invalid_argument("Tensor::apply: duplicate leg");
      removed[l] = true;
    }
    size_t insert_pos = 0;
    for (size_t i = 0; i < legs[0]; ++i)
      if (!removed[i]) ++insert_pos;

    std::vector<size_t> out_shape;
    for (size_t i = 0; i < shape_.size(); ++i)
      if (!removed[i]) out_shape.push_back(shape_[i]);
    out_shape.insert(out_shape.begin() + insert_pos, m.rows());

    Tensor out(out_shape, mode_);
    std::vector<size_t> idx(shape_.size());
    std::vector<size_t> oidx(out_shape.size());
    for (auto& [flat, c] : data_) {
      decode(flat, idx);
      size_t sub = 0;
      for (size_t t = 0; t < k; ++t) sub = sub * shape_[legs[t]] + idx[legs[t]];
      // gather the remaining legs once, then scatter per matrix entry
      size_t o = 0;
      for (size_t i = 0; i < shape_.size(); ++i)
        if (!removed[i]) {
          if (o >= insert_pos)
            oidx[o + 1] = idx[i];
          else
            oidx[o] = idx[i];
          ++o;
        }
      for (auto& [r, mv] : m.col_nonzeros(sub)) {
        oidx[insert_pos] = r;
        out.accumulate(out.encode(oidx), c * mv);
      }
    }
    return out;
  }

  Tensor apply(const LinMap& m, std::initializer_list<size_t> legs) const {
    return apply(m, std::span<const size_t>(legs.begin(), legs.size()));
  }

  // Reshape one leg into several (row-major): product of dims must equal
  // the leg's dimension.
  Tensor split(size_t leg, const std::vector<size_t>& dims) const {
    size_t prod = 1;
    for (size_t d : dims) prod *= d;
    if (prod != shape_.at(leg)) throw std::invalid_argument("Tensor::split: size mismatch");
    std::vector<size_t> out_shape;
    for (size_t i = 0; i < shape_.size(); ++i) {
      if (i == leg)
        out_shape.insert(out_shape.end(), dims.begin(), dims.end());
      else
        out_shape.push_back(shape_[i]);
    }
    Tensor out(out_shape, mode_);
    std::vector<size_t> idx(shape_.size());
    std::vector<size_t> oidx(out_shape.size());
    for (auto& [flat, c] : data_) {
      decode(flat, idx);
      size_t o = 0;
      for (size_t i = 0; i < shape_.size(); ++i) {
        if (i == leg) {
          size_t rem = idx[i];
          for (size_t t = dims.size(); t-- > 0;) {
            oidx[o + t] = rem % dims[t];
            rem /= dims[t];
          }
          o += dims.size();
        } else {
          oidx[o++] = idx[i];
        }
      }
      out.accumulate(out.encode(oidx), c);
    }
    return out;
  }

  // perm[i] = index (in the current shape) of the leg that moves to slot i.
  Tensor permute(const std::vector<size_t>& perm) const {
    if (perm.size() != shape_.size()) throw std::invalid_argument("Tensor::permute: arity");
    std::vector<size_t> out_shape(perm.size());
    for (size_t i = 0; i < perm.size(); ++i) out_shape[i] = shape_.at(perm[i]);
    Tensor out(out_shape, mode_);
    std::vector<size_t> idx(shape_.size());
    std::vector<size_t> oidx(perm.size());
    for (auto& [flat, c] : data_) {
      decode(flat, idx);
      for (size_t i = 0; i < perm.size(); ++i) oidx[i] = idx[perm[i]];
      out.accumulate(out.encode(oidx), c);
    }
    return out;
  }

  Tensor scaled(const Scalar& c) const {
    Tensor out(shape_, mode_);
    if (c.is_zero()) return out;
    out.data_.reserve(data_.size());
    for (auto& [flat, v] : data_) out.data_.emplace_back(flat, c * v);
    return out;
  }

  Tensor operator+(const Tensor& other) const {
    if (shape_ != other.shape_) throw std::invalid_argument("Tensor::+: shape mismatch");
    Tensor out = *this;
    for (auto& [flat, v] : other.data_) out.accumulate(flat, v);
    return out;
  }

  Tensor operator-(const Tensor& other) const {
    return *this + other.scaled(-Scalar::one(mode_));
  }

  // Flatten all legs row-major into a dense vector.
  Vec flatten() const {
    Vec v = zero_vec(flat_size(), mode_);
    for (auto& [flat, c] : data_) v[flat] = c;
    return v;
  }

  friend bool operator==(const Tensor& a, const Tensor& b) {
    return a.shape_ == b.shape_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Tensor& a, const Tensor& b) { return !(a == b); }

  // Equal as flattened row-major vectors, ignoring how the legs are
  // grouped; the two sides of a coassociativity-style identity differ
  // only in grouping.
  bool flat_equal(const Tensor& other) const {
    return flat_size() == other.flat_size() && data_ == other.data_;
  }

 private:
  size_t encode(const std::vector<size_t>& idx) const {
    if (idx.size() != shape_.size()) throw std::invalid_argument("Tensor: index arity");
    size_t flat = 0;
    for (size_t i = 0; i < idx.size(); ++i) {
      if (idx[i] >= shape_[i]) throw std::out_of_range("Tensor: index out of range");
      flat = flat * shape_[i] + idx[i];
    }
    return flat;
  }

  void decode(size_t flat, std::vector<size_t>& idx) const {
    for (size_t i = shape_.size(); i-- > 0;) {
      idx[i] = flat % shape_[i];
      flat /= shape_[i];
    }
  }

  void accumulate(size_t flat, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = std::lower_bound(data_.begin(), data_.end(), flat,
                               [](const auto& e, size_t k) { return e.first < k; });
    if (it == data_.end() || it->first != flat) {
      data_.emplace(it, flat, c);
      return;
    }
    it->second += c;
    if (it->second.is_zero()) data_.erase(it);
  }

  std::vector<size_t> shape_;
  ScalarMode mode_;
  std::vector<std::pair<size_t, Scalar>> data_;
};

}  // namespace hopf
