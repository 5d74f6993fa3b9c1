#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "zpd/field.hpp"
#include "zpd/rng.hpp"

namespace zpd {

// Dense d x d matrix over an exact field. Row-major, 0-based internally;
// the JSON wire format and the docs speak 1-based.
template <class F>
class Mat {
 public:
  using Elem = typename F::Elem;

  Mat(const F& field, int d)
      : field_(field), d_(d), a_(std::size_t(d) * d, field.zero()) {
    if (d < 1) throw std::invalid_argument("Mat: dimension must be >= 1");
  }

  static Mat unit(const F& field, int d, int i, int j) {
    if (i < 0 || j < 0 || i >= d || j >= d)
      throw std::out_of_range("matrix_unit: index out of range");
    Mat m(field, d);
    m.at(i, j) = field.one();
    return m;
  }

  static Mat identity(const F& field, int d) {
    Mat m(field, d);
    for (int i = 0; i < d; ++i) m.at(i, i) = field.one();
    return m;
  }

  static Mat scalar(const F& field, int d, const Elem& c) {
    Mat m(field, d);
    for (int i = 0; i < d; ++i) m.at(i, i) = c;
    return m;
  }

  int dim() const { return d_; }
  const F& field() const { return field_; }

  Elem& at(int i, int j) { return a_[std::size_t(i) * d_ + j]; }
  const Elem& at(int i, int j) const { return a_[std::size_t(i) * d_ + j]; }
  const std::vector<Elem>& data() const { return a_; }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!field_.is_zero(x)) return false;
    return true;
  }

  bool operator==(const Mat& o) const {
    if (d_ != o.d_) return false;
    for (std::size_t k = 0; k < a_.size(); ++k)
      if (!field_.eq(a_[k], o.a_[k])) return false;
    return true;
  }

  Mat operator+(const Mat& o) const {
    check_dim(o);
    Mat r(field_, d_);
    for (std::size_t k = 0; k < a_.size(); ++k)
      r.a_[k] = field_.add(a_[k], o.a_[k]);
    return r;
  }

  Mat operator-(const Mat& o) const {
    check_dim(o);
    Mat r(field_, d_);
    for (std::size_t k = 0; k < a_.size(); ++k)
      r.a_[k] = field_.sub(a_[k], o.a_[k]);
    return r;
  }

  Mat operator*(const Mat& o) const {
    check_dim(o);
    Mat r(field_, d_);
    for (int i = 0; i < d_; ++i)
      for (int k = 0; k < d_; ++k) {
        const Elem& aik = at(i, k);
        if (field_.is_zero(aik)) continue;
        for (int j = 0; j < d_; ++j)
          r.at(i, j) = field_.add(r.at(i, j), field_.mul(aik, o.at(k, j)));
      }
    return r;
  }

  Mat scaled(const Elem& c) const {
    Mat r(field_, d_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = field_.mul(a_[k], c);
    return r;
  }

  Mat negated() const {
    Mat r(field_, d_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = field_.neg(a_[k]);
    return r;
  }

  Elem trace() const {
    Elem t = field_.zero();
    for (int i = 0; i < d_; ++i) t = field_.add(t, at(i, i));
    return t;
  }

  // True iff the matrix is a scalar multiple of the identity; returns the
  // scalar through `out` when so.
  bool is_scalar(Elem& out) const {
    for (int i = 0; i < d_; ++i)
      for (int j = 0; j < d_; ++j)
        if (i != j && !field_.is_zero(at(i, j))) return false;
    for (int i = 1; i < d_; ++i)
      if (!field_.eq(at(i, i), at(0, 0))) return false;
    out = at(0, 0);
    return true;
  }

  std::optional<Mat> inverse() const {
    // Gauss-Jordan on [A | I].
    Mat a(*this), inv = identity(field_, d_);
    for (int col = 0; col < d_; ++col) {
      int piv = -1;
      for (int r = col; r < d_; ++r)
        if (!field_.is_zero(a.at(r, col))) {
          piv = r;
          break;
        }
      if (piv < 0) return std::nullopt;
      if (piv != col) {
        for (int j = 0; j < d_; ++j) {
          std::swap(a.at(piv, j), a.at(col, j));
          std::swap(inv.at(piv, j), inv.at(col, j));
        }
      }
      Elem s = field_.inv(a.at(col, col));
      for (int j = 0; j < d_; ++j) {
        a.at(col, j) = field_.mul(a.at(col, j), s);
        inv.at(col, j) = field_.mul(inv.at(col, j), s);
      }
      for (int r = 0; r < d_; ++r) {
        if (r == col || field_.is_zero(a.at(r, col))) continue;
        Elem c = a.at(r, col);
        for (int j = 0; j < d_; ++j) {
          a.at(r, j) = field_.sub(a.at(r, j), field_.mul(c, a.at(col, j)));
          inv.at(r, j) = field_.sub(inv.at(r, j), field_.mul(c, inv.at(col, j)));
        }
      }
    }
    return inv;
  }

 private:
  void check_dim(const Mat& o) const {
    if (d_ != o.d_ || !(field_ == o.field_))
      throw std::invalid_argument("Mat: dimension or field mismatch");
  }

  F field_;
  int d_;
  std::vector<Elem> a_;
};

template <class F>
using MatTuple = std::vector<Mat<F>>;

template <class F>
Mat<F> matrix_unit(const F& field, int i1, int j1, int d) {
  // 1-based entry point matching the written interface.
  return Mat<F>::unit(field, d, i1 - 1, j1 - 1);
}

template <class F>
typename F::Elem random_elem(const F& field, SplitMix64& rng);

inline GfpField::Elem random_elem(const GfpField& field, SplitMix64& rng) {
  return GfpField::Elem(rng.below(field.p()));
}

inline RationalField::Elem random_elem(const RationalField& field,
                                       SplitMix64& rng) {
  // Small integers keep rational spans from exploding.
  return field.from_long((long long)rng.below(21) - 10);
}

template <class F>
Mat<F> random_mat(const F& field, int d, SplitMix64& rng) {
  Mat<F> m(field, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m.at(i, j) = random_elem(field, rng);
  return m;
}

template <class F>
Mat<F> random_invertible(const F& field, int d, SplitMix64& rng) {
  for (;;) {
    Mat<F> m = random_mat(field, d, rng);
    if (m.inverse()) return m;
  }
}

// Random rank-deficient matrix: product of d x r and r x d blocks.
template <class F>
Mat<F> random_low_rank(const F& field, int d, int rank, SplitMix64& rng) {
  Mat<F> out(field, d);
  std::vector<typename F::Elem> left(std::size_t(d) * rank),
      right(std::size_t(rank) * d);
  for (auto& x : left) x = random_elem(field, rng);
  for (auto& x : right) x = random_elem(field, rng);
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < rank; ++k)
      for (int j = 0; j < d; ++j)
        out.at(i, j) = field.add(
            out.at(i, j),
            field.mul(left[std::size_t(i) * rank + k],
                      right[std::size_t(k) * d + j]));
  return out;
}

// Random idempotent P D P^{-1} with D a 0/1 diagonal; covers all ranks.
template <class F>
Mat<F> random_idempotent(const F& field, int d, SplitMix64& rng) {
  Mat<F> diag(field, d);
  for (int i = 0; i < d; ++i)
    if (rng.below(2)) diag.at(i, i) = field.one();
  Mat<F> p = random_invertible(field, d, rng);
  return p * diag * *p.inverse();
}

}  // namespace zpd
