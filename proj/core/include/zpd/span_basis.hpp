#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "zpd/field.hpp"

namespace zpd {

// Incrementally maintained subspace basis in reduced row-echelon form with
// pivots strictly increasing. The stored basis is the canonical RREF of the
// span, so it does not depend on insertion or merge order; that is the
// whole concurrency contract for parallel zero generation.
template <class F>
class SpanBasis {
 public:
  using Elem = typename F::Elem;
  using Vec = std::vector<Elem>;

  SpanBasis(const F& field, std::size_t ambient)
      : field_(field), n_(ambient) {}

  std::size_t ambient() const { return n_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<Vec>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  const F& field() const { return field_; }

  // Reduces v against the basis in place; returns the index of the first
  // nonzero coordinate, or n_ if v reduced to zero.
  std::size_t reduce(Vec& v) const {
    if (v.size() != n_)
      throw std::invalid_argument("SpanBasis: dimension mismatch");
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Elem c = v[pivots_[r]];  // copy: axpy updates v[pivots_[r]]
      if (field_.is_zero(c)) continue;
      axpy_neg(v, c, rows_[r]);
    }
    for (std::size_t k = 0; k < n_; ++k)
      if (!field_.is_zero(v[k])) return k;
    return n_;
  }

  bool contains(Vec v) const { return reduce(v) == n_; }

  // Inserts v into the span. Returns true iff the rank grew.
  bool insert(Vec v) {
    std::size_t piv = reduce(v);
    if (piv == n_) return false;
    Elem s = field_.inv(v[piv]);
    for (auto& x : v) x = field_.mul(x, s);
    // Back-substitute so existing rows stay fully reduced.
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Elem c = rows_[r][piv];
      if (!field_.is_zero(c)) axpy_neg(rows_[r], c, v);
    }
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < piv) ++pos;
    rows_.insert(rows_.begin() + pos, std::move(v));
    pivots_.insert(pivots_.begin() + pos, piv);
    return true;
  }

  // Union of spans; canonical result whichever way it is merged.
  void merge(const SpanBasis& other) {
    if (other.n_ != n_)
      throw std::invalid_argument("SpanBasis::merge: dimension mismatch");
    for (const auto& row : other.rows_) insert(row);
  }

  bool operator==(const SpanBasis& o) const {
    if (n_ != o.n_ || rows_.size() != o.rows_.size()) return false;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (pivots_[r] != o.pivots_[r]) return false;
      for (std::size_t k = 0; k < n_; ++k)
        if (!field_.eq(rows_[r][k], o.rows_[r][k])) return false;
    }
    return true;
  }

  // Basis of { w : <w, v> = 0 for all v in span }, itself in canonical RREF.
  SpanBasis annihilator() const {
    SpanBasis out(field_, n_);
    std::vector<bool> is_pivot(n_, false);
    for (auto p : pivots_) is_pivot[p] = true;
    out.rows_.reserve(n_ - rank());
    for (std::size_t free_col = 0; free_col < n_; ++free_col) {
      if (is_pivot[free_col]) continue;
      Vec w(n_, field_.zero());
      w[free_col] = field_.one();
      for (std::size_t r = 0; r < rows_.size(); ++r)
        w[pivots_[r]] = field_.neg(rows_[r][free_col]);
      out.rows_.push_back(std::move(w));
      out.pivots_.push_back(free_col);
    }
    return out;
  }

 private:
  void axpy_neg(Vec& target, Elem c, const Vec& src) const {
    for (std::size_t k = 0; k < n_; ++k) {
      if (field_.is_zero(src[k])) continue;
      target[k] = field_.sub(target[k], field_.mul(c, src[k]));
    }
  }

  F field_;
  std::size_t n_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

template <class F>
bool subspace_leq(const SpanBasis<F>& a, const SpanBasis<F>& b) {
  if (a.ambient() != b.ambient())
    throw std::invalid_argument("subspace_leq: dimension mismatch");
  for (const auto& row : a.rows())
    if (!b.contains(row)) return false;
  return true;
}

// Basis of the right null space { v : M v = 0 } of an r x c matrix given by
// rows. Count is always c - rank(M).
template <class F>
std::vector<std::vector<typename F::Elem>> kernel_basis(
    const F& field, const std::vector<std::vector<typename F::Elem>>& rows,
    std::size_t cols) {
  SpanBasis<F> row_space(field, cols);
  for (const auto& r : rows) row_space.insert(r);
  return row_space.annihilator().rows();
}

}  // namespace zpd
