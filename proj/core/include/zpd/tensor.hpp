#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "zpd/mat.hpp"

namespace zpd {

// Coordinate vector of length d^(2m): the flattening of a matrix m-tuple
// a_1 (x) ... (x) a_m. Index layout is slot-major lexicographic over
// ((i_1,j_1),...,(i_m,j_m)), each (i,j) row-major, 0-based on the wire.
template <class F>
struct TensorVec {
  int d = 0;
  int m = 0;
  std::vector<typename F::Elem> coords;
};

inline std::size_t tensor_ambient_dim(int d, int m) {
  std::size_t n = 1;
  for (int k = 0; k < 2 * m; ++k) {
    n *= std::size_t(d);
    if (n > (std::size_t(1) << 62) / d) throw std::overflow_error("d^(2m) overflow");
  }
  return n;
}

template <class F>
TensorVec<F> tensor_flatten(const MatTuple<F>& t) {
  if (t.empty()) throw std::invalid_argument("tensor_flatten: empty tuple");
  const F& field = t[0].field();
  const int d = t[0].dim();
  for (const auto& a : t)
    if (a.dim() != d || !(a.field() == field))
      throw std::invalid_argument("tensor_flatten: mixed dimension or field");
  const int m = int(t.size());

  std::vector<typename F::Elem> acc = {field.one()};
  for (int k = 0; k < m; ++k) {
    std::vector<typename F::Elem> next;
    next.reserve(acc.size() * std::size_t(d) * d);
    for (const auto& c : acc)
      for (const auto& e : t[k].data()) next.push_back(field.mul(c, e));
    acc = std::move(next);
  }
  return TensorVec<F>{d, m, std::move(acc)};
}

// Multi-index ((i_1,j_1),...,(i_m,j_m)) of a flat index, 0-based.
inline std::vector<std::pair<int, int>> tensor_multi_index(std::size_t idx,
                                                           int d, int m) {
  std::vector<std::pair<int, int>> out(m);
  for (int k = m - 1; k >= 0; --k) {
    std::size_t cell = idx % (std::size_t(d) * d);
    idx /= std::size_t(d) * d;
    out[k] = {int(cell) / d, int(cell) % d};
  }
  return out;
}

// Exact pairing <phi, flatten(t)>; this is how a Functional evaluates a
// tuple.
template <class F>
typename F::Elem pair_functional(const F& field,
                                 const std::vector<typename F::Elem>& phi,
                                 const TensorVec<F>& t) {
  if (phi.size() != t.coords.size())
    throw std::invalid_argument("pair_functional: dimension mismatch");
  typename F::Elem s = field.zero();
  for (std::size_t k = 0; k < phi.size(); ++k) {
    if (field.is_zero(phi[k]) || field.is_zero(t.coords[k])) continue;
    s = field.add(s, field.mul(phi[k], t.coords[k]));
  }
  return s;
}

}  // namespace zpd
