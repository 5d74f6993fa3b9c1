#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include "zpd/mat.hpp"
#include "zpd/perm.hpp"
#include "zpd/tensor.hpp"

namespace zpd {

// Multilinear noncommutative polynomial of degree m, stored sparsely as a
// coefficient map on S_m. The monomial of sigma is x_{sigma(1)} ... x_{sigma(m)};
// stored coefficients are nonzero, so Supp(f) is exactly the key set.
template <class F>
class MultilinearPoly {
 public:
  using Elem = typename F::Elem;
  using Terms = std::map<Perm, Elem>;

  MultilinearPoly(const F& field, int m) : field_(field), m_(m) {
    if (m < 1) throw std::invalid_argument("MultilinearPoly: degree >= 1");
  }

  int degree() const { return m_; }
  const F& field() const { return field_; }
  const Terms& terms() const { return terms_; }
  std::size_t support_size() const { return terms_.size(); }
  bool is_zero_poly() const { return terms_.empty(); }

  Elem coeff(const Perm& sigma) const {
    auto it = terms_.find(sigma);
    return it == terms_.end() ? field_.zero() : it->second;
  }

  void add_term(const Perm& sigma, const Elem& c) {
    if (sigma.degree() != m_)
      throw std::invalid_argument("add_term: degree mismatch");
    auto it = terms_.find(sigma);
    if (it == terms_.end()) {
      if (!field_.is_zero(c)) terms_.emplace(sigma, c);
      return;
    }
    it->second = field_.add(it->second, c);
    if (field_.is_zero(it->second)) terms_.erase(it);
  }

  MultilinearPoly scaled(const Elem& c) const {
    MultilinearPoly out(field_, m_);
    if (field_.is_zero(c)) return out;
    for (const auto& [sigma, a] : terms_) out.terms_[sigma] = field_.mul(a, c);
    return out;
  }

  MultilinearPoly operator+(const MultilinearPoly& o) const {
    if (o.m_ != m_) throw std::invalid_argument("poly +: degree mismatch");
    MultilinearPoly out(*this);
    for (const auto& [sigma, a] : o.terms_) out.add_term(sigma, a);
    return out;
  }

  MultilinearPoly operator-(const MultilinearPoly& o) const {
    return *this + o.scaled(field_.neg(field_.one()));
  }

  bool operator==(const MultilinearPoly& o) const {
    if (m_ != o.m_ || terms_.size() != o.terms_.size()) return false;
    auto it = o.terms_.begin();
    for (const auto& [sigma, a] : terms_) {
      if (!(sigma == it->first) || !field_.eq(a, it->second)) return false;
      ++it;
    }
    return true;
  }

  Mat<F> evaluate(const MatTuple<F>& t) const {
    if (int(t.size()) != m_)
      throw std::invalid_argument("evaluate: arity mismatch");
    const int d = t[0].dim();
    for (const auto& a : t)
      if (a.dim() != d || !(a.field() == field_))
        throw std::invalid_argument("evaluate: dimension or field mismatch");
    Mat<F> acc(field_, d);
    for (const auto& [sigma, c] : terms_) {
      Mat<F> prod = t[sigma(0)];
      for (int k = 1; k < m_; ++k) prod = prod * t[sigma(k)];
      acc = acc + prod.scaled(c);
    }
    return acc;
  }

  // f(1,...,1) = sum of coefficients.
  Elem eval_at_ones() const {
    Elem s = field_.zero();
    for (const auto& [sigma, c] : terms_) s = field_.add(s, c);
    return s;
  }

  // f_psi: coefficient of pi in the output is alpha_{psi^{-1} pi},
  // equivalently Supp(f_psi) = psi Supp(f). Evaluation identity:
  // f_psi(a_1,...,a_m) = f(b) with b_i = a_{psi(i)}.
  MultilinearPoly reindex(const Perm& psi) const {
    if (psi.degree() != m_)
      throw std::invalid_argument("reindex: degree mismatch");
    MultilinearPoly out(field_, m_);
    for (const auto& [sigma, c] : terms_) out.terms_[compose(psi, sigma)] = c;
    return out;
  }

  std::vector<Perm> support() const {
    std::vector<Perm> out;
    out.reserve(terms_.size());
    for (const auto& [sigma, c] : terms_) out.push_back(sigma);
    return out;
  }

 private:
  F field_;
  int m_;
  Terms terms_;
};

// Matrix of the linear slot map a -> f(t_1,...,a,...,t_m) on M_d in the
// matrix-unit basis (flattened coordinates); column j is the flattening of
// f with unit j in the hole.
template <class F>
std::vector<std::vector<typename F::Elem>> partial_linear_map(
    const MultilinearPoly<F>& f, MatTuple<F> t, int slot) {
  if (int(t.size()) != f.degree())
    throw std::invalid_argument("partial_linear_map: arity mismatch");
  const F& field = f.field();
  const int d = t[0].dim();
  const int n = d * d;
  std::vector<std::vector<typename F::Elem>> rows(
      n, std::vector<typename F::Elem>(n, field.zero()));
  for (int j = 0; j < n; ++j) {
    t[slot] = Mat<F>::unit(field, d, j / d, j % d);
    Mat<F> val = f.evaluate(t);
    for (int r = 0; r < n; ++r) rows[r][j] = val.at(r / d, r % d);
  }
  return rows;
}

// f_0(f_1,...,f_k) with the parts reindexed into consecutive variable
// blocks in argument order.
template <class F>
MultilinearPoly<F> compose(const MultilinearPoly<F>& f0,
                           const std::vector<MultilinearPoly<F>>& parts) {
  if (int(parts.size()) != f0.degree())
    throw std::invalid_argument("compose: arity mismatch");
  const F& field = f0.field();
  const int k = f0.degree();
  std::vector<int> offset(k + 1, 0);
  for (int i = 0; i < k; ++i) offset[i + 1] = offset[i] + parts[i].degree();
  const int m = offset[k];

  MultilinearPoly<F> out(field, m);
  std::vector<typename MultilinearPoly<F>::Terms::const_iterator> its(k);

  bool any_empty = false;
  for (int i = 0; i < k; ++i)
    if (parts[i].terms().empty()) any_empty = true;

  for (const auto& [sigma0, c0] : f0.terms()) {
    if (any_empty) break;
    // Odometer over the parts' term maps.
    for (int i = 0; i < k; ++i) its[i] = parts[i].terms().begin();

    for (;;) {
      std::vector<int> img;
      img.reserve(m);
      typename F::Elem c = c0;
      for (int pos = 0; pos < k; ++pos) {
        const int block = sigma0(pos);
        const auto& [sig_i, c_i] = *its[block];
        for (int r = 0; r < parts[block].degree(); ++r)
          img.push_back(offset[block] + sig_i(r));
        c = field.mul(c, c_i);
      }
      out.add_term(Perm::from_images(std::move(img)), c);

      int i = k - 1;
      for (; i >= 0; --i) {
        ++its[i];
        if (its[i] != parts[i].terms().end()) break;
        its[i] = parts[i].terms().begin();
      }
      if (i < 0) break;
    }
  }
  return out;
}

// lambda with g = lambda * f when the coefficient maps are proportional.
template <class F>
std::optional<typename F::Elem> linear_dependence(
    const MultilinearPoly<F>& f, const MultilinearPoly<F>& g) {
  if (f.degree() != g.degree())
    throw std::invalid_argument("linear_dependence: degree mismatch");
  const F& field = f.field();
  if (g.is_zero_poly()) return field.zero();
  if (f.is_zero_poly()) return std::nullopt;
  // Every g-term must sit on an f-term with one common ratio.
  std::optional<typename F::Elem> lambda;
  for (const auto& [sigma, b] : g.terms()) {
    auto a = f.coeff(sigma);
    if (field.is_zero(a)) return std::nullopt;
    auto r = field.div(b, a);
    if (!lambda)
      lambda = r;
    else if (!field.eq(*lambda, r))
      return std::nullopt;
  }
  // f-terms outside Supp(g) force lambda = 0, contradicting nonzero g.
  for (const auto& [sigma, a] : f.terms())
    if (field.is_zero(g.coeff(sigma))) return std::nullopt;
  return lambda;
}

// ---- named constructors ----------------------------------------------

namespace polys {

template <class F>
MultilinearPoly<F> monomial(const F& field, const std::vector<int>& one_line_1based) {
  MultilinearPoly<F> f(field, int(one_line_1based.size()));
  f.add_term(Perm::from_one_line_1based(one_line_1based), field.one());
  return f;
}

template <class F>
MultilinearPoly<F> prod2(const F& field) {
  return monomial(field, {1, 2});
}

template <class F>
MultilinearPoly<F> lie2(const F& field) {
  MultilinearPoly<F> f(field, 2);
  f.add_term(Perm::from_one_line_1based({1, 2}), field.one());
  f.add_term(Perm::from_one_line_1based({2, 1}), field.neg(field.one()));
  return f;
}

template <class F>
MultilinearPoly<F> jordan2(const F& field) {
  MultilinearPoly<F> f(field, 2);
  f.add_term(Perm::from_one_line_1based({1, 2}), field.one());
  f.add_term(Perm::from_one_line_1based({2, 1}), field.one());
  return f;
}

// Generalized commutator x1 x2 x3 - x3 x2 x1.
template <class F>
MultilinearPoly<F> generalized_commutator(const F& field) {
  MultilinearPoly<F> f(field, 3);
  f.add_term(Perm::from_one_line_1based({1, 2, 3}), field.one());
  f.add_term(Perm::from_one_line_1based({3, 2, 1}), field.neg(field.one()));
  return f;
}

// Standard polynomial s_n = sum over S_n of sgn(sigma) x_{sigma(1)}...x_{sigma(n)}.
template <class F>
MultilinearPoly<F> standard(const F& field, int n) {
  MultilinearPoly<F> f(field, n);
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = i;
  auto sign_of = [](const std::vector<int>& v) {
    int inv = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
      for (std::size_t j = i + 1; j < v.size(); ++j)
        if (v[i] > v[j]) ++inv;
    return inv % 2 == 0;
  };
  do {
    f.add_term(Perm::from_images(img),
               sign_of(img) ? field.one() : field.neg(field.one()));
  } while (std::next_permutation(img.begin(), img.end()));
  return f;
}

// alpha_1 x_1...x_m + alpha_2 x_2...x_m x_1 + ... + alpha_m x_m x_1...x_{m-1}.
template <class F>
MultilinearPoly<F> cyclic(const F& field,
                          const std::vector<typename F::Elem>& alphas) {
  const int m = int(alphas.size());
  MultilinearPoly<F> f(field, m);
  for (int r = 0; r < m; ++r) {
    std::vector<int> img(m);
    for (int pos = 0; pos < m; ++pos) img[pos] = (r + pos) % m;
    f.add_term(Perm::from_images(std::move(img)), alphas[r]);
  }
  return f;
}

// Central polynomial of M_2 of minimal degree:
// [x1,x2][x3,x4] + [x3,x4][x1,x2].
template <class F>
MultilinearPoly<F> central_m2(const F& field) {
  auto lie = lie2(field);
  MultilinearPoly<F> f0(field, 2);
  f0.add_term(Perm::from_one_line_1based({1, 2}), field.one());
  f0.add_term(Perm::from_one_line_1based({2, 1}), field.one());
  return compose(f0, {lie, lie});
}

template <class F>
struct Sec2Family {
  MultilinearPoly<F> h1, h2, f, g;
};

// Degree-5 family over M_2 built from the central polynomial c:
// h1 = c(x1..x4) x5, h2 = c(x1,x2,x3,x5) x4, f = h1 + alpha h2,
// g = h1 + beta h2. Requires alpha, beta outside {0,-1} and alpha != beta.
template <class F>
Sec2Family<F> sec2_family(const F& field, const typename F::Elem& alpha,
                                  const typename F::Elem& beta) {
  const auto zero = field.zero(), minus_one = field.neg(field.one());
  for (const auto& v : {alpha, beta})
    if (field.eq(v, zero) || field.eq(v, minus_one))
      throw std::invalid_argument("sec2_family: need alpha, beta outside {0,-1}");
  if (field.eq(alpha, beta))
    throw std::invalid_argument("sec2_family: need alpha != beta");

  auto c = central_m2(field);
  MultilinearPoly<F> h1(field, 5), h2(field, 5);
  for (const auto& [sigma, coeff] : c.terms()) {
    std::vector<int> img1, img2;
    for (int k = 0; k < 4; ++k) {
      img1.push_back(sigma(k));
      img2.push_back(sigma(k) == 3 ? 4 : sigma(k));  // var 4 -> var 5
    }
    img1.push_back(4);
    img2.push_back(3);
    h1.add_term(Perm::from_images(std::move(img1)), coeff);
    h2.add_term(Perm::from_images(std::move(img2)), coeff);
  }
  return {h1, h2, h1 + h2.scaled(alpha), h1 + h2.scaled(beta)};
}

}  // namespace polys

// ---- monomial trees -----------------------------------------------------

// Binary tree whose leaves are variable indices and whose internal nodes are
// associative product, Lie bracket, or Jordan product. Expanded symbolically
// to a coefficient map at construction.
struct MonomialTree {
  enum class Kind { Var, Prod, Lie, Jordan };
  Kind kind = Kind::Var;
  int var = 0;  // 1-based, for leaves
  std::unique_ptr<MonomialTree> left, right;

  static MonomialTree leaf(int var1) {
    MonomialTree t;
    t.kind = Kind::Var;
    t.var = var1;
    return t;
  }
  static MonomialTree node(Kind k, MonomialTree l, MonomialTree r) {
    MonomialTree t;
    t.kind = k;
    t.left = std::make_unique<MonomialTree>(std::move(l));
    t.right = std::make_unique<MonomialTree>(std::move(r));
    return t;
  }
};

namespace detail {
template <class F>
void expand_tree(const F& field, const MonomialTree& t,
                 std::map<std::vector<int>, typename F::Elem>& out_seqs) {
  if (t.kind == MonomialTree::Kind::Var) {
    out_seqs[{t.var - 1}] = field.one();
    return;
  }
  std::map<std::vector<int>, typename F::Elem> ls, rs;
  expand_tree(field, *t.left, ls);
  expand_tree(field, *t.right, rs);
  auto emit = [&](const std::vector<int>& a, const std::vector<int>& b,
                  const typename F::Elem& c) {
    std::vector<int> seq = a;
    seq.insert(seq.end(), b.begin(), b.end());
    auto [it, fresh] = out_seqs.try_emplace(std::move(seq), c);
    if (!fresh) {
      it->second = field.add(it->second, c);
      if (field.is_zero(it->second)) out_seqs.erase(it);
    }
  };
  for (const auto& [la, lc] : ls)
    for (const auto& [rb, rc] : rs) {
      auto c = field.mul(lc, rc);
      emit(la, rb, c);
      if (t.kind == MonomialTree::Kind::Lie) emit(rb, la, field.neg(c));
      if (t.kind == MonomialTree::Kind::Jordan) emit(rb, la, c);
    }
}
}  // namespace detail

template <class F>
MultilinearPoly<F> monomial_tree(const F& field, const MonomialTree& t) {
  std::map<std::vector<int>, typename F::Elem> seqs;
  detail::expand_tree(field, t, seqs);
  if (seqs.empty()) throw std::invalid_argument("monomial_tree: empty tree");
  const int m = int(seqs.begin()->first.size());
  MultilinearPoly<F> f(field, m);
  for (const auto& [seq, c] : seqs) {
    std::vector<bool> seen(m, false);
    for (int v : seq) {
      if (v < 0 || v >= m || seen[v])
        throw std::invalid_argument(
            "monomial_tree: leaves must be x1..xm, each exactly once");
      seen[v] = true;
    }
    f.add_term(Perm::from_images(seq), c);
  }
  return f;
}

}  // namespace zpd
