#pragma once

#include <array>
#include <string>
#include <vector>

#include "zpd/zpdcert.hpp"

namespace zpd {

// ---- explicit counterexample functional (degree-5 family over M_2) ------

template <class F>
struct Sec2Phi {
  std::vector<typename F::Elem> coords;  // ambient d^(2m) = 1024
  std::string omega;                     // which coordinate functional
  MatTuple<F> witness_fill;              // u with c(u) != 0
};

// phi(a_1,...,a_5) = c(a_1,...,a_4) omega(a_5), with values of the central
// polynomial identified with scalars. omega is the (1,2) coordinate
// functional, replaced by (2,1) if linearly dependent with
// rho(a) = c(u_1,u_2,u_3,a) for the chosen witness fill u.
template <class F>
Sec2Phi<F> sec2_phi(const F& field, int d = 2) {
  if (d != 2)
    throw std::invalid_argument("sec2_phi: the explicit family lives on M_2");
  auto c = polys::central_m2(field);
  const int n = d * d;

  auto unit_of = [&](int u) { return Mat<F>::unit(field, d, u / d, u % d); };

  // c-values over all matrix-unit 4-tuples, as scalars.
  std::vector<typename F::Elem> cval(std::size_t(n) * n * n * n);
  bool found_witness = false;
  std::array<int, 4> witness{};
  for (int u1 = 0; u1 < n; ++u1)
    for (int u2 = 0; u2 < n; ++u2)
      for (int u3 = 0; u3 < n; ++u3)
        for (int u4 = 0; u4 < n; ++u4) {
          Mat<F> v = c.evaluate({unit_of(u1), unit_of(u2), unit_of(u3), unit_of(u4)});
          typename F::Elem s = field.zero();
          if (!v.is_scalar(s))
            throw std::logic_error("central polynomial produced a non-scalar value");
          cval[((std::size_t(u1) * n + u2) * n + u3) * n + u4] = s;
          if (!found_witness && !field.is_zero(s)) {
            witness = {u1, u2, u3, u4};
            found_witness = true;
          }
        }
  if (!found_witness)
    throw std::logic_error("no matrix-unit tuple with c(u) != 0");

  // rho(a) = c(u_1,u_2,u_3,a) as a functional on M_2.
  std::vector<typename F::Elem> rho(n);
  for (int u = 0; u < n; ++u)
    rho[u] = cval[((std::size_t(witness[0]) * n + witness[1]) * n + witness[2]) * n + u];

  auto omega_vec = [&](int row, int col) {
    std::vector<typename F::Elem> w(n, field.zero());
    w[row * d + col] = field.one();
    return w;
  };
  std::vector<typename F::Elem> omega = omega_vec(0, 1);
  std::string omega_name = "a[1][2]";
  {
    SpanBasis<F> sp(field, n);
    sp.insert(rho);
    if (sp.contains(omega)) {
      omega = omega_vec(1, 0);
      omega_name = "a[2][1]";
    }
  }

  Sec2Phi<F> out;
  out.omega = omega_name;
  for (int u : witness) out.witness_fill.push_back(unit_of(u));
  out.coords.resize(std::size_t(n) * n * n * n * n);
  for (std::size_t idx4 = 0; idx4 < cval.size(); ++idx4)
    for (int u5 = 0; u5 < n; ++u5)
      out.coords[idx4 * n + u5] = field.mul(cval[idx4], omega[u5]);
  return out;
}

// ---- matrix-unit identity suites for the generalized commutator ---------

struct LemmaFamilyReport {
  std::string name;
  std::size_t instances = 0;
  std::size_t failures = 0;
};

struct GcLemmaSuiteReport {
  std::vector<LemmaFamilyReport> families;
  bool self_test_ok = false;
  bool all_pass() const {
    for (const auto& f : families)
      if (f.failures) return false;
    return self_test_ok;
  }
};

// Verifies the key zeros behind the generalized-commutator lemmas: the
// vanishing unit triples and the five two-unit-sum families. Index
// constraints limit which families fire at small d (the five-index family
// needs d >= 3).
template <class F>
GcLemmaSuiteReport gc_lemma_suite(const F& field, int d) {
  if (d < 2) throw std::invalid_argument("gc_lemma_suite: d >= 2");
  auto gc = polys::generalized_commutator(field);
  auto unit = [&](int i, int j) { return Mat<F>::unit(field, d, i, j); };
  auto check = [&](LemmaFamilyReport& rep, const MatTuple<F>& t) {
    ++rep.instances;
    if (!gc.evaluate(t).is_zero()) ++rep.failures;
  };

  GcLemmaSuiteReport out;

  {
    LemmaFamilyReport rep{"unit-triples"};
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k)
          for (int l = 0; l < d; ++l)
            for (int p = 0; p < d; ++p)
              for (int q = 0; q < d; ++q) {
                bool vanishes = (j != k && q != k) || (j != k && i != l) ||
                                (l != p && q != k) || (l != p && i != l);
                if (!vanishes) continue;
                check(rep, {unit(i, j), unit(k, l), unit(p, q)});
              }
    out.families.push_back(rep);
  }
  {
    LemmaFamilyReport rep{"sum-family-1"};  // u != l,i; l != i; j != k
    for (int i = 0; i < d; ++i)
      for (int l = 0; l < d; ++l)
        for (int u = 0; u < d; ++u) {
          if (u == l || u == i || l == i) continue;
          for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) {
              if (j == k) continue;
              check(rep, {unit(i, k) + unit(u, j), unit(k, l) + unit(k, u),
                          unit(l, j) + unit(i, k)});
            }
        }
    out.families.push_back(rep);
  }
  {
    LemmaFamilyReport rep{"sum-family-2"};  // l != i, k != j
    for (int i = 0; i < d; ++i)
      for (int l = 0; l < d; ++l) {
        if (l == i) continue;
        for (int j = 0; j < d; ++j)
          for (int k = 0; k < d; ++k) {
            if (k == j) continue;
            check(rep, {unit(i, j) + unit(l, j), unit(j, l) + unit(k, l),
                        unit(l, j) + unit(i, k)});
          }
      }
    out.families.push_back(rep);
  }
  {
    LemmaFamilyReport rep{"sum-family-3"};  // k != i, k != j
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k) {
          if (k == i || k == j) continue;
          check(rep, {unit(i, k) + unit(k, j), unit(k, i) + unit(k, k),
                      unit(i, j) + unit(i, k)});
        }
    out.families.push_back(rep);
  }
  {
    LemmaFamilyReport rep{"sum-family-4"};  // k != i
    for (int i = 0; i < d; ++i)
      for (int k = 0; k < d; ++k) {
        if (k == i) continue;
        check(rep, {unit(i, i) + unit(k, i), unit(i, k) + unit(k, k),
                    unit(k, i) + unit(i, k)});
      }
    out.families.push_back(rep);
  }
  {
    LemmaFamilyReport rep{"sum-family-5"};  // i != j
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        if (i == j) continue;
        check(rep, {unit(i, i) + unit(j, j), unit(i, i) + unit(i, j),
                    unit(i, j) + unit(i, i)});
      }
    out.families.push_back(rep);
  }

  // Self-test: a deliberately perturbed sum-family-4 tuple must not vanish.
  {
    MatTuple<F> bad = {unit(0, 0) + unit(1, 0), unit(0, 1) + unit(0, 0),
                       unit(1, 0) + unit(0, 1)};
    out.self_test_ok = !gc.evaluate(bad).is_zero();
  }
  return out;
}

// ---- idempotent relation suite for cyclic polynomials --------------------

struct CyclicRelationReport {
  std::size_t relations_checked = 0;
  std::size_t failures = 0;
  int rotation = 0;  // coefficient rotation applied to get a_1 + a_m != 0
  bool self_test_ok = false;
  bool all_pass() const { return failures == 0 && self_test_ok; }
};

namespace detail {

// Relations of the idempotent-splitting step, for one idempotent e and one
// random tuple. The coefficients are assumed normalized to sum 1 with
// alpha_1 + alpha_m != 0.
template <class F>
std::vector<Mat<F>> cyclic_split_values(
    const MultilinearPoly<F>& f, const std::vector<typename F::Elem>& alphas,
    const MatTuple<F>& a, const Mat<F>& e) {
  const F& field = f.field();
  const int m = f.degree();
  const int d = e.dim();
  Mat<F> one = Mat<F>::identity(field, d);
  Mat<F> h = one - e;
  const auto& a1 = alphas.front();
  const auto& am = alphas.back();
  auto scal = [&](const typename F::Elem& c) { return Mat<F>::scalar(field, d, c); };

  auto tuple_with = [&](const Mat<F>& first, const Mat<F>& last_side,
                        const Mat<F>& xm) {
    MatTuple<F> t;
    t.push_back(first * a[0]);
    for (int k = 1; k + 2 < m; ++k) t.push_back(a[k]);
    if (m >= 3) t.push_back(a[m - 2] * last_side);
    t.push_back(xm);
    return t;
  };

  std::vector<Mat<F>> vals;
  if (m == 2) {
    const Mat<F>& x = a[0];
    vals.push_back(f.evaluate({h * x * e, e - scal(a1)}));
    vals.push_back(f.evaluate({e * x * h, e - scal(am)}));
    vals.push_back(f.evaluate({e * x * e, h}));
    vals.push_back(f.evaluate({h * x * h, e}));
  } else {
    typename F::Elem s = field.add(a1, am);
    vals.push_back(f.evaluate(tuple_with(e, e, e - one)));
    vals.push_back(f.evaluate(tuple_with(e, h, e.scaled(s) - scal(am))));
    vals.push_back(f.evaluate(tuple_with(h, e, e.scaled(s) - scal(a1))));
    vals.push_back(f.evaluate(tuple_with(h, h, e)));
  }
  return vals;
}

// Relations of the idempotent-product induction step: t is a product of
// idempotents, e1 and en1 idempotents, h = 1 - e.
template <class F>
std::vector<Mat<F>> cyclic_product_values(const MultilinearPoly<F>& f,
                                          const MatTuple<F>& a,
                                          const Mat<F>& e1, const Mat<F>& en1,
                                          const Mat<F>& t) {
  const F& field = f.field();
  const int m = f.degree();
  const int d = e1.dim();
  Mat<F> one = Mat<F>::identity(field, d);
  Mat<F> h1 = one - e1, hn1 = one - en1;

  auto tuple_with = [&](const Mat<F>& first, const Mat<F>& last_side,
                        const Mat<F>& xm) {
    MatTuple<F> out;
    if (m == 2) {
      out.push_back(first * a[0] * last_side);
    } else {
      out.push_back(first * a[0]);
      for (int k = 1; k + 2 < m; ++k) out.push_back(a[k]);
      out.push_back(a[m - 2] * last_side);
    }
    out.push_back(xm);
    return out;
  };

  std::vector<Mat<F>> vals;
  vals.push_back(f.evaluate(tuple_with(en1, e1, h1 * t * hn1)));
  vals.push_back(f.evaluate(tuple_with(en1, h1, e1 * t * hn1)));
  vals.push_back(f.evaluate(tuple_with(hn1, e1, h1 * t * en1)));
  vals.push_back(f.evaluate(tuple_with(hn1, h1, e1 * t * en1)));
  return vals;
}

}  // namespace detail

// Checks the idempotent relations behind the cyclic-polynomial theorem on
// seeded random matrices and idempotents. Coefficients are normalized to
// sum 1 (the property is scale invariant) and rotated so that
// alpha_1 + alpha_m != 0; the rotated polynomial is again cyclic.
template <class F>
CyclicRelationReport cyclic_relation_suite(
    const F& field, std::vector<typename F::Elem> alphas, int d,
    std::uint64_t seed, int repetitions = 1) {
  if (field.descriptor().char_is_two())
    throw std::invalid_argument("cyclic_relation_suite: char(F) = 2 excluded");
  const int m = int(alphas.size());
  if (m < 2) throw std::invalid_argument("cyclic_relation_suite: m >= 2");

  typename F::Elem total = field.zero();
  for (const auto& x : alphas) total = field.add(total, x);
  if (field.is_zero(total))
    throw std::invalid_argument("cyclic_relation_suite: need sum of alphas != 0");
  auto inv = field.inv(total);
  for (auto& x : alphas) x = field.mul(x, inv);

  CyclicRelationReport rep;
  // Rotate so that alpha_1 + alpha_m != 0 (exists since the sum is 1).
  for (int r = 0; r < m; ++r) {
    if (!field.is_zero(field.add(alphas[(r + 1) % m], alphas[r % m]))) {
      rep.rotation = (r + 1) % m;
      break;
    }
  }
  std::rotate(alphas.begin(), alphas.begin() + rep.rotation, alphas.end());
  if (field.is_zero(field.add(alphas.front(), alphas.back())))
    throw std::logic_error("rotation failed to make alpha_1 + alpha_m nonzero");

  auto f = polys::cyclic(field, alphas);

  auto run_relations = [&](SplitMix64& rng, bool idempotent) {
    MatTuple<F> a;
    for (int k = 0; k + 1 < m; ++k) a.push_back(random_mat(field, d, rng));
    if (a.empty()) a.push_back(random_mat(field, d, rng));
    Mat<F> e = random_idempotent(field, d, rng);
    if (!idempotent) e = e + Mat<F>::unit(field, d, 0, d - 1);

    std::size_t bad = 0;
    for (const auto& v : detail::cyclic_split_values(f, alphas, a, e))
      if (!v.is_zero()) ++bad;
    rep.relations_checked += 4;

    for (int n : {2, 3}) {
      Mat<F> e1 = random_idempotent(field, d, rng);
      Mat<F> en1 = random_idempotent(field, d, rng);
      Mat<F> t = Mat<F>::identity(field, d);
      for (int k = 0; k + 1 < n; ++k) t = t * random_idempotent(field, d, rng);
      for (const auto& v : detail::cyclic_product_values(f, a, e1, en1, t))
        if (!v.is_zero()) ++bad;
      rep.relations_checked += 4;
    }
    return bad;
  };

  for (int it = 0; it < repetitions; ++it) {
    SplitMix64 rng(mix_seed(seed, it));
    rep.failures += run_relations(rng, true);
  }
  {
    // Self-test: breaking idempotency must break at least one relation.
    SplitMix64 rng(mix_seed(seed ^ 0x5eed5eedULL, 0));
    std::size_t checked_before = rep.relations_checked;
    std::size_t bad = run_relations(rng, false);
    rep.relations_checked = checked_before;  // self-test not counted
    rep.self_test_ok = bad > 0;
  }
  return rep;
}

// Exact check of the normalization identity for zero-preserving functionals
// when alpha = f(1,...,1) != 0:
// phi(a) = alpha^{-1} phi(f(a), 1, ..., 1) on sampled tuples.
template <class F>
bool lemma33_identity_holds(const MultilinearPoly<F>& f, int d,
                            const std::vector<typename F::Elem>& phi,
                            int samples, std::uint64_t seed) {
  const F& field = f.field();
  const int m = f.degree();
  auto alpha = f.eval_at_ones();
  if (field.is_zero(alpha))
    throw std::invalid_argument("lemma33: need f(1,...,1) != 0");
  auto alpha_inv = field.inv(alpha);
  for (int s = 0; s < samples; ++s) {
    SplitMix64 rng(mix_seed(seed, s));
    MatTuple<F> t;
    for (int k = 0; k < m; ++k) t.push_back(random_mat(field, d, rng));
    MatTuple<F> ft;
    ft.push_back(f.evaluate(t));
    for (int k = 1; k < m; ++k) ft.push_back(Mat<F>::identity(field, d));
    auto lhs = pair_functional(field, phi, tensor_flatten(t));
    auto rhs = field.mul(alpha_inv, pair_functional(field, phi, tensor_flatten(ft)));
    if (!field.eq(lhs, rhs)) return false;
  }
  return true;
}

}  // namespace zpd
