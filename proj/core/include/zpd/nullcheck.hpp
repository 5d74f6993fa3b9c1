#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "zpd/zpdcert.hpp"

namespace zpd {

// ---- staircase sequences -------------------------------------------------

enum class StairVariant { Base, Shifted, Case3, Case4 };

inline int staircase_m0(int m) { return m % 2 == 0 ? m / 2 + 1 : (m + 1) / 2; }

template <class F>
struct Staircase {
  int m = 0;
  int d = 0;
  int m0 = 0;
  StairVariant variant = StairVariant::Base;
  MatTuple<F> units;
};

namespace detail {

// 1-based (row, col) of the base staircase unit at 1-based position r.
inline std::pair<int, int> base_unit_rc(int r) {
  return r % 2 ? std::pair{(r + 1) / 2, (r + 1) / 2}
               : std::pair{r / 2, r / 2 + 1};
}
// Shift pattern: square-zero at odd positions, idempotent at even ones.
inline std::pair<int, int> shifted_unit_rc(int r) {
  return r % 2 ? std::pair{(r + 1) / 2, (r + 1) / 2 + 1}
               : std::pair{r / 2 + 1, r / 2 + 1};
}

}  // namespace detail

// The matrix-unit sequences whose permuted products isolate single
// coefficients. Variants Case3/Case4 shift the pattern at the transposition
// positions p < q (1-based): Case3 needs p odd and q even, Case4 p even and
// q odd.
template <class F>
Staircase<F> staircase(const F& field, int m, int d, StairVariant variant,
                       int p = 0, int q = 0) {
  const int m0 = staircase_m0(m);
  const int max_index = variant == StairVariant::Base ? m0 : m0 + 1;
  if (max_index > d)
    throw std::invalid_argument("staircase: dimension too small");

  auto rc = [&](int r) -> std::pair<int, int> {
    switch (variant) {
      case StairVariant::Base:
        return detail::base_unit_rc(r);
      case StairVariant::Shifted:
        return detail::shifted_unit_rc(r);
      case StairVariant::Case3: {
        if (!(1 <= p && p < q && q <= m && p % 2 == 1 && q % 2 == 0))
          throw std::invalid_argument("staircase: bad Case3 positions");
        if (r < p) return detail::base_unit_rc(r);
        if (r < q) return detail::shifted_unit_rc(r);
        auto [a, b] = detail::base_unit_rc(r);
        return {a + 1, b + 1};
      }
      case StairVariant::Case4: {
        if (!(1 <= p && p < q && q <= m && p % 2 == 0 && q % 2 == 1))
          throw std::invalid_argument("staircase: bad Case4 positions");
        if (r < q) return detail::base_unit_rc(r);
        return detail::shifted_unit_rc(r);
      }
    }
    throw std::logic_error("staircase: unknown variant");
  };

  Staircase<F> s{m, d, m0, variant, {}};
  s.units.reserve(m);
  for (int r = 1; r <= m; ++r) {
    auto [i, j] = rc(r);
    s.units.push_back(matrix_unit(field, i, j, d));
  }
  return s;
}

// ---- support inclusion ---------------------------------------------------

template <class F>
struct SupportWitness {
  Perm sigma;         // in Supp(g), outside Supp(f)
  MatTuple<F> tuple;  // sigma^{-1}-permuted staircase
};

// Checks Supp(g) subseteq Supp(f); otherwise returns the permuted staircase
// isolating the offending coefficient (verified f = 0, g != 0).
template <class F>
std::optional<SupportWitness<F>> support_inclusion(const MultilinearPoly<F>& f,
                                                   const MultilinearPoly<F>& g,
                                                   int d) {
  const F& field = f.field();
  const int m = f.degree();
  auto base = staircase(field, m, d, StairVariant::Base);
  for (const auto& [sigma, beta] : g.terms()) {
    if (!field.is_zero(f.coeff(sigma))) continue;
    Perm inv = sigma.inverse();
    MatTuple<F> t;
    t.reserve(m);
    for (int i = 0; i < m; ++i) t.push_back(base.units[inv(i)]);
    if (!f.evaluate(t).is_zero() || g.evaluate(t).is_zero())
      throw std::logic_error("support witness failed exact verification");
    return SupportWitness<F>{sigma, std::move(t)};
  }
  return std::nullopt;
}

// ---- equivalence classes on Supp(f) --------------------------------------

namespace detail {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace detail

// Connected components of Supp(f) under left multiplication by
// transpositions staying inside the support.
template <class F>
std::vector<std::vector<Perm>> equivalence_classes(const MultilinearPoly<F>& f) {
  std::vector<Perm> supp = f.support();
  std::map<Perm, std::size_t> index;
  for (std::size_t i = 0; i < supp.size(); ++i) index.emplace(supp[i], i);

  detail::UnionFind uf(supp.size());
  const auto taus = all_transpositions(f.degree());
  for (std::size_t i = 0; i < supp.size(); ++i)
    for (const auto& tau : taus) {
      auto it = index.find(compose(tau, supp[i]));
      if (it != index.end()) uf.unite(i, it->second);
    }

  std::map<std::size_t, std::vector<Perm>> buckets;
  for (std::size_t i = 0; i < supp.size(); ++i)
    buckets[uf.find(i)].push_back(supp[i]);
  std::vector<std::vector<Perm>> out;
  for (auto& [root, members] : buckets) out.push_back(std::move(members));
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

template <class F>
struct ClassLambdas {
  std::vector<std::vector<Perm>> classes;
  std::vector<typename F::Elem> lambdas;   // one per class when consistent
  // Violating edge (sigma, tau) with sigma, tau sigma in the same class but
  // different coefficient ratios.
  std::optional<std::pair<Perm, Perm>> inconsistency;
};

// Per-class ratio beta_sigma / alpha_sigma, which the zero-set inclusion
// forces to be constant on each class; reports the violating transposition
// edge otherwise. Requires Supp(g) subseteq Supp(f).
template <class F>
ClassLambdas<F> class_lambdas(const MultilinearPoly<F>& f,
                              const MultilinearPoly<F>& g) {
  const F& field = f.field();
  ClassLambdas<F> out;
  out.classes = equivalence_classes(f);
  const auto taus = all_transpositions(f.degree());

  auto ratio = [&](const Perm& sigma) {
    return field.div(g.coeff(sigma), f.coeff(sigma));
  };

  for (const auto& cls : out.classes) {
    auto lambda = ratio(cls.front());
    bool consistent = true;
    for (const auto& sigma : cls)
      if (!field.eq(ratio(sigma), lambda)) consistent = false;
    if (consistent) {
      out.lambdas.push_back(lambda);
      continue;
    }
    // Find an adjacent violating pair inside the class.
    for (const auto& sigma : cls) {
      for (const auto& tau : taus) {
        Perm other = compose(tau, sigma);
        if (field.is_zero(f.coeff(other))) continue;
        if (!field.eq(ratio(sigma), ratio(other))) {
          out.inconsistency = {sigma, tau};
          return out;
        }
      }
    }
    throw std::logic_error("inconsistent class without violating edge");
  }
  return out;
}

// ---- transposition case tuples -------------------------------------------

// Zero tuple separating the coefficients of sigma and tau sigma: the
// staircase variant is picked by the parity of the transposed positions
// after the reduction to sigma = id. Exactly post-verified against f.
template <class F>
MatTuple<F> case_tuple(const MultilinearPoly<F>& f, const Perm& sigma,
                       const Perm& tau, int d) {
  const F& field = f.field();
  const int m = f.degree();
  if (field.is_zero(f.coeff(sigma)))
    throw std::invalid_argument("case_tuple: sigma outside Supp(f)");

  // Reduce to the pair ((1), tau') with tau' = sigma^{-1} tau sigma.
  Perm psi = sigma.inverse();
  Perm tau_red = compose(psi, compose(tau, sigma));
  int p = -1, q = -1;
  for (int i = 0; i < m; ++i)
    if (tau_red(i) != i) {
      p = i + 1;  // 1-based
      q = tau_red(i) + 1;
      break;
    }
  if (p < 0 || q < p) throw std::invalid_argument("case_tuple: tau not a transposition");

  const auto c1 = f.coeff(sigma);                  // alpha'_{(1)}
  const auto c2 = f.coeff(compose(tau, sigma));    // alpha'_{tau'}

  Staircase<F> st = [&] {
    const bool p_even = p % 2 == 0, q_even = q % 2 == 0;
    if (p_even && q_even) return staircase(field, m, d, StairVariant::Base);
    if (!p_even && !q_even) return staircase(field, m, d, StairVariant::Shifted);
    if (!p_even && q_even) return staircase(field, m, d, StairVariant::Case3, p, q);
    return staircase(field, m, d, StairVariant::Case4, p, q);
  }();

  MatTuple<F> a = st.units;
  a[p - 1] = st.units[p - 1] + st.units[q - 1];
  a[q - 1] = st.units[p - 1].scaled(c1) - st.units[q - 1].scaled(c2);

  // Transport back through the position mapping D_i = a_{psi(i)}.
  MatTuple<F> out;
  out.reserve(m);
  for (int i = 0; i < m; ++i) out.push_back(a[psi(i)]);
  if (!f.evaluate(out).is_zero())
    throw std::logic_error("case_tuple failed exact f-verification");
  return out;
}

// ---- minimal cross-class pair and witness blocks --------------------------

template <class F>
struct CrossPair {
  Perm sigma1, sigma2;
  int ell = 0;
};

// Pair attaining the minimum Cayley distance over cross-class pairs with
// distinct lambdas; ties broken lexicographically on one-line forms.
template <class F>
CrossPair<F> minimal_cross_pair(const ClassLambdas<F>& cl, const F& field) {
  std::optional<CrossPair<F>> best;
  for (std::size_t a = 0; a < cl.classes.size(); ++a)
    for (std::size_t b = 0; b < cl.classes.size(); ++b) {
      if (a == b || field.eq(cl.lambdas[a], cl.lambdas[b])) continue;
      for (const auto& s1 : cl.classes[a])
        for (const auto& s2 : cl.classes[b]) {
          int dist = cayley_distance(s1, s2);
          if (!best || dist < best->ell ||
              (dist == best->ell &&
               (s1 < best->sigma1 ||
                (s1 == best->sigma1 && s2 < best->sigma2))))
            best = CrossPair<F>{s1, s2, dist};
        }
    }
  if (!best) throw std::invalid_argument("minimal_cross_pair: no cross-class pair");
  return *best;
}

struct WitnessConstructionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

struct WitnessAddition {
  int pos = 0;   // 1-based position receiving the extra unit
  int row = 0;   // 1-based unit indices
  int col = 0;
  int slot = 0;  // 1-based slot of the q-traversal that consumes it
};

// Enumerates level schedules for the q-traversal over a fixed walk of
// staircase units: slot r holds position q(r); it contributes either the
// walk's own unit there or one extra unit e_{x,y}, with levels ranging over
// 1..levels (the walks use at most m0 + 1 <= d). The DFS prefers the walk
// unit, then additions that stay or advance one level, then the remaining
// columns; every complete schedule is handed to the verifier.
class WitnessScheduler {
 public:
  WitnessScheduler(const Perm& q, const std::vector<std::pair<int, int>>& walk_rc,
                   int levels, int end_level)
      : q_(q), m_(q.degree()), levels_(levels), end_(end_level), walk_(walk_rc) {
    reach_.assign(m_ + 1, std::vector<char>(levels_ + 1, 0));
    reach_[m_][end_] = 1;
    for (int r = m_ - 1; r >= 0; --r) {
      auto [u, v] = walk_[q_(r)];
      for (int x = 1; x <= levels_; ++x) {
        bool ok = false;
        if (x == u && v <= levels_ && reach_[r + 1][v]) ok = true;
        if (q_(r) != r)
          for (int y = 1; y <= levels_ && !ok; ++y)
            if (reach_[r + 1][y]) ok = true;
        reach_[r][x] = ok;
      }
    }
  }

  bool feasible() const { return reach_[0][1]; }

  // Calls fn(additions) for each complete schedule in DFS order; stops when
  // fn returns true or the candidate cap is hit.
  template <class Fn>
  bool enumerate(Fn&& fn, int cap) {
    tried_ = 0;
    cap_ = cap;
    std::vector<WitnessAddition> adds;
    return dfs(0, 1, adds, fn);
  }

 private:
  template <class Fn>
  bool dfs(int r, int x, std::vector<WitnessAddition>& adds, Fn&& fn) {
    if (tried_ >= cap_) return false;
    if (r == m_) {
      if (x != end_) return false;
      ++tried_;
      return fn(adds);
    }
    if (!reach_[r][x]) return false;
    auto [u, v] = walk_[q_(r)];
    if (x == u && v <= levels_ && reach_[r + 1][v])
      if (dfs(r + 1, v, adds, fn)) return true;
    if (q_(r) != r) {
      // y preference: stay, advance, then the remaining levels ascending.
      std::vector<int> ys;
      ys.reserve(levels_);
      if (x <= levels_) ys.push_back(x);
      if (x + 1 <= levels_) ys.push_back(x + 1);
      for (int y = 1; y <= levels_; ++y)
        if (y != x && y != x + 1) ys.push_back(y);
      for (int y : ys) {
        if (!reach_[r + 1][y]) continue;
        if (u == x && v == y) continue;  // identical to the walk unit
        adds.push_back({q_(r) + 1, x, y, r + 1});
        bool done = dfs(r + 1, y, adds, fn);
        adds.pop_back();
        if (done) return true;
      }
    }
    return false;
  }

  Perm q_;
  int m_, levels_, end_;
  std::vector<std::pair<int, int>> walk_;
  int tried_ = 0, cap_ = 0;
  std::vector<std::vector<char>> reach_;
};

template <class F>
Mat<F> ordered_product(const MatTuple<F>& w, const Perm& sigma) {
  Mat<F> acc = w[sigma(0)];
  for (int k = 1; k < int(w.size()); ++k) acc = acc * w[sigma(k)];
  return acc;
}

}  // namespace detail

// Builds the witness tuple W for the pair ((1), q): (W)_id is a single
// matrix unit u (e_{1,m0} on the primary walk), (W)_q = -ratio u, and for
// small m every other nonzero evaluation is confirmed to sit strictly
// closer than ell to both id and q. The layout follows the cycle traversal
// of q itself (consecutive labels are not assumed): candidate layouts over
// the base and shifted staircase walks are enumerated and verified exactly,
// and construction failure is surfaced as an error rather than patched.
template <class F>
MatTuple<F> build_witness(const F& field, const Perm& q,
                          const typename F::Elem& ratio, int d) {
  const int m = q.degree();
  const int m0 = staircase_m0(m);
  if (m0 + (m > 1 ? 1 : 0) > d)
    throw std::invalid_argument("build_witness: dimension too small");
  if (q.is_identity())
    throw std::invalid_argument("build_witness: quotient must move something");
  if (field.is_zero(ratio))
    throw std::invalid_argument("build_witness: ratio must be nonzero");

  const int ell = cayley_distance(Perm(m), q);
  const int levels = std::min(m0 + 1, d);

  // Candidate walks: stay/advance staircases from level 1 with at most one
  // stay per level (distinct units keep the extraction behavior). The walk
  // is determined by its end level E and the set of stay levels; the base
  // staircase comes first, the shifted one second.
  std::vector<std::vector<std::pair<int, int>>> walks;
  {
    std::vector<std::pair<int, int>> base_rc(m), shifted_rc(m);
    for (int r = 1; r <= m; ++r) {
      base_rc[r - 1] = detail::base_unit_rc(r);
      shifted_rc[r - 1] = detail::shifted_unit_rc(r);
    }
    walks.push_back(base_rc);
    if (m0 + 1 <= levels) walks.push_back(shifted_rc);
    for (int end = m0; end <= levels; ++end) {
      const int stays = m - end + 1;
      if (stays < 0 || stays > end) continue;
      std::vector<int> pick(stays);
      for (int i = 0; i < stays; ++i) pick[i] = i + 1;
      for (;;) {
        std::vector<std::pair<int, int>> rc;
        std::size_t pi = 0;
        for (int v = 1; v <= end; ++v) {
          if (pi < pick.size() && pick[pi] == v) {
            rc.push_back({v, v});
            ++pi;
          }
          if (v < end) rc.push_back({v, v + 1});
        }
        if (int(rc.size()) == m && rc != walks[0] &&
            (walks.size() < 2 || rc != walks[1]))
          walks.push_back(std::move(rc));
        // next combination
        int i = stays - 1;
        while (i >= 0 && pick[i] == end - (stays - 1 - i)) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < stays; ++j) pick[j] = pick[j - 1] + 1;
      }
    }
  }

  std::optional<MatTuple<F>> found;
  for (const auto& walk_rc : walks) {
    MatTuple<F> walk_units;
    walk_units.reserve(m);
    for (const auto& [row, col] : walk_rc)
      walk_units.push_back(matrix_unit(field, row, col, d));
    // The identity traversal of the walk ends at this unit.
    Mat<F> target = walk_units[0];
    for (int r = 1; r < m; ++r) target = target * walk_units[r];
    const Mat<F> target_q = target.scaled(field.neg(ratio));
    const int end_level = walk_rc[m - 1].second;

    detail::WitnessScheduler sched(q, walk_rc, levels, end_level);
    if (!sched.feasible()) continue;

    sched.enumerate(
        [&](const std::vector<detail::WitnessAddition>& adds) {
          if (adds.empty()) return false;
          MatTuple<F> w = walk_units;
          int last_slot = 0;
          for (const auto& a : adds) last_slot = std::max(last_slot, a.slot);
          for (const auto& a : adds) {
            auto unit = matrix_unit(field, a.row, a.col, d);
            w[a.pos - 1] =
                w[a.pos - 1] +
                (a.slot == last_slot ? unit.scaled(field.neg(ratio)) : unit);
          }
          if (!(detail::ordered_product(w, Perm(m)) == target)) return false;
          if (!(detail::ordered_product(w, q) == target_q)) return false;
          if (m <= 6) {
            for (const auto& sigma : all_perms(m)) {
              if (sigma == Perm(m) || sigma == q) continue;
              if (detail::ordered_product(w, sigma).is_zero()) continue;
              if (cayley_distance(Perm(m), sigma) >= ell ||
                  cayley_distance(q, sigma) >= ell)
                return false;
            }
          }
          found = std::move(w);
          return true;
        },
        4096);
    if (found) break;
  }
  if (!found)
    throw WitnessConstructionError(
        "build_witness: no verified layout within the candidate cap");
  return *found;
}

// ---- nullstellensatz pipeline ---------------------------------------------

// Samples zeros of f by the kernel strategy and returns the first at which
// g does not vanish. Independent oracle for the constructive pipeline.
template <class F>
std::optional<MatTuple<F>> random_zero_falsifier(const MultilinearPoly<F>& f,
                                                 const MultilinearPoly<F>& g,
                                                 int d, std::size_t budget,
                                                 std::uint64_t seed) {
  detail::Frame<F> fr(f.field(), d, f.degree(), nullptr);
  for (std::size_t s = 0; s < budget; ++s) {
    int slot = int(s % f.degree());
    SplitMix64 rng(mix_seed(seed, s, slot));
    for (auto& z : detail::kernel_zeros_once(f, fr, slot, rng)) {
      if (!g.evaluate(z.tuple).is_zero()) return std::move(z.tuple);
    }
  }
  return std::nullopt;
}

enum class NullStatus { Proportional, Witness, Unsupported };

inline const char* to_string(NullStatus s) {
  switch (s) {
    case NullStatus::Proportional: return "proportional";
    case NullStatus::Witness: return "witness";
    default: return "unsupported";
  }
}

template <class F>
struct NullReport {
  NullStatus status = NullStatus::Unsupported;
  std::optional<typename F::Elem> lambda;
  std::optional<MatTuple<F>> witness;
  std::optional<Mat<F>> f_value, g_value;
  std::string route;  // "support" | "within-class" | "cross-class"
  std::optional<int> ell;
  std::optional<std::pair<Perm, Perm>> pair;
  std::string reason;
  bool internal_failure = false;  // construction/verification defect, not a
                                  // hypothesis violation
  std::size_t falsifier_budget = 0;
  bool falsifier_found = false;
};

struct NullOptions {
  std::uint64_t seed = 0;
  std::size_t falsifier_budget = 1000;
  bool crosscheck = true;
};

// Decides the multilinear Nullstellensatz for f, g on M_d: either a
// proportionality constant or an explicit tuple with f = 0 and g != 0,
// each exactly post-verified. Requires m < 2d - 3; outside that range the
// conclusion can genuinely fail, so the verdict is Unsupported.
template <class F>
NullReport<F> nullstellensatz_check(const MultilinearPoly<F>& f,
                                    const MultilinearPoly<F>& g, int d,
                                    const NullOptions& opts = {}) {
  const F& field = f.field();
  const int m = f.degree();
  NullReport<F> rep;

  if (g.degree() != m)
    throw std::invalid_argument("nullstellensatz_check: degree mismatch");
  if (f.is_zero_poly())
    throw std::invalid_argument("nullstellensatz_check: f must be nonzero");
  if (m >= 2 * d - 3) {
    rep.status = NullStatus::Unsupported;
    rep.reason = "hypothesis m < 2d - 3 violated (m = " + std::to_string(m) +
                 ", d = " + std::to_string(d) +
                 "); zero-set inclusion does not force linear dependence here";
    return rep;
  }

  auto finish_witness = [&](MatTuple<F> t, const std::string& route) {
    Mat<F> fv = f.evaluate(t), gv = g.evaluate(t);
    if (!fv.is_zero() || gv.is_zero())
      throw std::logic_error("nullstellensatz witness failed exact verification");
    rep.status = NullStatus::Witness;
    rep.route = route;
    rep.f_value = fv;
    rep.g_value = gv;
    rep.witness = std::move(t);
    if (opts.crosscheck) {
      rep.falsifier_budget = opts.falsifier_budget;
      rep.falsifier_found =
          random_zero_falsifier(f, g, d, opts.falsifier_budget, opts.seed)
              .has_value();
    }
  };

  // (1) support inclusion
  if (auto w = support_inclusion(f, g, d)) {
    finish_witness(std::move(w->tuple), "support");
    return rep;
  }

  // (2) per-class lambdas
  auto cl = class_lambdas(f, g);
  if (cl.inconsistency) {
    auto [sigma, tau] = *cl.inconsistency;
    finish_witness(case_tuple(f, sigma, tau, d), "within-class");
    rep.pair = {sigma, compose(tau, sigma)};
    return rep;
  }

  // (3) one common lambda
  bool all_equal = true;
  for (const auto& l : cl.lambdas)
    if (!field.eq(l, cl.lambdas.front())) all_equal = false;
  if (all_equal) {
    rep.status = NullStatus::Proportional;
    rep.lambda = cl.lambdas.front();
    auto check = linear_dependence(f, g);
    if (!check || !field.eq(*check, *rep.lambda))
      throw std::logic_error("proportional verdict disagrees with linear_dependence");
    if (opts.crosscheck) {
      rep.falsifier_budget = opts.falsifier_budget;
      rep.falsifier_found =
          random_zero_falsifier(f, g, d, opts.falsifier_budget, opts.seed)
              .has_value();
      if (rep.falsifier_found)
        throw std::logic_error("falsifier contradicts proportional verdict");
    }
    return rep;
  }

  // (4) minimal cross-class pair, block witness, transport back
  auto pair = minimal_cross_pair(cl, field);
  Perm quotient = compose(pair.sigma1.inverse(), pair.sigma2);
  auto ratio = field.div(f.coeff(pair.sigma1), f.coeff(pair.sigma2));
  try {
    MatTuple<F> w = build_witness(field, quotient, ratio, d);
    Perm psi = pair.sigma1.inverse();
    MatTuple<F> t;
    t.reserve(m);
    for (int i = 0; i < m; ++i) t.push_back(w[psi(i)]);
    finish_witness(std::move(t), "cross-class");
    rep.ell = pair.ell;
    rep.pair = {pair.sigma1, pair.sigma2};
  } catch (const std::exception& e) {
    rep.status = NullStatus::Unsupported;
    rep.internal_failure = true;
    rep.reason = std::string("cross-class witness construction failed: ") + e.what();
  }
  return rep;
}

// ---- zero-inclusion crosscheck via the f-zpd route -------------------------

template <class F>
struct Prop41Report {
  bool certified = false;
  bool falsifier_found = false;
  std::optional<typename F::Elem> lambda;
  std::size_t h_zero_samples = 0;
  std::size_t h_samples = 0;
  std::optional<bool> h_is_zero_poly;  // set when m < 2d
};

// For certified f with f(1,...,1) != 0: if sampling finds no zero of f
// escaping g, reports lambda = g(1..1)/f(1..1) and checks h = g - lambda f
// vanishes on sampled tuples (a polynomial identity candidate; the zero
// polynomial whenever m < 2d).
template <class F>
Prop41Report<F> prop41_crosscheck(const MultilinearPoly<F>& f,
                                  const MultilinearPoly<F>& g, int d,
                                  const ZeroGenConfig& cfg,
                                  std::size_t samples = 1000) {
  const F& field = f.field();
  Prop41Report<F> rep;
  auto alpha = f.eval_at_ones();
  if (field.is_zero(alpha))
    throw std::invalid_argument("prop41_crosscheck: need f(1,...,1) != 0");
  rep.certified = certify(f, d, cfg).status == ZpdStatus::Certified;
  if (!rep.certified) return rep;

  rep.falsifier_found =
      random_zero_falsifier(f, g, d, cfg.validation_samples, cfg.seed).has_value();
  if (rep.falsifier_found) return rep;

  auto lambda = field.div(g.eval_at_ones(), alpha);
  rep.lambda = lambda;
  auto h = g - f.scaled(lambda);
  rep.h_samples = samples;
  for (std::size_t s = 0; s < samples; ++s) {
    SplitMix64 rng(mix_seed(cfg.seed ^ 0x70417041ULL, s));
    MatTuple<F> t;
    for (int k = 0; k < f.degree(); ++k) t.push_back(random_mat(field, d, rng));
    if (h.evaluate(t).is_zero()) ++rep.h_zero_samples;
  }
  if (f.degree() < 2 * d) rep.h_is_zero_poly = h.is_zero_poly();
  return rep;
}

}  // namespace zpd
