#pragma once

#include <future>
#include <optional>
#include <string>
#include <vector>

#include "zpd/poly.hpp"
#include "zpd/span_basis.hpp"

namespace zpd {

struct ZeroGenConfig {
  std::uint64_t seed = 0;
  std::size_t structured_cap = 2'000'000;   // cap on (dim B)^m enumeration
  int kernel_samples_per_slot = 8;          // per round
  int stabilization_window = 20;            // rounds with no rank growth
  int max_rounds = 500;
  std::size_t kernel_budget_total = 12000;  // total kernel samples
  std::size_t validation_samples = 1000;
  bool parallel = false;
};

enum class ZpdStatus { Certified, CandidateNotZpd, Inconclusive };

inline const char* to_string(ZpdStatus s) {
  switch (s) {
    case ZpdStatus::Certified: return "Certified";
    case ZpdStatus::CandidateNotZpd: return "CandidateNotZpd";
    default: return "Inconclusive";
  }
}

template <class F>
struct ZpdVerdict {
  ZpdStatus status = ZpdStatus::Inconclusive;
  std::size_t rank_zero_span = 0;
  std::size_t target_rank = 0;   // dim(B) - rank_image
  std::size_t rank_image = 0;
  std::size_t ambient = 0;       // dim(B_1 x ... x B_m)
  std::size_t gen_structured = 0;
  std::size_t gen_kernel = 0;
  std::optional<std::vector<typename F::Elem>> candidate_functional;
  std::string note;
};

// Per-slot coordinate frames: certification runs in the coordinates of the
// product basis B_1 (x) ... (x) B_m. The default frame is the matrix-unit
// basis, whose coordinates are exactly tensor_flatten.
template <class F>
struct SubspaceSpec {
  std::vector<std::vector<Mat<F>>> slot_bases;
  std::vector<std::string> slot_names;

  static std::vector<Mat<F>> full_basis(const F& field, int d) {
    std::vector<Mat<F>> out;
    out.reserve(std::size_t(d) * d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) out.push_back(Mat<F>::unit(field, d, i, j));
    return out;
  }

  static SubspaceSpec full(const F& field, int d, int m) {
    SubspaceSpec s;
    for (int k = 0; k < m; ++k) {
      s.slot_bases.push_back(full_basis(field, d));
      s.slot_names.push_back("full");
    }
    return s;
  }
};

// Trace-zero basis {e_ij (i != j)} plus {e_ii - e_{i+1,i+1}}; dim d^2 - 1.
template <class F>
std::vector<Mat<F>> sl_basis(const F& field, int d) {
  std::vector<Mat<F>> out;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (i != j) out.push_back(Mat<F>::unit(field, d, i, j));
  for (int i = 0; i + 1 < d; ++i)
    out.push_back(Mat<F>::unit(field, d, i, i) -
                  Mat<F>::unit(field, d, i + 1, i + 1));
  return out;
}

namespace detail {

template <class F>
struct Frame {
  const F field;
  int d = 0;
  int m = 0;
  std::vector<std::vector<Mat<F>>> bases;
  std::vector<std::size_t> sizes;
  std::vector<bool> is_unit_basis;
  std::size_t ambient = 1;

  Frame(const F& f_, int d_, int m_, const SubspaceSpec<F>* spec)
      : field(f_), d(d_), m(m_) {
    if (spec) {
      if (int(spec->slot_bases.size()) != m_)
        throw std::invalid_argument("SubspaceSpec: need one basis per slot");
      bases = spec->slot_bases;
    } else {
      bases.assign(m_, SubspaceSpec<F>::full_basis(f_, d_));
    }
    const auto units = SubspaceSpec<F>::full_basis(f_, d_);
    for (const auto& b : bases) {
      sizes.push_back(b.size());
      ambient *= b.size();
      bool unit = b.size() == units.size();
      for (std::size_t j = 0; unit && j < b.size(); ++j)
        if (!(b[j] == units[j])) unit = false;
      is_unit_basis.push_back(unit);
    }
  }

  MatTuple<F> tuple_at(std::size_t idx) const {
    MatTuple<F> t;
    t.reserve(m);
    std::vector<std::size_t> digits(m);
    for (int k = m - 1; k >= 0; --k) {
      digits[k] = idx % sizes[k];
      idx /= sizes[k];
    }
    for (int k = 0; k < m; ++k) t.push_back(bases[k][digits[k]]);
    return t;
  }

  Mat<F> from_coords(int slot, const std::vector<typename F::Elem>& c) const {
    Mat<F> out(field, d);
    for (std::size_t j = 0; j < sizes[slot]; ++j) {
      if (field.is_zero(c[j])) continue;
      out = out + bases[slot][j].scaled(c[j]);
    }
    return out;
  }

  // Product-basis coordinates of a tuple given per-slot coordinates.
  std::vector<typename F::Elem> outer(
      const std::vector<std::vector<typename F::Elem>>& per_slot) const {
    std::vector<typename F::Elem> acc = {field.one()};
    for (int k = 0; k < m; ++k) {
      std::vector<typename F::Elem> next;
      next.reserve(acc.size() * sizes[k]);
      for (const auto& a : acc)
        for (const auto& c : per_slot[k]) next.push_back(field.mul(a, c));
      acc = std::move(next);
    }
    return acc;
  }
};

// Flattened values of f at every product-basis tuple. This enumeration is
// exact by multilinearity: it determines both the image span and the
// tau o f functional space.
template <class F>
std::vector<std::vector<typename F::Elem>> values_on_frame(
    const MultilinearPoly<F>& f, const Frame<F>& fr) {
  if (fr.ambient > 2'000'000)
    throw std::invalid_argument("resource guard: dim(B)^m too large");
  std::vector<std::vector<typename F::Elem>> vals;
  vals.reserve(fr.ambient);
  for (std::size_t idx = 0; idx < fr.ambient; ++idx) {
    Mat<F> v = f.evaluate(fr.tuple_at(idx));
    vals.push_back(v.data());
  }
  return vals;
}

}  // namespace detail

// Lower-bound basis of span f(B_1 x ... x B_m) inside M_d (flattened, ambient
// d^2). With the full enumeration of basis tuples this is exact.
template <class F>
SpanBasis<F> image_span(const MultilinearPoly<F>& f, int d,
                        const SubspaceSpec<F>* subspaces = nullptr) {
  detail::Frame<F> fr(f.field(), d, f.degree(), subspaces);
  SpanBasis<F> img(f.field(), std::size_t(d) * d);
  for (std::size_t idx = 0; idx < fr.ambient; ++idx)
    img.insert(f.evaluate(fr.tuple_at(idx)).data());
  return img;
}

// Span of the d^2 functionals t -> coordinate_k(flatten(f(t))) in the
// product-basis dual; rank equals dim image_span.
template <class F>
SpanBasis<F> tau_f_space(const MultilinearPoly<F>& f, int d,
                         const SubspaceSpec<F>* subspaces = nullptr) {
  detail::Frame<F> fr(f.field(), d, f.degree(), subspaces);
  auto vals = detail::values_on_frame(f, fr);
  SpanBasis<F> tau(f.field(), fr.ambient);
  const std::size_t n2 = std::size_t(d) * d;
  for (std::size_t k = 0; k < n2; ++k) {
    std::vector<typename F::Elem> row(fr.ambient);
    for (std::size_t idx = 0; idx < fr.ambient; ++idx) row[idx] = vals[idx][k];
    tau.insert(std::move(row));
  }
  return tau;
}

// Matrix-unit (product-basis) tuples annihilating f, each verified exactly.
template <class F>
std::vector<MatTuple<F>> zeros_structured(const MultilinearPoly<F>& f, int d,
                                          std::size_t cap,
                                          const SubspaceSpec<F>* subspaces = nullptr) {
  detail::Frame<F> fr(f.field(), d, f.degree(), subspaces);
  if (fr.ambient > cap)
    throw std::invalid_argument("zeros_structured: budget exceeded");
  std::vector<MatTuple<F>> out;
  for (std::size_t idx = 0; idx < fr.ambient; ++idx) {
    MatTuple<F> t = fr.tuple_at(idx);
    if (f.evaluate(t).is_zero()) out.push_back(std::move(t));
  }
  return out;
}

namespace detail {

template <class F>
struct KernelZero {
  MatTuple<F> tuple;
  std::vector<typename F::Elem> coords;  // product-basis coordinates
};

// Zeros with all slots but one frozen: the free slot ranges over the kernel
// of the induced linear map. Each frozen slot independently draws a fill
// style; zeros of a multilinear polynomial concentrate on degenerate fills,
// so the pool mixes dense matrices with low-rank ones, sparse unit sums,
// idempotents, and Peirce corners e X (1 - e).
template <class F>
std::vector<KernelZero<F>> kernel_zeros_once(const MultilinearPoly<F>& f,
                                             const Frame<F>& fr, int slot,
                                             SplitMix64& rng) {
  const F& field = fr.field;
  const int d = fr.d;
  const int m = fr.m;

  std::vector<std::vector<typename F::Elem>> slot_coords(m);
  MatTuple<F> fill;
  for (int k = 0; k < m; ++k) {
    std::vector<typename F::Elem> c(fr.sizes[k], field.zero());
    if (k != slot) {
      const bool unit_frame = fr.is_unit_basis[k];
      switch (unit_frame && d > 1 ? int(rng.below(7)) : int(rng.below(2))) {
        case 1:
          if (unit_frame && d > 1) {
            c = random_low_rank(field, d, 1 + int(rng.below(d - 1)), rng).data();
            break;
          }
          [[fallthrough]];
        case 0:
          for (auto& x : c) x = random_elem(field, rng);
          break;
        case 2:
          c[rng.below(c.size())] = field.one();
          c[rng.below(c.size())] = random_elem(field, rng);
          break;
        case 3:
          c = random_idempotent(field, d, rng).data();
          break;
        case 4: {
          Mat<F> e = random_idempotent(field, d, rng);
          Mat<F> h = Mat<F>::identity(field, d) - e;
          Mat<F> x = random_mat(field, d, rng);
          c = rng.below(2) ? (e * x * h).data() : (h * x * e).data();
          break;
        }
        case 5:
          c[rng.below(c.size())] = field.one();
          break;
        case 6: {
          // idempotent shifted by a scalar, the shape of the relation zeros
          Mat<F> e = random_idempotent(field, d, rng);
          c = (e.scaled(random_elem(field, rng)) +
               Mat<F>::scalar(field, d, random_elem(field, rng)))
                  .data();
          break;
        }
      }
    }
    slot_coords[k] = std::move(c);
    fill.push_back(k == slot ? Mat<F>(field, d) : fr.from_coords(k, slot_coords[k]));
  }

  // Map B_slot -> M_d in coordinates; its right kernel gives the zeros.
  const std::size_t n_slot = fr.sizes[slot];
  std::vector<std::vector<typename F::Elem>> map_rows(
      std::size_t(d) * d, std::vector<typename F::Elem>(n_slot, field.zero()));
  for (std::size_t j = 0; j < n_slot; ++j) {
    fill[slot] = fr.bases[slot][j];
    Mat<F> v = f.evaluate(fill);
    for (std::size_t r = 0; r < std::size_t(d) * d; ++r)
      map_rows[r][j] = v.data()[r];
  }
  auto kernel = kernel_basis(field, map_rows, n_slot);

  std::vector<KernelZero<F>> out;
  out.reserve(kernel.size());
  for (auto& kv : kernel) {
    slot_coords[slot] = kv;
    fill[slot] = fr.from_coords(slot, kv);
    if (!f.evaluate(fill).is_zero())
      throw std::logic_error("kernel zero failed exact verification");
    out.push_back({fill, fr.outer(slot_coords)});
  }
  return out;
}

}  // namespace detail

// Zeros produced by the kernel strategy for one slot; each verified exactly.
template <class F>
std::vector<MatTuple<F>> zeros_kernel(const MultilinearPoly<F>& f, int d,
                                      int slot, int samples,
                                      std::uint64_t seed,
                                      const SubspaceSpec<F>* subspaces = nullptr) {
  detail::Frame<F> fr(f.field(), d, f.degree(), subspaces);
  std::vector<MatTuple<F>> out;
  for (int s = 0; s < samples; ++s) {
    SplitMix64 rng(mix_seed(seed, s, slot));
    for (auto& z : detail::kernel_zeros_once(f, fr, slot, rng))
      out.push_back(std::move(z.tuple));
  }
  return out;
}

// Samples `count` verified zeros of f via the kernel strategy, cycling
// slots and fill styles deterministically from the seed.
template <class F>
std::vector<MatTuple<F>> sample_kernel_zeros(const MultilinearPoly<F>& f,
                                             int d, std::size_t count,
                                             std::uint64_t seed) {
  detail::Frame<F> fr(f.field(), d, f.degree(), nullptr);
  std::vector<MatTuple<F>> out;
  for (std::uint64_t s = 0; out.size() < count; ++s) {
    int slot = int(s % f.degree());
    SplitMix64 rng(mix_seed(seed, s, slot));
    for (auto& z : detail::kernel_zeros_once(f, fr, slot, rng)) {
      out.push_back(std::move(z.tuple));
      if (out.size() >= count) break;
    }
    if (s > 64 * count)
      throw std::runtime_error("sample_kernel_zeros: kernels too thin");
  }
  return out;
}

template <class F>
struct ZeroSpanRun {
  SpanBasis<F> basis;
  std::size_t gen_structured = 0;
  std::size_t gen_kernel = 0;
  std::size_t rounds = 0;
};

// Span of product-basis coordinates of generated zeros, run to the
// stabilization window (or until `target` when given: the span cannot pass
// it, so reaching it ends the run).
template <class F>
ZeroSpanRun<F> zero_span_run(const MultilinearPoly<F>& f,
                             const detail::Frame<F>& fr,
                             const ZeroGenConfig& cfg,
                             const std::vector<std::vector<typename F::Elem>>& vals,
                             std::optional<std::size_t> target) {
  const F& field = fr.field;
  const int m = fr.m;
  ZeroSpanRun<F> run{SpanBasis<F>(field, fr.ambient)};

  std::vector<std::size_t> zero_indices;
  if (fr.ambient <= cfg.structured_cap) {
    for (std::size_t idx = 0; idx < fr.ambient; ++idx) {
      bool zero = true;
      for (const auto& x : vals[idx])
        if (!field.is_zero(x)) {
          zero = false;
          break;
        }
      if (!zero) continue;
      ++run.gen_structured;
      zero_indices.push_back(idx);
      std::vector<typename F::Elem> unit(fr.ambient, field.zero());
      unit[idx] = field.one();
      run.basis.insert(std::move(unit));
      if (target && run.basis.rank() == *target) return run;
    }
  }

  bool all_units = true;
  for (bool u : fr.is_unit_basis) all_units = all_units && u;

  std::size_t kernel_used = 0;
  int stagnant = 0;
  for (int round = 0; round < cfg.max_rounds; ++round) {
    if (stagnant >= cfg.stabilization_window) break;
    if (target && run.basis.rank() == *target) break;
    if (kernel_used >= cfg.kernel_budget_total) break;
    ++run.rounds;
    bool grew = false;

    // Simultaneous conjugation maps zeros to zeros; conjugated structured
    // tuples reach directions the kernel strategy samples only thinly.
    if (all_units && !zero_indices.empty()) {
      for (int j = 0; j < cfg.kernel_samples_per_slot; ++j) {
        SplitMix64 rng(mix_seed(cfg.seed ^ 0xc0137c0137ULL, round, j));
        std::size_t idx = zero_indices[rng.below(zero_indices.size())];
        Mat<F> p = random_invertible(field, fr.d, rng);
        Mat<F> pinv = *p.inverse();
        MatTuple<F> t = fr.tuple_at(idx);
        std::vector<std::vector<typename F::Elem>> per_slot;
        for (auto& a : t) {
          a = p * a * pinv;
          per_slot.push_back(a.data());
        }
        if (!f.evaluate(t).is_zero())
          throw std::logic_error("conjugated zero failed exact verification");
        ++run.gen_structured;
        if (run.basis.insert(fr.outer(per_slot))) grew = true;
        if (target && run.basis.rank() == *target) return run;
      }
    }

    // One kernel batch per slot; streams depend only on (seed, round, slot),
    // so parallel and sequential merges agree (canonical basis).
    std::vector<std::vector<detail::KernelZero<F>>> batches(m);
    auto make_batch = [&](int slot) {
      std::vector<detail::KernelZero<F>> batch;
      for (int s = 0; s < cfg.kernel_samples_per_slot; ++s) {
        SplitMix64 rng(mix_seed(cfg.seed, (std::uint64_t(round) << 8) + s, slot));
        for (auto& z : detail::kernel_zeros_once(f, fr, slot, rng))
          batch.push_back(std::move(z));
      }
      return batch;
    };
    if (cfg.parallel) {
      std::vector<std::future<std::vector<detail::KernelZero<F>>>> futs;
      futs.reserve(m);
      for (int slot = 0; slot < m; ++slot)
        futs.push_back(std::async(std::launch::async, make_batch, slot));
      for (int slot = 0; slot < m; ++slot) batches[slot] = futs[slot].get();
    } else {
      for (int slot = 0; slot < m; ++slot) batches[slot] = make_batch(slot);
    }

    for (int slot = 0; slot < m; ++slot) {
      kernel_used += cfg.kernel_samples_per_slot;
      for (auto& z : batches[slot]) {
        ++run.gen_kernel;
        if (run.basis.insert(std::move(z.coords))) grew = true;
        if (target && run.basis.rank() == *target) return run;
      }
    }

    // Conjugates of this round's kernel zeros (zero tuples again).
    if (all_units) {
      for (int slot = 0; slot < m; ++slot) {
        if (batches[slot].empty()) continue;
        SplitMix64 rng(mix_seed(cfg.seed ^ 0xfeedfeedULL, round, slot));
        auto& z = batches[slot][rng.below(batches[slot].size())];
        Mat<F> p = random_invertible(field, fr.d, rng);
        Mat<F> pinv = *p.inverse();
        std::vector<std::vector<typename F::Elem>> per_slot;
        MatTuple<F> t = z.tuple;
        for (auto& a : t) {
          a = p * a * pinv;
          per_slot.push_back(a.data());
        }
        if (!f.evaluate(t).is_zero())
          throw std::logic_error("conjugated zero failed exact verification");
        ++run.gen_kernel;
        if (run.basis.insert(fr.outer(per_slot))) grew = true;
        if (target && run.basis.rank() == *target) return run;
      }
    }
    stagnant = grew ? 0 : stagnant + 1;
  }
  return run;
}

template <class F>
SpanBasis<F> zero_span(const MultilinearPoly<F>& f, int d,
                       const ZeroGenConfig& cfg,
                       const SubspaceSpec<F>* subspaces = nullptr) {
  detail::Frame<F> fr(f.field(), d, f.degree(), subspaces);
  auto vals = detail::values_on_frame(f, fr);
  return zero_span_run(f, fr, cfg, vals, std::nullopt).basis;
}

// Refutation search dual to the span criterion: a functional annihilating
// every generated zero but provably outside the tau o f space, validated on
// fresh zeros before it is reported.
template <class F>
std::optional<std::vector<typename F::Elem>> candidate_counterexample(
    const MultilinearPoly<F>& f, const detail::Frame<F>& fr,
    const SpanBasis<F>& zero_basis, const SpanBasis<F>& tau,
    const ZeroGenConfig& cfg) {
  const F& field = fr.field;
  SpanBasis<F> ann = zero_basis.annihilator();
  const std::vector<typename F::Elem>* pick = nullptr;
  for (const auto& row : ann.rows()) {
    if (!tau.contains(row)) {
      pick = &row;
      break;
    }
  }
  if (!pick) return std::nullopt;

  std::size_t validated = 0;
  std::uint64_t salt = cfg.seed ^ 0xa5a5a5a5a5a5a5a5ULL;
  for (std::uint64_t s = 0; validated < cfg.validation_samples; ++s) {
    int slot = int(s % fr.m);
    SplitMix64 rng(mix_seed(salt, s, slot));
    for (auto& z : detail::kernel_zeros_once(f, fr, slot, rng)) {
      typename F::Elem v = field.zero();
      for (std::size_t k = 0; k < fr.ambient; ++k) {
        if (field.is_zero((*pick)[k]) || field.is_zero(z.coords[k])) continue;
        v = field.add(v, field.mul((*pick)[k], z.coords[k]));
      }
      if (!field.is_zero(v)) return std::nullopt;
      if (++validated >= cfg.validation_samples) break;
    }
    if (s > 8 * cfg.validation_samples) break;  // kernels can be empty
  }
  return *pick;
}

// The f-zpd certification engine. Sound: tau o f always annihilates the
// zero span, so rank(zero span) + rank(tau o f) = dim(B) forces equality of
// the annihilator with the tau o f space.
template <class F>
ZpdVerdict<F> certify(const MultilinearPoly<F>& f, int d,
                      const ZeroGenConfig& cfg,
                      const SubspaceSpec<F>* subspaces = nullptr) {
  if (d < 2 || d > 16) throw std::invalid_argument("certify: need 2 <= d <= 16");
  detail::Frame<F> fr(f.field(), d, f.degree(), subspaces);
  const F& field = fr.field;

  auto vals = detail::values_on_frame(f, fr);
  SpanBasis<F> img(field, std::size_t(d) * d);
  for (const auto& v : vals) img.insert(v);

  SpanBasis<F> tau(field, fr.ambient);
  for (std::size_t k = 0; k < std::size_t(d) * d; ++k) {
    std::vector<typename F::Elem> row(fr.ambient);
    for (std::size_t idx = 0; idx < fr.ambient; ++idx) row[idx] = vals[idx][k];
    tau.insert(std::move(row));
  }

  ZpdVerdict<F> verdict;
  verdict.ambient = fr.ambient;
  verdict.rank_image = img.rank();
  verdict.target_rank = fr.ambient - tau.rank();

  if (img.rank() == 0) {
    // Every tuple is a zero, so the zero span is the whole space.
    verdict.status = ZpdStatus::Certified;
    verdict.rank_zero_span = fr.ambient;
    verdict.note = "identity: vacuously f-zpd";
    return verdict;
  }

  auto run = zero_span_run(f, fr, cfg, vals, verdict.target_rank);
  verdict.rank_zero_span = run.basis.rank();
  verdict.gen_structured = run.gen_structured;
  verdict.gen_kernel = run.gen_kernel;

  if (run.basis.rank() + tau.rank() > fr.ambient)
    throw std::logic_error("soundness violated: zero span exceeds target");

  if (run.basis.rank() == verdict.target_rank) {
    verdict.status = ZpdStatus::Certified;
    return verdict;
  }

  auto cand = candidate_counterexample(f, fr, run.basis, tau, cfg);
  if (cand) {
    verdict.status = ZpdStatus::CandidateNotZpd;
    verdict.candidate_functional = std::move(cand);
  } else {
    verdict.status = ZpdStatus::Inconclusive;
  }
  return verdict;
}

template <class F>
ZpdVerdict<F> certify(const MultilinearPoly<F>& f, int d,
                      const ZeroGenConfig& cfg, const SubspaceSpec<F>& spec) {
  return certify(f, d, cfg, &spec);
}

}  // namespace zpd
