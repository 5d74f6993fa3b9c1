#pragma once

#include <chrono>
#include <functional>
#include <sstream>

#include "zpd/json_io.hpp"
#include "zpd/polyspec.hpp"
#include "zpd/suites.hpp"

namespace zpd::scenarios {

struct ScenarioResult {
  std::string name;
  bool pass = false;
  std::string details;
  double ms = 0.0;
};

namespace detail {

inline double elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

template <class Fn>
ScenarioResult timed(const std::string& name, Fn&& body) {
  ScenarioResult r;
  r.name = name;
  auto t0 = std::chrono::steady_clock::now();
  std::ostringstream details;
  try {
    r.pass = body(details);
  } catch (const std::exception& e) {
    r.pass = false;
    details << "exception: " << e.what();
  }
  r.ms = detail::elapsed_ms(t0);
  r.details = details.str();
  return r;
}

inline GfpField default_field() { return GfpField(32003); }

}  // namespace detail

// Criterion 1 / thm-1.2: the three classical polynomials on M_2, M_3.
inline ScenarioResult thm_1_2(std::uint64_t seed = 42) {
  return detail::timed("thm-1.2", [&](std::ostringstream& out) {
    GfpField field = detail::default_field();
    bool ok = true;
    for (const char* spec : {"prod2", "lie2", "jordan2"}) {
      auto f = parse_poly_spec(field, spec);
      for (int d : {2, 3}) {
        ZeroGenConfig cfg;
        cfg.seed = seed;
        auto t0 = std::chrono::steady_clock::now();
        auto v = certify(f, d, cfg);
        double ms = detail::elapsed_ms(t0);
        bool here = v.status == ZpdStatus::Certified && ms < 10'000;
        out << spec << "@d=" << d << ": " << to_string(v.status) << " ("
            << int(ms) << " ms); ";
        ok = ok && here;
      }
    }
    return ok;
  });
}

// Criterion 2 / thm-3.14: generalized commutator on M_2 and M_3, with the
// achieved rank matching ambient - image rank and the image full.
inline ScenarioResult thm_3_14(std::uint64_t seed = 42) {
  return detail::timed("thm-3.14", [&](std::ostringstream& out) {
    GfpField field = detail::default_field();
    auto gc = polys::generalized_commutator(field);
    bool ok = true;
    for (int d : {2, 3}) {
      ZeroGenConfig cfg;
      cfg.seed = seed;
      auto t0 = std::chrono::steady_clock::now();
      auto v = certify(gc, d, cfg);
      double ms = detail::elapsed_ms(t0);
      bool here = v.status == ZpdStatus::Certified &&
                  v.rank_image == std::size_t(d) * d &&
                  v.rank_zero_span == v.ambient - v.rank_image && ms < 30'000;
      out << "d=" << d << ": " << to_string(v.status) << " rank "
          << v.rank_zero_span << "/" << v.target_rank << " image "
          << v.rank_image << " (" << int(ms) << " ms); ";
      ok = ok && here;
    }
    return ok;
  });
}

// Criterion 3 / prop-2.3: the explicit functional refutes f-zpd for the
// degree-5 family on M_2.
inline ScenarioResult prop_2_3(std::uint64_t seed = 42) {
  return detail::timed("prop-2.3", [&](std::ostringstream& out) {
    GfpField field = detail::default_field();
    auto fam = polys::sec2_family(field, field.from_long(1), field.from_long(2));
    auto phi = sec2_phi(field, 2);

    auto zeros = sample_kernel_zeros(fam.f, 2, 1000, seed);
    std::size_t vanish = 0;
    for (const auto& z : zeros)
      if (field.is_zero(pair_functional(field, phi.coords, tensor_flatten(z))))
        ++vanish;
    bool phi_vanishes = vanish == zeros.size();

    auto tau = tau_f_space(fam.f, 2);
    bool phi_outside = !tau.contains(phi.coords);

    ZeroGenConfig cfg;
    cfg.seed = seed;
    auto t0 = std::chrono::steady_clock::now();
    auto v = certify(fam.f, 2, cfg);
    double ms = detail::elapsed_ms(t0);
    bool not_zpd = v.status == ZpdStatus::CandidateNotZpd;

    out << "phi vanished on " << vanish << "/" << zeros.size()
        << " fresh zeros (omega = " << phi.omega << "), outside tau-space: "
        << (phi_outside ? "yes" : "no") << ", certify: " << to_string(v.status)
        << " rank " << v.rank_zero_span << "/" << v.target_rank << " ("
        << int(ms) << " ms)";
    return phi_vanishes && phi_outside && not_zpd && ms < 60'000;
  });
}

// Criterion 4 / prop-2.2: zero-set equality evidence for the family.
inline ScenarioResult prop_2_2(std::uint64_t seed = 42) {
  return detail::timed("prop-2.2", [&](std::ostringstream& out) {
    GfpField field = detail::default_field();
    auto fam = polys::sec2_family(field, field.from_long(1), field.from_long(2));
    std::size_t bad = 0;
    auto fz = sample_kernel_zeros(fam.f, 2, 1000, seed);
    for (const auto& z : fz)
      if (!fam.h1.evaluate(z).is_zero() || !fam.h2.evaluate(z).is_zero() ||
          !fam.g.evaluate(z).is_zero())
        ++bad;
    auto gz = sample_kernel_zeros(fam.g, 2, 1000, seed ^ 1);
    for (const auto& z : gz)
      if (!fam.f.evaluate(z).is_zero()) ++bad;
    out << fz.size() << " f-zeros and " << gz.size()
        << " g-zeros checked, violations: " << bad;
    return bad == 0;
  });
}

// Criterion 5 / cor-3.9 + lem-3.8: Lie monomial on M_3 and the restricted
// sl x full run for the commutator.
inline ScenarioResult cor_3_9(std::uint64_t seed = 42) {
  return detail::timed("cor-3.9", [&](std::ostringstream& out) {
    GfpField field = detail::default_field();
    auto f = parse_poly_spec(field, "tree:[[x1,x2],x3]");
    ZeroGenConfig cfg;
    cfg.seed = seed;
    auto v = certify(f, 3, cfg);
    out << "[[x1,x2],x3]@d=3: " << to_string(v.status) << " rank "
        << v.rank_zero_span << "/" << v.target_rank;
    return v.status == ZpdStatus::Certified;
  });
}

inline ScenarioResult lem_3_8(std::uint64_t seed = 42) {
  return detail::timed("lem-3.8", [&](std::ostringstream& out) {
    GfpField field = detail::default_field();
    auto f = polys::lie2(field);
    SubspaceSpec<GfpField> spec;
    spec.slot_bases = {sl_basis(field, 3), SubspaceSpec<GfpField>::full_basis(field, 3)};
    spec.slot_names = {"sl", "full"};
    ZeroGenConfig cfg;
    cfg.seed = seed;
    auto v = certify(f, 3, cfg, &spec);
    out << "[x1,x2] on sl x full @d=3: " << to_string(v.status) << " rank "
        << v.rank_zero_span << "/" << v.target_rank << " (ambient " << v.ambient
        << ")";
    return v.status == ZpdStatus::Certified;
  });
}

// Criterion 6 / thm-3.11: cyclic polynomials and the idempotent relations.
inline ScenarioResult thm_3_11(std::uint64_t seed = 42) {
  return detail::timed("thm-3.11", [&](std::ostringstream& out) {
    GfpField field = detail::default_field();
    bool ok = true;
    for (const char* spec : {"cyclic:1,1", "cyclic:1,2,3"}) {
      auto f = parse_poly_spec(field, spec);
      ZeroGenConfig cfg;
      cfg.seed = seed;
      auto v = certify(f, 2, cfg);
      out << spec << "@d=2: " << to_string(v.status) << "; ";
      ok = ok && v.status == ZpdStatus::Certified;
    }
    for (int m : {2, 3}) {
      std::vector<GfpField::Elem> alphas;
      for (int i = 0; i < m; ++i) alphas.push_back(field.from_long(i + 1));
      auto rep = cyclic_relation_suite(field, alphas, 3, seed, 100);
      out << "relations m=" << m << ": " << rep.relations_checked
          << " checked, " << rep.failures << " failures, self-test "
          << (rep.self_test_ok ? "ok" : "FAILED") << "; ";
      ok = ok && rep.all_pass();
    }
    return ok;
  });
}

// Criterion 7: the generalized-commutator lemma families at d = 2, 3, 4.
// The five-index family has no admissible instances at d = 2.
inline ScenarioResult gc_suite() {
  return detail::timed("gc-lemma-suite", [&](std::ostringstream& out) {
    GfpField field = detail::default_field();
    bool ok = true;
    for (int d : {2, 3, 4}) {
      auto rep = gc_lemma_suite(field, d);
      out << "d=" << d << ": ";
      for (const auto& fam : rep.families) {
        out << fam.name << "=" << fam.instances;
        if (fam.failures) out << "(FAIL " << fam.failures << ")";
        out << " ";
        bool admissible = !(fam.name == "sum-family-1" && d == 2);
        ok = ok && fam.failures == 0 && (fam.instances > 0 || !admissible);
      }
      out << "self-test " << (rep.self_test_ok ? "ok" : "FAILED") << "; ";
      ok = ok && rep.self_test_ok;
    }
    return ok;
  });
}

namespace detail {

// Random two-singleton-class polynomial in S_3 (classes at Cayley distance
// 2, so they cannot merge through the support).
template <class F>
MultilinearPoly<F> random_two_class_poly(const F& field, SplitMix64& rng,
                                         Perm& sigma_a, Perm& sigma_b) {
  auto perms = all_perms(3);
  sigma_a = perms[rng.below(perms.size())];
  Perm cyc = Perm::from_one_line_1based(rng.below(2) ? std::vector<int>{2, 3, 1}
                                                     : std::vector<int>{3, 1, 2});
  sigma_b = compose(cyc, sigma_a);
  MultilinearPoly<F> f(field, 3);
  f.add_term(sigma_a, field.from_long(1 + (long long)rng.below(7)));
  f.add_term(sigma_b, field.from_long(1 + (long long)rng.below(7)));
  return f;
}

}  // namespace detail

// Criterion 8 / thm-4.5: the two named instances plus the 3 x 3 grid of
// random small-support f against proportional / cross-class-perturbed /
// out-of-support g.
template <class F>
ScenarioResult thm_4_5_field(const F& field, const std::string& name,
                             std::uint64_t seed = 42) {
  return detail::timed(name, [&](std::ostringstream& out) {
    bool ok = true;
    auto gc = polys::generalized_commutator(field);
    NullOptions opts;
    opts.seed = seed;

    auto r1 = nullstellensatz_check(gc, gc.scaled(field.from_long(2)), 4, opts);
    bool ok1 = r1.status == NullStatus::Proportional && r1.lambda &&
               field.eq(*r1.lambda, field.from_long(2)) && !r1.falsifier_found;
    out << "gc vs 2*gc: " << to_string(r1.status) << "; ";
    ok = ok && ok1;

    auto g2 = parse_poly_spec(field, "tree:(x1*(x2*x3))+tree:(x3*(x2*x1))");
    auto r2 = nullstellensatz_check(gc, g2, 4, opts);
    bool ok2 = r2.status == NullStatus::Witness && r2.falsifier_found &&
               r2.route == "within-class";
    out << "gc vs x1x2x3+x3x2x1: " << to_string(r2.status) << " route "
        << r2.route << " falsifier " << (r2.falsifier_found ? "hit" : "miss")
        << "; ";
    ok = ok && ok2;

    for (int cell = 0; cell < 3; ++cell) {
      SplitMix64 rng(mix_seed(seed, 100 + cell));
      Perm sa(3), sb(3);
      auto f = detail::random_two_class_poly(field, rng, sa, sb);

      auto lam = field.from_long(2 + cell);
      auto g_prop = f.scaled(lam);
      auto rp = nullstellensatz_check(f, g_prop, 4, opts);
      bool okp = rp.status == NullStatus::Proportional && rp.lambda &&
                 field.eq(*rp.lambda, lam);

      // Scale one class only: per-class lambdas disagree.
      auto g_cross = f;
      g_cross.add_term(sb, f.coeff(sb));  // doubles the sigma_b coefficient
      auto rc = nullstellensatz_check(f, g_cross, 4, opts);
      bool okc = rc.status == NullStatus::Witness && rc.route == "cross-class";

      auto g_out = f;
      Perm extra = compose(Perm::transposition(3, 0, 1), sa);
      g_out.add_term(extra, field.one());
      auto ro = nullstellensatz_check(f, g_out, 4, opts);
      bool oko = ro.status == NullStatus::Witness && ro.route == "support";

      out << "grid f" << cell << ": " << to_string(rp.status) << "/"
          << to_string(rc.status) << "(" << rc.route << ")/"
          << to_string(ro.status) << "(" << ro.route << "); ";
      ok = ok && okp && okc && oko;
    }
    return ok;
  });
}

inline ScenarioResult thm_4_5(std::uint64_t seed = 42) {
  GfpField field = detail::default_field();
  return thm_4_5_field(field, "thm-4.5", seed);
}

// Criterion 9: staircase extraction law, brute force, plus coefficient
// recovery on random polynomials.
inline ScenarioResult staircase_oracle(std::uint64_t seed = 42) {
  return detail::timed("staircase-oracle", [&](std::ostringstream& out) {
    GfpField field = detail::default_field();
    bool ok = true;
    for (int m = 2; m <= 5; ++m) {
      const int d = staircase_m0(m) + 1;
      auto st = staircase(field, m, d, StairVariant::Base);
      auto target = matrix_unit(field, 1, st.m0, d);
      std::size_t checked = 0;
      for (const auto& sigma : all_perms(m)) {
        Perm inv = sigma.inverse();
        MatTuple<GfpField> t;
        for (int i = 0; i < m; ++i) t.push_back(st.units[inv(i)]);
        for (const auto& pi : all_perms(m)) {
          Mat<GfpField> prod = t[pi(0)];
          for (int k = 1; k < m; ++k) prod = prod * t[pi(k)];
          bool expect_unit = pi == sigma;
          if (expect_unit ? !(prod == target) : !prod.is_zero()) ok = false;
          ++checked;
        }
      }
      out << "m=" << m << ": " << checked << " (sigma,pi) products; ";
    }

    // Coefficient recovery on 100 random supports at m = 3, d = 4.
    std::size_t recovered = 0, total = 0;
    auto perms = all_perms(3);
    auto st = staircase(field, 3, 4, StairVariant::Base);
    for (int it = 0; it < 100; ++it) {
      SplitMix64 rng(mix_seed(seed, it));
      MultilinearPoly<GfpField> f(field, 3);
      for (const auto& sigma : perms)
        if (rng.below(2)) f.add_term(sigma, GfpField::Elem(rng.below(field.p())));
      for (const auto& sigma : perms) {
        Perm inv = sigma.inverse();
        MatTuple<GfpField> t;
        for (int i = 0; i < 3; ++i) t.push_back(st.units[inv(i)]);
        Mat<GfpField> val = f.evaluate(t);
        ++total;
        if (field.eq(val.at(0, st.m0 - 1), f.coeff(sigma))) ++recovered;
        Mat<GfpField> residue = val - matrix_unit(field, 1, st.m0, 4).scaled(f.coeff(sigma));
        if (!residue.is_zero()) ok = false;
      }
    }
    out << "coefficients recovered " << recovered << "/" << total;
    return ok && recovered == total;
  });
}

// Criterion 10: Cayley distance closed form versus BFS oracle.
inline ScenarioResult cayley_oracle(std::uint64_t seed = 42) {
  return detail::timed("cayley-oracle", [&](std::ostringstream& out) {
    bool ok = true;
    auto s4 = all_perms(4);
    std::size_t pairs = 0;
    for (const auto& p : s4)
      for (const auto& q : s4) {
        if (cayley_distance(p, q) != cayley_distance_bfs(p, q)) ok = false;
        ++pairs;
      }
    auto s5 = all_perms(5);
    SplitMix64 rng(seed);
    for (int it = 0; it < 1000; ++it) {
      const Perm& p = s5[rng.below(s5.size())];
      const Perm& q = s5[rng.below(s5.size())];
      if (cayley_distance(p, q) != cayley_distance_bfs(p, q)) ok = false;
    }
    for (int it = 0; it < 1000; ++it) {
      const Perm& p = s5[rng.below(s5.size())];
      const Perm& q = s5[rng.below(s5.size())];
      const Perm& r = s5[rng.below(s5.size())];
      if (cayley_distance(compose(r, p), compose(r, q)) !=
          cayley_distance(p, q))
        ok = false;
    }
    out << pairs << " exhaustive S4 pairs, 1000 random S5 pairs, "
        << "1000 left-invariance triples";
    return ok;
  });
}

// Criterion 11: byte-identical reports modulo timing, sequential twice and
// parallel once.
inline ScenarioResult determinism(std::uint64_t seed = 42) {
  return detail::timed("determinism", [&](std::ostringstream& out) {
    GfpField field = detail::default_field();
    auto gc = polys::generalized_commutator(field);
    ZeroGenConfig cfg;
    cfg.seed = seed;
    auto dump = [&](bool parallel) {
      ZeroGenConfig c = cfg;
      c.parallel = parallel;
      auto v = certify(gc, 2, c);
      return verdict_to_json(v, field, 2, 3, c.seed).dump();
    };
    std::string a = dump(false), b = dump(false), c = dump(true);
    out << "sequential runs equal: " << (a == b ? "yes" : "no")
        << ", parallel equals sequential: " << (a == c ? "yes" : "no");
    return a == b && a == c;
  });
}

// Criterion 12: rerun criterion 2 (d = 2) and criterion 8 over exact
// rationals; verdicts and lambdas must match the prime-field runs.
inline ScenarioResult rational_crosscheck(std::uint64_t seed = 42) {
  return detail::timed("rational-crosscheck", [&](std::ostringstream& out) {
    RationalField qf;
    GfpField pf = detail::default_field();
    bool ok = true;

    auto gc_q = polys::generalized_commutator(qf);
    auto gc_p = polys::generalized_commutator(pf);
    ZeroGenConfig cfg;
    cfg.seed = seed;
    auto vq = certify(gc_q, 2, cfg);
    auto vp = certify(gc_p, 2, cfg);
    ok = ok && vq.status == ZpdStatus::Certified && vq.status == vp.status &&
         vq.rank_zero_span == vp.rank_zero_span && vq.rank_image == vp.rank_image;
    out << "certify gc@d=2 over Q: " << to_string(vq.status) << " rank "
        << vq.rank_zero_span << "/" << vq.target_rank << "; ";

    auto r = thm_4_5_field(qf, "thm-4.5/Q", seed);
    ok = ok && r.pass;
    out << "thm-4.5 over Q: " << (r.pass ? "pass" : "fail") << " [" << r.details
        << "]";
    return ok;
  });
}

// Reproduce-only scenarios.

inline ScenarioResult cor_3_10(std::uint64_t seed = 42) {
  return detail::timed("cor-3.10", [&](std::ostringstream& out) {
    GfpField field = detail::default_field();
    auto f = parse_poly_spec(field, "tree:{{x1,x2},x3}");
    ZeroGenConfig cfg;
    cfg.seed = seed;
    auto v = certify(f, 2, cfg);
    out << "{{x1,x2},x3}@d=2: " << to_string(v.status);
    return v.status == ZpdStatus::Certified;
  });
}

inline ScenarioResult prop_4_1(std::uint64_t seed = 42) {
  return detail::timed("prop-4.1", [&](std::ostringstream& out) {
    GfpField field = detail::default_field();
    bool ok = true;
    ZeroGenConfig cfg;
    cfg.seed = seed;

    auto f2 = parse_poly_spec(field, "cyclic:1,1");
    auto rep = prop41_crosscheck(f2, f2.scaled(field.from_long(2)), 2, cfg);
    bool ok1 = rep.certified && !rep.falsifier_found && rep.lambda &&
               field.eq(*rep.lambda, field.from_long(2)) &&
               rep.h_zero_samples == rep.h_samples && rep.h_is_zero_poly &&
               *rep.h_is_zero_poly;
    out << "cyclic:1,1 vs 2f: lambda "
        << (rep.lambda ? field.to_string(*rep.lambda) : "-") << ", h zero poly: "
        << (rep.h_is_zero_poly && *rep.h_is_zero_poly ? "yes" : "no") << "; ";
    ok = ok && ok1;

    auto f3 = parse_poly_spec(field, "cyclic:1,1,1");
    auto bad = f3 + parse_poly_spec(field, "tree:(x1*(x2*x3))");
    auto rep2 = prop41_crosscheck(f3, bad, 2, cfg);
    out << "perturbed g: falsifier " << (rep2.falsifier_found ? "fired" : "silent");
    ok = ok && rep2.certified && rep2.falsifier_found && !rep2.lambda;
    return ok;
  });
}

inline std::vector<ScenarioResult> acceptance_suite(std::uint64_t seed = 42) {
  std::vector<ScenarioResult> out;
  out.push_back(thm_1_2(seed));
  out.push_back(thm_3_14(seed));
  out.push_back(prop_2_3(seed));
  out.push_back(prop_2_2(seed));
  {
    auto a = cor_3_9(seed), b = lem_3_8(seed);
    ScenarioResult merged{"cor-3.9+lem-3.8", a.pass && b.pass,
                          a.details + " | " + b.details, a.ms + b.ms};
    out.push_back(merged);
  }
  out.push_back(thm_3_11(seed));
  out.push_back(gc_suite());
  out.push_back(thm_4_5(seed));
  out.push_back(staircase_oracle(seed));
  out.push_back(cayley_oracle(seed));
  out.push_back(determinism(seed));
  out.push_back(rational_crosscheck(seed));
  return out;
}

}  // namespace zpd::scenarios
