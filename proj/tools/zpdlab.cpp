// zpdlab: exact-arithmetic toolkit for zero-product-determined matrix
// algebras and the multilinear Nullstellensatz. All randomized commands are
// seeded and emit reproducible JSON reports.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "zpd/scenarios.hpp"

using namespace zpd;

namespace {

struct GlobalOpts {
  std::string field = "gfp:32003";
  std::uint64_t seed = 0;
  bool seed_given = false;
  long long budget = -1;
  std::string out;
  bool deterministic = false;
  bool parallel = false;
  bool ci = false;
};

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

void emit(const json& report, const GlobalOpts& g) {
  if (!g.out.empty()) {
    std::ofstream os(g.out);
    if (!os) throw std::runtime_error("cannot open output file: " + g.out);
    os << report.dump(2) << "\n";
  }
  std::cout << report.dump(2) << std::endl;
}

json read_json_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::invalid_argument("cannot open file: " + path);
  return json::parse(is);
}

ZeroGenConfig make_config(const GlobalOpts& g) {
  ZeroGenConfig cfg;
  cfg.seed = g.seed;
  cfg.parallel = g.parallel;
  if (g.budget > 0) cfg.kernel_budget_total = std::size_t(g.budget);
  return cfg;
}

// Content-affecting configuration only: execution strategy (parallel,
// deterministic) changes no result byte and stays out, like timing.
json config_json(const GlobalOpts& g, const json& extra) {
  json j = {{"field", g.field}, {"seed", g.seed}, {"budget", g.budget}};
  j.update(extra);
  return j;
}

void require_seed_in_ci(const GlobalOpts& g) {
  bool ci = g.ci || std::getenv("ZPDLAB_CI") != nullptr;
  if (ci && !g.seed_given)
    throw std::invalid_argument("CI mode requires an explicit --seed");
}

template <class Fn>
int with_field(const std::string& flag, Fn&& fn) {
  FieldDescriptor fd = parse_field_flag(flag);
  if (fd.kind == FieldKind::Gfp) return fn(GfpField(fd.p));
  return fn(RationalField());
}

template <class F>
int run_eval(const F& field, const std::string& poly_spec,
             const std::string& tuple_path, const GlobalOpts& g) {
  auto f = parse_poly_spec(field, poly_spec);
  auto t = tuple_from_json(field, read_json_file(tuple_path));
  json report = mat_to_json(f.evaluate(t));
  emit(report, g);
  return 0;
}

template <class F>
int run_certify(const F& field, const std::string& poly_spec, int d,
                const std::vector<std::string>& subspace_flags,
                const GlobalOpts& g) {
  auto f = parse_poly_spec(field, poly_spec);
  ZeroGenConfig cfg = make_config(g);

  std::optional<SubspaceSpec<F>> spec;
  if (!subspace_flags.empty()) {
    SubspaceSpec<F> s = SubspaceSpec<F>::full(field, d, f.degree());
    for (const auto& flag : subspace_flags) {
      auto eq = flag.find('=');
      if (eq == std::string::npos)
        throw std::invalid_argument("--subspace expects slot=sl|full");
      int slot = std::stoi(flag.substr(0, eq));
      std::string kind = flag.substr(eq + 1);
      if (slot < 1 || slot > f.degree())
        throw std::invalid_argument("--subspace slot out of range");
      if (kind == "sl") {
        s.slot_bases[slot - 1] = sl_basis(field, d);
        s.slot_names[slot - 1] = "sl";
      } else if (kind != "full") {
        throw std::invalid_argument("unknown subspace kind: " + kind);
      }
    }
    spec = std::move(s);
  }

  auto t0 = std::chrono::steady_clock::now();
  auto v = certify(f, d, cfg, spec ? &*spec : nullptr);
  json report = verdict_to_json(v, field, d, f.degree(), cfg.seed);
  report["command"] = "certify";
  report["config"] = config_json(
      g, {{"poly", poly_spec}, {"d", d}, {"subspaces", subspace_flags}});
  if (poly_spec.rfind("sec2", 0) == 0 &&
      v.status == ZpdStatus::CandidateNotZpd)
    report["paper_certified"] = true;
  report["timing_ms"] = ms_since(t0);
  emit(report, g);
  return v.status == ZpdStatus::Inconclusive ? 3 : 0;
}

template <class F>
int run_null(const F& field, const std::string& f_spec,
             const std::string& g_spec, int d, const GlobalOpts& g) {
  auto f = parse_poly_spec(field, f_spec);
  auto gp = parse_poly_spec(field, g_spec);
  NullOptions opts;
  opts.seed = g.seed;
  if (g.budget > 0) opts.falsifier_budget = std::size_t(g.budget);

  auto t0 = std::chrono::steady_clock::now();
  auto rep = nullstellensatz_check(f, gp, d, opts);
  json report = null_report_to_json(rep, field);
  report["command"] = "null";
  report["config"] =
      config_json(g, {{"f", f_spec}, {"g", g_spec}, {"d", d}});
  report["timing_ms"] = ms_since(t0);
  emit(report, g);
  if (rep.internal_failure) return 4;
  return rep.status == NullStatus::Unsupported ? 3 : 0;
}

template <class F>
int run_counterexample(const F& field, const std::string& alpha,
                       const std::string& beta, const GlobalOpts& g) {
  const int d = 2;
  auto fam = polys::sec2_family(field, field.parse(alpha), field.parse(beta));
  auto phi = sec2_phi(field, d);
  ZeroGenConfig cfg = make_config(g);

  auto t0 = std::chrono::steady_clock::now();
  auto zeros = sample_kernel_zeros(fam.f, d, cfg.validation_samples, cfg.seed);
  std::size_t vanished = 0;
  for (const auto& z : zeros)
    if (field.is_zero(pair_functional(field, phi.coords, tensor_flatten(z))))
      ++vanished;
  bool outside = !tau_f_space(fam.f, d).contains(phi.coords);
  auto v = certify(fam.f, d, cfg);

  json report = verdict_to_json(v, field, d, fam.f.degree(), cfg.seed);
  report["command"] = "counterexample";
  report["config"] = config_json(g, {{"alpha", alpha}, {"beta", beta}, {"d", d}});
  report["phi"] = {{"omega", phi.omega},
                   {"vanished_on", vanished},
                   {"samples", zeros.size()},
                   {"outside_tau_space", outside},
                   {"functional", tensorvec_to_json(field, d, fam.f.degree(),
                                                    phi.coords)}};
  report["paper_certified"] = true;
  report["timing_ms"] = ms_since(t0);
  emit(report, g);

  bool ok = vanished == zeros.size() && outside &&
            v.status == ZpdStatus::CandidateNotZpd;
  return ok ? 0 : 3;
}

template <class F>
int run_suites(const F& field, const std::string& which, int d,
               const std::string& alphas_csv, int seeds, const GlobalOpts& g) {
  auto t0 = std::chrono::steady_clock::now();
  json report;
  bool pass = false;
  if (which == "gc") {
    auto rep = gc_lemma_suite(field, d);
    json fams = json::array();
    for (const auto& fam : rep.families)
      fams.push_back({{"name", fam.name},
                      {"instances", fam.instances},
                      {"failures", fam.failures}});
    report = {{"suite", "gc"},
              {"d", d},
              {"families", std::move(fams)},
              {"self_test_ok", rep.self_test_ok}};
    pass = rep.all_pass();
  } else if (which == "cyclic") {
    std::vector<typename F::Elem> alphas;
    for (const auto& a : zpd::detail::split(alphas_csv, ','))
      alphas.push_back(field.parse(a));
    auto rep = cyclic_relation_suite(field, alphas, d, g.seed, seeds);
    report = {{"suite", "cyclic"},
              {"d", d},
              {"alphas", alphas_csv},
              {"seeds", seeds},
              {"relations_checked", rep.relations_checked},
              {"failures", rep.failures},
              {"rotation", rep.rotation},
              {"self_test_ok", rep.self_test_ok}};
    pass = rep.all_pass();
  } else {
    throw std::invalid_argument("--which must be gc or cyclic");
  }
  report["command"] = "suites";
  report["config"] = config_json(g, {{"which", which}, {"d", d}});
  report["pass"] = pass;
  report["timing_ms"] = ms_since(t0);
  emit(report, g);
  return pass ? 0 : 3;
}

int run_distance(const std::string& p_json, const std::string& q_json,
                 bool with_bfs, const GlobalOpts& g) {
  Perm p = perm_from_json(json::parse(p_json));
  Perm q = perm_from_json(json::parse(q_json));
  json report = {{"command", "distance"},
                 {"p", perm_to_json(p)},
                 {"q", perm_to_json(q)},
                 {"distance", cayley_distance(p, q)}};
  if (with_bfs) report["bfs"] = cayley_distance_bfs(p, q);
  emit(report, g);
  return 0;
}

int run_reproduce(const std::string& id, const GlobalOpts& g) {
  using namespace zpd::scenarios;
  std::vector<ScenarioResult> results;
  std::uint64_t seed = g.seed_given ? g.seed : 42;
  if (id == "thm-1.2") results.push_back(thm_1_2(seed));
  else if (id == "prop-2.2") results.push_back(prop_2_2(seed));
  else if (id == "prop-2.3") results.push_back(prop_2_3(seed));
  else if (id == "lem-3.8") results.push_back(lem_3_8(seed));
  else if (id == "cor-3.9") results.push_back(cor_3_9(seed));
  else if (id == "cor-3.10") results.push_back(cor_3_10(seed));
  else if (id == "thm-3.11") results.push_back(thm_3_11(seed));
  else if (id == "thm-3.14") results.push_back(thm_3_14(seed));
  else if (id == "prop-4.1") results.push_back(prop_4_1(seed));
  else if (id == "thm-4.5") results.push_back(thm_4_5(seed));
  else if (id == "all") results = acceptance_suite(seed);
  else throw std::invalid_argument("unknown reproduction id: " + id);

  json arr = json::array();
  bool pass = true;
  for (const auto& r : results) {
    std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << ": " << r.details
              << " (" << int(r.ms) << " ms)\n";
    arr.push_back({{"name", r.name},
                   {"pass", r.pass},
                   {"details", r.details},
                   {"timing_ms", r.ms}});
    pass = pass && r.pass;
  }
  if (!g.out.empty()) {
    json report = {{"command", "reproduce"},
                   {"id", id},
                   {"config", config_json(g, json::object())},
                   {"results", std::move(arr)},
                   {"pass", pass}};
    std::ofstream os(g.out);
    os << report.dump(2) << "\n";
  }
  return pass ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zpdlab: f-zpd certification and multilinear Nullstellensatz"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOpts g;
  app.add_option("--field", g.field, "gfp:<p> or q")->capture_default_str();
  auto* seed_opt = app.add_option("--seed", g.seed, "seed for all randomness");
  app.add_option("--budget", g.budget, "kernel-sample / falsifier budget");
  app.add_option("--out", g.out, "write the JSON report here");
  app.add_flag("--deterministic", g.deterministic, "force sequential sampling");
  app.add_flag("--parallel", g.parallel, "parallel zero generation");
  app.add_flag("--ci", g.ci, "CI mode: require explicit --seed");

  std::string poly_spec, f_spec, g_spec, tuple_path, alpha = "1", beta = "2";
  std::string which = "gc", alphas_csv = "1,1", p_json, q_json, repro_id;
  int d = 2, suite_seeds = 10;
  bool with_bfs = false;
  std::vector<std::string> subspace_flags;

  auto* c_eval = app.add_subcommand("eval", "evaluate a polynomial at a tuple");
  c_eval->add_option("--poly", poly_spec)->required();
  c_eval->add_option("--tuple", tuple_path, "JSON tuple file")->required();

  auto* c_cert = app.add_subcommand("certify", "f-zpd certification");
  c_cert->add_option("--poly", poly_spec)->required();
  c_cert->add_option("--d", d)->required();
  c_cert->add_option("--subspace", subspace_flags,
                     "slot=sl|full (repeatable, 1-based slots)");

  auto* c_null = app.add_subcommand("null", "multilinear Nullstellensatz check");
  c_null->add_option("--f", f_spec)->required();
  c_null->add_option("--g", g_spec)->required();
  c_null->add_option("--d", d)->required();

  auto* c_ctr = app.add_subcommand("counterexample",
                                   "degree-5 not-f-zpd family on M_2");
  c_ctr->add_option("--alpha", alpha)->capture_default_str();
  c_ctr->add_option("--beta", beta)->capture_default_str();

  auto* c_suites = app.add_subcommand("suites", "identity suites");
  c_suites->add_option("--which", which, "gc | cyclic")->capture_default_str();
  c_suites->add_option("--d", d)->capture_default_str();
  c_suites->add_option("--alphas", alphas_csv)->capture_default_str();
  c_suites->add_option("--seeds", suite_seeds)->capture_default_str();

  auto* c_dist = app.add_subcommand("distance", "Cayley distance");
  c_dist->add_option("--p", p_json, "one-line JSON, 1-based")->required();
  c_dist->add_option("--q", q_json, "one-line JSON, 1-based")->required();
  c_dist->add_flag("--bfs", with_bfs, "also run the BFS oracle");

  auto* c_repro = app.add_subcommand("reproduce", "named result scenarios");
  c_repro->add_option("id", repro_id,
                      "thm-1.2 prop-2.2 prop-2.3 lem-3.8 cor-3.9 cor-3.10 "
                      "thm-3.11 thm-3.14 prop-4.1 thm-4.5 all")
      ->required();

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  g.seed_given = seed_opt->count() > 0;

  try {
    if (*c_eval)
      return with_field(g.field, [&](const auto& field) {
        return run_eval(field, poly_spec, tuple_path, g);
      });
    if (*c_cert) {
      require_seed_in_ci(g);
      return with_field(g.field, [&](const auto& field) {
        return run_certify(field, poly_spec, d, subspace_flags, g);
      });
    }
    if (*c_null) {
      require_seed_in_ci(g);
      return with_field(g.field, [&](const auto& field) {
        return run_null(field, f_spec, g_spec, d, g);
      });
    }
    if (*c_ctr) {
      require_seed_in_ci(g);
      return with_field(g.field, [&](const auto& field) {
        return run_counterexample(field, alpha, beta, g);
      });
    }
    if (*c_suites) {
      require_seed_in_ci(g);
      return with_field(g.field, [&](const auto& field) {
        return run_suites(field, which, d, alphas_csv, suite_seeds, g);
      });
    }
    if (*c_dist) return run_distance(p_json, q_json, with_bfs, g);
    if (*c_repro) {
      require_seed_in_ci(g);
      return run_reproduce(repro_id, g);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const WitnessConstructionError& e) {
    std::cerr << "internal: " << e.what() << "\n";
    return 4;
  } catch (const std::logic_error& e) {
    std::cerr << "internal: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
