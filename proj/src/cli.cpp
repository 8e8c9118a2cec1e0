#include "mt/cli.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "mt/cache.hpp"
#include "mt/report.hpp"

namespace mt {

int exit_code_for(ErrorCode code) {
  return code == ErrorCode::PrecisionInsufficient ? kExitPrecisionError : kExitInputError;
}

namespace {

struct RunConfig {
  std::string curve_path;
  std::string coeffs;
  std::int64_t conductor = 0;
  std::string lratio;
  std::int64_t p = 0;
  int n_max = 2;
  std::string mode = "coh";
  long precision = 0;
  std::string format = "json";
  std::string cache;
  std::uint64_t seed = 1;
  std::size_t cases = 500;
};

OutputFormat parse_format(const std::string& f) {
  if (f == "json") return OutputFormat::Json;
  if (f == "csv") return OutputFormat::Csv;
  return OutputFormat::Text;
}

NormalizationMode parse_mode(const std::string& m) {
  return m == "neron" ? NormalizationMode::Neron : NormalizationMode::Cohomological;
}

CurveData load_input_curve(const RunConfig& cfg) {
  if (!cfg.curve_path.empty()) return load_curve(cfg.curve_path);
  if (cfg.coeffs.empty()) throw Error(ErrorCode::InvalidInput, "give --curve PATH or --coeffs a1,a2,a3,a4,a6 --conductor N");
  if (cfg.conductor < 1) throw Error(ErrorCode::InvalidInput, "--coeffs needs --conductor N");
  std::vector<std::string> parts;
  std::stringstream ss(cfg.coeffs);
  for (std::string item; std::getline(ss, item, ',');) parts.push_back(item);
  if (parts.size() != 5) throw Error(ErrorCode::InvalidInput, "--coeffs needs exactly five integers a1,a2,a3,a4,a6");
  nlohmann::json j;
  const char* names[] = {"a1", "a2", "a3", "a4", "a6"};
  for (int i = 0; i < 5; ++i) j[names[i]] = parts[static_cast<std::size_t>(i)];
  j["conductor"] = cfg.conductor;
  if (!cfg.lratio.empty()) j["lratio"] = cfg.lratio;
  return curve_from_json(j);
}

void check_prime(std::int64_t p, int n_max) {
  if (p < 3 || !is_prime(p)) throw Error(ErrorCode::InvalidInput, "--p must be an odd prime");
  if (n_max < 0) throw Error(ErrorCode::InvalidInput, "--n-max must be non-negative");
  double size = 1;
  for (int i = 0; i <= n_max; ++i) size *= static_cast<double>(p);
  if (size > 1e7) throw Error(ErrorCode::InvalidInput, "p^(n_max+1) exceeds 10^7");
}

struct Pipeline {
  CurveData curve;
  std::shared_ptr<const ManinSymbolSpace> space;
  EigensymbolResult eigen;
  CacheStatus space_status, eigen_status;
};

Pipeline run_pipeline(const RunConfig& cfg) {
  CurveData curve = load_input_curve(cfg);
  const auto dir = resolve_cache_dir(cfg.cache.empty() ? std::nullopt : std::optional<std::string>(cfg.cache));
  Pipeline pl{curve, nullptr, {zero_symbol(build_space(1)), {}}, {}, {}};
  pl.space = cached_space(dir, curve.conductor(), &pl.space_status);
  pl.eigen = cached_eigensymbol(dir, pl.space, curve, &pl.eigen_status);
  return pl;
}

void note_cache(const Pipeline& pl, std::ostream& err) {
  for (const auto* s : {&pl.space_status, &pl.eigen_status})
    if (s->kind == CacheStatus::Kind::Rebuilt) err << "cache: corrupted entry " << s->path << " rebuilt\n";
}

int cmd_analyze(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  check_prime(cfg.p, cfg.n_max);
  Pipeline pl = run_pipeline(cfg);
  note_cache(pl, err);
  MTRequest req{pl.curve, cfg.p, cfg.n_max, parse_mode(cfg.mode), std::nullopt, 1, pl.eigen.symbol};
  if (cfg.precision > 0) req.precision = cfg.precision;
  const DichotomyReport rep = classify(req);
  out << render(rep, parse_format(cfg.format));
  return rep.verdict == Verdict::Inconclusive ? kExitInconclusive : kExitSuccess;
}

int cmd_invariants(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  check_prime(cfg.p, cfg.n_max);
  Pipeline pl = run_pipeline(cfg);
  note_cache(pl, err);
  out << render(invariants_table(pl.eigen.symbol, pl.curve, cfg.p, cfg.n_max, parse_mode(cfg.mode)), parse_format(cfg.format));
  return kExitSuccess;
}

int cmd_boundary(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  check_prime(cfg.p, 0);
  Pipeline pl = run_pipeline(cfg);
  note_cache(pl, err);
  out << render(boundary_congruence(pl.eigen.symbol, cfg.p), parse_format(cfg.format));
  return kExitSuccess;
}

int cmd_eigensymbol(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  Pipeline pl = run_pipeline(cfg);
  note_cache(pl, err);
  const auto& phi = pl.eigen.symbol;
  nlohmann::ordered_json j;
  j["label"] = pl.curve.label();
  j["level"] = std::to_string(pl.space->level());
  j["dimension"] = std::to_string(pl.space->dimension());
  j["sign"] = "+";
  j["normalization"] = "cohomological";
  j["phi_at_zero"] = to_string(phi.from_infinity(Cusp::integer(0)));
  auto primes = nlohmann::ordered_json::array();
  for (auto l : pl.eigen.primes) primes.push_back(std::to_string(l));
  j["eigenvalue_primes"] = primes;
  auto basis = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < pl.space->dimension(); ++i) {
    const P1Point x = pl.space->p1().points()[pl.space->basis_generators()[i]];
    basis.push_back({{"generator", "(" + std::to_string(x.c) + ":" + std::to_string(x.d) + ")"},
                     {"value", to_string(phi.coords()(static_cast<Eigen::Index>(i)))}});
  }
  j["basis_values"] = basis;
  j["cache"] = {{"space", cache_status_name(pl.space_status.kind)}, {"eigensymbol", cache_status_name(pl.eigen_status.kind)}};
  if (parse_format(cfg.format) == OutputFormat::Json) {
    out << j.dump(2) << '\n';
  } else {
    out << "generator,value\n";
    for (const auto& b : j["basis_values"]) out << b["generator"].get<std::string>() << ',' << b["value"].get<std::string>() << '\n';
  }
  return kExitSuccess;
}

// Writes a space to a scratch cache, corrupts it and checks that it is rebuilt.
bool cache_corruption_roundtrip(const std::string& dir) {
  CacheStatus s1, s2, s3;
  const auto a = cached_space(dir, 11, &s1);
  {
    std::fstream f(s1.path, std::ios::in | std::ios::out | std::ios::binary);
    f.seekp(20);
    f.put('#');
  }
  const auto b = cached_space(dir, 11, &s2);
  const auto c = cached_space(dir, 11, &s3);
  return s2.kind == CacheStatus::Kind::Rebuilt && s3.kind == CacheStatus::Kind::Hit &&
         a->basis_generators() == b->basis_generators() && b->basis_generators() == c->basis_generators();
}

int cmd_selftest(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  nlohmann::ordered_json j;
  bool ok = true;
  auto suites = nlohmann::ordered_json::array();
  for (const auto& s : run_property_suites(cfg.cases, cfg.seed)) {
    ok = ok && s.violations == 0;
    suites.push_back({{"suite", s.name}, {"p", std::to_string(s.p)}, {"n", std::to_string(s.n)},
                      {"cases", std::to_string(s.cases)}, {"hypothesis_met", std::to_string(s.hypothesis_met)},
                      {"violations", std::to_string(s.violations)}});
  }
  j["property_suites"] = suites;
  auto harness = nlohmann::ordered_json::array();
  for (std::int64_t p : {3, 5}) {
    const auto r = maximality_harness(p, 3, 200, cfg.seed + static_cast<std::uint64_t>(p));
    ok = ok && r.violations == 0 && r.false_assertions == 0;
    harness.push_back({{"p", std::to_string(p)}, {"n_max", "3"}, {"admissible", std::to_string(r.admissible)},
                       {"violations", std::to_string(r.violations)}, {"controls", std::to_string(r.controls)},
                       {"false_assertions", std::to_string(r.false_assertions)},
                       {"controls_failing_conclusion", std::to_string(r.controls_failing_conclusion)},
                       {"corestriction_tower", maximality_corestriction_tower(p, 3)}});
  }
  j["maximality_harness"] = harness;
  const auto scratch = std::filesystem::temp_directory_path() / ("mt-selftest-" + std::to_string(cfg.seed));
  std::filesystem::remove_all(scratch);
  const bool cache_ok = cache_corruption_roundtrip(scratch.string());
  std::filesystem::remove_all(scratch);
  ok = ok && cache_ok;
  j["cache_corruption_detected"] = cache_ok;
  j["result"] = ok ? "pass" : "fail";
  if (parse_format(cfg.format) == OutputFormat::Json) {
    out << j.dump(2) << '\n';
  } else {
    out << "suite,p,n,cases,hypothesis_met,violations\n";
    for (const auto& s : j["property_suites"])
      out << s["suite"].get<std::string>() << ',' << s["p"].get<std::string>() << ',' << s["n"].get<std::string>() << ','
          << s["cases"].get<std::string>() << ',' << s["hypothesis_met"].get<std::string>() << ','
          << s["violations"].get<std::string>() << '\n';
    for (const auto& h : j["maximality_harness"])
      out << "maximality harness p=" << h["p"].get<std::string>() << ": " << h["admissible"].get<std::string>()
          << " admissible, " << h["violations"].get<std::string>() << " violations, "
          << h["false_assertions"].get<std::string>() << " false assertions\n";
    out << "cache corruption detected and rebuilt: " << (cache_ok ? "yes" : "no") << '\n';
    out << "result: " << (ok ? "pass" : "fail") << '\n';
  }
  return ok ? kExitSuccess : kExitFailure;
}

void add_curve_options(CLI::App* cmd, RunConfig& cfg) {
  auto* curve = cmd->add_option("--curve", cfg.curve_path, "curve JSON file");
  auto* coeffs = cmd->add_option("--coeffs", cfg.coeffs, "a1,a2,a3,a4,a6");
  cmd->add_option("--conductor", cfg.conductor, "conductor (with --coeffs)");
  cmd->add_option("--lratio", cfg.lratio, "L(E,1)/Omega_E as num/den (with --coeffs)");
  curve->excludes(coeffs);
  cmd->add_option("--cache", cfg.cache, "cache directory (default $MT_CACHE_DIR)");
  cmd->add_option("--format", cfg.format, "json|csv|text")->check(CLI::IsMember({"json", "csv", "text"}));
}

void add_level_options(CLI::App* cmd, RunConfig& cfg, bool with_n) {
  cmd->add_option("--p", cfg.p, "odd prime")->required();
  if (with_n) {
    cmd->add_option("--n-max", cfg.n_max, "highest level n");
    cmd->add_option("--mode", cfg.mode, "coh|neron")->check(CLI::IsMember({"coh", "neron"}));
    cmd->add_option("--precision", cfg.precision, "p-adic working precision");
  }
  cmd->add_option("--seed", cfg.seed, "random seed");
}

}  // namespace

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Mazur-Tate elements and Iwasawa invariants of elliptic curves"};
  app.require_subcommand(1);
  RunConfig cfg;
  auto* analyze = app.add_subcommand("analyze", "classify a curve at p");
  auto* inv = app.add_subcommand("invariants", "per-level (mu, lambda) of theta_n");
  auto* boundary = app.add_subcommand("boundary", "mod-p congruence with a boundary symbol");
  auto* eigen = app.add_subcommand("eigensymbol", "dump the (cached) plus eigensymbol");
  auto* selftest = app.add_subcommand("selftest", "randomized property suites");
  for (auto* c : {analyze, inv}) {
    add_curve_options(c, cfg);
    add_level_options(c, cfg, true);
  }
  add_curve_options(boundary, cfg);
  add_level_options(boundary, cfg, false);
  add_curve_options(eigen, cfg);
  selftest->add_option("--seed", cfg.seed, "random seed");
  selftest->add_option("--cases", cfg.cases, "cases per suite (at least 500 recommended)");
  selftest->add_option("--format", cfg.format, "json|text")->check(CLI::IsMember({"json", "csv", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kExitSuccess : kExitInputError;
  }

  try {
    if (*analyze) return cmd_analyze(cfg, out, err);
    if (*inv) return cmd_invariants(cfg, out, err);
    if (*boundary) return cmd_boundary(cfg, out, err);
    if (*eigen) return cmd_eigensymbol(cfg, out, err);
    if (*selftest) return cmd_selftest(cfg, out, err);
  } catch (const Error& e) {
    err << "error[" << error_code_name(e.code()) << "]: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitInputError;
}

}  // namespace mt
