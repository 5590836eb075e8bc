// polarlink: polar multiplicities and link bounds for hypersurface singularities.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "polarlink/errors.hpp"
#include "polarlink/oracle.hpp"
#include "polarlink/parser.hpp"
#include "polarlink/report.hpp"

namespace {

using namespace polarlink;
using Json = nlohmann::ordered_json;

int code(ExitCode c) { return static_cast<int>(c); }

// One line on stderr: "polarlink: <status>: <reason>".
int fail(ExitCode c, const std::string& status, const std::string& reason) {
  std::string flat = reason;
  for (char& ch : flat)
    if (ch == '\n') ch = ' ';
  std::cerr << "polarlink: " << status << ": " << flat << "\n";
  return code(c);
}

std::vector<long> parse_long_list(const std::string& text, const char* what) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw std::invalid_argument(std::string("bad integer in ") + what + ": '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument(std::string(what) + " is empty");
  return out;
}

struct ComputeArgs {
  std::string poly, vars, betti, json_path;
  std::size_t trials = 5;
  std::uint64_t seed = 0;
  int bound = 10;
  long components = -1;
  bool text = false;
  bool no_oracles = false;
};

int run_compute_command(const ComputeArgs& a) {
  RunConfig cfg;
  cfg.poly = a.poly;
  cfg.trials = a.trials;
  cfg.seed = a.seed;
  cfg.bound = a.bound;
  cfg.run_oracles = !a.no_oracles;
  try {
    cfg.vars = parse_variable_list(a.vars);
    if (!a.betti.empty()) cfg.betti = parse_long_list(a.betti, "--betti");
  } catch (const std::exception& e) {
    return fail(ExitCode::InputError, "error", e.what());
  }
  if (a.components >= 0) cfg.components = a.components;

  const RunResult result = run_compute(cfg);
  if (a.text) {
    std::cout << to_text(result.report);
  } else if (!a.json_path.empty()) {
    std::ofstream out(a.json_path, std::ios::binary);
    if (!out) return fail(ExitCode::InputError, "error", "cannot write " + a.json_path);
    out << to_json(result.report);
  } else {
    std::cout << to_json(result.report);
  }
  if (result.code != ExitCode::Ok) return fail(result.code, result.report.status, result.report.reason);
  return 0;
}

struct CorpusArgs {
  std::string path, reports_dir;
  std::size_t trials = 5, jobs = 0;
  std::uint64_t seed = 0;
  int bound = 10;
};

int run_corpus_command(const CorpusArgs& a) {
  std::ifstream in(a.path);
  if (!in) return fail(ExitCode::InputError, "error", "cannot open corpus " + a.path);
  std::vector<CorpusEntry> entries;
  try {
    entries = parse_corpus(in);
  } catch (const CorpusError& e) {
    return fail(ExitCode::InputError, "error", a.path + ": " + e.what());
  }
  const CorpusResult result = run_corpus(entries, {a.trials, a.seed, a.bound, a.jobs});
  std::cout << result.summary();
  for (const auto& r : result.entries)
    for (const auto& v : r.audits)
      if (!v.pass)
        std::cout << "FAIL " << r.entry.name << " " << v.name << ": expected " << v.expected << ", got " << v.actual
                  << " (" << v.context << ")\n";
  if (!a.reports_dir.empty()) {
    std::filesystem::create_directories(a.reports_dir);
    for (const auto& r : result.entries) {
      std::ofstream out(std::filesystem::path(a.reports_dir) / (r.entry.name + ".json"), std::ios::binary);
      out << to_json(r.run.report);
    }
  }
  if (result.code != ExitCode::Ok) return fail(result.code, "error", "corpus audits failed");
  return 0;
}

int run_oracle_colength(const std::string& vars_text, const std::vector<std::string>& gens, unsigned degree) {
  std::vector<std::string> vars;
  std::vector<Polynomial> polys;
  try {
    vars = parse_variable_list(vars_text);
    for (const auto& g : gens) polys.push_back(parse_polynomial(g, vars));
  } catch (const std::exception& e) {
    return fail(ExitCode::InputError, "error", e.what());
  }
  const Ideal ideal(vars.size(), polys);
  if (degree == 0) {
    unsigned start = 4;
    for (const auto& p : polys) start = std::max(start, 2 * static_cast<unsigned>(p.total_degree()) + 4);
    degree = start;
  }
  const auto brute = oracle::colength_until_stable(ideal, degree);
  Json j;
  j["value"] = brute.value;
  j["degree_cap"] = brute.degree_cap;
  j["stable"] = brute.stable;
  std::cout << j.dump(2) << "\n";
  if (!brute.stable) return fail(ExitCode::Unstable, "unstable", "truncated colength not stable up to degree " +
                                                                      std::to_string(brute.degree_cap));
  return 0;
}

int run_oracle_teissier(const std::string& poly, const std::string& vars_text, std::uint64_t seed, std::size_t trial,
                        int bound, bool identity) {
  Polynomial f;
  std::size_t nvars = 0;
  try {
    const auto vars = parse_variable_list(vars_text);
    nvars = vars.size();
    f = parse_polynomial(poly, vars);
    if (bound < 1) throw std::invalid_argument("--bound must be at least 1");
  } catch (const std::exception& e) {
    return fail(ExitCode::InputError, "error", e.what());
  }
  const CoordinateFrame frame =
      identity ? CoordinateFrame::identity(nvars) : CoordinateFrame::sample(nvars, seed, trial, bound);
  try {
    const auto v = oracle::teissier_check(f, frame, nullptr);
    Json j{{"name", v.name}, {"expected", v.expected}, {"actual", v.actual}, {"pass", v.pass}, {"context", v.context}};
    std::cout << j.dump(2) << "\n";
    if (!v.pass) return fail(ExitCode::AuditFailure, "error", "teissier identity failed: " + v.context);
  } catch (const ExcludedInputError& e) {
    return fail(ExitCode::Excluded, "excluded", e.what());
  } catch (const NonIsolatedError& e) {
    return fail(ExitCode::Excluded, "excluded", e.what());
  } catch (const std::domain_error& e) {
    return fail(ExitCode::Unstable, "unstable", e.what());
  } catch (const std::invalid_argument& e) {
    return fail(ExitCode::InputError, "error", e.what());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"polar multiplicities and Morse link bounds for hypersurface singularities", "polarlink"};
  app.set_version_flag("--version", std::string(kEngineVersion));
  app.require_subcommand(1);

  ComputeArgs ca;
  auto* compute = app.add_subcommand("compute", "compute the polar profile and link bounds of one polynomial");
  compute->add_option("--poly", ca.poly, "polynomial, e.g. \"x^3+y^3+z^3\"")->required();
  compute->add_option("--vars", ca.vars, "comma-separated variables, e.g. x,y,z")->required();
  compute->add_option("--trials", ca.trials, "random frames to sample")->capture_default_str();
  compute->add_option("--seed", ca.seed, "frame sampling seed")->capture_default_str();
  compute->add_option("--bound", ca.bound, "frame entries are drawn from [-B, B]")->capture_default_str();
  compute->add_option("--betti", ca.betti, "reduced Betti numbers b0,...,b_{2n-1} to audit");
  compute->add_option("--components", ca.components, "number of link components to audit");
  auto* json_opt = compute->add_option("--json", ca.json_path, "write the JSON report to PATH");
  compute->add_flag("--text", ca.text, "print a human-readable report")->excludes(json_opt);
  compute->add_flag("--no-oracles", ca.no_oracles, "skip the independent oracle checks");

  CorpusArgs co;
  auto* corpus = app.add_subcommand("corpus", "run every entry of a JSONL corpus and audit the results");
  corpus->add_option("path", co.path, "corpus file")->required();
  corpus->add_option("--reports", co.reports_dir, "directory receiving one JSON report per entry");
  corpus->add_option("--trials", co.trials, "random frames per entry")->capture_default_str();
  corpus->add_option("--seed", co.seed, "frame sampling seed")->capture_default_str();
  corpus->add_option("--bound", co.bound, "frame entries are drawn from [-B, B]")->capture_default_str();
  corpus->add_option("--jobs", co.jobs, "worker threads, 0 for all cores")->capture_default_str();

  auto* oracle_cmd = app.add_subcommand("oracle", "run an independent oracle directly");
  oracle_cmd->require_subcommand(1);

  std::string col_vars;
  std::vector<std::string> col_gens;
  unsigned col_degree = 0;
  auto* colength = oracle_cmd->add_subcommand("colength", "truncated linear-algebra colength of an ideal");
  colength->add_option("--vars", col_vars, "comma-separated variables")->required();
  colength->add_option("--gen", col_gens, "generator (repeatable)")->required();
  colength->add_option("--degree", col_degree, "starting degree cap");

  std::string t_poly, t_vars;
  std::uint64_t t_seed = 0;
  std::size_t t_trial = 0;
  int t_bound = 10;
  bool t_identity = false;
  auto* teissier = oracle_cmd->add_subcommand("teissier", "check colength(polar curve + f) = mu(f) + mu(f|H)");
  teissier->add_option("--poly", t_poly, "polynomial with an isolated singularity")->required();
  teissier->add_option("--vars", t_vars, "comma-separated variables")->required();
  auto* t_seed_opt = teissier->add_option("--seed", t_seed, "frame sampling seed")->capture_default_str();
  auto* t_trial_opt = teissier->add_option("--trial", t_trial, "frame index within the seed")->capture_default_str();
  teissier->add_option("--bound", t_bound, "frame entries are drawn from [-B, B]")->capture_default_str();
  teissier->add_flag("--identity", t_identity, "use the identity frame")->excludes(t_seed_opt)->excludes(t_trial_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return code(ExitCode::InputError);
  }

  if (compute->parsed()) return run_compute_command(ca);
  if (corpus->parsed()) return run_corpus_command(co);
  if (colength->parsed()) return run_oracle_colength(col_vars, col_gens, col_degree);
  if (teissier->parsed()) return run_oracle_teissier(t_poly, t_vars, t_seed, t_trial, t_bound, t_identity);
  return code(ExitCode::InputError);
}
