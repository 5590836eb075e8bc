#include "polarlink/report.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "polarlink/errors.hpp"
#include "polarlink/parser.hpp"

namespace polarlink {
namespace {

using Json = nlohmann::ordered_json;

long sign_of(std::size_t k) { return (k % 2 == 0) ? 1 : -1; }

Json to_json(const oracle::OracleVerdict& v) {
  return Json{{"name", v.name}, {"expected", v.expected}, {"actual", v.actual}, {"pass", v.pass}, {"context", v.context}};
}

Json to_json(const FeasibilityVerdict& v) {
  return Json{{"check", v.check}, {"pass", v.pass}, {"detail", v.detail}};
}

std::string join(const std::vector<long>& v, const char* sep = ", ") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

// Runs every oracle applicable to a finished profile.
std::vector<oracle::OracleVerdict> run_oracles(const Polynomial& f, const GammaProfile& profile,
                                               std::size_t& teissier_frames) {
  std::vector<oracle::OracleVerdict> out = oracle::gamma_identity_audit(profile);
  const unsigned cap = oracle::default_degree_cap(f);
  for (const auto& trial : profile.per_trial) {
    for (const auto& v : trial.values) {
      if (!v.valid() || !v.intersection_ideal) continue;
      out.push_back(oracle::colength_agreement(*v.intersection_ideal, cap,
                                               "trial=" + std::to_string(trial.frame.trace.trial) +
                                                   " k=" + std::to_string(v.k)));
    }
  }
  teissier_frames = 0;
  if (profile.s != 0) return out;
  for (const auto& trial : profile.per_trial) {
    const bool all_valid =
        std::all_of(trial.values.begin(), trial.values.end(), [](const GammaValue& v) { return v.valid(); });
    if (!all_valid) continue;
    std::vector<Ideal> witnesses;
    try {
      out.push_back(oracle::teissier_check(f, trial.frame, &witnesses));
    } catch (const std::domain_error&) {
      continue;
    }
    ++teissier_frames;
    const std::string where = "trial=" + std::to_string(trial.frame.trace.trial);
    const char* labels[] = {"teissier-lhs", "jacobian", "section-jacobian"};
    for (std::size_t i = 0; i < witnesses.size(); ++i)
      out.push_back(oracle::colength_agreement(witnesses[i], cap, where + " " + labels[i]));
  }
  return out;
}

ComputedSection derive(const Polynomial& f, GammaProfile profile, const RunConfig& config) {
  ComputedSection c;
  c.lambda = lambda_from_gamma(profile.gamma);
  c.chain = chain_complex(c.lambda);
  c.bounds = morse_bounds(c.lambda, profile.gamma);
  const std::size_t n = profile.n;
  for (std::size_t p = 0; p <= n; ++p) {
    TelescopeRecord rec;
    rec.p = p;
    rec.sums = telescope_sums(c.lambda, profile.gamma, p);
    rec.forward_closed_form = sign_of(p) * profile.gamma[p + 1];
    rec.backward_closed_form = 1 + sign_of(p) * profile.gamma[n - p];
    c.telescope.push_back(rec);
  }
  c.window = support_window(n, profile.s);
  const PolarData data = PolarData::from(profile);
  std::optional<BettiVector> betti;
  if (config.betti) betti = BettiVector{*config.betti, config.components};
  if (n == 1) c.n1 = n1_exact_sequence(data, betti);
  if (betti) {
    c.feasibility = betti_feasibility(*betti, data);
    for (auto& row : c.bounds) {
      long lhs = 0;
      for (std::size_t i = 0; i < row.degrees.size(); ++i) lhs += row.signs[i] * (*config.betti)[row.degrees[i]];
      row.lhs = lhs;
      row.holds = lhs <= row.rhs;
    }
  }
  if (config.run_oracles) c.oracles = run_oracles(f, profile, c.teissier_frames);
  c.profile = std::move(profile);
  return c;
}

}  // namespace

void RunConfig::validate() const {
  if (trials < 1) throw std::invalid_argument("--trials must be at least 1");
  if (bound < 1) throw std::invalid_argument("--bound must be at least 1");
  if (vars.size() < 2) throw std::invalid_argument("at least two variables are required (n >= 1)");
  if (components && *components < 0) throw std::invalid_argument("--components must be nonnegative");
  if (betti && betti->size() != 2 * (vars.size() - 1))
    throw std::invalid_argument("--betti needs 2n = " + std::to_string(2 * (vars.size() - 1)) + " entries");
}

RunResult run_compute(const RunConfig& config) {
  RunResult result;
  result.report.config = config;
  auto fail = [&](ExitCode code, const std::string& status, const std::string& reason) {
    result.code = code;
    result.report.status = status;
    result.report.reason = reason;
    result.report.computed.reset();
    return result;
  };

  Polynomial f;
  try {
    config.validate();
    f = parse_polynomial(config.poly, config.vars);
  } catch (const ParseError& e) {
    return fail(ExitCode::InputError, "error", std::string("parse error ") + e.what());
  } catch (const std::exception& e) {
    return fail(ExitCode::InputError, "error", e.what());
  }
  result.report.canonical = f.to_string(config.vars);

  try {
    if (f.is_constant() && !f.is_zero())
      throw ExcludedInputError(ExcludedInputError::Reason::NonzeroAtOrigin);
    GammaOptions options{config.trials, config.seed, config.bound, config.parallel};
    GammaProfile profile = gamma_profile(f, options);
    result.report.computed = derive(f, std::move(profile), config);
  } catch (const ExcludedInputError& e) {
    return fail(ExitCode::Excluded, "excluded", e.what());
  } catch (const NoValidFrameError& e) {
    return fail(ExitCode::AuditFailure, "error", e.what());
  } catch (const GammaIdentityViolation& e) {
    return fail(ExitCode::AuditFailure, "error", std::string("gamma identity violation: ") + e.what());
  } catch (const TelescopeViolation& e) {
    return fail(ExitCode::AuditFailure, "error", e.what());
  } catch (const std::invalid_argument& e) {
    return fail(ExitCode::InputError, "error", e.what());
  }

  const auto& computed = *result.report.computed;
  const auto failed = std::find_if(computed.oracles.begin(), computed.oracles.end(),
                                   [](const oracle::OracleVerdict& v) { return !v.pass; });
  if (failed != computed.oracles.end()) {
    result.code = ExitCode::AuditFailure;
    result.report.status = "error";
    result.report.reason = "oracle check failed: " + failed->name + " (" + failed->context + ")";
  } else if (!computed.profile.stable) {
    result.code = ExitCode::Unstable;
    result.report.status = "unstable";
    result.report.reason = "generic value not attained by a majority of frames";
  } else {
    result.code = ExitCode::Ok;
    result.report.status = "ok";
  }
  return result;
}

std::string to_json(const ReportDocument& report) {
  Json j;
  j["schema_version"] = kReportSchemaVersion;
  j["engine_version"] = kEngineVersion;
  j["status"] = report.status;
  j["reason"] = report.reason;
  j["input"] = Json{{"poly", report.config.poly}, {"vars", report.config.vars}};
  if (!report.canonical.empty()) j["input"]["canonical"] = report.canonical;
  if (!report.computed) return j.dump(2) + "\n";

  const ComputedSection& c = *report.computed;
  const GammaProfile& g = c.profile;
  j["n"] = g.n;
  j["mult"] = g.mult;
  j["s"] = g.s;
  j["gamma"] = g.gamma;
  j["lambda"] = c.lambda.lambda;
  j["chain_complex"] = Json{{"ranks", c.chain.ranks}, {"cohomology_degrees", c.chain.cohomology_degrees}};
  j["injection_bound"] = Json{{"degree", static_cast<long>(g.n) - 1}, {"max_rank", g.gamma[1]}};
  j["component_bound"] = g.mult;
  j["support_window"] = c.window;
  long alternating = 0;
  for (std::size_t k = 0; k < c.lambda.lambda.size(); ++k) alternating += sign_of(k) * c.lambda.lambda[k];
  j["euler"] = Json{{"alternating_rank_sum", alternating},
                    {"link_reduced_euler_characteristic", -1},
                    {"link_euler_characteristic", 0}};

  Json bounds = Json::array();
  for (const auto& row : c.bounds) {
    Json r{{"family", row.family}, {"p", row.p}, {"degrees", row.degrees}, {"signs", row.signs},
           {"rhs", row.rhs},       {"statement", row.statement()}};
    r["lhs"] = row.lhs ? Json(*row.lhs) : Json(nullptr);
    r["holds"] = row.holds ? Json(*row.holds) : Json(nullptr);
    bounds.push_back(std::move(r));
  }
  j["morse_bounds"] = std::move(bounds);

  Json tele = Json::array();
  for (const auto& t : c.telescope)
    tele.push_back(Json{{"p", t.p},
                        {"forward", t.sums.forward},
                        {"forward_closed_form", t.forward_closed_form},
                        {"backward", t.sums.backward},
                        {"backward_closed_form", t.backward_closed_form},
                        {"holds", t.sums.forward == t.forward_closed_form &&
                                      t.sums.backward == t.backward_closed_form}});
  j["telescope"] = std::move(tele);

  if (c.n1) {
    Json seq;
    seq["ranks"] = Json::array({c.n1->b0 ? Json(*c.n1->b0) : Json(nullptr), c.n1->middle_left, c.n1->middle_right,
                                c.n1->b1 ? Json(*c.n1->b1) : Json(nullptr)});
    seq["relation"] = "b1 = b0 + 1";
    j["n1_exact_sequence"] = std::move(seq);
  }

  if (c.feasibility) {
    Json feas;
    feas["source"] = "user-supplied";
    feas["rank_only"] = true;
    feas["betti"] = *report.config.betti;
    feas["components"] = report.config.components ? Json(*report.config.components) : Json(nullptr);
    Json verdicts = Json::array();
    for (const auto& v : *c.feasibility) verdicts.push_back(to_json(v));
    feas["verdicts"] = std::move(verdicts);
    feas["all_pass"] = std::all_of(c.feasibility->begin(), c.feasibility->end(),
                                   [](const FeasibilityVerdict& v) { return v.pass; });
    j["feasibility"] = std::move(feas);
  }

  Json diag;
  diag["stable"] = g.stable;
  diag["trials"] = g.trials;
  diag["seed"] = report.config.seed;
  diag["bound"] = report.config.bound;
  diag["agreement"] = g.agreement;
  Json trials = Json::array();
  for (const auto& t : g.per_trial) {
    Json tr;
    tr["trial"] = t.frame.trace.trial;
    tr["attempts"] = t.frame.trace.attempts;
    tr["frame"] = t.frame.matrix.to_string();
    Json values = Json::array();
    for (const auto& v : t.values)
      values.push_back(Json{{"k", v.k},
                            {"status", to_string(v.status)},
                            {"value", v.valid() ? Json(v.value) : Json(nullptr)},
                            {"polar_local_dimension", v.polar_local_dimension},
                            {"saturation_exponent", v.saturation_exponent}});
    tr["values"] = std::move(values);
    trials.push_back(std::move(tr));
  }
  diag["per_trial"] = std::move(trials);
  diag["teissier_frames"] = c.teissier_frames;
  Json oracles = Json::array();
  for (const auto& v : c.oracles) oracles.push_back(to_json(v));
  diag["oracles"] = std::move(oracles);
  j["diagnostics"] = std::move(diag);
  return j.dump(2) + "\n";
}

std::string to_text(const ReportDocument& report) {
  std::ostringstream os;
  os << "polarlink " << kEngineVersion << "\n";
  os << "status: " << report.status << "\n";
  if (!report.reason.empty()) os << "reason: " << report.reason << "\n";
  os << "input: " << report.config.poly << "\n";
  if (!report.canonical.empty()) os << "canonical: " << report.canonical << "\n";
  if (!report.computed) return os.str();

  const ComputedSection& c = *report.computed;
  const GammaProfile& g = c.profile;
  os << "n = " << g.n << "\nmult = " << g.mult << "\ns = " << g.s << "\n";
  os << "gamma = [" << join(g.gamma) << "]\n";
  os << "lambda = [" << join(c.lambda.lambda) << "]\n";
  os << "chain complex: 0";
  for (long r : c.chain.ranks) os << " -> Z^" << r;
  os << " -> 0\n";
  os << "cohomology degrees = [" << join(c.chain.cohomology_degrees) << "]\n";
  os << "injection bound: rank H~^" << static_cast<long>(g.n) - 1 << "(K) <= " << g.gamma[1] << "\n";
  os << "component bound: c <= " << g.mult << "\n";
  os << "support window = [" << join(c.window) << "]\n";
  os << "morse bounds:\n";
  for (const auto& row : c.bounds) {
    os << "  family " << row.family << " p=" << row.p << ": " << row.statement();
    if (row.lhs) os << "   [lhs " << *row.lhs << ", " << (*row.holds ? "holds" : "VIOLATED") << "]";
    os << "\n";
  }
  os << "telescope:\n";
  for (const auto& t : c.telescope)
    os << "  p=" << t.p << ": forward " << t.sums.forward << " = " << t.forward_closed_form << ", backward "
       << t.sums.backward << " = " << t.backward_closed_form << "\n";
  if (c.n1) {
    auto opt = [](const std::optional<long>& v) { return v ? std::to_string(*v) : std::string("?"); };
    os << "n=1 exact sequence: 0 -> " << opt(c.n1->b0) << " -> " << c.n1->middle_left << " -> "
       << c.n1->middle_right << " -> " << opt(c.n1->b1) << " -> 0 (b1 = b0 + 1)\n";
  }
  if (c.feasibility) {
    os << "feasibility (user-supplied, ranks only):\n";
    for (const auto& v : *c.feasibility) os << "  " << (v.pass ? "pass " : "FAIL ") << v.check << ": " << v.detail << "\n";
  }
  os << "stable = " << (g.stable ? "true" : "false") << " (trials " << g.trials << ", seed " << report.config.seed
     << ", agreement [" << join(std::vector<long>(g.agreement.begin(), g.agreement.end())) << "])\n";
  std::size_t passed = 0;
  for (const auto& v : c.oracles) passed += v.pass ? 1 : 0;
  os << "oracles: " << passed << "/" << c.oracles.size() << " pass\n";
  for (const auto& v : c.oracles)
    if (!v.pass) os << "  FAIL " << v.name << ": expected " << v.expected << ", got " << v.actual << " (" << v.context << ")\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// Corpus

std::vector<CorpusEntry> parse_corpus(std::istream& in) {
  std::vector<CorpusEntry> entries;
  std::string text;
  std::size_t line = 0;
  auto long_list = [](const Json& v, const char* field, std::size_t at) {
    if (!v.is_array()) throw CorpusError(at, std::string("'") + field + "' must be an array of integers");
    std::vector<long> out;
    for (const auto& x : v) {
      if (!x.is_number_integer()) throw CorpusError(at, std::string("'") + field + "' must be an array of integers");
      out.push_back(x.get<long>());
    }
    return out;
  };
  while (std::getline(in, text)) {
    ++line;
    const auto first = text.find_first_not_of(" \t\r");
    if (first == std::string::npos || text[first] == '#') continue;
    Json obj;
    try {
      obj = Json::parse(text);
    } catch (const Json::parse_error& e) {
      throw CorpusError(line, std::string("not a JSON object: ") + e.what());
    }
    if (!obj.is_object()) throw CorpusError(line, "not a JSON object");
    CorpusEntry e;
    e.line = line;
    if (!obj.contains("poly") || !obj["poly"].is_string()) throw CorpusError(line, "missing string field 'poly'");
    e.poly = obj["poly"].get<std::string>();
    e.name = obj.value("name", "line" + std::to_string(line));
    if (!obj.contains("vars")) throw CorpusError(line, "missing field 'vars'");
    try {
      if (obj["vars"].is_string()) {
        e.vars = parse_variable_list(obj["vars"].get<std::string>());
      } else if (obj["vars"].is_array()) {
        std::string joined;
        for (const auto& v : obj["vars"]) {
          if (!v.is_string()) throw std::invalid_argument("'vars' entries must be strings");
          joined += (joined.empty() ? "" : ",") + v.get<std::string>();
        }
        e.vars = parse_variable_list(joined);
      } else {
        throw std::invalid_argument("'vars' must be a string or array");
      }
      parse_polynomial(e.poly, e.vars);
    } catch (const std::exception& ex) {
      throw CorpusError(line, ex.what());
    }
    if (obj.contains("betti")) e.betti = long_list(obj["betti"], "betti", line);
    if (obj.contains("components")) {
      if (!obj["components"].is_number_integer()) throw CorpusError(line, "'components' must be an integer");
      e.components = obj["components"].get<long>();
    }
    if (obj.contains("expect_gamma")) e.expect_gamma = long_list(obj["expect_gamma"], "expect_gamma", line);
    entries.push_back(std::move(e));
  }
  return entries;
}

bool CorpusEntryResult::audits_pass() const {
  return std::all_of(audits.begin(), audits.end(), [](const oracle::OracleVerdict& v) { return v.pass; });
}

CorpusResult run_corpus(const std::vector<CorpusEntry>& entries, const CorpusOptions& options) {
  CorpusResult result;
  result.entries.resize(entries.size());

  auto process = [&](std::size_t i) {
    const CorpusEntry& e = entries[i];
    RunConfig cfg;
    cfg.poly = e.poly;
    cfg.vars = e.vars;
    cfg.trials = options.trials;
    cfg.seed = options.seed;
    cfg.bound = options.bound;
    cfg.betti = e.betti;
    cfg.components = e.components;
    cfg.parallel = false;
    CorpusEntryResult r{e, run_compute(cfg), {}};
    const bool finished = r.run.report.computed.has_value();
    r.audits.push_back(oracle::make_verdict("run_completed", 1, finished ? 1 : 0, r.run.report.reason));
    if (finished) {
      const ComputedSection& c = *r.run.report.computed;
      for (const auto& v : c.oracles) r.audits.push_back(v);
      for (const auto& t : c.telescope) {
        r.audits.push_back(oracle::make_verdict("telescope_forward", t.forward_closed_form, t.sums.forward,
                                                "p=" + std::to_string(t.p)));
        r.audits.push_back(oracle::make_verdict("telescope_backward", t.backward_closed_form, t.sums.backward,
                                                "p=" + std::to_string(t.p)));
      }
      if (e.expect_gamma) {
        const auto& got = c.profile.gamma;
        const bool same_length = e.expect_gamma->size() == got.size();
        r.audits.push_back(oracle::make_verdict("expect_gamma_length", static_cast<long>(e.expect_gamma->size()),
                                                static_cast<long>(got.size()), e.name));
        for (std::size_t k = 0; same_length && k < got.size(); ++k)
          r.audits.push_back(oracle::make_verdict("expect_gamma", (*e.expect_gamma)[k], got[k],
                                                  e.name + " k=" + std::to_string(k)));
      }
    }
    result.entries[i] = std::move(r);
  };

  std::size_t jobs = options.jobs ? options.jobs : std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min(jobs, entries.size());
  if (jobs <= 1) {
    for (std::size_t i = 0; i < entries.size(); ++i) process(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> workers;
    for (std::size_t w = 0; w < jobs; ++w)
      workers.emplace_back([&] {
        for (std::size_t i = next++; i < entries.size(); i = next++) process(i);
      });
  }

  result.code = ExitCode::Ok;
  for (const auto& r : result.entries)
    if (!r.audits_pass()) result.code = ExitCode::AuditFailure;
  return result;
}

std::string CorpusResult::summary() const {
  std::ostringstream os;
  os << "name                 n  gamma                status    audits\n";
  std::size_t failing = 0;
  for (const auto& r : entries) {
    std::string gamma = "-";
    std::string n = "-";
    if (r.run.report.computed) {
      gamma = "[" + join(r.run.report.computed->profile.gamma, ",") + "]";
      n = std::to_string(r.run.report.computed->profile.n);
    }
    std::size_t passed = 0;
    for (const auto& a : r.audits) passed += a.pass ? 1 : 0;
    if (!r.audits_pass()) ++failing;
    std::string name = r.entry.name;
    name.resize(std::max<std::size_t>(name.size(), 20), ' ');
    gamma.resize(std::max<std::size_t>(gamma.size(), 20), ' ');
    std::string status = r.run.report.status;
    status.resize(std::max<std::size_t>(status.size(), 9), ' ');
    os << name << " " << n << "  " << gamma << " " << status << " " << passed << "/" << r.audits.size() << "\n";
  }
  os << entries.size() << " entries, " << failing << " with failing audits\n";
  return os.str();
}

}  // namespace polarlink
