// Acceptance checks. One PASS/FAIL line per criterion; nonzero exit on any FAIL.
#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "polarlink/oracle.hpp"
#include "polarlink/parser.hpp"
#include "polarlink/report.hpp"

using namespace polarlink;

namespace {

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure(what);
}

std::string str(const std::vector<long>& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ']';
  return os.str();
}

RunConfig config(const std::string& poly, std::vector<std::string> vars) {
  RunConfig c;
  c.poly = poly;
  c.vars = std::move(vars);
  return c;
}

std::vector<CorpusEntry> load_corpus() {
  std::ifstream in(POLARLINK_CORPUS);
  if (!in) throw std::runtime_error("cannot open corpus");
  return parse_corpus(in);
}

const ComputedSection& computed(const CorpusEntryResult& r) {
  require(r.run.code == ExitCode::Ok && r.run.report.computed.has_value(), r.entry.name + ": run status " + r.run.report.status);
  return *r.run.report.computed;
}

bool isolated(const CorpusEntry& e) { return milnor_number(parse_polynomial(e.poly, e.vars)).has_value(); }

const FeasibilityVerdict* verdict(const ComputedSection& c, const std::string& name) {
  if (!c.feasibility) return nullptr;
  for (const auto& v : *c.feasibility)
    if (v.check == name) return &v;
  return nullptr;
}

// 1
void fermat_bezout() {
  const std::vector<std::string> names{"x", "y", "z", "w"};
  for (auto [n, d] : std::vector<std::pair<long, long>>{{1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 2}, {2, 4}}) {
    std::vector<std::string> vars(names.begin(), names.begin() + n + 1);
    std::string poly;
    for (const auto& v : vars) poly += (poly.empty() ? "" : "+") + v + "^" + std::to_string(d);
    const auto r = run_compute(config(poly, vars));
    require(r.code == ExitCode::Ok, poly + ": " + r.report.reason);
    const auto& g = r.report.computed->profile.gamma;
    for (long k = 1; k <= n; ++k)
      require(g[k] == oracle::bezout_gamma(n, d, k), poly + ": gamma^" + std::to_string(k) + " = " + std::to_string(g[k]));
  }
}

// 2
void gamma_identities(const CorpusResult& corpus) {
  for (const auto& r : corpus.entries) {
    const auto& p = computed(r).profile;
    require(p.gamma.front() == 0, r.entry.name + ": gamma^0");
    require(p.gamma.back() == 1, r.entry.name + ": gamma^{n+1}");
    require(p.gamma[p.n] == static_cast<long>(p.mult) - 1, r.entry.name + ": gamma^n vs mult");
  }
}

// 3
void telescope(const CorpusResult& corpus) {
  for (const auto& r : corpus.entries) {
    const auto& c = computed(r);
    const auto& g = c.profile.gamma;
    const std::size_t n = c.profile.n;
    std::vector<long> lambda(n + 1);
    for (std::size_t k = 0; k <= n; ++k) lambda[k] = g[k] + g[k + 1];
    require(lambda == c.lambda.lambda, r.entry.name + ": lambda " + str(c.lambda.lambda));
    long forward = 0, backward = 0;
    for (std::size_t p = 0; p <= n; ++p) {
      const long sign = p % 2 ? -1 : 1;
      forward += sign * lambda[p];
      backward += sign * lambda[n - p];
      require(forward == sign * g[p + 1], r.entry.name + ": forward sum p=" + std::to_string(p));
      require(backward == 1 + sign * g[n - p], r.entry.name + ": backward sum p=" + std::to_string(p));
      require(c.telescope[p].sums.forward == forward && c.telescope[p].sums.backward == backward,
              r.entry.name + ": reported sums p=" + std::to_string(p));
    }
  }
}

// 4
void engine_vs_oracle(const CorpusResult& corpus) {
  for (const auto& r : corpus.entries) {
    const auto& c = computed(r);
    std::size_t expected = 0;
    for (const auto& trial : c.profile.per_trial)
      for (const auto& v : trial.values)
        if (v.valid() && v.intersection_ideal) ++expected;
    std::size_t polar = 0, witnesses = 0;
    for (const auto& o : c.oracles) {
      if (o.name != "colength") continue;
      require(o.pass, r.entry.name + ": " + o.context + " engine " + std::to_string(o.expected) + " oracle " +
                          std::to_string(o.actual));
      if (o.context.find(" k=") != std::string::npos) ++polar;
      else ++witnesses;
    }
    require(polar == expected, r.entry.name + ": " + std::to_string(polar) + " of " + std::to_string(expected) +
                                   " polar intersections checked");
    require(witnesses == 3 * c.teissier_frames, r.entry.name + ": witness count");
  }
}

// 5
void teissier(const CorpusResult& corpus) {
  std::size_t members = 0;
  for (const auto& r : corpus.entries) {
    const auto& c = computed(r);
    std::size_t passed = 0;
    for (const auto& o : c.oracles)
      if (o.name == "teissier") {
        require(o.pass, r.entry.name + ": " + o.context);
        ++passed;
      }
    if (!isolated(r.entry)) continue;
    ++members;
    require(c.teissier_frames >= 3 && passed == c.teissier_frames,
            r.entry.name + ": only " + std::to_string(passed) + " frames");
  }
  require(members > 0, "no isolated members");
}

// 6
void n1_xy() {
  auto c = config("x*y", {"x", "y"});
  c.betti = std::vector<long>{1, 2};
  c.components = 2;
  const auto good = run_compute(c);
  require(good.code == ExitCode::Ok, good.report.reason);
  const auto& n1 = good.report.computed->n1;
  require(n1 && n1->middle_left == 1 && n1->middle_right == 2, "middle ranks");
  for (const auto& v : *good.report.computed->feasibility) require(v.pass, "(1,2) fails " + v.check);

  c.betti = std::vector<long>{2, 3};
  c.components.reset();
  const auto bad = run_compute(c);
  const auto* v = verdict(*bad.report.computed, "family1_p0");
  require(v && !v->pass, "(2,3) passes family1_p0");
}

// 7
void cubic_bounds() {
  const auto r = run_compute(config("x^3+y^3+z^3", {"x", "y", "z"}));
  require(r.code == ExitCode::Ok, r.report.reason);
  std::set<std::string> statements;
  for (const auto& b : r.report.computed->bounds) statements.insert(b.statement());
  for (const char* s : {"b1 <= 4", "b3 <= 3", "-b1 + b2 <= 2"}) require(statements.count(s), std::string("missing ") + s);
}

// 8
void reproducible(const CorpusResult& corpus, const std::vector<CorpusEntry>& entries) {
  for (const auto& r : corpus.entries) {
    auto c = config(r.entry.poly, r.entry.vars);
    c.betti = r.entry.betti;
    c.components = r.entry.components;
    require(to_json(run_compute(c).report) == to_json(run_compute(c).report), r.entry.name + ": reports differ");
  }
  CorpusOptions other;
  other.seed = 1000003;
  const auto second = run_corpus(entries, other);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& a = computed(corpus.entries[i]).profile;
    const auto& b = computed(second.entries[i]).profile;
    require(a.stable && b.stable, entries[i].name + ": unstable");
    require(a.gamma == b.gamma, entries[i].name + ": " + str(a.gamma) + " vs " + str(b.gamma));
  }
}

// 9
void excluded() {
  std::set<std::string> reasons;
  for (const auto& [poly, vars] : std::vector<std::pair<std::string, std::vector<std::string>>>{
           {"x^2+y^2+z^2+1", {"x", "y", "z"}}, {"x+y^2", {"x", "y"}}, {"0", {"x", "y"}}}) {
    const auto r = run_compute(config(poly, vars));
    require(r.code == ExitCode::Excluded, poly + ": exit " + std::to_string(static_cast<int>(r.code)));
    require(!r.report.computed, poly + ": computed fields present");
    const auto json = to_json(r.report);
    require(json.find("\"gamma\"") == std::string::npos && json.find("\"morse_bounds\"") == std::string::npos,
            poly + ": json carries results");
    reasons.insert(r.report.reason);
  }
  require(reasons.size() == 3, "reasons are not distinct");
}

}  // namespace

int main() {
  int failures = 0;
  auto check = [&](const std::string& name, const std::function<void()>& fn) {
    try {
      fn();
      std::cout << "PASS " << name << '\n';
    } catch (const std::exception& e) {
      std::cout << "FAIL " << name << ": " << e.what() << '\n';
      ++failures;
    }
    std::cout.flush();
  };

  std::vector<CorpusEntry> entries;
  CorpusResult corpus;
  try {
    entries = load_corpus();
    corpus = run_corpus(entries);
  } catch (const std::exception& e) {
    std::cout << "corpus: " << e.what() << '\n';
  }
  auto on_corpus = [&](const std::function<void()>& fn) {
    return [&, fn] {
      require(!corpus.entries.empty(), "corpus did not run");
      fn();
    };
  };

  check("1 fermat-gamma-matches-bezout", fermat_bezout);
  check("2 gamma-boundary-identities", on_corpus([&] { gamma_identities(corpus); }));
  check("3 telescope-closed-forms", on_corpus([&] { telescope(corpus); }));
  check("4 engine-colength-matches-oracle", on_corpus([&] { engine_vs_oracle(corpus); }));
  check("5 teissier-on-three-frames", on_corpus([&] { teissier(corpus); }));
  check("6 n1-exact-sequence-xy", n1_xy);
  check("7 fermat-cubic-bounds", cubic_bounds);
  check("8 reproducible-and-seed-independent", on_corpus([&] { reproducible(corpus, entries); }));
  check("9 excluded-inputs", excluded);

  std::cout << (failures ? "acceptance: " + std::to_string(failures) + " FAIL\n" : std::string("acceptance: all PASS\n"));
  return failures ? 1 : 0;
}
