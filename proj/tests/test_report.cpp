#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "polarlink/report.hpp"

using namespace polarlink;
using Json = nlohmann::json;

namespace {

RunConfig config(const std::string& poly, const std::string& vars) {
  RunConfig c;
  c.poly = poly;
  std::stringstream ss(vars);
  for (std::string v; std::getline(ss, v, ',');) c.vars.push_back(v);
  return c;
}

std::string join(const Json& array) {
  std::string s;
  for (std::size_t i = 0; i < array.size(); ++i) s += (i ? ", " : "") + std::to_string(array[i].get<long>());
  return s;
}

struct Process {
  int code = -1;
  std::string out;
};

#ifdef POLARLINK_CLI
Process run_cli(const std::string& args) {
  const std::string cmd = std::string(POLARLINK_CLI) + " " + args + " 2>/dev/null";
  Process p;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) p.out.append(buf, got);
  const int status = pclose(pipe);
  p.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return p;
}

std::string run_cli_stderr(const std::string& args) {
  const std::string cmd = std::string(POLARLINK_CLI) + " " + args + " 2>&1 >/dev/null";
  std::string err;
  FILE* pipe = popen(cmd.c_str(), "r");
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) err.append(buf, got);
  pclose(pipe);
  return err;
}
#endif

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("polarlink_test_" + name);
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST_CASE("compute xy") {
  const auto r = run_compute(config("x*y", "x,y"));
  CHECK(r.code == ExitCode::Ok);
  const auto j = Json::parse(to_json(r.report));
  CHECK(j["status"] == "ok");
  CHECK(j["gamma"] == Json::array({0, 1, 1}));
  CHECK(j["lambda"] == Json::array({1, 2}));
  CHECK(j["morse_bounds"][0]["rhs"] == 1);
  CHECK(j["morse_bounds"][1]["rhs"] == 2);
  CHECK(j["n1_exact_sequence"]["ranks"][1] == 1);
  CHECK(j["n1_exact_sequence"]["ranks"][2] == 2);
  CHECK(j["schema_version"] == kReportSchemaVersion);
  CHECK(j["diagnostics"]["stable"] == true);
  CHECK_FALSE(j.contains("feasibility"));
  for (const auto& o : j["diagnostics"]["oracles"]) CHECK(o["pass"] == true);
}

TEST_CASE("excluded inputs") {
  struct Case {
    const char* poly;
    const char* vars;
    const char* reason;
  };
  for (const Case& c : {Case{"x^2+y^2+z^2+1", "x,y,z", "f(0) != 0"}, Case{"x+y^2", "x,y", "origin is a smooth point of V(f)"},
                        Case{"0", "x,y", "f is locally constant"}, Case{"3", "x,y", "f(0) != 0"}}) {
    const auto r = run_compute(config(c.poly, c.vars));
    CHECK(r.code == ExitCode::Excluded);
    const auto j = Json::parse(to_json(r.report));
    CHECK(j["status"] == "excluded");
    CHECK(j["reason"] == c.reason);
    for (const char* key : {"n", "mult", "s", "gamma", "lambda", "morse_bounds", "diagnostics"}) CHECK_FALSE(j.contains(key));
    CHECK(to_text(r.report).find("gamma") == std::string::npos);
  }
}

TEST_CASE("input errors") {
  CHECK(run_compute(config("x*", "x,y")).code == ExitCode::InputError);
  CHECK(run_compute(config("x*w", "x,y")).code == ExitCode::InputError);
  CHECK(run_compute(config("x^2", "x")).code == ExitCode::InputError);
  auto c = config("x*y", "x,y");
  c.trials = 0;
  CHECK(run_compute(c).code == ExitCode::InputError);
  c = config("x*y", "x,y");
  c.bound = 0;
  CHECK(run_compute(c).code == ExitCode::InputError);
  c = config("x*y", "x,y");
  c.betti = std::vector<long>{1, 2, 3};
  const auto r = run_compute(c);
  CHECK(r.code == ExitCode::InputError);
  CHECK(r.report.reason.find("2n") != std::string::npos);
  CHECK(r.report.reason.find('\n') == std::string::npos);
}

TEST_CASE("engine failures are reported with exit 4") {
  const auto r = run_compute(config("x^2", "x,y"));
  CHECK(r.code == ExitCode::AuditFailure);
  CHECK(r.report.status == "error");
  CHECK_FALSE(r.report.computed.has_value());
}

TEST_CASE("feasibility for the Fermat cubic") {
  auto c = config("x^3+y^3+z^3", "x,y,z");
  c.betti = std::vector<long>{0, 2, 2, 1};
  const auto r = run_compute(c);
  REQUIRE(r.code == ExitCode::Ok);
  const auto j = Json::parse(to_json(r.report));
  CHECK(j["gamma"] == Json::array({0, 4, 2, 1}));
  const auto& f = j["feasibility"];
  CHECK(f["source"] == "user-supplied");
  CHECK(f["rank_only"] == true);
  auto verdict = [&](const std::string& name) {
    for (const auto& v : f["verdicts"])
      if (v["check"] == name) return v;
    FAIL("missing verdict " << name);
    return Json();
  };
  CHECK(verdict("family1_p0")["pass"] == true);
  CHECK(verdict("family2_p0")["pass"] == true);
  CHECK(verdict("family2_p1")["pass"] == true);
  const auto& rows = j["morse_bounds"];
  CHECK(rows[0]["statement"] == "b1 <= 4");
  CHECK(rows[1]["statement"] == "b3 <= 3");
  CHECK(rows[3]["lhs"] == 1);
  CHECK(rows[3]["rhs"] == 3);
}

TEST_CASE("json is byte-identical across runs and thread modes") {
  auto c = config("y^2-x^2*z", "x,y,z");
  c.seed = 9;
  const auto a = to_json(run_compute(c).report);
  const auto b = to_json(run_compute(c).report);
  c.parallel = false;
  const auto d = to_json(run_compute(c).report);
  CHECK(a == b);
  CHECK(a == d);
}

TEST_CASE("text and json carry the same numbers") {
  for (const auto& [poly, vars] : std::vector<std::pair<std::string, std::string>>{
           {"x*y", "x,y"}, {"x^3+y^3+z^3", "x,y,z"}, {"y^2-x^2*z", "x,y,z"}}) {
    const auto r = run_compute(config(poly, vars));
    const auto j = Json::parse(to_json(r.report));
    const auto text = to_text(r.report);
    CHECK(text.find("gamma = [" + join(j["gamma"]) + "]") != std::string::npos);
    CHECK(text.find("lambda = [" + join(j["lambda"]) + "]") != std::string::npos);
    CHECK(text.find("mult = " + std::to_string(j["mult"].get<long>())) != std::string::npos);
    CHECK(text.find("s = " + std::to_string(j["s"].get<long>())) != std::string::npos);
    CHECK(text.find("support window = [" + join(j["support_window"]) + "]") != std::string::npos);
    for (const auto& row : j["morse_bounds"])
      CHECK(text.find(row["statement"].get<std::string>()) != std::string::npos);
  }
}

TEST_CASE("corpus parsing") {
  std::istringstream good(
      "# comment\n\n"
      R"({"name": "a", "poly": "x*y", "vars": "x,y", "expect_gamma": [0, 1, 1]})"
      "\n"
      R"({"poly": "x^2+y^3", "vars": ["x", "y"], "betti": [0, 1], "components": 1})"
      "\n");
  const auto entries = parse_corpus(good);
  REQUIRE(entries.size() == 2);
  CHECK(entries[0].name == "a");
  CHECK(entries[0].line == 3);
  CHECK(entries[1].name == "line4");
  CHECK(entries[1].vars == std::vector<std::string>{"x", "y"});
  CHECK(entries[1].components == 1);

  auto error_line = [](const std::string& text) -> std::size_t {
    std::istringstream in(text);
    try {
      parse_corpus(in);
    } catch (const CorpusError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(error_line("{\"poly\": \"x*y\", \"vars\": \"x,y\"}\n{\"poly\": \"x**\", \"vars\": \"x,y\"}\n") == 2);
  CHECK(error_line("not json\n") == 1);
  CHECK(error_line("{\"vars\": \"x,y\"}\n") == 1);
  CHECK(error_line("{\"poly\": \"x\", \"vars\": \"x,y\", \"betti\": [\"a\"]}\n") == 1);
  std::istringstream empty("");
  CHECK(parse_corpus(empty).empty());
}

TEST_CASE("corpus runs keep input order and audit expectations") {
  std::istringstream in(
      R"({"name": "first", "poly": "x^3+y^3", "vars": "x,y", "expect_gamma": [0, 2, 1]})"
      "\n"
      R"({"name": "second", "poly": "x*y", "vars": "x,y", "expect_gamma": [0, 1, 1]})"
      "\n"
      R"({"name": "wrong", "poly": "x^2+y^2", "vars": "x,y", "expect_gamma": [0, 5, 1]})"
      "\n");
  const auto result = run_corpus(parse_corpus(in), {5, 0, 10, 3});
  REQUIRE(result.entries.size() == 3);
  CHECK(result.entries[0].entry.name == "first");
  CHECK(result.entries[1].entry.name == "second");
  CHECK(result.entries[0].audits_pass());
  CHECK(result.entries[1].audits_pass());
  CHECK_FALSE(result.entries[2].audits_pass());
  CHECK(result.code == ExitCode::AuditFailure);
  CHECK(result.summary().find("1 with failing audits") != std::string::npos);
  CHECK(run_corpus({}).code == ExitCode::Ok);
}

#ifdef POLARLINK_CLI
TEST_CASE("cli compute") {
  const auto ok = run_cli("compute --poly 'x*y' --vars x,y");
  CHECK(ok.code == 0);
  CHECK(Json::parse(ok.out)["gamma"] == Json::array({0, 1, 1}));
  CHECK(run_cli("compute --poly 'x*y' --vars x,y").out == ok.out);

  const auto text = run_cli("compute --poly 'x*y' --vars x,y --text --betti 1,2 --components 2");
  CHECK(text.code == 0);
  CHECK(text.out.find("gamma = [0, 1, 1]") != std::string::npos);
  CHECK(text.out.find("n=1 exact sequence: 0 -> 1 -> 1 -> 2 -> 2 -> 0") != std::string::npos);

  const auto path = std::filesystem::temp_directory_path() / "polarlink_test_report.json";
  CHECK(run_cli("compute --poly 'x*y' --vars x,y --json " + path.string()).code == 0);
  std::ifstream saved(path);
  CHECK(std::string(std::istreambuf_iterator<char>(saved), {}) == ok.out);

  CHECK(run_cli("compute --poly 'x^2+y^2+z^2+1' --vars x,y,z").code == 3);
  CHECK(run_cli_stderr("compute --poly 'x^2+y^2+z^2+1' --vars x,y,z") == "polarlink: excluded: f(0) != 0\n");
  CHECK(run_cli("compute --poly 'x+' --vars x,y").code == 1);
  CHECK(run_cli("compute --poly 'x*y' --vars x,y --betti 1,a").code == 1);
  CHECK(run_cli("compute --poly 'x*y'").code == 1);
  CHECK(run_cli("compute --poly 'x*y' --vars x,y --trials 0").code == 1);
}

TEST_CASE("cli corpus") {
  CHECK(run_cli(std::string("corpus ") + POLARLINK_CORPUS + " --trials 3").code == 0);
  const auto empty = temp_file("empty.jsonl", "");
  const auto e = run_cli("corpus " + empty.string());
  CHECK(e.code == 0);
  CHECK(e.out.find("0 entries") != std::string::npos);
  const auto bad = temp_file("bad.jsonl", "{\"poly\": \"x*y\", \"vars\": \"x,y\"}\n{\"poly\": \"x^^2\", \"vars\": \"x,y\"}\n");
  CHECK(run_cli("corpus " + bad.string()).code == 1);
  CHECK(run_cli_stderr("corpus " + bad.string()).find("line 2") != std::string::npos);
  CHECK(run_cli("corpus /nonexistent/corpus.jsonl").code == 1);
  const auto failing = temp_file("fail.jsonl", "{\"poly\": \"x*y\", \"vars\": \"x,y\", \"expect_gamma\": [0, 2, 1]}\n");
  CHECK(run_cli("corpus " + failing.string()).code == 4);
}

TEST_CASE("cli oracle") {
  const auto c = run_cli("oracle colength --vars x,y --gen 'y^2' --gen 'x^2+y^3' --degree 6");
  CHECK(c.code == 0);
  CHECK(Json::parse(c.out)["value"] == 4);
  CHECK(run_cli("oracle colength --vars x,y --gen 'x*y' --degree 4").code == 2);
  const auto t = run_cli("oracle teissier --poly 'x^3+y^3' --vars x,y --identity");
  CHECK(t.code == 0);
  CHECK(Json::parse(t.out)["expected"] == 6);
  CHECK(run_cli("oracle teissier --poly 'x^2+y^3' --vars x,y --seed 3 --trial 1").code == 0);
  CHECK(run_cli("oracle teissier --poly 'y^2-x^2*z' --vars x,y,z").code == 3);
}
#endif
