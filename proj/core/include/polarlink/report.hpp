#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "polarlink/link.hpp"
#include "polarlink/oracle.hpp"
#include "polarlink/polar.hpp"

namespace polarlink {

inline constexpr int kReportSchemaVersion = 1;
inline constexpr const char* kEngineVersion = "1.0.0";

enum class ExitCode : int {
  Ok = 0,
  InputError = 1,
  Unstable = 2,
  Excluded = 3,
  AuditFailure = 4,
};

struct RunConfig {
  std::string poly;
  std::vector<std::string> vars;
  std::size_t trials = 5;
  std::uint64_t seed = 0;
  int bound = 10;
  std::optional<std::vector<long>> betti;
  std::optional<long> components;
  bool run_oracles = true;
  bool parallel = true;

  /// Throws std::invalid_argument when T < 1, B < 1 or fewer than 2 variables.
  void validate() const;
};

struct TelescopeRecord {
  std::size_t p = 0;
  TelescopeSums sums;
  long forward_closed_form = 0;
  long backward_closed_form = 0;
};

/// Everything derived from a successful polar computation.
struct ComputedSection {
  GammaProfile profile;
  LambdaProfile lambda;
  ChainComplexSpec chain;
  std::vector<BoundRow> bounds;
  std::vector<TelescopeRecord> telescope;
  std::vector<long> window;
  std::optional<N1ExactSequence> n1;
  std::optional<std::vector<FeasibilityVerdict>> feasibility;
  std::vector<oracle::OracleVerdict> oracles;
  std::size_t teissier_frames = 0;  ///< frames on which the Teissier identity was checked
};

struct ReportDocument {
  std::string status;  ///< ok | unstable | excluded | error
  std::string reason;  ///< one line, empty when status is ok
  RunConfig config;
  std::string canonical;  ///< canonical form of the parsed polynomial
  std::optional<ComputedSection> computed;
};

struct RunResult {
  ReportDocument report;
  ExitCode code = ExitCode::Ok;
};

/// parse → critical dimension → γ profile → λ → chain complex → bounds →
/// oracles. Never throws for bad input; failures are folded into the exit code
/// and the report's reason.
RunResult run_compute(const RunConfig& config);

/// Pretty-printed JSON followed by a newline. Byte-identical for identical
/// inputs.
std::string to_json(const ReportDocument& report);
/// Human-readable rendering with the same numbers.
std::string to_text(const ReportDocument& report);

struct CorpusEntry {
  std::size_t line = 0;
  std::string name;
  std::string poly;
  std::vector<std::string> vars;
  std::optional<std::vector<long>> betti;
  std::optional<long> components;
  std::optional<std::vector<long>> expect_gamma;
};

/// Raised for unreadable corpus lines; `line` is 1-based.
class CorpusError : public std::runtime_error {
 public:
  CorpusError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// One JSON object per line; blank lines and lines starting with '#' are
/// skipped. Every polynomial is parsed up front.
std::vector<CorpusEntry> parse_corpus(std::istream& in);

struct CorpusOptions {
  std::size_t trials = 5;
  std::uint64_t seed = 0;
  int bound = 10;
  std::size_t jobs = 0;  ///< 0: hardware concurrency
};

struct CorpusEntryResult {
  CorpusEntry entry;
  RunResult run;
  std::vector<oracle::OracleVerdict> audits;
  bool audits_pass() const;
};

struct CorpusResult {
  std::vector<CorpusEntryResult> entries;
  ExitCode code = ExitCode::Ok;
  std::string summary() const;
};

CorpusResult run_corpus(const std::vector<CorpusEntry>& entries, const CorpusOptions& options = {});

}  // namespace polarlink
