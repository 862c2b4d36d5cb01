#pragma once

// Row-by-row verification of the knot table and report rendering.

#include <array>
#include <chrono>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "almalt/corpus.hpp"
#include "almalt/exec.hpp"

namespace almalt {

enum class CheckState { pass, fail, not_applicable, warn };

enum class Check {
  realizable_min,
  realizable_rep,
  rep_almost_alternating,
  jones_match_up_to_mirror,
  genus_rep_equals_1,
  genus_min_at_least_1,
  span_lt_crossing_number,
  conway_substitutions_ok,
};

inline constexpr std::size_t check_count = 8;
inline constexpr std::array<Check, check_count> all_checks{
    Check::realizable_min,         Check::realizable_rep,      Check::rep_almost_alternating,
    Check::jones_match_up_to_mirror, Check::genus_rep_equals_1, Check::genus_min_at_least_1,
    Check::span_lt_crossing_number, Check::conway_substitutions_ok};

enum class Verdict { verified, failed, open };

struct RowResult {
  std::string name;
  RowStatus status = RowStatus::open;
  std::array<CheckState, check_count> checks{};
  std::optional<std::string> jones_min;
  std::optional<std::string> jones_rep;
  std::optional<int> span;
  std::optional<int> genus_min;
  std::optional<int> genus_rep;
  // Failure details and downgraded (anomalous row) findings.
  std::vector<std::string> notes;
  Verdict verdict = Verdict::open;

  CheckState& operator[](Check c) { return checks[static_cast<std::size_t>(c)]; }
  CheckState operator[](Check c) const { return checks[static_cast<std::size_t>(c)]; }
  bool operator==(const RowResult&) const = default;
};

struct VerificationReport {
  std::vector<RowResult> rows;  // sorted by name
  int verified = 0;
  int failed = 0;
  int open = 0;
  std::chrono::milliseconds duration{0};
  std::string tool_version;
  std::string corpus_digest;
};

/// Realizes both codes, checks the sign pattern, compares Jones polynomials up
/// to mirror, computes Turaev genus and Jones span, and checks any aligned
/// tangle substitutions. Never throws for a bad row; failures land in the result.
RowResult verify_row(const CorpusRow& row, Exec exec = Exec::serial);

/// Rows are evaluated on `workers` threads and reported sorted by name; the
/// report body does not depend on the worker count.
VerificationReport verify_all(const std::vector<CorpusRow>& rows, int workers, std::string corpus_digest);

std::string_view tool_version();
std::string_view to_string(Check c);
std::string_view to_string(CheckState s);
std::string_view to_string(Verdict v);

enum class ReportFormat { text, json, csv };

/// With include_timing = false the output is a pure function of the corpus
/// and tool version.
std::string render_report(const VerificationReport& report, ReportFormat format, bool include_timing = true);

}  // namespace almalt
