#pragma once

// The knot table: census names, Conway strings and DT codes, loaded from the
// embedded TSV or from a file with the same layout.

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "almalt/dt.hpp"

namespace almalt {

class CorpusError : public std::runtime_error {
 public:
  enum class Kind { schema, join, count_mismatch, validation };

  CorpusError(Kind kind, std::string row, const std::string& what)
      : std::runtime_error(what), kind_(kind), row_(std::move(row)) {}
  Kind kind() const noexcept { return kind_; }
  const std::string& row() const noexcept { return row_; }

 private:
  Kind kind_;
  std::string row_;
};

enum class RowStatus { resolved, open };
enum class ConwayCheck { applicable, not_alignable, anomalous };
enum class RowSource { main, open, extra };  // 12-crossing list, open 12-crossing list, 11-crossing rows

struct CorpusRow {
  std::string name;
  RowStatus status = RowStatus::open;
  std::string conway_min;
  std::optional<std::string> conway_rep;
  DtCode dt_min;
  std::optional<DtCode> dt_rep;
  RowSource source = RowSource::main;
  ConwayCheck conway_check = ConwayCheck::not_alignable;

  /// Crossing number encoded in the census name (K12n176 -> 12).
  int census_crossings() const;
};

struct CorpusSummary {
  int resolved_12 = 0;
  int open_12 = 0;
  int resolved_11 = 0;
  int open_11 = 0;

  int total() const { return resolved_12 + open_12 + resolved_11 + open_11; }
  bool operator==(const CorpusSummary&) const = default;
};

inline constexpr CorpusSummary expected_summary{154, 35, 1, 2};

struct LoadOptions {
  // Reject the table unless its counts equal expected_summary.
  bool enforce_counts = true;
};

std::vector<CorpusRow> load_corpus(std::string_view text, LoadOptions options = {});
std::vector<CorpusRow> load_corpus_file(const std::filesystem::path& path, LoadOptions options = {});
std::vector<CorpusRow> load_embedded_corpus();

std::string_view embedded_corpus_text();
std::string read_text_file(const std::filesystem::path& path);

CorpusSummary summarize(const std::vector<CorpusRow>& rows);

/// Recounts and re-checks every row invariant; throws CorpusError naming the
/// first offending row.
CorpusSummary validate_corpus(const std::vector<CorpusRow>& rows, LoadOptions options = {});

/// Lowercase hex SHA-256.
std::string sha256_hex(std::string_view data);

/// Serializes rows back into the TSV layout.
std::string format_corpus(const std::vector<CorpusRow>& rows);

std::string_view to_string(RowStatus s);
std::string_view to_string(RowSource s);
std::string_view to_string(ConwayCheck c);

}  // namespace almalt
