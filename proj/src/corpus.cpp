#include "almalt/corpus.hpp"

#include <openssl/evp.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <memory>
#include <regex>
#include <set>
#include <sstream>
#include <variant>

#include "almalt/tangle.hpp"

namespace almalt {

namespace detail {
extern const std::string_view embedded_corpus_text;
}

namespace {

std::vector<std::string> split_tabs(std::string_view line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto tab = line.find('\t', start);
    out.emplace_back(line.substr(start, tab == std::string_view::npos ? std::string_view::npos : tab - start));
    if (tab == std::string_view::npos) break;
    start = tab + 1;
  }
  return out;
}

int crossings_from_name(const std::string& name) {
  static const std::regex pattern(R"(K(\d+)[an](\d+))");
  std::smatch m;
  if (!std::regex_match(name, m, pattern)) return -1;
  return std::stoi(m[1].str());
}

RowSource parse_source(const std::string& s, const std::string& row) {
  if (s == "main") return RowSource::main;
  if (s == "open") return RowSource::open;
  if (s == "extra") return RowSource::extra;
  throw CorpusError(CorpusError::Kind::schema, row, row + ": unknown source '" + s + "'");
}

}  // namespace

int CorpusRow::census_crossings() const { return crossings_from_name(name); }

std::string_view embedded_corpus_text() { return detail::embedded_corpus_text; }

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CorpusError(CorpusError::Kind::schema, "", "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<CorpusRow> load_corpus(std::string_view text, LoadOptions options) {
  std::vector<CorpusRow> rows;
  std::set<std::string> names;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto nl = text.find('\n', start);
    std::string_view line = text.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start);
    start = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;

    const auto f = split_tabs(line);
    const std::string where = "line " + std::to_string(line_no);
    if (f.size() != 7 && f.size() != 8)
      throw CorpusError(CorpusError::Kind::schema, "", where + ": expected 7 or 8 tab-separated fields");
    CorpusRow row;
    row.name = f[0];
    if (crossings_from_name(row.name) < 0)
      throw CorpusError(CorpusError::Kind::schema, row.name, where + ": bad census name '" + row.name + "'");
    if (f[1] == "resolved")
      row.status = RowStatus::resolved;
    else if (f[1] == "open")
      row.status = RowStatus::open;
    else
      throw CorpusError(CorpusError::Kind::schema, row.name, row.name + ": bad status '" + f[1] + "'");
    row.conway_min = f[2];
    if (!f[3].empty()) row.conway_rep = f[3];
    try {
      row.dt_min = parse_dt(f[4]);
      if (!f[5].empty()) row.dt_rep = parse_dt(f[5]);
    } catch (const DtError& e) {
      throw CorpusError(CorpusError::Kind::schema, row.name, row.name + ": " + e.what());
    }
    row.source = parse_source(f[6], row.name);
    const bool anomalous = f.size() == 8 && f[7] == "anomalous";
    if (f.size() == 8 && !f[7].empty() && !anomalous)
      throw CorpusError(CorpusError::Kind::schema, row.name, row.name + ": unknown note '" + f[7] + "'");

    if (row.conway_rep.has_value() != row.dt_rep.has_value())
      throw CorpusError(CorpusError::Kind::join, row.name,
                        row.name + ": representation present in only one of the Conway and DT tables");
    if ((row.status == RowStatus::resolved) != row.dt_rep.has_value())
      throw CorpusError(CorpusError::Kind::join, row.name,
                        row.name + ": status does not match presence of a representation");
    if (!names.insert(row.name).second)
      throw CorpusError(CorpusError::Kind::join, row.name, row.name + ": duplicate name");

    if (anomalous) {
      row.conway_check = ConwayCheck::anomalous;
    } else if (row.conway_rep) {
      const bool aligned =
          std::holds_alternative<std::vector<Substitution>>(extract_substitutions(row.conway_min, *row.conway_rep));
      row.conway_check = aligned ? ConwayCheck::applicable : ConwayCheck::not_alignable;
    }
    rows.push_back(std::move(row));
  }

  if (options.enforce_counts) {
    const CorpusSummary s = summarize(rows);
    if (s != expected_summary)
      throw CorpusError(CorpusError::Kind::count_mismatch, "",
                        "corpus counts (" + std::to_string(s.resolved_12) + ", " + std::to_string(s.open_12) + ", " +
                            std::to_string(s.resolved_11) + ", " + std::to_string(s.open_11) +
                            ") differ from (154, 35, 1, 2)");
  }
  return rows;
}

std::vector<CorpusRow> load_corpus_file(const std::filesystem::path& path, LoadOptions options) {
  return load_corpus(read_text_file(path), options);
}

std::vector<CorpusRow> load_embedded_corpus() { return load_corpus(embedded_corpus_text()); }

CorpusSummary summarize(const std::vector<CorpusRow>& rows) {
  CorpusSummary s;
  for (const auto& r : rows) {
    const bool resolved = r.status == RowStatus::resolved;
    switch (r.census_crossings()) {
      case 12: ++(resolved ? s.resolved_12 : s.open_12); break;
      case 11: ++(resolved ? s.resolved_11 : s.open_11); break;
      default: break;
    }
  }
  return s;
}

CorpusSummary validate_corpus(const std::vector<CorpusRow>& rows, LoadOptions options) {
  auto fail = [](const CorpusRow& r, const std::string& what) {
    throw CorpusError(CorpusError::Kind::validation, r.name, r.name + ": " + what);
  };
  std::set<std::string> names;
  for (const auto& r : rows) {
    if (!names.insert(r.name).second) fail(r, "duplicate name");
    const int c = r.census_crossings();
    if (c != 11 && c != 12) fail(r, "census name is not an 11- or 12-crossing knot");
    const bool resolved = r.status == RowStatus::resolved;
    if (resolved != r.dt_rep.has_value() || resolved != r.conway_rep.has_value())
      fail(r, "status must match presence of both representations");
    if (static_cast<int>(r.dt_min.crossings()) != c)
      fail(r, "minimal DT code has " + std::to_string(r.dt_min.crossings()) + " crossings, name says " +
                  std::to_string(c));
    if (classify_signs(r.dt_min).kind != SignKind::other) fail(r, "minimal DT code is not mixed-sign");
    if (r.dt_rep && classify_signs(*r.dt_rep).kind != SignKind::almost_alternating)
      fail(r, "representation DT code is not almost alternating");
  }
  const CorpusSummary s = summarize(rows);
  if (options.enforce_counts && s != expected_summary)
    throw CorpusError(CorpusError::Kind::count_mismatch, "",
                      "corpus has " + std::to_string(s.total()) + " rows with counts differing from (154, 35, 1, 2)");
  return s;
}

std::string sha256_hex(std::string_view data) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md.data(), &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("SHA-256 failed");
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    char buf[3];
    std::snprintf(buf, sizeof buf, "%02x", md[i]);
    out += buf;
  }
  return out;
}

std::string format_corpus(const std::vector<CorpusRow>& rows) {
  std::string out;
  for (const auto& r : rows) {
    out += r.name;
    out += '\t';
    out += to_string(r.status);
    out += '\t' + r.conway_min + '\t' + r.conway_rep.value_or("") + '\t' + format_dt(r.dt_min) + '\t';
    if (r.dt_rep) out += format_dt(*r.dt_rep);
    out += '\t';
    out += to_string(r.source);
    if (r.conway_check == ConwayCheck::anomalous) out += "\tanomalous";
    out += '\n';
  }
  return out;
}

std::string_view to_string(RowStatus s) { return s == RowStatus::resolved ? "resolved" : "open"; }

std::string_view to_string(RowSource s) {
  switch (s) {
    case RowSource::main: return "main";
    case RowSource::open: return "open";
    case RowSource::extra: return "extra";
  }
  return "?";
}

std::string_view to_string(ConwayCheck c) {
  switch (c) {
    case ConwayCheck::applicable: return "applicable";
    case ConwayCheck::not_alignable: return "not-alignable";
    case ConwayCheck::anomalous: return "anomalous";
  }
  return "?";
}

}  // namespace almalt
