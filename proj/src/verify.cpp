#include "almalt/verify.hpp"

#include <algorithm>
#include <sstream>
#include <variant>

#include <json.hpp>

#include "almalt/bracket.hpp"
#include "almalt/diagram.hpp"
#include "almalt/realize.hpp"
#include "almalt/tangle.hpp"

#ifndef ALMALT_VERSION
#define ALMALT_VERSION "dev"
#endif

namespace almalt {

namespace {

constexpr std::string_view census_note =
    "Knot identities and non-alternating status are taken from the census names; "
    "the report checks diagram-level evidence (Jones agreement, Turaev surface genus, Jones span).";

CheckState pass_if(bool ok) { return ok ? CheckState::pass : CheckState::fail; }

std::optional<PlanarDiagram> try_realize(const DtCode& code, Exec exec, std::string& why) {
  try {
    auto r = realize(code, exec);
    if (auto* pd = std::get_if<PlanarDiagram>(&r)) return std::move(*pd);
    why = std::get<NotRealizable>(r).reason;
  } catch (const std::exception& e) {
    why = e.what();
  }
  return std::nullopt;
}

}  // namespace

RowResult verify_row(const CorpusRow& row, Exec exec) {
  RowResult out;
  out.name = row.name;
  out.status = row.status;
  out.checks.fill(CheckState::not_applicable);
  const int crossing_number = row.census_crossings();

  std::string why;
  const auto pd_min = try_realize(row.dt_min, exec, why);
  out[Check::realizable_min] = pass_if(pd_min.has_value());
  std::optional<LaurentPoly> v_min;
  if (pd_min) {
    try {
      out.genus_min = turaev_genus(*pd_min);
      out[Check::genus_min_at_least_1] = pass_if(*out.genus_min >= 1);
      v_min = jones(*pd_min, exec);
      out.jones_min = to_string(*v_min);
      out.span = span_t(*v_min);
      out[Check::span_lt_crossing_number] = pass_if(*out.span < crossing_number);
    } catch (const std::exception& e) {
      out.notes.push_back(std::string("minimal diagram: ") + e.what());
      if (!out.genus_min) out[Check::genus_min_at_least_1] = CheckState::fail;
      out[Check::span_lt_crossing_number] = CheckState::fail;
    }
  } else {
    out.notes.push_back("minimal code not realizable: " + why);
    out[Check::genus_min_at_least_1] = CheckState::fail;
    out[Check::span_lt_crossing_number] = CheckState::fail;
  }

  if (row.status == RowStatus::open || !row.dt_rep) {
    out.verdict = Verdict::open;
    return out;
  }

  out[Check::rep_almost_alternating] =
      pass_if(classify_signs(*row.dt_rep).kind == SignKind::almost_alternating);
  const auto pd_rep = try_realize(*row.dt_rep, exec, why);
  out[Check::realizable_rep] = pass_if(pd_rep.has_value());
  out[Check::genus_rep_equals_1] = CheckState::fail;
  out[Check::jones_match_up_to_mirror] = CheckState::fail;
  if (pd_rep) {
    try {
      out.genus_rep = turaev_genus(*pd_rep);
      out[Check::genus_rep_equals_1] = pass_if(*out.genus_rep == 1);
      const LaurentPoly v_rep = jones(*pd_rep, exec);
      out.jones_rep = to_string(v_rep);
      if (v_min) out[Check::jones_match_up_to_mirror] = pass_if(equal_up_to_mirror(*v_min, v_rep));
    } catch (const std::exception& e) {
      out.notes.push_back(std::string("representation diagram: ") + e.what());
    }
  } else {
    out.notes.push_back("representation code not realizable: " + why);
  }
  if (out[Check::jones_match_up_to_mirror] == CheckState::fail && out.jones_rep)
    out.notes.push_back("Jones polynomials differ: rep = " + *out.jones_rep);

  if (row.conway_check != ConwayCheck::not_alignable && row.conway_rep) {
    const Alignment a = extract_substitutions(row.conway_min, *row.conway_rep);
    if (const auto* pairs = std::get_if<std::vector<Substitution>>(&a)) {
      bool ok = true;
      for (const auto& [left, right] : *pairs) {
        if (verify_substitution(left, right)) continue;
        ok = false;
        out.notes.push_back("tangle " + render_word(left) + " (" + to_string(fraction(left)) + ") replaced by " +
                            render_word(right) + " (" + to_string(fraction(right)) + ")");
      }
      if (ok)
        out[Check::conway_substitutions_ok] = CheckState::pass;
      else
        out[Check::conway_substitutions_ok] =
            row.conway_check == ConwayCheck::anomalous ? CheckState::warn : CheckState::fail;
    }
  }

  const bool any_fail = std::any_of(out.checks.begin(), out.checks.end(),
                                    [](CheckState s) { return s == CheckState::fail; });
  out.verdict = any_fail ? Verdict::failed : Verdict::verified;
  return out;
}

VerificationReport verify_all(const std::vector<CorpusRow>& rows, int workers, std::string corpus_digest) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.tool_version = std::string(tool_version());
  report.corpus_digest = std::move(corpus_digest);
  report.rows.resize(rows.size());

  const auto count = static_cast<std::int64_t>(rows.size());
  if (workers <= 1) {
    for (std::int64_t i = 0; i < count; ++i)
      report.rows[static_cast<std::size_t>(i)] = verify_row(rows[static_cast<std::size_t>(i)]);
  } else {
#pragma omp parallel for num_threads(workers) schedule(dynamic, 1)
    for (std::int64_t i = 0; i < count; ++i)
      report.rows[static_cast<std::size_t>(i)] = verify_row(rows[static_cast<std::size_t>(i)]);
  }

  std::sort(report.rows.begin(), report.rows.end(),
            [](const RowResult& a, const RowResult& b) { return a.name < b.name; });
  for (const auto& r : report.rows) {
    switch (r.verdict) {
      case Verdict::verified: ++report.verified; break;
      case Verdict::failed: ++report.failed; break;
      case Verdict::open: ++report.open; break;
    }
  }
  report.duration =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  return report;
}

std::string_view tool_version() { return ALMALT_VERSION; }

std::string_view to_string(Check c) {
  switch (c) {
    case Check::realizable_min: return "realizable_min";
    case Check::realizable_rep: return "realizable_rep";
    case Check::rep_almost_alternating: return "rep_almost_alternating";
    case Check::jones_match_up_to_mirror: return "jones_match_up_to_mirror";
    case Check::genus_rep_equals_1: return "genus_rep_equals_1";
    case Check::genus_min_at_least_1: return "genus_min_at_least_1";
    case Check::span_lt_crossing_number: return "span_lt_crossing_number";
    case Check::conway_substitutions_ok: return "conway_substitutions_ok";
  }
  return "?";
}

std::string_view to_string(CheckState s) {
  switch (s) {
    case CheckState::pass: return "pass";
    case CheckState::fail: return "fail";
    case CheckState::not_applicable: return "not-applicable";
    case CheckState::warn: return "warn";
  }
  return "?";
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::verified: return "VERIFIED";
    case Verdict::failed: return "FAILED";
    case Verdict::open: return "OPEN";
  }
  return "?";
}

namespace {

template <typename T>
nlohmann::json opt(const std::optional<T>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

std::string render_json(const VerificationReport& report, bool include_timing) {
  nlohmann::ordered_json doc;
  doc["tool_version"] = report.tool_version;
  doc["corpus_digest"] = report.corpus_digest;
  doc["census_note"] = census_note;
  auto& rows = doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& r : report.rows) {
    nlohmann::ordered_json checks;
    for (Check c : all_checks) checks[std::string(to_string(c))] = to_string(r[c]);
    nlohmann::ordered_json row;
    row["name"] = r.name;
    row["status"] = to_string(r.status);
    row["verdict"] = to_string(r.verdict);
    row["checks"] = std::move(checks);
    row["jones_min"] = opt(r.jones_min);
    row["jones_rep"] = opt(r.jones_rep);
    row["span"] = opt(r.span);
    row["genus_min"] = opt(r.genus_min);
    row["genus_rep"] = opt(r.genus_rep);
    row["notes"] = r.notes;
    rows.push_back(std::move(row));
  }
  auto& summary = doc["summary"];
  summary["total"] = report.rows.size();
  summary["verified"] = report.verified;
  summary["failed"] = report.failed;
  summary["open"] = report.open;
  if (include_timing) summary["duration_ms"] = report.duration.count();
  return doc.dump(2) + "\n";
}

std::string render_csv(const VerificationReport& report) {
  std::ostringstream out;
  out << "name,status,verdict";
  for (Check c : all_checks) out << ',' << to_string(c);
  out << ",span,genus_min,genus_rep,jones_min\n";
  auto num = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string(); };
  for (const auto& r : report.rows) {
    out << r.name << ',' << to_string(r.status) << ',' << to_string(r.verdict);
    for (Check c : all_checks) out << ',' << to_string(r[c]);
    out << ',' << num(r.span) << ',' << num(r.genus_min) << ',' << num(r.genus_rep) << ",\""
        << r.jones_min.value_or("") << "\"\n";
  }
  return out.str();
}

std::string render_text(const VerificationReport& report, bool include_timing) {
  std::ostringstream out;
  out << "almalt " << report.tool_version << "  corpus sha256 " << report.corpus_digest << "\n\n";
  for (const auto& r : report.rows) {
    out << r.name << std::string(r.name.size() < 9 ? 9 - r.name.size() : 1, ' ') << to_string(r.verdict);
    out << "  genus_min=" << (r.genus_min ? std::to_string(*r.genus_min) : "-");
    out << " genus_rep=" << (r.genus_rep ? std::to_string(*r.genus_rep) : "-");
    out << " span=" << (r.span ? std::to_string(*r.span) : "-");
    out << " conway=" << to_string(r[Check::conway_substitutions_ok]) << '\n';
    for (Check c : all_checks)
      if (r[c] == CheckState::fail || r[c] == CheckState::warn)
        out << "    " << to_string(r[c]) << ": " << to_string(c) << '\n';
    for (const auto& n : r.notes) out << "    note: " << n << '\n';
  }
  out << "\nverified " << report.verified << "  failed " << report.failed << "  open " << report.open << "  total "
      << report.rows.size() << '\n';
  out << census_note << '\n';
  if (include_timing) out << "duration " << report.duration.count() << " ms\n";
  return out.str();
}

}  // namespace

std::string render_report(const VerificationReport& report, ReportFormat format, bool include_timing) {
  switch (format) {
    case ReportFormat::json: return render_json(report, include_timing);
    case ReportFormat::csv: return render_csv(report);
    case ReportFormat::text: break;
  }
  return render_text(report, include_timing);
}

}  // namespace almalt
