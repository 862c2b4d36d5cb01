#include <fstream>
#include <iostream>
#include <string>
#include <variant>

#include <CLI11.hpp>

#include "almalt/bracket.hpp"
#include "almalt/corpus.hpp"
#include "almalt/diagram.hpp"
#include "almalt/dt.hpp"
#include "almalt/realize.hpp"
#include "almalt/tangle.hpp"
#include "almalt/verify.hpp"

namespace {

using namespace almalt;

PlanarDiagram realize_or_throw(const std::string& text) {
  auto r = realize(parse_dt(text));
  if (auto* nr = std::get_if<NotRealizable>(&r)) throw std::runtime_error("not realizable: " + nr->reason);
  return std::get<PlanarDiagram>(std::move(r));
}

int run_verify(const std::string& corpus_path, const std::string& report_path, const std::string& format,
               int workers) {
  std::string text;
  if (corpus_path.empty())
    text = std::string(embedded_corpus_text());
  else
    text = read_text_file(corpus_path);

  std::vector<CorpusRow> rows;
  try {
    rows = load_corpus(text);
    validate_corpus(rows);
  } catch (const CorpusError& e) {
    std::cerr << "corpus validation failed";
    if (!e.row().empty()) std::cerr << " at " << e.row();
    std::cerr << ": " << e.what() << '\n';
    return 2;
  }

  const auto report = verify_all(rows, workers, sha256_hex(text));
  ReportFormat fmt = ReportFormat::text;
  if (format == "json") fmt = ReportFormat::json;
  if (format == "csv") fmt = ReportFormat::csv;
  const std::string body = render_report(report, fmt);

  if (report_path.empty()) {
    std::cout << body;
  } else {
    std::ofstream out(report_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + report_path);
    out << body;
    std::cerr << "verified " << report.verified << "  failed " << report.failed << "  open " << report.open
              << "  (" << report.duration.count() << " ms)\n";
  }
  return report.failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Almost alternating knot verification"};
  app.set_version_flag("--version", std::string(tool_version()));
  app.require_subcommand(1);

  std::string corpus_path, report_path, format = "text";
  int workers = 1;
  auto* verify = app.add_subcommand("verify", "Verify every row of the knot table");
  verify->add_option("--corpus", corpus_path, "Corpus TSV (default: embedded)")->check(CLI::ExistingFile);
  verify->add_option("--report", report_path, "Write the report here instead of stdout");
  verify->add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json", "csv"}));
  verify->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);

  std::string arg;
  auto* jones_cmd = app.add_subcommand("jones", "Jones polynomial of a DT code");
  jones_cmd->add_option("DTCODE", arg)->required();
  auto* genus_cmd = app.add_subcommand("genus", "Turaev surface genus of a DT code");
  genus_cmd->add_option("DTCODE", arg)->required();
  auto* realize_cmd = app.add_subcommand("realize", "Print the planar diagram of a DT code");
  realize_cmd->add_option("DTCODE", arg)->required();
  auto* classify_cmd = app.add_subcommand("classify", "Sign class of a DT code");
  classify_cmd->add_option("DTCODE", arg)->required();
  auto* fraction_cmd = app.add_subcommand("tangle-fraction", "Fraction of a rational tangle word");
  fraction_cmd->add_option("WORD", arg)->required();
  auto* synth_cmd = app.add_subcommand("tangle-synthesize", "Shortest tangle word with a single -1");
  synth_cmd->add_option("P/Q", arg)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify) return run_verify(corpus_path, report_path, format, workers);
    if (*jones_cmd) {
      std::cout << to_string(jones(realize_or_throw(arg))) << '\n';
    } else if (*genus_cmd) {
      std::cout << turaev_genus(realize_or_throw(arg)) << '\n';
    } else if (*realize_cmd) {
      const auto pd = realize_or_throw(arg);
      std::cout << dump(pd) << "faces: " << face_count(pd) << '\n';
    } else if (*classify_cmd) {
      const auto sc = classify_signs(parse_dt(arg));
      std::cout << to_string(sc.kind);
      if (sc.kind == SignKind::almost_alternating) std::cout << " (minority entry " << sc.minority + 1 << ")";
      std::cout << '\n';
    } else if (*fraction_cmd) {
      std::cout << to_string(fraction(parse_word(arg))) << '\n';
    } else if (*synth_cmd) {
      const auto s = synthesize_one_minus_one(parse_rational(arg));
      std::cout << render_word(s.word);
      if (s.already_nonnegative) std::cout << "  (already nonnegative)";
      std::cout << '\n';
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
