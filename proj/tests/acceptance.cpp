// Prints one PASS/FAIL line per acceptance criterion; exits non-zero on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <variant>

#include "almalt/bracket.hpp"
#include "almalt/corpus.hpp"
#include "almalt/diagram.hpp"
#include "almalt/realize.hpp"
#include "almalt/tangle.hpp"
#include "almalt/verify.hpp"
#include "oracles.hpp"

using namespace almalt;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

std::optional<PlanarDiagram> realized(const DtCode& code) {
  auto r = realize(code);
  if (auto* pd = std::get_if<PlanarDiagram>(&r)) return *pd;
  return std::nullopt;
}

std::vector<CorpusRow> rows;

Outcome corpus_integrity() {
  Outcome o;
  const auto s = validate_corpus(rows);
  o.require(s == CorpusSummary{154, 35, 1, 2}, "counts differ");
  o.detail = o.ok ? "154 / 35 / 1 / 2" : o.detail;
  return o;
}

Outcome sign_structure() {
  Outcome o;
  int reps = 0;
  for (const auto& r : rows) {
    o.require(classify_signs(r.dt_min).kind == SignKind::other, r.name + " minimal code not mixed");
    if (r.dt_rep) {
      ++reps;
      o.require(classify_signs(*r.dt_rep).kind == SignKind::almost_alternating, r.name + " rep");
    }
  }
  o.require(reps == 155, "expected 155 representation codes");
  if (o.ok) o.detail = std::to_string(reps) + " representation codes almost alternating";
  return o;
}

Outcome realizability() {
  Outcome o;
  int codes = 0;
  for (const auto& r : rows)
    for (const auto* code : {&r.dt_min, r.dt_rep ? &*r.dt_rep : nullptr}) {
      if (!code) continue;
      ++codes;
      const auto pd = realized(*code);
      const int n = static_cast<int>(code->crossings());
      o.require(pd && face_count(*pd) == n + 2 && oracle::pd_faces(*pd) == n + 2, r.name + " not realized");
    }
  if (o.ok) o.detail = std::to_string(codes) + " codes, faces = n + 2";
  return o;
}

VerificationReport single_worker;

Outcome equivalence() {
  Outcome o;
  int pairs = 0;
  for (const auto& r : single_worker.rows) {
    if (r.status != RowStatus::resolved) continue;
    ++pairs;
    o.require(r[Check::jones_match_up_to_mirror] == CheckState::pass, r.name + " Jones differ");
  }
  o.require(pairs == 155, "expected 155 pairs");
  o.require(single_worker.duration < std::chrono::seconds(60), "single-worker run took 60 s or more");
  o.require(single_worker.failed == 0 && single_worker.verified == 155 && single_worker.open == 37, "totals");
  if (o.ok)
    o.detail = std::to_string(pairs) + " pairs, full run " + std::to_string(single_worker.duration.count()) +
               " ms single-worker";
  return o;
}

Outcome turaev() {
  Outcome o;
  for (const auto& r : rows) {
    const int gmin = turaev_genus(*realized(r.dt_min));
    o.require(gmin >= 1, r.name + " minimal genus 0");
    if (r.dt_rep) o.require(turaev_genus(*realized(*r.dt_rep)) == 1, r.name + " rep genus != 1");
  }
  if (o.ok) o.detail = "rep genus 1 on 155 diagrams, no mixed-sign diagram of genus 0";
  return o;
}

Outcome span_bound() {
  Outcome o;
  for (const auto& r : rows) {
    const int span = span_t(jones(*realized(r.dt_min)));
    o.require(span < r.census_crossings(), r.name + " span " + std::to_string(span));
  }
  if (o.ok) o.detail = "span below crossing number on 192 minimal codes";
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  int small = 0, corpus = 0, random = 0;
  for (const auto& r : rows)
    for (const auto* code : {&r.dt_min, r.dt_rep ? &*r.dt_rep : nullptr}) {
      if (!code || code->crossings() > 12) continue;
      const auto pd = *realized(*code);
      o.require(oracle::to_poly(bracket(pd)) == oracle::skein_bracket(pd), r.name + " bracket");
      ++corpus;
      small += code->crossings() <= 10;
    }
  std::mt19937 rng(20240601);
  while (random < 50) {
    const int n = 3 + static_cast<int>(rng() % 8);
    std::vector<int> labels(n);
    for (int i = 0; i < n; ++i) labels[i] = 2 * (i + 1);
    std::shuffle(labels.begin(), labels.end(), rng);
    for (int& l : labels)
      if (rng() % 2) l = -l;
    const auto pd = realized(DtCode::from_labels(labels));
    if (!pd) continue;
    ++random;
    o.require(oracle::to_poly(bracket(*pd)) == oracle::skein_bracket(*pd), "random code bracket");
  }
  if (o.ok)
    o.detail = std::to_string(small) + " corpus diagrams <= 10 crossings, " + std::to_string(corpus) +
               " corpus diagrams <= 12, " + std::to_string(random) + " random codes";
  return o;
}

Outcome tangles() {
  Outcome o;
  int aligned = 0;
  std::set<std::pair<std::int64_t, std::int64_t>> fractions{{-2, 1}, {-3, 1}, {-3, 2}, {-3, 4}};
  bool anomaly_warned = false;
  for (const auto& r : rows) {
    if (r.conway_check == ConwayCheck::not_alignable) continue;
    const auto a = extract_substitutions(r.conway_min, *r.conway_rep);
    const auto* subs = std::get_if<std::vector<Substitution>>(&a);
    o.require(subs != nullptr, r.name + " not alignable");
    if (!subs) continue;
    bool all = true;
    for (const auto& [left, right] : *subs) {
      all = all && verify_substitution(left, right);
      const auto f = fraction(left);
      if (!f.is_infinite() && f.num() < 0) fractions.insert({f.num(), f.den()});
    }
    if (r.conway_check == ConwayCheck::anomalous) {
      const auto result = verify_row(r);
      anomaly_warned = !all && result[Check::conway_substitutions_ok] == CheckState::warn;
    } else {
      ++aligned;
      o.require(all, r.name + " substitution fails");
    }
  }
  o.require(anomaly_warned, "K12n748 not reported as a warning");
  for (auto [p, q] : fractions) {
    const ExtendedRational target(p, q);
    const auto s = synthesize_one_minus_one(target);
    o.require(fraction(s.word) == target && has_single_minus_one(s.word), "synthesis " + to_string(target));
  }
  std::mt19937 rng(99);
  for (int i = 0; i < 100; ++i) {
    const ExtendedRational target(-static_cast<int>(1 + rng() % 30), 1 + static_cast<int>(rng() % 12));
    const auto s = synthesize_one_minus_one(target);
    const auto [p, q] = oracle::word_fraction(s.word.entries());
    o.require(ExtendedRational(p, q) == target && has_single_minus_one(s.word), "random synthesis");
  }
  if (o.ok)
    o.detail = std::to_string(aligned) + " aligned rows pass, K12n748 warns, " + std::to_string(fractions.size()) +
               " listed + 100 random fractions round-trip";
  return o;
}

Outcome fixtures() {
  Outcome o;
  const auto trefoil = *realized(parse_dt("{{3},{4,6,2}}"));
  o.require(turaev_genus(trefoil) == 0, "trefoil genus");
  o.require(span_t(jones(trefoil)) == 3, "trefoil span");
  const auto p819 = oracle::pretzel({3, 3, -2});
  o.require(turaev_genus(p819) == 1, "8_19 genus");
  o.require(equal_up_to_mirror(jones(p819), oracle::from_terms(Variable::t, {{1, 3}, {1, 5}, {-1, 8}})),
            "8_19 Jones");
  if (o.ok) o.detail = "trefoil genus 0 span 3, pretzel 8_19 genus 1";
  return o;
}

}  // namespace

int main() {
  rows = load_embedded_corpus();
  single_worker = verify_all(rows, 1, sha256_hex(embedded_corpus_text()));

  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"corpus integrity", corpus_integrity},
      {"sign structure", sign_structure},
      {"realizability", realizability},
      {"equivalence evidence", equivalence},
      {"turaev genus", turaev},
      {"non-alternating consistency", span_bound},
      {"oracle equivalence", oracle_equivalence},
      {"tangle method", tangles},
      {"known fixtures", fixtures},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failed += !o.ok;
    std::printf("%s  %d. %s: %s\n", o.ok ? "PASS" : "FAIL", ++index, name, o.detail.c_str());
  }
  return failed == 0 ? 0 : 1;
}
