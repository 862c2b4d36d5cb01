#pragma once

// Rational tangles: Conway words, their fractions, synthesis of words with a
// single -1 entry, and alignment of LinKnot Conway strings.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace almalt {

class TangleError : public std::runtime_error {
 public:
  enum class Kind { malformed_word, not_found, out_of_range };

  TangleError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// p/q in lowest terms with q >= 0; infinity is exactly (1, 0).
class ExtendedRational {
 public:
  ExtendedRational() = default;
  ExtendedRational(std::int64_t p, std::int64_t q);  // normalizes; (0,0) throws

  static ExtendedRational infinity() { return {1, 0}; }

  std::int64_t num() const noexcept { return p_; }
  std::int64_t den() const noexcept { return q_; }
  bool is_infinite() const noexcept { return q_ == 0; }

  ExtendedRational reciprocal() const;           // 1/0 = inf, 1/inf = 0
  ExtendedRational plus(std::int64_t k) const;   // inf + k = inf

  bool operator==(const ExtendedRational&) const = default;

 private:
  std::int64_t p_ = 0;
  std::int64_t q_ = 1;
};

std::string to_string(const ExtendedRational& r);
/// "p/q", "p", "inf" or "-inf"... the latter is accepted as inf.
ExtendedRational parse_rational(std::string_view text);

inline constexpr int max_tangle_entry = 64;

/// Conway word a_1 ... a_k. Only the last entry may be 0.
class TangleWord {
 public:
  TangleWord() = default;
  static TangleWord from_entries(std::vector<int> entries);  // validates

  const std::vector<int>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool operator==(const TangleWord&) const = default;

 private:
  explicit TangleWord(std::vector<int> e) : entries_(std::move(e)) {}
  std::vector<int> entries_;
};

/// LinKnot style, one digit per entry and `-` binding to the next digit:
/// "4 - 111" -> [4, -1, 1, 1], "21 - 10" -> [2, 1, -1, 0]. A bracketed list
/// "[4,-1,1,1]" is also accepted for multi-digit entries.
TangleWord parse_word(std::string_view text);

/// LinKnot style: digits concatenated, negatives as " - d": "4 - 111".
/// Requires every entry to be a single digit.
std::string render_word(const TangleWord& w);

/// Space separated entries: "4 -1 1 1".
std::string render_word_machine(const TangleWord& w);

/// F([a]) = a, F([.., a_k]) = a_k + 1/F([.., a_(k-1)]).
ExtendedRational fraction(const TangleWord& w);

struct Synthesis {
  TangleWord word;
  // True when the target already has a nonnegative word; that word is
  // returned and contains no -1.
  bool already_nonnegative = false;
};

inline constexpr std::size_t max_synthesis_length = 12;

/// Shortest, then lexicographically smallest, word with entries in [-1, 9],
/// exactly one -1, and 0 allowed only as the last entry, evaluating to q.
/// Throws TangleError(not_found) if no such word of length <= 12 exists and
/// TangleError(out_of_range) for q = infinity.
Synthesis synthesize_one_minus_one(const ExtendedRational& q);

/// Word with exactly one -1 and every other entry >= 0.
bool has_single_minus_one(const TangleWord& w);

/// fraction(left) == fraction(right) and right has a single -1.
bool verify_substitution(const TangleWord& left, const TangleWord& right);

struct NotAlignable {
  std::string reason;
};

using Substitution = std::pair<TangleWord, TangleWord>;
using Alignment = std::variant<std::vector<Substitution>, NotAlignable>;

inline constexpr std::size_t max_aligned_slots = 3;

/// Splits two Conway strings on `.` `:` `,` `(` `)` after a leading `k*`
/// polyhedron tag and pairs up the slots that differ. The strings align when
/// the tags and separators match, at most three slots differ, every differing
/// slot parses as a tangle word on both sides, and every replacement word
/// contains a -1 entry. Anything else is a global rewrite.
Alignment extract_substitutions(std::string_view conway_min, std::string_view conway_rep);

}  // namespace almalt
