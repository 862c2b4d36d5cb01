#include "almalt/tangle.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <mutex>
#include <numeric>
#include <tuple>

namespace almalt {

// ---------------------------------------------------------------------------
// ExtendedRational

ExtendedRational::ExtendedRational(std::int64_t p, std::int64_t q) {
  if (p == 0 && q == 0) throw TangleError(TangleError::Kind::out_of_range, "0/0 is not a fraction");
  if (q == 0) {
    p_ = 1;
    q_ = 0;
    return;
  }
  if (q < 0) {
    p = -p;
    q = -q;
  }
  const std::int64_t g = std::gcd(p, q);
  p_ = p / g;
  q_ = q / g;
}

ExtendedRational ExtendedRational::reciprocal() const {
  if (is_infinite()) return {0, 1};
  if (p_ == 0) return infinity();
  return {q_, p_};
}

ExtendedRational ExtendedRational::plus(std::int64_t k) const {
  if (is_infinite()) return *this;
  std::int64_t kq = 0;
  std::int64_t sum = 0;
  if (__builtin_mul_overflow(k, q_, &kq) || __builtin_add_overflow(p_, kq, &sum))
    throw TangleError(TangleError::Kind::out_of_range, "fraction overflow");
  return {sum, q_};
}

std::string to_string(const ExtendedRational& r) {
  if (r.is_infinite()) return "inf";
  if (r.den() == 1) return std::to_string(r.num());
  return std::to_string(r.num()) + "/" + std::to_string(r.den());
}

ExtendedRational parse_rational(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text == "inf" || text == "-inf" || text == "1/0") return ExtendedRational::infinity();
  auto number = [&](std::string_view s) {
    s = trim(s);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
      throw TangleError(TangleError::Kind::malformed_word, "not a rational: " + std::string(text));
    return v;
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return {number(text), 1};
  return {number(text.substr(0, slash)), number(text.substr(slash + 1))};
}

// ---------------------------------------------------------------------------
// Words

TangleWord TangleWord::from_entries(std::vector<int> entries) {
  if (entries.empty()) throw TangleError(TangleError::Kind::malformed_word, "empty tangle word");
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (std::abs(entries[i]) > max_tangle_entry)
      throw TangleError(TangleError::Kind::out_of_range,
                        "tangle entry " + std::to_string(entries[i]) + " out of range");
    if (entries[i] == 0 && i + 1 != entries.size())
      throw TangleError(TangleError::Kind::malformed_word, "0 may only be the last entry");
  }
  return TangleWord(std::move(entries));
}

TangleWord parse_word(std::string_view text) {
  auto fail = [&](const std::string& why) -> TangleError {
    return TangleError(TangleError::Kind::malformed_word,
                       "malformed tangle word '" + std::string(text) + "': " + why);
  };
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  std::vector<int> entries;
  if (i < text.size() && text[i] == '[') {
    const auto close = text.find(']', i);
    if (close == std::string_view::npos) throw fail("missing ']'");
    for (std::size_t j = close + 1; j < text.size(); ++j)
      if (!std::isspace(static_cast<unsigned char>(text[j]))) throw fail("text after ']'");
    std::string_view body = text.substr(i + 1, close - i - 1);
    while (!body.empty()) {
      const auto comma = body.find(',');
      std::string_view item = body.substr(0, comma);
      while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front()))) item.remove_prefix(1);
      while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back()))) item.remove_suffix(1);
      int v = 0;
      auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
      if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size()) throw fail("bad entry");
      entries.push_back(v);
      if (comma == std::string_view::npos) break;
      body.remove_prefix(comma + 1);
    }
  } else {
    bool negative = false;
    for (; i < text.size(); ++i) {
      const char c = text[i];
      if (std::isspace(static_cast<unsigned char>(c))) continue;
      if (c == '-') {
        if (negative) throw fail("repeated sign");
        negative = true;
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        const int d = c - '0';
        entries.push_back(negative ? -d : d);
        negative = false;
      } else {
        throw fail(std::string("unexpected character '") + c + "'");
      }
    }
    if (negative) throw fail("dangling sign");
  }
  if (entries.empty()) throw fail("no entries");
  try {
    return TangleWord::from_entries(std::move(entries));
  } catch (const TangleError& e) {
    throw fail(e.what());
  }
}

namespace {

bool single_digits(const TangleWord& w) {
  return std::all_of(w.entries().begin(), w.entries().end(), [](int a) { return std::abs(a) <= 9; });
}

std::string render_bracketed(const TangleWord& w) {
  std::string out = "[";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(w.entries()[i]);
  }
  return out + "]";
}

}  // namespace

std::string render_word(const TangleWord& w) {
  if (!single_digits(w)) return render_bracketed(w);
  std::string out;
  for (int a : w.entries()) {
    if (a < 0) {
      out += out.empty() ? "- " : " - ";
      out += static_cast<char>('0' - a);
    } else {
      out += static_cast<char>('0' + a);
    }
  }
  return out;
}

std::string render_word_machine(const TangleWord& w) {
  if (!single_digits(w)) return render_bracketed(w);
  std::string out;
  for (int a : w.entries()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(a);
  }
  return out;
}

ExtendedRational fraction(const TangleWord& w) {
  ExtendedRational f = ExtendedRational::infinity();  // empty prefix
  for (int a : w.entries()) f = f.reciprocal().plus(a);
  return f;
}

bool has_single_minus_one(const TangleWord& w) {
  const auto& e = w.entries();
  return std::count(e.begin(), e.end(), -1) == 1 &&
         std::all_of(e.begin(), e.end(), [](int a) { return a >= -1; });
}

bool verify_substitution(const TangleWord& left, const TangleWord& right) {
  return has_single_minus_one(right) && fraction(left) == fraction(right);
}

// ---------------------------------------------------------------------------
// Synthesis
//
// Meet in the middle: prefixes of length <= 6 (no zero entries) are tabulated
// once by their fraction; for a target the suffix is enumerated backwards,
// each choice of entry e turning a requirement r on F_k into 1/(r - e) on
// F_(k-1). A suffix meets a prefix when the requirement equals the prefix
// fraction and the -1 count adds up to one.

namespace {

constexpr std::size_t max_prefix = 6;
constexpr std::array<int, 10> nonzero_entries{-1, 1, 2, 3, 4, 5, 6, 7, 8, 9};
constexpr std::array<int, 11> last_entries{-1, 0, 1, 2, 3, 4, 5, 6, 7, 8, 9};

struct Key {
  std::int64_t p;
  std::int64_t q;
  int minus;
  auto tie() const { return std::tie(p, q, minus); }
  bool operator<(const Key& o) const { return tie() < o.tie(); }
  bool operator==(const Key& o) const { return tie() == o.tie(); }
};

struct PrefixEntry {
  Key key;
  std::array<std::int8_t, max_prefix> word;
};

// Sorted by key; for equal keys only the lexicographically first prefix is kept.
using PrefixTable = std::vector<PrefixEntry>;

void enumerate_prefixes(std::size_t length, std::size_t pos, ExtendedRational f, int minus,
                        std::array<std::int8_t, max_prefix>& word, PrefixTable& out) {
  if (pos == length) {
    out.push_back({{f.num(), f.den(), minus}, word});
    return;
  }
  for (int e : nonzero_entries) {
    if (e == -1 && minus == 1) continue;
    word[pos] = static_cast<std::int8_t>(e);
    enumerate_prefixes(length, pos + 1, f.reciprocal().plus(e), minus + (e == -1), word, out);
  }
}

const std::vector<PrefixTable>& prefix_tables() {
  static std::vector<PrefixTable> tables;
  static std::once_flag once;
  std::call_once(once, [] {
    tables.resize(max_prefix + 1);
    for (std::size_t len = 0; len <= max_prefix; ++len) {
      std::array<std::int8_t, max_prefix> word{};
      PrefixTable& t = tables[len];
      enumerate_prefixes(len, 0, ExtendedRational::infinity(), 0, word, t);
      // Enumeration is in lexicographic order, so a stable sort keeps the
      // smallest word first within each key.
      std::stable_sort(t.begin(), t.end(), [](const PrefixEntry& a, const PrefixEntry& b) { return a.key < b.key; });
      t.erase(std::unique(t.begin(), t.end(), [](const PrefixEntry& a, const PrefixEntry& b) { return a.key == b.key; }),
              t.end());
    }
  });
  return tables;
}

const PrefixEntry* lookup(const PrefixTable& t, const Key& key) {
  auto it = std::lower_bound(t.begin(), t.end(), key, [](const PrefixEntry& e, const Key& k) { return e.key < k; });
  return (it != t.end() && it->key == key) ? &*it : nullptr;
}

struct SuffixSearch {
  const PrefixTable& prefixes;
  std::size_t prefix_len;
  std::size_t suffix_len;
  std::vector<int> suffix;  // filled from the back
  std::optional<std::vector<int>> best;

  void run(ExtendedRational target) {
    suffix.assign(suffix_len, 0);
    step(suffix_len, target, 0);
  }

  // Chooses the entry at suffix position pos-1 given the required value of the
  // fraction through that position.
  void step(std::size_t pos, ExtendedRational required, int minus) {
    if (pos == 0) {
      const PrefixEntry* hit = lookup(prefixes, {required.num(), required.den(), 1 - minus});
      if (hit == nullptr) return;
      std::vector<int> word(hit->word.begin(), hit->word.begin() + static_cast<std::ptrdiff_t>(prefix_len));
      word.insert(word.end(), suffix.begin(), suffix.end());
      if (!best || word < *best) best = std::move(word);
      return;
    }
    const bool last = pos == suffix_len;
    auto try_entry = [&](int e) {
      if (e == -1 && minus == 1) return;
      suffix[pos - 1] = e;
      step(pos - 1, required.plus(-e).reciprocal(), minus + (e == -1));
    };
    if (last) {
      for (int e : last_entries) try_entry(e);
    } else {
      for (int e : nonzero_entries) try_entry(e);
    }
  }
};

Synthesis nonnegative_word(const ExtendedRational& q) {
  // Continued fraction q = c0 + 1/(c1 + ...), written last-entry-first.
  std::vector<int> cf;
  std::int64_t p = q.num();
  std::int64_t d = q.den();
  while (d != 0) {
    const std::int64_t a = p / d;
    if (a > max_tangle_entry)
      throw TangleError(TangleError::Kind::out_of_range, "entry exceeds tangle bound for " + to_string(q));
    cf.push_back(static_cast<int>(a));
    const std::int64_t r = p - a * d;
    p = d;
    d = r;
  }
  std::reverse(cf.begin(), cf.end());
  return {TangleWord::from_entries(std::move(cf)), true};
}

// Digit entries cannot reach every target in twelve entries (-19 is one). For
// q = -r: r > 1 is CF(r / (r - 1)), -1, 0 and r < 1 is CF(1 / (1 - r)), -1.
std::optional<TangleWord> constructed_word(const ExtendedRational& q) {
  const std::int64_t r_num = -q.num();
  const std::int64_t r_den = q.den();
  try {
    std::vector<int> e;
    if (r_num > r_den) {
      e = nonnegative_word(ExtendedRational(r_num, r_num - r_den)).word.entries();
      e.insert(e.end(), {-1, 0});
    } else {
      e = nonnegative_word(ExtendedRational(r_den, r_den - r_num)).word.entries();
      e.push_back(-1);
    }
    if (e.size() > max_synthesis_length) return std::nullopt;
    return TangleWord::from_entries(std::move(e));
  } catch (const TangleError&) {
    return std::nullopt;
  }
}

}  // namespace

Synthesis synthesize_one_minus_one(const ExtendedRational& q) {
  if (q.is_infinite()) throw TangleError(TangleError::Kind::out_of_range, "cannot synthesize infinity");
  if (std::llabs(q.num()) > 1'000'000'000 || q.den() > 1'000'000'000)
    throw TangleError(TangleError::Kind::out_of_range, "fraction too large: " + to_string(q));
  if (q.num() >= 0) return nonnegative_word(q);

  const auto& tables = prefix_tables();
  for (std::size_t length = 1; length <= max_synthesis_length; ++length) {
    const std::size_t prefix_len = std::min(length - 1, max_prefix);
    SuffixSearch search{tables[prefix_len], prefix_len, length - prefix_len, {}, std::nullopt};
    search.run(q);
    if (search.best) return {TangleWord::from_entries(std::move(*search.best)), false};
  }
  if (auto w = constructed_word(q)) return {std::move(*w), false};
  throw TangleError(TangleError::Kind::not_found,
                    "no word of length <= " + std::to_string(max_synthesis_length) + " for " + to_string(q));
}

// ---------------------------------------------------------------------------
// Conway string alignment

namespace {

struct Slots {
  std::string tag;
  std::vector<std::string> text;  // whitespace removed
  std::string separators;
};

bool is_separator(char c) { return c == '.' || c == ':' || c == ',' || c == '(' || c == ')'; }

Slots split_conway(std::string_view s) {
  Slots out;
  std::size_t i = 0;
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  std::size_t j = i;
  while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
  std::size_t k = j;
  if (k < s.size() && s[k] == '^') ++k;
  if (j > i && k < s.size() && s[k] == '*') {
    out.tag = std::string(s.substr(i, j - i)) + "*";
    i = k + 1;
  }
  std::string current;
  for (; i < s.size(); ++i) {
    const char c = s[i];
    if (is_separator(c)) {
      out.text.push_back(std::move(current));
      current.clear();
      out.separators += c;
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      current += c;
    }
  }
  out.text.push_back(std::move(current));
  return out;
}

}  // namespace

Alignment extract_substitutions(std::string_view conway_min, std::string_view conway_rep) {
  const Slots a = split_conway(conway_min);
  const Slots b = split_conway(conway_rep);
  if (a.tag != b.tag) return NotAlignable{"polyhedron tags differ ('" + a.tag + "' vs '" + b.tag + "')"};
  if (a.separators != b.separators) return NotAlignable{"separator structure differs"};

  std::vector<Substitution> pairs;
  for (std::size_t i = 0; i < a.text.size(); ++i) {
    if (a.text[i] == b.text[i]) continue;
    if (pairs.size() == max_aligned_slots)
      return NotAlignable{"more than " + std::to_string(max_aligned_slots) + " slots differ"};
    try {
      TangleWord left = parse_word(a.text[i]);
      TangleWord right = parse_word(b.text[i]);
      const auto& re = right.entries();
      if (std::find(re.begin(), re.end(), -1) == re.end())
        return NotAlignable{"slot '" + b.text[i] + "' introduces no -1 tangle"};
      pairs.emplace_back(std::move(left), std::move(right));
    } catch (const TangleError&) {
      return NotAlignable{"slot '" + a.text[i] + "' / '" + b.text[i] + "' is not a rational tangle"};
    }
  }
  return pairs;
}

}  // namespace almalt
