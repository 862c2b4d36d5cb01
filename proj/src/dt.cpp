#include "almalt/dt.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>

namespace almalt {

namespace {

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c)
      fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  long integer() {
    skip_ws();
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    long value = 0;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr == first) fail("expected an integer");
    pos_ += static_cast<std::size_t>(ptr - first);
    return value;
  }

  void finish() {
    skip_ws();
    if (pos_ != text_.size()) fail("trailing characters");
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw DtError(DtError::Kind::malformed_syntax,
                  "malformed DT code at offset " + std::to_string(pos_) + ": " + msg);
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

DtCode DtCode::from_labels(std::vector<int> labels) {
  const std::size_t n = labels.size();
  std::vector<bool> seen(n + 1, false);
  for (int a : labels) {
    const long mag = std::labs(static_cast<long>(a));
    if (a == 0 || mag % 2 != 0 || static_cast<std::size_t>(mag) > 2 * n)
      throw DtError(DtError::Kind::invalid_permutation,
                    "DT entry " + std::to_string(a) + " is not a nonzero even label <= " +
                        std::to_string(2 * n));
    const auto slot = static_cast<std::size_t>(mag / 2);
    if (seen[slot])
      throw DtError(DtError::Kind::invalid_permutation,
                    "DT entry " + std::to_string(mag) + " repeated");
    seen[slot] = true;
  }
  return DtCode(std::move(labels));
}

DtCode parse_dt(std::string_view text) {
  Scanner in(text);
  in.expect('{');
  in.expect('{');
  const long n = in.integer();
  if (n < 0) in.fail("negative crossing count");
  in.expect('}');
  in.expect(',');
  in.expect('{');
  std::vector<int> labels;
  if (!in.peek('}')) {
    for (;;) {
      const long v = in.integer();
      if (v < -(1L << 30) || v > (1L << 30)) in.fail("entry out of range");
      labels.push_back(static_cast<int>(v));
      if (!in.peek(',')) break;
      in.expect(',');
    }
  }
  in.expect('}');
  in.expect('}');
  in.finish();
  if (static_cast<long>(labels.size()) != n)
    throw DtError(DtError::Kind::length_mismatch,
                  "DT code declares " + std::to_string(n) + " crossings but lists " +
                      std::to_string(labels.size()) + " entries");
  return DtCode::from_labels(std::move(labels));
}

std::string format_dt(const DtCode& code) {
  std::string out = "{{" + std::to_string(code.crossings()) + "},{";
  for (std::size_t i = 0; i < code.crossings(); ++i) {
    if (i) out += ',';
    out += std::to_string(code[i]);
  }
  out += "}}";
  return out;
}

SignClass classify_signs(const DtCode& code) {
  const std::size_t n = code.crossings();
  const auto& labels = code.labels();
  const auto negatives =
      static_cast<std::size_t>(std::count_if(labels.begin(), labels.end(), [](int a) { return a < 0; }));
  if (negatives == 0 || negatives == n) return {SignKind::alternating, 0};
  // Minority by count; with n = 2 both entries qualify and the negative one is reported.
  if (negatives == 1) {
    auto it = std::find_if(labels.begin(), labels.end(), [](int a) { return a < 0; });
    return {SignKind::almost_alternating, static_cast<std::size_t>(it - labels.begin())};
  }
  if (negatives == n - 1) {
    auto it = std::find_if(labels.begin(), labels.end(), [](int a) { return a > 0; });
    return {SignKind::almost_alternating, static_cast<std::size_t>(it - labels.begin())};
  }
  return {SignKind::other, 0};
}

DtCode flip_crossing(const DtCode& code, std::size_t index) {
  if (index >= code.crossings())
    throw DtError(DtError::Kind::index_out_of_range,
                  "crossing index " + std::to_string(index) + " out of range for " +
                      std::to_string(code.crossings()) + " crossings");
  std::vector<int> labels = code.labels();
  labels[index] = -labels[index];
  return DtCode::from_labels(std::move(labels));
}

std::string_view to_string(SignKind kind) {
  switch (kind) {
    case SignKind::alternating: return "alternating";
    case SignKind::almost_alternating: return "almost-alternating";
    case SignKind::other: return "other";
  }
  return "?";
}

}  // namespace almalt
