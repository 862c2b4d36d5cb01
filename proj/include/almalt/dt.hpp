#pragma once

// Dowker-Thistlethwaite codes: parsing, canonical text form and the
// alternating / almost alternating sign classification.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace almalt {

class DtError : public std::runtime_error {
 public:
  enum class Kind { malformed_syntax, length_mismatch, invalid_permutation, index_out_of_range };

  DtError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// Signed DT sequence of a knot diagram with n crossings. Entry i is the even
/// label paired with the odd label 2i+1. A positive entry means the even
/// visit passes over; an all-positive code is an alternating diagram.
///
/// The absolute values always form a permutation of {2, 4, ..., 2n}.
class DtCode {
 public:
  DtCode() = default;

  /// Throws DtError(invalid_permutation) unless the labels are a signed
  /// permutation of the even numbers 2..2n.
  static DtCode from_labels(std::vector<int> labels);

  std::size_t crossings() const noexcept { return labels_.size(); }
  const std::vector<int>& labels() const noexcept { return labels_; }
  int operator[](std::size_t i) const { return labels_[i]; }

  bool operator==(const DtCode&) const = default;

 private:
  explicit DtCode(std::vector<int> labels) : labels_(std::move(labels)) {}
  std::vector<int> labels_;
};

/// Accepts `{{n},{a1,...,an}}`; whitespace between tokens is ignored.
DtCode parse_dt(std::string_view text);

/// Canonical `{{n},{a1,...,an}}` with no whitespace.
std::string format_dt(const DtCode& code);

enum class SignKind { alternating, almost_alternating, other };

struct SignClass {
  SignKind kind = SignKind::alternating;
  // Index of the entry whose sign differs from the rest. Only meaningful for
  // almost_alternating; for n = 2 with mixed signs it is the negative entry.
  std::size_t minority = 0;

  bool operator==(const SignClass&) const = default;
};

SignClass classify_signs(const DtCode& code);

/// Crossing change at entry `index` (0-based).
DtCode flip_crossing(const DtCode& code, std::size_t index);

std::string_view to_string(SignKind kind);

}  // namespace almalt
