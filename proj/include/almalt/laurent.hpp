#pragma once

// Exact integer Laurent polynomials in one variable.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

namespace almalt {

class PolyError : public std::runtime_error {
 public:
  enum class Kind { normalization_failure, zero_polynomial, variable_mismatch, overflow };

  PolyError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

enum class Variable : char { a = 'A', t = 't' };

class LaurentPoly {
 public:
  using Terms = std::map<int, std::int64_t>;

  explicit LaurentPoly(Variable var = Variable::t) : var_(var) {}

  static LaurentPoly monomial(Variable var, std::int64_t coeff, int exponent);
  static LaurentPoly constant(Variable var, std::int64_t c) { return monomial(var, c, 0); }

  Variable variable() const noexcept { return var_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::int64_t coefficient(int exponent) const;
  int min_exponent() const;
  int max_exponent() const;

  /// Adds c * var^exponent, dropping the term if it cancels.
  void add_term(int exponent, std::int64_t c);

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(std::int64_t c);

  /// Multiplies by var^k.
  LaurentPoly shifted(int k) const;
  /// Substitutes var -> var^-1.
  LaurentPoly reflected() const;

  friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs += rhs; }
  friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs -= rhs; }
  friend LaurentPoly operator*(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs *= rhs; }
  friend LaurentPoly operator*(LaurentPoly lhs, std::int64_t c) { return lhs *= c; }

  bool operator==(const LaurentPoly&) const = default;

 private:
  void check_same_variable(const LaurentPoly& rhs) const;

  Variable var_;
  Terms terms_;
};

/// Ascending exponents as `c*t^e` joined by " + "; "0" for the zero polynomial.
std::string to_string(const LaurentPoly& p);

/// Max minus min exponent. Throws PolyError(zero_polynomial) on zero.
int span_t(const LaurentPoly& p);

/// p == q, or p == q with every exponent negated.
bool equal_up_to_mirror(const LaurentPoly& p, const LaurentPoly& q);

}  // namespace almalt
