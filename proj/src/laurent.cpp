#include "almalt/laurent.hpp"

#include <sstream>

namespace almalt {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw PolyError(PolyError::Kind::overflow, "coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw PolyError(PolyError::Kind::overflow, "coefficient overflow");
  return r;
}

}  // namespace

LaurentPoly LaurentPoly::monomial(Variable var, std::int64_t coeff, int exponent) {
  LaurentPoly p(var);
  p.add_term(exponent, coeff);
  return p;
}

std::int64_t LaurentPoly::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

int LaurentPoly::min_exponent() const {
  if (is_zero()) throw PolyError(PolyError::Kind::zero_polynomial, "zero polynomial has no degree");
  return terms_.begin()->first;
}

int LaurentPoly::max_exponent() const {
  if (is_zero()) throw PolyError(PolyError::Kind::zero_polynomial, "zero polynomial has no degree");
  return terms_.rbegin()->first;
}

void LaurentPoly::add_term(int exponent, std::int64_t c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (inserted) return;
  it->second = checked_add(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

void LaurentPoly::check_same_variable(const LaurentPoly& rhs) const {
  if (var_ != rhs.var_)
    throw PolyError(PolyError::Kind::variable_mismatch, "polynomials in different variables");
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  check_same_variable(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  check_same_variable(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, checked_mul(c, -1));
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
  check_same_variable(rhs);
  LaurentPoly out(var_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : rhs.terms_) out.add_term(e1 + e2, checked_mul(c1, c2));
  terms_ = std::move(out.terms_);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(std::int64_t c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff = checked_mul(coeff, c);
  return *this;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly out(var_);
  for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e + k, c);
  return out;
}

LaurentPoly LaurentPoly::reflected() const {
  LaurentPoly out(var_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(-e, c);
  return out;
}

std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    if (!first) out << " + ";
    first = false;
    out << c << '*' << static_cast<char>(p.variable()) << '^' << e;
  }
  return out.str();
}

int span_t(const LaurentPoly& p) {
  return p.max_exponent() - p.min_exponent();
}

bool equal_up_to_mirror(const LaurentPoly& p, const LaurentPoly& q) {
  if (p.variable() != q.variable())
    throw PolyError(PolyError::Kind::variable_mismatch, "polynomials in different variables");
  return p == q || p == q.reflected();
}

}  // namespace almalt
