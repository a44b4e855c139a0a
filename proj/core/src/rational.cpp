#include "subsmooth/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace subsmooth {

namespace {

bool is_integer_literal(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rat::Rat(long num, long den) {
  if (den == 0) throw std::domain_error("Rat: zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rat::Rat(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

std::optional<Rat> Rat::parse(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  if (!is_integer_literal(num, true)) return std::nullopt;
  mpz_class n(std::string(num[0] == '+' ? num.substr(1) : num), 10);
  if (slash == std::string_view::npos) return Rat(mpq_class(n));

  const std::string_view den = text.substr(slash + 1);
  if (!is_integer_literal(den, false)) return std::nullopt;
  mpz_class d(std::string(den), 10);
  if (d == 0) return std::nullopt;
  return Rat(mpq_class(n, d));
}

Rat Rat::abs() const { return Rat(mpq_class(::abs(value_))); }

std::string Rat::str() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rat::numerator_str() const { return value_.get_num().get_str(); }
std::string Rat::denominator_str() const { return value_.get_den().get_str(); }

Rat& Rat::operator+=(const Rat& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rat& Rat::operator-=(const Rat& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rat& Rat::operator*=(const Rat& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rat& Rat::operator/=(const Rat& rhs) {
  if (rhs.is_zero()) throw std::domain_error("Rat: division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rat pow2(unsigned e) {
  mpz_class v = 1;
  mpz_mul_2exp(v.get_mpz_t(), v.get_mpz_t(), e);
  return Rat(mpq_class(v));
}

}  // namespace subsmooth
