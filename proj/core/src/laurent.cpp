#include "subsmooth/laurent.hpp"

#include <sstream>
#include <utility>

namespace subsmooth {

std::optional<Support> merge(const std::optional<Support>& a, const std::optional<Support>& b) {
  if (!a) return b;
  if (!b) return a;
  return Support{std::min(a->lo, b->lo), std::max(a->hi, b->hi)};
}

LaurentPoly::LaurentPoly(Terms terms) {
  for (auto& [e, c] : terms) {
    if (!c.is_zero()) terms_.emplace(e, std::move(c));
  }
}

LaurentPoly LaurentPoly::monomial(const Rat& c, std::int64_t exponent) {
  LaurentPoly f;
  f.add_term(exponent, c);
  return f;
}

LaurentPoly LaurentPoly::from_coefficients(std::int64_t lo, std::span<const Rat> coeffs) {
  LaurentPoly f;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    f.add_term(lo + static_cast<std::int64_t>(i), coeffs[i]);
  }
  return f;
}

Rat LaurentPoly::coefficient(std::int64_t exponent) const {
  const auto it = terms_.find(exponent);
  return it == terms_.end() ? Rat(0) : it->second;
}

std::optional<Support> LaurentPoly::support() const {
  if (terms_.empty()) return std::nullopt;
  return Support{terms_.begin()->first, terms_.rbegin()->first};
}

Rat LaurentPoly::eval(UnitPoint at) const {
  Rat sum;
  for (const auto& [e, c] : terms_) {
    if (at == UnitPoint::MinusOne && (e % 2 != 0)) {
      sum -= c;
    } else {
      sum += c;
    }
  }
  return sum;
}

Rat LaurentPoly::deriv_eval(UnitPoint at) const {
  // d/dz cᵢzⁱ = i·cᵢ z^{i−1}; at z = −1 the sign is (−1)^{i−1}.
  Rat sum;
  for (const auto& [e, c] : terms_) {
    Rat term = c * Rat(e);
    if (at == UnitPoint::MinusOne && ((e - 1) % 2 != 0)) term = -term;
    sum += term;
  }
  return sum;
}

LaurentPoly LaurentPoly::shift(std::int64_t by) const {
  LaurentPoly f;
  for (const auto& [e, c] : terms_) f.terms_.emplace_hint(f.terms_.end(), e + by, c);
  return f;
}

LaurentPoly LaurentPoly::dilate(std::int64_t factor) const {
  LaurentPoly f;
  for (const auto& [e, c] : terms_) f.terms_.emplace_hint(f.terms_.end(), e * factor, c);
  return f;
}

void LaurentPoly::add_term(std::int64_t exponent, const Rat& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rat& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  }
  return out;
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rat mag = c;
    if (first) {
      if (c.sign() < 0) {
        os << '-';
        mag = -c;
      }
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
      mag = c.abs();
    }
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != Rat(1)) os << mag << '*';
    os << 'z';
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

LaurentPoly binomial_poly(Binomial d) {
  switch (d) {
    case Binomial::ZPlusOne:
      return LaurentPoly({{0, Rat(1)}, {1, Rat(1)}});
    case Binomial::ZInvPlusOne:
      return LaurentPoly({{-1, Rat(1)}, {0, Rat(1)}});
    case Binomial::ZInvMinusOne:
      return LaurentPoly({{-1, Rat(1)}, {0, Rat(-1)}});
    case Binomial::ZInvSqMinusOne:
      return LaurentPoly({{-2, Rat(1)}, {0, Rat(-1)}});
  }
  throw InternalError("binomial_poly: unknown divisor");
}

std::string to_string(Binomial d) {
  switch (d) {
    case Binomial::ZPlusOne:
      return "z+1";
    case Binomial::ZInvPlusOne:
      return "z^-1+1";
    case Binomial::ZInvMinusOne:
      return "z^-1-1";
    case Binomial::ZInvSqMinusOne:
      return "z^-2-1";
  }
  return "?";
}

NotDivisible::NotDivisible(Binomial divisor, LaurentPoly remainder)
    : Error("not divisible by " + to_string(divisor) + " (remainder " + remainder.str() + ")"),
      divisor_(divisor),
      remainder_(std::move(remainder)) {}

// Synthetic division from the lowest exponent upward: each step cancels the
// lowest remaining term against the divisor's lowest term.
LaurentPoly divide_exact(const LaurentPoly& f, Binomial d) {
  if (f.is_zero()) return {};
  const LaurentPoly divisor = binomial_poly(d);
  const auto [d_lo, d_hi] = *divisor.support();
  const Rat d_lead = divisor.coefficient(d_lo);
  const std::int64_t q_hi = f.support()->hi - d_hi;

  LaurentPoly quotient;
  LaurentPoly rem = f;
  while (!rem.is_zero()) {
    const auto& [e, c] = *rem.terms().begin();
    const std::int64_t q_exp = e - d_lo;
    if (q_exp > q_hi) break;
    const LaurentPoly term = LaurentPoly::monomial(c / d_lead, q_exp);
    quotient += term;
    rem -= term * divisor;
  }
  if (!rem.is_zero()) throw NotDivisible(d, rem);
  return quotient;
}

std::size_t root_multiplicity_at_one(const LaurentPoly& f) {
  if (f.is_zero()) return kInfiniteMultiplicity;
  // z⁻¹ − 1 = −z⁻¹(z − 1) differs from z − 1 by a unit.
  std::size_t m = 0;
  LaurentPoly g = f;
  while (g.eval(UnitPoint::One).is_zero()) {
    g = divide_exact(g, Binomial::ZInvMinusOne);
    ++m;
  }
  return m;
}

}  // namespace subsmooth
