#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>

#include "subsmooth/errors.hpp"
#include "subsmooth/rational.hpp"

namespace subsmooth {

/// Evaluation points used by the symbol calculus.
enum class UnitPoint { One, MinusOne };

/// Closed exponent interval [lo, hi]. The zero polynomial has no Support.
struct Support {
  std::int64_t lo = 0;
  std::int64_t hi = 0;

  [[nodiscard]] std::int64_t length() const { return hi - lo; }
  [[nodiscard]] bool contains(const Support& other) const {
    return lo <= other.lo && other.hi <= hi;
  }
  friend bool operator==(const Support&, const Support&) = default;
};

/// Smallest interval covering both; either side may be empty.
std::optional<Support> merge(const std::optional<Support>& a, const std::optional<Support>& b);

/// Finitely supported Laurent polynomial Σ cᵢ zⁱ over Rat.
///
/// Only nonzero coefficients are stored; the zero polynomial is the empty map.
class LaurentPoly {
 public:
  using Terms = std::map<std::int64_t, Rat>;

  LaurentPoly() = default;
  explicit LaurentPoly(Terms terms);

  static LaurentPoly constant(const Rat& c) { return monomial(c, 0); }
  static LaurentPoly monomial(const Rat& c, std::int64_t exponent);
  /// Coefficients of z^lo, z^(lo+1), ...
  static LaurentPoly from_coefficients(std::int64_t lo, std::span<const Rat> coeffs);

  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] Rat coefficient(std::int64_t exponent) const;
  [[nodiscard]] std::optional<Support> support() const;

  /// f(1) or f(-1).
  [[nodiscard]] Rat eval(UnitPoint at) const;
  /// f'(1) or f'(-1).
  [[nodiscard]] Rat deriv_eval(UnitPoint at) const;

  /// Multiplication by z^by.
  [[nodiscard]] LaurentPoly shift(std::int64_t by) const;
  /// f(z) ↦ f(z^factor); factor = 2 is the usual dilation.
  [[nodiscard]] LaurentPoly dilate(std::int64_t factor = 2) const;

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const Rat& s);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator-(LaurentPoly a) { return a *= Rat(-1); }
  friend LaurentPoly operator*(LaurentPoly a, const Rat& s) { return a *= s; }
  friend LaurentPoly operator*(const Rat& s, LaurentPoly a) { return a *= s; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// Human-readable form, e.g. "1/2*z^-1 + 1 + 1/2*z".
  [[nodiscard]] std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const LaurentPoly& f) { return os << f.str(); }

 private:
  void add_term(std::int64_t exponent, const Rat& c);

  Terms terms_;
};

/// The monomial z.
inline LaurentPoly z_poly() { return LaurentPoly::monomial(Rat(1), 1); }

/// The divisors the smoothing calculus needs.
enum class Binomial {
  ZPlusOne,        // z + 1
  ZInvPlusOne,     // z⁻¹ + 1
  ZInvMinusOne,    // z⁻¹ − 1
  ZInvSqMinusOne,  // z⁻² − 1
};

LaurentPoly binomial_poly(Binomial d);
std::string to_string(Binomial d);

/// The divisor does not divide the dividend in the Laurent ring.
class NotDivisible : public Error {
 public:
  NotDivisible(Binomial divisor, LaurentPoly remainder);

  [[nodiscard]] Binomial divisor() const { return divisor_; }
  [[nodiscard]] const LaurentPoly& remainder() const { return remainder_; }

 private:
  Binomial divisor_;
  LaurentPoly remainder_;
};

/// Exact quotient q with q·d = f. Throws NotDivisible otherwise.
LaurentPoly divide_exact(const LaurentPoly& f, Binomial d);

inline constexpr std::size_t kInfiniteMultiplicity = std::numeric_limits<std::size_t>::max();

/// Largest m with (z−1)^m | f; kInfiniteMultiplicity for f = 0.
std::size_t root_multiplicity_at_one(const LaurentPoly& f);

}  // namespace subsmooth
