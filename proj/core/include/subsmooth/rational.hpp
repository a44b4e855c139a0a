#pragma once

#include <compare>
#include <concepts>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace subsmooth {

/// Exact rational number of unbounded size.
///
/// Always stored in lowest terms with a positive denominator, so equality is
/// structural and `str()` is canonical.
class Rat {
 public:
  Rat() = default;

  template <std::integral T>
  Rat(T value) : value_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)

  /// Throws std::domain_error when `den` is zero.
  Rat(long num, long den);

  explicit Rat(mpq_class value);

  /// Parses "n" or "p/q" with q > 0. Whitespace is not accepted.
  static std::optional<Rat> parse(std::string_view text);

  [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
  [[nodiscard]] int sign() const { return sgn(value_); }
  [[nodiscard]] Rat abs() const;
  [[nodiscard]] double to_double() const { return value_.get_d(); }
  [[nodiscard]] std::string str() const;
  [[nodiscard]] std::string numerator_str() const;
  [[nodiscard]] std::string denominator_str() const;
  [[nodiscard]] const mpq_class& raw() const { return value_; }

  Rat& operator+=(const Rat& rhs);
  Rat& operator-=(const Rat& rhs);
  Rat& operator*=(const Rat& rhs);
  /// Throws std::domain_error on division by zero.
  Rat& operator/=(const Rat& rhs);

  friend Rat operator+(Rat lhs, const Rat& rhs) { return lhs += rhs; }
  friend Rat operator-(Rat lhs, const Rat& rhs) { return lhs -= rhs; }
  friend Rat operator*(Rat lhs, const Rat& rhs) { return lhs *= rhs; }
  friend Rat operator/(Rat lhs, const Rat& rhs) { return lhs /= rhs; }
  friend Rat operator-(const Rat& v) { return Rat(mpq_class(-v.value_)); }

  friend bool operator==(const Rat& a, const Rat& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rat& v) { return os << v.str(); }

 private:
  mpq_class value_;
};

/// 2^e for e >= 0, exactly.
Rat pow2(unsigned e);

}  // namespace subsmooth
