#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "subsmooth/laurent.hpp"
#include "subsmooth/rat_matrix.hpp"

namespace subsmooth {

/// Square p×p matrix of Laurent polynomials: the symbol 𝐀*(z) = Σ Aᵢ zⁱ of a
/// matrix mask.
class SymbolMatrix {
 public:
  SymbolMatrix() = default;
  /// Zero symbol of dimension p.
  explicit SymbolMatrix(std::size_t p);
  SymbolMatrix(std::size_t p, std::vector<LaurentPoly> entries);

  static SymbolMatrix identity(std::size_t p);
  static SymbolMatrix scalar_identity(const LaurentPoly& f, std::size_t p);
  static SymbolMatrix constant(const RatMatrix& m);
  /// Σ coeffs[i] z^(lo+i); all coefficient matrices must be p×p.
  static SymbolMatrix from_coefficients(std::int64_t lo, std::span<const RatMatrix> coeffs);

  [[nodiscard]] std::size_t dim() const { return p_; }
  const LaurentPoly& operator()(std::size_t r, std::size_t c) const { return entries_[r * p_ + c]; }
  LaurentPoly& operator()(std::size_t r, std::size_t c) { return entries_[r * p_ + c]; }

  [[nodiscard]] bool is_zero() const;
  /// Union of entry supports; empty for the zero symbol.
  [[nodiscard]] std::optional<Support> support() const;
  /// The mask coefficient Aₑ.
  [[nodiscard]] RatMatrix coefficient(std::int64_t exponent) const;

  [[nodiscard]] RatMatrix eval(UnitPoint at) const;
  [[nodiscard]] RatMatrix deriv_eval(UnitPoint at) const;

  [[nodiscard]] SymbolMatrix shift(std::int64_t by) const;
  [[nodiscard]] SymbolMatrix dilate(std::int64_t factor = 2) const;
  /// Entrywise map.
  [[nodiscard]] SymbolMatrix map(const std::function<LaurentPoly(std::size_t, std::size_t,
                                                                 const LaurentPoly&)>& f) const;

  SymbolMatrix& operator+=(const SymbolMatrix& rhs);
  SymbolMatrix& operator-=(const SymbolMatrix& rhs);
  SymbolMatrix& operator*=(const Rat& s);

  friend SymbolMatrix operator+(SymbolMatrix a, const SymbolMatrix& b) { return a += b; }
  friend SymbolMatrix operator-(SymbolMatrix a, const SymbolMatrix& b) { return a -= b; }
  friend SymbolMatrix operator*(SymbolMatrix a, const Rat& s) { return a *= s; }
  friend SymbolMatrix operator*(const Rat& s, SymbolMatrix a) { return a *= s; }
  friend SymbolMatrix operator*(const LaurentPoly& f, const SymbolMatrix& a);
  friend SymbolMatrix operator*(const SymbolMatrix& a, const SymbolMatrix& b);
  friend SymbolMatrix operator*(const RatMatrix& m, const SymbolMatrix& a);
  friend SymbolMatrix operator*(const SymbolMatrix& a, const RatMatrix& m);
  friend bool operator==(const SymbolMatrix&, const SymbolMatrix&) = default;

  [[nodiscard]] std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const SymbolMatrix& s) { return os << s.str(); }

 private:
  std::size_t p_ = 0;
  std::vector<LaurentPoly> entries_;
};

}  // namespace subsmooth
