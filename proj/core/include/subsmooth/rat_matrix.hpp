#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "subsmooth/rational.hpp"

namespace subsmooth {

/// Dense row-major matrix over Rat.
class RatMatrix {
 public:
  RatMatrix() = default;
  /// Zero matrix.
  RatMatrix(std::size_t rows, std::size_t cols);
  RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rat> entries);
  RatMatrix(std::initializer_list<std::initializer_list<Rat>> rows);

  static RatMatrix identity(std::size_t n);
  static RatMatrix column(std::span<const Rat> values);
  static RatMatrix diagonal(std::span<const Rat> values);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] bool is_square() const { return rows_ == cols_; }
  [[nodiscard]] bool is_zero() const;

  const Rat& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  Rat& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

  [[nodiscard]] RatMatrix col(std::size_t c) const;
  [[nodiscard]] RatMatrix transpose() const;
  [[nodiscard]] std::span<const Rat> entries() const { return entries_; }

  RatMatrix& operator+=(const RatMatrix& rhs);
  RatMatrix& operator-=(const RatMatrix& rhs);
  RatMatrix& operator*=(const Rat& s);

  friend RatMatrix operator+(RatMatrix a, const RatMatrix& b) { return a += b; }
  friend RatMatrix operator-(RatMatrix a, const RatMatrix& b) { return a -= b; }
  friend RatMatrix operator*(RatMatrix a, const Rat& s) { return a *= s; }
  friend RatMatrix operator*(const Rat& s, RatMatrix a) { return a *= s; }
  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend bool operator==(const RatMatrix& a, const RatMatrix& b) = default;

  [[nodiscard]] std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const RatMatrix& m) { return os << m.str(); }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> entries_;
};

/// Horizontal concatenation; all blocks must have the same row count.
RatMatrix hstack(std::span<const RatMatrix> blocks);
/// Vertical concatenation; all blocks must have the same column count.
RatMatrix vstack(std::span<const RatMatrix> blocks);

struct EchelonForm {
  RatMatrix reduced;                // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

EchelonForm reduced_row_echelon(const RatMatrix& m);

std::size_t rank(const RatMatrix& m);

/// Exact basis of {v : Mv = 0}, one column vector per free variable of the
/// reduced echelon form. Empty iff M is injective.
std::vector<RatMatrix> kernel_basis(const RatMatrix& m);

/// Pivot columns of M (taken from M itself, not from its echelon form).
std::vector<RatMatrix> column_space_basis(const RatMatrix& m);

/// Throws SingularMatrix if det(M) = 0, DimensionMismatch if M is not square.
RatMatrix invert(const RatMatrix& m);

Rat determinant(const RatMatrix& m);

/// Coefficients c₀..cₙ of det(λI − M) = Σ cᵢ λⁱ (so cₙ = 1).
std::vector<Rat> characteristic_polynomial(const RatMatrix& m);

/// True when the column vectors of `a` and `b` span the same subspace.
bool same_span(std::span<const RatMatrix> a, std::span<const RatMatrix> b);

}  // namespace subsmooth
