#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "subsmooth/rat_matrix.hpp"
#include "subsmooth/symbol_matrix.hpp"

namespace subsmooth {

enum class SchemeKind { Scalar, Vector, Hermite };

std::string to_string(SchemeKind kind);

/// A stationary subdivision scheme: its kind and the symbol of its mask.
///
/// Scalar masks are stored as 1×1 symbols. Hermite masks refine function and
/// first-derivative values (p = 2) and carry the spectral shift φ.
class Mask {
 public:
  static Mask scalar(LaurentPoly symbol);
  static Mask vector(SymbolMatrix symbol);
  /// Throws DimensionMismatch unless p = 2.
  static Mask hermite(SymbolMatrix symbol, Rat phi);
  /// φ taken from (α*₁₁'(1) − 2α*₁₂(1))/2.
  static Mask hermite(SymbolMatrix symbol);

  [[nodiscard]] SchemeKind kind() const { return kind_; }
  [[nodiscard]] std::size_t dim() const { return symbol_.dim(); }
  [[nodiscard]] const SymbolMatrix& symbol() const { return symbol_; }
  /// The 1×1 entry; valid for any p = 1 mask.
  [[nodiscard]] const LaurentPoly& scalar_symbol() const;
  /// Throws PreconditionFailed for non-Hermite masks.
  [[nodiscard]] const Rat& phi() const;
  [[nodiscard]] std::optional<Support> support() const { return symbol_.support(); }

  /// Same kind (and φ) with a new symbol.
  [[nodiscard]] Mask with_symbol(SymbolMatrix symbol) const;

  friend bool operator==(const Mask&, const Mask&) = default;

 private:
  Mask(SchemeKind kind, SymbolMatrix symbol, Rat phi)
      : kind_(kind), symbol_(std::move(symbol)), phi_(std::move(phi)) {}

  SchemeKind kind_ = SchemeKind::Vector;
  SymbolMatrix symbol_;
  Rat phi_;
};

/// φ as read off the first half of spectral condition (3).
Rat spectral_phi(const SymbolMatrix& symbol);

struct EvenOddSums {
  RatMatrix even;  // A⁰ = Σ A₂ᵢ
  RatMatrix odd;   // A¹ = Σ A₂ᵢ₊₁
};

EvenOddSums even_odd_sums(const Mask& m);

/// Basis of 𝓔 = {v : 𝐀*(1)v = 2v, 𝐀*(−1)v = 0}.
std::vector<RatMatrix> common_one_eigenspace(const Mask& m);

/// M = ½𝐀*(1).
RatMatrix m_matrix(const Mask& m);

/// ‖S‖∞ of the subdivision operator (S𝐜)ᵢ = Σⱼ C_{i−dilation·j} cⱼ with the
/// max-norm on ℝᵖ: the largest row sum of Σⱼ |C_{ε+dilation·j}| over residues ε.
Rat operator_norm(const SymbolMatrix& symbol, std::uint64_t dilation);

/// ‖S_𝐀‖∞ for the mask's own (dyadic) refinement.
Rat operator_norm(const Mask& m);

/// Symbol R⁻¹𝐀*(z)R; kind and φ preserved. Throws SingularMatrix.
Mask conjugate(const Mask& m, const RatMatrix& r);
/// Same, with the inverse supplied by the caller.
Mask conjugate(const Mask& m, const RatMatrix& r, const RatMatrix& r_inverse);

struct Eigenstructure {
  std::size_t k = 0;               // dim 𝓔
  std::vector<RatMatrix> basis;    // basis of 𝓔
  RatMatrix transform;             // R̄ = [basis | Q]
  RatMatrix inverse;               // R̄⁻¹
};

/// R̄ = [basis of 𝓔 | pivot columns of (M − I)].
///
/// Throws EmptyEigenspace when 𝓔 = {0} or when the eigenvalue 1 of M is
/// defective relative to 𝓔 (no invariant complement), both of which rule out
/// convergence.
Eigenstructure canonical_transform(const Mask& m);

}  // namespace subsmooth
