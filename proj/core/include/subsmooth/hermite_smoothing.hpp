#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "subsmooth/mask.hpp"

namespace subsmooth {

struct SpectralReport {
  bool holds = false;
  Rat phi;                    // meaningful when holds
  std::vector<int> violated;  // condition numbers 1..4
};

struct TaylorReport {
  bool holds_taylor = false;
  bool in_tilde = false;     // additionally 𝓔 = span{e₂}
  std::vector<int> violated;  // condition numbers 1..3
  std::optional<Rat> zeta;   // 1 + η when 𝓔 = span{e₂} and β*₁₁(1) ≠ 2
};

/// The four algebraic forms of the spectral condition (constants and linears).
///
/// For Hermite masks the stored φ must agree with condition (3); a mismatch
/// throws InternalError.
SpectralReport check_spectral(const Mask& m);

/// A₀ = diag(1, ½) and A₂ᵢ = 0 for i ≠ 0.
bool check_interpolatory(const Mask& m);

/// ∂ₜ𝐀, the Taylor scheme: T S_𝐀 = ½ S_{∂ₜ𝐀} T.
/// Throws NotDivisible when 𝐀 does not reproduce constants.
Mask taylor_scheme(const Mask& m);

/// 𝓘ₜ𝐁, with φ = ½(β*₁₂'(1) + β*₂₂'(1) − 1). Throws NotDivisible when the
/// Taylor conditions fail.
Mask inverse_taylor(const Mask& m);

TaylorReport check_taylor(const Mask& m);

struct RetaylorResult {
  Mask mask;  // 𝓡⁻¹𝐁𝓡
  Rat eta;
};

/// Conjugation by 𝓡 = [[1,0],[η,1]], η = 1 + b/(a−2) with a = β*₁₁(1),
/// b = β*₂₁(1). Throws NotInTilde unless 𝓔 = span{e₂}, DegenerateA if a = 2.
RetaylorResult retaylor_transform(const Mask& m);

struct HermiteSmoothingTrace {
  Mask taylor;              // 𝐁 = ∂ₜ𝐀
  Mask smoothed_taylor;     // 𝓘₁𝐁 in the coordinates of 𝐁
  Mask retaylored;          // 𝓡⁻¹(𝓘₁𝐁)𝓡
  Mask result;              // 𝐂 = 𝓘ₜ(retaylored)
  Rat eta;
  Rat zeta;
  bool taylor_preserved = false;  // 𝓘₁𝐁 already satisfied the Taylor conditions
};

/// One round of Hermite smoothing through the Taylor scheme.
///
/// Throws PreconditionFailed when the spectral condition fails and NotInTilde
/// when the Taylor scheme's common eigenspace is not span{e₂}.
Mask smooth_hermite(const Mask& m);
HermiteSmoothingTrace smooth_hermite_traced(const Mask& m);

/// The same 𝐂 computed directly from 𝐀 in closed form (general ζ). When
/// α*₁₂(1) = 0 the ζ = 1 specialization is evaluated too and must agree.
Mask smooth_hermite_closed_form(const Mask& m);

/// Multiplicity of the root of α*₁₂ at 1; kInfiniteMultiplicity when α₁₂ = 0.
std::size_t zeta_multiplicity_forecast(const Mask& m);

}  // namespace subsmooth
