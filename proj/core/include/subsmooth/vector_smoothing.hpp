#pragma once

#include <cstddef>

#include "subsmooth/mask.hpp"

namespace subsmooth {

/// ∂α with (∂α)*(z) = 2z·α*(z)/(z+1). Throws NotDivisible when α*(−1) ≠ 0.
Mask derived_scalar(const Mask& m);

/// 𝓘α with (𝓘α)*(z) = (z⁻¹+1)/2·α*(z), so that ∂(𝓘α) = α.
Mask smooth_scalar(const Mask& m);

/// 𝐀*₁₁(−1) = 0 and 𝐀*₂₁(±1) = 0, with 𝐀₁₁ the leading k×k block.
bool check_lak(const Mask& m, std::size_t k);
/// 𝐁*₁₂(1) = 0.
bool check_lbk(const Mask& m, std::size_t k);

/// ∂ₖ𝐀 = 2·[𝐀₁₁/(z⁻¹+1), (z⁻¹−1)𝐀₁₂; 𝐀₂₁/(z⁻²−1), 𝐀₂₂].
/// Throws NotDivisible outside ℓₐᵏ, DimensionMismatch unless 1 ≤ k ≤ p.
Mask derived_k(const Mask& m, std::size_t k);

/// 𝓘ₖ𝐁 = ½·[(z⁻¹+1)𝐁₁₁, 𝐁₁₂/(z⁻¹−1); (z⁻²−1)𝐁₂₁, 𝐁₂₂].
/// Throws NotDivisible outside ℓ_bᵏ.
Mask smooth_k_raw(const Mask& m, std::size_t k);

struct VectorSmoothingTrace {
  Eigenstructure eigen;
  Mask conjugated;           // 𝐁̄ = R̄⁻¹𝐁R̄
  Mask smoothed_conjugated;  // 𝓘ₖ𝐁̄
  Mask result;               // R̄(𝓘ₖ𝐁̄)R̄⁻¹
};

/// One round of vector smoothing in the canonical coordinates of 𝐁.
///
/// Scalar masks stay scalar; anything else comes back as a Vector mask.
/// Throws EmptyEigenspace when no canonical transformation exists.
Mask smooth_vector(const Mask& m);
VectorSmoothingTrace smooth_vector_traced(const Mask& m);

}  // namespace subsmooth
