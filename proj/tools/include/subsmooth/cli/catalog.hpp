#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "subsmooth/mask.hpp"

namespace subsmooth::cli {

/// Built-in masks, addressed as `catalog:<name>`.
///
/// bspline<l> for l = 0..32 gives (z+1)·((z+1)/2·z⁻¹)^l.
std::optional<Mask> catalog_lookup(std::string_view name);

/// Names accepted by catalog_lookup (bspline listed as "bspline<l>").
std::vector<std::string> catalog_names();

Mask bspline(unsigned degree);
Mask double_knot();
Mask merrien();
Mask merrien_smoothed();
Mask derham();
Mask derham_smoothed();

}  // namespace subsmooth::cli
