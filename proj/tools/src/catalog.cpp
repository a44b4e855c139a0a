#include "subsmooth/cli/catalog.hpp"

#include <charconv>
#include <initializer_list>

namespace subsmooth::cli {
namespace {

LaurentPoly poly(std::int64_t lo, std::initializer_list<Rat> coeffs) {
  return LaurentPoly::from_coefficients(lo, std::span<const Rat>(coeffs.begin(), coeffs.size()));
}

Mask hermite_from_table(std::int64_t lo, std::initializer_list<RatMatrix> coeffs, Rat scale,
                        Rat phi) {
  return Mask::hermite(
      scale * SymbolMatrix::from_coefficients(
                  lo, std::span<const RatMatrix>(coeffs.begin(), coeffs.size())),
      std::move(phi));
}

}  // namespace

Mask bspline(unsigned degree) {
  const LaurentPoly step = Rat(1, 2) * poly(-1, {1, 1});
  LaurentPoly symbol = poly(0, {1, 1});
  for (unsigned l = 0; l < degree; ++l) symbol = step * symbol;
  return Mask::scalar(std::move(symbol));
}

Mask double_knot() {
  return Mask::vector(Rat(1, 8) * SymbolMatrix(2, {
                                                      poly(0, {2, 6, 1}),
                                                      poly(1, {2, 5}),
                                                      poly(0, {5, 2}),
                                                      poly(0, {1, 6, 2}),
                                                  }));
}

Mask merrien() {
  return hermite_from_table(-1,
                            {
                                RatMatrix{{Rat(1, 2), Rat(-1, 8)}, {Rat(3, 4), Rat(-1, 8)}},
                                RatMatrix{{Rat(1), Rat(0)}, {Rat(0), Rat(1, 2)}},
                                RatMatrix{{Rat(1, 2), Rat(1, 8)}, {Rat(-3, 4), Rat(-1, 8)}},
                            },
                            Rat(1), Rat(0));
}

Mask merrien_smoothed() {
  return Mask::hermite(Rat(1, 16) * SymbolMatrix(2, {
                                                        poly(-2, {1, 2, 1}) * poly(-2, {-1, 1, 6, 2}),
                                                        poly(0, {-1, -1}),
                                                        poly(-2, {1, 0, -1}) *
                                                            poly(-4, {1, -3, -3, 13, 6}),
                                                        poly(-2, {1, -3, 3, 1}),
                                                    }),
                       Rat(-1, 2));
}

Mask derham() {
  return hermite_from_table(-2,
                            {
                                RatMatrix{{Rat(5, 4), Rat(-3, 8)}, {Rat(9, 2), Rat(-5, 4)}},
                                RatMatrix{{Rat(27, 4), Rat(-9, 8)}, {Rat(9, 2), Rat(3, 4)}},
                                RatMatrix{{Rat(27, 4), Rat(9, 8)}, {Rat(-9, 2), Rat(3, 4)}},
                                RatMatrix{{Rat(5, 4), Rat(3, 8)}, {Rat(-9, 2), Rat(-5, 4)}},
                            },
                            Rat(1, 8), Rat(-1, 2));
}

Mask derham_smoothed() {
  return Mask::hermite(
      Rat(1, 128) * SymbolMatrix(2, {
                                        poly(-1, {1, 1}) * poly(-4, {-3, -9, 25, 75, 36, 4}),
                                        poly(-1, {-3, -12, -3}),
                                        poly(-2, {1, 0, -1}) *
                                            poly(-5, {3, -7, -37, 37, 128, 20, -8}),
                                        poly(-3, {3, -7, -21, 21, -4}),
                                    }),
      Rat(-1));
}

std::optional<Mask> catalog_lookup(std::string_view name) {
  constexpr std::string_view prefix = "bspline";
  if (name.starts_with(prefix) && name.size() > prefix.size()) {
    const std::string_view digits = name.substr(prefix.size());
    unsigned degree = 0;
    const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), degree);
    if (ec != std::errc() || end != digits.data() + digits.size() || degree > 32) {
      return std::nullopt;
    }
    return bspline(degree);
  }
  if (name == "double-knot") return double_knot();
  if (name == "merrien") return merrien();
  if (name == "merrien-smoothed") return merrien_smoothed();
  if (name == "derham") return derham();
  if (name == "derham-smoothed") return derham_smoothed();
  return std::nullopt;
}

std::vector<std::string> catalog_names() {
  return {"bspline<l>", "double-knot", "merrien", "merrien-smoothed", "derham", "derham-smoothed"};
}

}  // namespace subsmooth::cli
