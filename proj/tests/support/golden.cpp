#include "golden.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace subsmooth::testing {

LaurentPoly poly_of(std::int64_t lo, std::initializer_list<std::string_view> coeffs) {
  std::vector<Rat> values;
  for (auto text : coeffs) {
    auto r = Rat::parse(text);
    if (!r) throw std::invalid_argument("bad literal " + std::string(text));
    values.push_back(*r);
  }
  return LaurentPoly::from_coefficients(lo, values);
}

Mask golden_merrien() {
  return Mask::hermite(SymbolMatrix(2, {poly_of(-1, {"1/2", "1", "1/2"}),
                                        poly_of(-1, {"-1/8", "0", "1/8"}),
                                        poly_of(-1, {"3/4", "0", "-3/4"}),
                                        poly_of(-1, {"-1/8", "1/2", "-1/8"})}),
                       Rat(0));
}

Mask golden_merrien_smoothed() {
  return Mask::hermite(
      SymbolMatrix(2, {poly_of(-4, {"-1/16", "-1/16", "7/16", "15/16", "5/8", "1/8"}),
                       poly_of(0, {"-1/16", "-1/16"}),
                       poly_of(-6, {"1/16", "-3/16", "-1/4", "1", "9/16", "-13/16", "-3/8"}),
                       poly_of(-2, {"1/16", "-3/16", "3/16", "1/16"})}),
      Rat(-1, 2));
}

Mask golden_derham() {
  return Mask::hermite(
      SymbolMatrix(2, {poly_of(-2, {"5/32", "27/32", "27/32", "5/32"}),
                       poly_of(-2, {"-3/64", "-9/64", "9/64", "3/64"}),
                       poly_of(-2, {"9/16", "9/16", "-9/16", "-9/16"}),
                       poly_of(-2, {"-5/32", "3/32", "3/32", "-5/32"})}),
      Rat(-1, 2));
}

Mask golden_derham_smoothed() {
  return Mask::hermite(
      SymbolMatrix(
          2, {poly_of(-5, {"-3/128", "-3/32", "1/8", "25/32", "111/128", "5/16", "1/32"}),
              poly_of(-1, {"-3/128", "-3/32", "-3/128"}),
              poly_of(-7, {"3/128", "-7/128", "-5/16", "11/32", "165/128", "-17/128", "-17/16",
                           "-5/32", "1/16"}),
              poly_of(-3, {"3/128", "-7/128", "-21/128", "21/128", "-1/32"})}),
      Rat(-1));
}

Mask golden_double_knot() {
  return Mask::vector(SymbolMatrix(2, {poly_of(0, {"1/4", "3/4", "1/8"}),
                                       poly_of(1, {"1/4", "5/8"}),
                                       poly_of(0, {"5/8", "1/4"}),
                                       poly_of(0, {"1/8", "3/4", "1/4"})}));
}

SymbolMatrix golden_double_knot_bbar() {
  return SymbolMatrix(2, {poly_of(0, {"1/2", "1", "1/2"}), poly_of(0, {"-3/8", "0", "3/8"}),
                          poly_of(0, {"1/4", "0", "-1/4"}), poly_of(0, {"-1/8", "1/2", "-1/8"})});
}

SymbolMatrix golden_double_knot_abar_printed() {
  return SymbolMatrix(2, {poly_of(-1, {"1/4", "3/4", "3/4", "1/4"}),
                          poly_of(-1, {"-3/16", "-3/16"}),
                          poly_of(-2, {"1/8", "0", "-1/4", "0", "1/8"}),
                          poly_of(0, {"-1/16", "1/4", "-1/16"})});
}

SymbolMatrix golden_double_knot_a_printed() {
  return SymbolMatrix(2, {poly_of(-2, {"-1/16", "7/32", "9/16", "1/2", "1/32"}),
                          poly_of(-2, {"-1/16", "1/32", "7/16", "1/4", "3/32"}),
                          poly_of(-2, {"1/16", "7/32", "3/8", "1/4", "7/32"}),
                          poly_of(-2, {"1/16", "1/32", "1/8", "1/2", "5/32"})});
}

RatMatrix golden_double_knot_r() { return RatMatrix{{Rat(1), Rat(-1)}, {Rat(1), Rat(1)}}; }

LaurentPoly golden_bspline(unsigned degree) {
  // Coefficients of (1+z)^(ℓ+1) / 2^ℓ, starting at z^(−ℓ).
  std::vector<Rat> c{Rat(1)};
  for (unsigned i = 0; i <= degree; ++i) {
    std::vector<Rat> next(c.size() + 1);
    for (std::size_t j = 0; j < c.size(); ++j) {
      next[j] += c[j];
      next[j + 1] += c[j];
    }
    c = std::move(next);
  }
  for (auto& v : c) v /= pow2(degree);
  return LaurentPoly::from_coefficients(-static_cast<std::int64_t>(degree), c);
}

}  // namespace subsmooth::testing
