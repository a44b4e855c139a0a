#include "random_masks.hpp"

namespace subsmooth::testing {
namespace {

LaurentPoly u_poly() { return Rat(1, 2) * LaurentPoly::from_coefficients(0, std::vector<Rat>{1, 1}); }
LaurentPoly w_poly() { return Rat(1, 2) * LaurentPoly::from_coefficients(0, std::vector<Rat>{1, -1}); }
// (z²−1)(z+1)/4: zero at ±1, slope 1 at 1, slope 0 at −1.
LaurentPoly slope_at_one() {
  return Rat(1, 4) * LaurentPoly::from_coefficients(0, std::vector<Rat>{-1, -1, 1, 1});
}
// (z²−1)(z−1)/4: zero at ±1, slope 0 at 1, slope 1 at −1.
LaurentPoly slope_at_minus_one() {
  return Rat(1, 4) * LaurentPoly::from_coefficients(0, std::vector<Rat>{1, -1, -1, 1});
}

}  // namespace

std::size_t MaskGen::uniform(std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
}

Rat MaskGen::rational(int max_num, int max_den) {
  const long num = std::uniform_int_distribution<long>(-max_num, max_num)(rng_);
  const long den = std::uniform_int_distribution<long>(1, max_den)(rng_);
  return Rat(num, den);
}

LaurentPoly MaskGen::poly(std::int64_t lo, std::int64_t hi) {
  std::vector<Rat> c;
  for (std::int64_t e = lo; e <= hi; ++e) c.push_back(rational());
  return LaurentPoly::from_coefficients(lo, c);
}

LaurentPoly MaskGen::poly_with_values(const Rat& at_one, const Rat& at_minus_one) {
  return poly_with_jets(at_one, at_minus_one, std::nullopt, std::nullopt);
}

LaurentPoly MaskGen::poly_with_jets(const Rat& at_one, const Rat& at_minus_one,
                                    const std::optional<Rat>& slope_one,
                                    const std::optional<Rat>& slope_minus_one) {
  const auto lo = -static_cast<std::int64_t>(uniform(0, 3));
  const auto hi = static_cast<std::int64_t>(uniform(0, 2));
  LaurentPoly f = poly(lo, hi).shift(0);
  f += u_poly() * (at_one - f.eval(UnitPoint::One));
  f += w_poly() * (at_minus_one - f.eval(UnitPoint::MinusOne));
  if (slope_one) f += slope_at_one() * (*slope_one - f.deriv_eval(UnitPoint::One));
  if (slope_minus_one) {
    f += slope_at_minus_one() * (*slope_minus_one - f.deriv_eval(UnitPoint::MinusOne));
  }
  return f;
}

SymbolMatrix MaskGen::symbol(std::size_t p) {
  SymbolMatrix s(p);
  for (std::size_t r = 0; r < p; ++r) {
    for (std::size_t c = 0; c < p; ++c) {
      const auto lo = -static_cast<std::int64_t>(uniform(0, 3));
      s(r, c) = poly(lo, lo + static_cast<std::int64_t>(uniform(0, 4)));
    }
  }
  return s;
}

Mask MaskGen::in_lak(std::size_t p, std::size_t k) {
  SymbolMatrix s = symbol(p);
  for (std::size_t r = 0; r < p; ++r) {
    for (std::size_t c = 0; c < k; ++c) {
      if (r < k) {
        s(r, c) = poly_with_values(rational(), Rat(0));
      } else {
        s(r, c) = poly_with_values(Rat(0), Rat(0));
      }
    }
  }
  return p == 1 ? Mask::scalar(s(0, 0)) : Mask::vector(s);
}

Mask MaskGen::in_lbk(std::size_t p, std::size_t k) {
  SymbolMatrix s = symbol(p);
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = k; c < p; ++c) s(r, c) = poly_with_values(Rat(0), rational());
  }
  return p == 1 ? Mask::scalar(s(0, 0)) : Mask::vector(s);
}

Mask MaskGen::spectral() {
  const LaurentPoly a12 = poly_with_values(rational(), rational());
  const LaurentPoly a22 = poly_with_values(rational(), rational());
  const LaurentPoly a11 =
      poly_with_jets(Rat(2), Rat(0), std::nullopt, -Rat(2) * a12.eval(UnitPoint::MinusOne));
  const LaurentPoly a21 = poly_with_jets(Rat(0), Rat(0), Rat(2) * a22.eval(UnitPoint::One) - Rat(2),
                                         -Rat(2) * a22.eval(UnitPoint::MinusOne));
  return Mask::hermite(SymbolMatrix(2, {a11, a12, a21, a22}));
}

Mask MaskGen::taylor() {
  const LaurentPoly b11 = poly_with_values(rational(), rational());
  const LaurentPoly b21 = poly_with_values(Rat(2) - b11.eval(UnitPoint::One), rational());
  return Mask::vector(SymbolMatrix(2, {b11, poly_with_values(Rat(0), Rat(0)), b21,
                                       poly_with_values(Rat(2), Rat(0))}));
}

RatMatrix MaskGen::invertible(std::size_t p) {
  for (;;) {
    RatMatrix r(p, p);
    for (std::size_t i = 0; i < p; ++i) {
      for (std::size_t j = 0; j < p; ++j) r(i, j) = rational(4, 3);
    }
    if (!cofactor_determinant(r).is_zero()) return r;
  }
}

Mask MaskGen::convergent_style(std::size_t p, std::size_t k) {
  for (;;) {
    SymbolMatrix s(p);
    for (std::size_t r = 0; r < p; ++r) {
      for (std::size_t c = 0; c < p; ++c) {
        const bool top = r < k;
        const bool left = c < k;
        if (left) {
          // Columns of 𝓔: B̄(1)e_c = 2e_c, B̄(−1)e_c = 0.
          s(r, c) = poly_with_values(r == c ? Rat(2) : Rat(0), Rat(0));
        } else if (top) {
          s(r, c) = poly_with_values(Rat(0), rational());
        } else {
          s(r, c) = poly_with_values(rational(3, 4), rational());
        }
      }
    }
    // Reject when ½B̄₂₂(1) has eigenvalue 1 or 2 (keeps 𝓔 exactly k-dimensional).
    const std::size_t q = p - k;
    RatMatrix m22(q, q);
    for (std::size_t r = 0; r < q; ++r) {
      for (std::size_t c = 0; c < q; ++c) m22(r, c) = Rat(1, 2) * s(k + r, k + c).eval(UnitPoint::One);
    }
    RatMatrix shifted_one = m22;
    RatMatrix shifted_two = m22;
    for (std::size_t i = 0; i < q; ++i) {
      shifted_one(i, i) -= Rat(1);
      shifted_two(i, i) -= Rat(2);
    }
    if (q > 0 && (cofactor_determinant(shifted_one).is_zero() ||
                  cofactor_determinant(shifted_two).is_zero())) {
      continue;
    }
    const RatMatrix r = invertible(p);
    return Mask::vector(r * s * invert(r));
  }
}

Seq MaskGen::sequence(std::size_t p, std::int64_t lo, std::int64_t hi) {
  Seq c;
  for (std::int64_t i = lo; i <= hi; ++i) {
    std::vector<Rat> v;
    for (std::size_t r = 0; r < p; ++r) v.push_back(rational(20, 7));
    c[i] = std::move(v);
  }
  return c;
}

}  // namespace subsmooth::testing
