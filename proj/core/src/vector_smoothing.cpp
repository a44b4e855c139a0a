#include "subsmooth/vector_smoothing.hpp"

#include <string>

namespace subsmooth {
namespace {

enum class Block { B11, B12, B21, B22 };

Block block_of(std::size_t r, std::size_t c, std::size_t k) {
  if (r < k) return c < k ? Block::B11 : Block::B12;
  return c < k ? Block::B21 : Block::B22;
}

void require_block_size(const Mask& m, std::size_t k) {
  if (k == 0 || k > m.dim()) {
    throw DimensionMismatch("block size k=" + std::to_string(k) + " outside [1, " +
                            std::to_string(m.dim()) + "]");
  }
}

bool block_vanishes(const Mask& m, std::size_t k, Block which, UnitPoint at) {
  const std::size_t p = m.dim();
  for (std::size_t r = 0; r < p; ++r) {
    for (std::size_t c = 0; c < p; ++c) {
      if (block_of(r, c, k) == which && !m.symbol()(r, c).eval(at).is_zero()) return false;
    }
  }
  return true;
}

Mask rebuild(const Mask& source, SymbolMatrix symbol) {
  if (source.kind() == SchemeKind::Scalar) return Mask::scalar(symbol(0, 0));
  return Mask::vector(std::move(symbol));
}

void require_scalar(const Mask& m, const char* op) {
  if (m.dim() != 1) throw DimensionMismatch(std::string(op) + ": expected a 1x1 mask");
}

}  // namespace

Mask derived_scalar(const Mask& m) {
  require_scalar(m, "derived_scalar");
  LaurentPoly q = divide_exact(m.scalar_symbol(), Binomial::ZPlusOne);
  return Mask::scalar(Rat(2) * q.shift(1));
}

Mask smooth_scalar(const Mask& m) {
  require_scalar(m, "smooth_scalar");
  return Mask::scalar(Rat(1, 2) * (binomial_poly(Binomial::ZInvPlusOne) * m.scalar_symbol()));
}

bool check_lak(const Mask& m, std::size_t k) {
  require_block_size(m, k);
  return block_vanishes(m, k, Block::B11, UnitPoint::MinusOne) &&
         block_vanishes(m, k, Block::B21, UnitPoint::One) &&
         block_vanishes(m, k, Block::B21, UnitPoint::MinusOne);
}

bool check_lbk(const Mask& m, std::size_t k) {
  require_block_size(m, k);
  return block_vanishes(m, k, Block::B12, UnitPoint::One);
}

Mask derived_k(const Mask& m, std::size_t k) {
  require_block_size(m, k);
  const LaurentPoly zinv_minus_one = binomial_poly(Binomial::ZInvMinusOne);
  SymbolMatrix out = m.symbol().map([&](std::size_t r, std::size_t c, const LaurentPoly& a) {
    switch (block_of(r, c, k)) {
      case Block::B11:
        return Rat(2) * divide_exact(a, Binomial::ZInvPlusOne);
      case Block::B12:
        return Rat(2) * (zinv_minus_one * a);
      case Block::B21:
        return Rat(2) * divide_exact(a, Binomial::ZInvSqMinusOne);
      case Block::B22:
        break;
    }
    return Rat(2) * a;
  });
  return rebuild(m, std::move(out));
}

Mask smooth_k_raw(const Mask& m, std::size_t k) {
  require_block_size(m, k);
  const LaurentPoly zinv_plus_one = binomial_poly(Binomial::ZInvPlusOne);
  const LaurentPoly zinv_sq_minus_one = binomial_poly(Binomial::ZInvSqMinusOne);
  const Rat half(1, 2);
  SymbolMatrix out = m.symbol().map([&](std::size_t r, std::size_t c, const LaurentPoly& b) {
    switch (block_of(r, c, k)) {
      case Block::B11:
        return half * (zinv_plus_one * b);
      case Block::B12:
        return half * divide_exact(b, Binomial::ZInvMinusOne);
      case Block::B21:
        return half * (zinv_sq_minus_one * b);
      case Block::B22:
        break;
    }
    return half * b;
  });
  return rebuild(m, std::move(out));
}

VectorSmoothingTrace smooth_vector_traced(const Mask& m) {
  Eigenstructure eigen = canonical_transform(m);
  Mask input = rebuild(m, m.symbol());
  Mask conjugated = conjugate(input, eigen.transform, eigen.inverse);
  Mask smoothed_conjugated = [&] {
    try {
      return smooth_k_raw(conjugated, eigen.k);
    } catch (const NotDivisible& e) {
      throw InternalError(std::string("smooth_vector: conjugated mask left l_b^k: ") + e.what());
    }
  }();
  Mask result = conjugate(smoothed_conjugated, eigen.inverse, eigen.transform);

  const std::vector<RatMatrix> before = eigen.basis;
  const std::vector<RatMatrix> after = common_one_eigenspace(result);
  if (!same_span(before, after)) {
    throw InternalError("smooth_vector: common 1-eigenspace changed");
  }
  const auto in_support = m.support();
  const auto out_support = result.support();
  if (in_support && out_support &&
      !Support{in_support->lo - 2, in_support->hi}.contains(*out_support)) {
    throw InternalError("smooth_vector: support grew beyond [lo-2, hi]");
  }
  return {std::move(eigen), std::move(conjugated), std::move(smoothed_conjugated),
          std::move(result)};
}

Mask smooth_vector(const Mask& m) { return smooth_vector_traced(m).result; }

}  // namespace subsmooth
