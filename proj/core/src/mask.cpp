#include "subsmooth/mask.hpp"

#include <map>
#include <utility>

namespace subsmooth {

std::string to_string(SchemeKind kind) {
  switch (kind) {
    case SchemeKind::Scalar:
      return "scalar";
    case SchemeKind::Vector:
      return "vector";
    case SchemeKind::Hermite:
      return "hermite";
  }
  return "?";
}

Mask Mask::scalar(LaurentPoly symbol) {
  return Mask(SchemeKind::Scalar, SymbolMatrix(1, {std::move(symbol)}), Rat(0));
}

Mask Mask::vector(SymbolMatrix symbol) {
  if (symbol.dim() == 0) throw DimensionMismatch("Mask: dimension must be positive");
  return Mask(SchemeKind::Vector, std::move(symbol), Rat(0));
}

Mask Mask::hermite(SymbolMatrix symbol, Rat phi) {
  if (symbol.dim() != 2) throw DimensionMismatch("Mask: Hermite masks must have p = 2");
  return Mask(SchemeKind::Hermite, std::move(symbol), std::move(phi));
}

Mask Mask::hermite(SymbolMatrix symbol) {
  if (symbol.dim() != 2) throw DimensionMismatch("Mask: Hermite masks must have p = 2");
  Rat phi = spectral_phi(symbol);
  return Mask(SchemeKind::Hermite, std::move(symbol), std::move(phi));
}

const LaurentPoly& Mask::scalar_symbol() const {
  if (dim() != 1) throw DimensionMismatch("Mask: not a 1x1 symbol");
  return symbol_(0, 0);
}

const Rat& Mask::phi() const {
  if (kind_ != SchemeKind::Hermite) throw PreconditionFailed("Mask: phi is only defined for Hermite masks");
  return phi_;
}

Mask Mask::with_symbol(SymbolMatrix symbol) const {
  if (symbol.dim() != dim()) throw DimensionMismatch("Mask::with_symbol: dimension changed");
  return Mask(kind_, std::move(symbol), phi_);
}

Rat spectral_phi(const SymbolMatrix& symbol) {
  if (symbol.dim() != 2) throw DimensionMismatch("spectral_phi: p must be 2");
  return (symbol(0, 0).deriv_eval(UnitPoint::One) - Rat(2) * symbol(0, 1).eval(UnitPoint::One)) /
         Rat(2);
}

EvenOddSums even_odd_sums(const Mask& m) {
  const RatMatrix at_one = m.symbol().eval(UnitPoint::One);
  const RatMatrix at_minus_one = m.symbol().eval(UnitPoint::MinusOne);
  const Rat half(1, 2);
  return {half * (at_one + at_minus_one), half * (at_one - at_minus_one)};
}

std::vector<RatMatrix> common_one_eigenspace(const Mask& m) {
  const std::size_t p = m.dim();
  const RatMatrix blocks[] = {
      m.symbol().eval(UnitPoint::One) - Rat(2) * RatMatrix::identity(p),
      m.symbol().eval(UnitPoint::MinusOne),
  };
  return kernel_basis(vstack(blocks));
}

RatMatrix m_matrix(const Mask& m) { return Rat(1, 2) * m.symbol().eval(UnitPoint::One); }

Rat operator_norm(const SymbolMatrix& symbol, std::uint64_t dilation) {
  const std::size_t p = symbol.dim();
  const auto d = static_cast<std::int64_t>(dilation);
  // Accumulated |C| per residue class, row-major p×p.
  std::map<std::int64_t, std::vector<Rat>> classes;
  for (std::size_t r = 0; r < p; ++r) {
    for (std::size_t c = 0; c < p; ++c) {
      for (const auto& [e, coeff] : symbol(r, c).terms()) {
        const std::int64_t residue = ((e % d) + d) % d;
        auto& acc = classes.try_emplace(residue, p * p).first->second;
        acc[r * p + c] += coeff.abs();
      }
    }
  }
  Rat norm;
  for (const auto& [residue, acc] : classes) {
    for (std::size_t r = 0; r < p; ++r) {
      Rat row_sum;
      for (std::size_t c = 0; c < p; ++c) row_sum += acc[r * p + c];
      if (row_sum > norm) norm = row_sum;
    }
  }
  return norm;
}

Rat operator_norm(const Mask& m) { return operator_norm(m.symbol(), 2); }

Mask conjugate(const Mask& m, const RatMatrix& r) { return conjugate(m, r, invert(r)); }

Mask conjugate(const Mask& m, const RatMatrix& r, const RatMatrix& r_inverse) {
  if (r.rows() != m.dim() || r.cols() != m.dim()) throw DimensionMismatch("conjugate: shape");
  return m.with_symbol(r_inverse * m.symbol() * r);
}

Eigenstructure canonical_transform(const Mask& m) {
  const std::size_t p = m.dim();
  Eigenstructure es;
  es.basis = common_one_eigenspace(m);
  es.k = es.basis.size();
  if (es.k == 0) throw EmptyEigenspace("canonical_transform: common 1-eigenspace is {0}");

  const std::vector<RatMatrix> complement =
      column_space_basis(m_matrix(m) - RatMatrix::identity(p));
  if (es.k + complement.size() != p) {
    throw EmptyEigenspace(
        "canonical_transform: eigenvalue 1 of M is not semisimple with eigenspace E");
  }
  std::vector<RatMatrix> columns = es.basis;
  columns.insert(columns.end(), complement.begin(), complement.end());
  es.transform = hstack(columns);
  try {
    es.inverse = invert(es.transform);
  } catch (const SingularMatrix&) {
    throw EmptyEigenspace("canonical_transform: E and the range of M - I are not complementary");
  }
  return es;
}

}  // namespace subsmooth
