#include "subsmooth/symbol_matrix.hpp"

#include <sstream>
#include <utility>

namespace subsmooth {

SymbolMatrix::SymbolMatrix(std::size_t p) : p_(p), entries_(p * p) {}

SymbolMatrix::SymbolMatrix(std::size_t p, std::vector<LaurentPoly> entries)
    : p_(p), entries_(std::move(entries)) {
  if (entries_.size() != p_ * p_) throw DimensionMismatch("SymbolMatrix: need p*p entries");
}

SymbolMatrix SymbolMatrix::identity(std::size_t p) {
  return scalar_identity(LaurentPoly::constant(Rat(1)), p);
}

SymbolMatrix SymbolMatrix::scalar_identity(const LaurentPoly& f, std::size_t p) {
  SymbolMatrix s(p);
  for (std::size_t i = 0; i < p; ++i) s(i, i) = f;
  return s;
}

SymbolMatrix SymbolMatrix::constant(const RatMatrix& m) {
  const RatMatrix coeffs[] = {m};
  return from_coefficients(0, coeffs);
}

SymbolMatrix SymbolMatrix::from_coefficients(std::int64_t lo, std::span<const RatMatrix> coeffs) {
  if (coeffs.empty()) throw DimensionMismatch("SymbolMatrix: no coefficients, dimension unknown");
  const std::size_t p = coeffs.front().rows();
  std::vector<LaurentPoly::Terms> terms(p * p);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const RatMatrix& c = coeffs[i];
    if (c.rows() != p || c.cols() != p) throw DimensionMismatch("SymbolMatrix: coefficient shape");
    for (std::size_t r = 0; r < p; ++r)
      for (std::size_t col = 0; col < p; ++col)
        terms[r * p + col].emplace(lo + static_cast<std::int64_t>(i), c(r, col));
  }
  std::vector<LaurentPoly> entries;
  entries.reserve(p * p);
  for (auto& t : terms) entries.emplace_back(std::move(t));
  return SymbolMatrix(p, std::move(entries));
}

bool SymbolMatrix::is_zero() const {
  for (const auto& e : entries_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

std::optional<Support> SymbolMatrix::support() const {
  std::optional<Support> s;
  for (const auto& e : entries_) s = merge(s, e.support());
  return s;
}

RatMatrix SymbolMatrix::coefficient(std::int64_t exponent) const {
  RatMatrix m(p_, p_);
  for (std::size_t r = 0; r < p_; ++r)
    for (std::size_t c = 0; c < p_; ++c) m(r, c) = (*this)(r, c).coefficient(exponent);
  return m;
}

RatMatrix SymbolMatrix::eval(UnitPoint at) const {
  RatMatrix m(p_, p_);
  for (std::size_t r = 0; r < p_; ++r)
    for (std::size_t c = 0; c < p_; ++c) m(r, c) = (*this)(r, c).eval(at);
  return m;
}

RatMatrix SymbolMatrix::deriv_eval(UnitPoint at) const {
  RatMatrix m(p_, p_);
  for (std::size_t r = 0; r < p_; ++r)
    for (std::size_t c = 0; c < p_; ++c) m(r, c) = (*this)(r, c).deriv_eval(at);
  return m;
}

SymbolMatrix SymbolMatrix::shift(std::int64_t by) const {
  return map([by](std::size_t, std::size_t, const LaurentPoly& f) { return f.shift(by); });
}

SymbolMatrix SymbolMatrix::dilate(std::int64_t factor) const {
  return map([factor](std::size_t, std::size_t, const LaurentPoly& f) { return f.dilate(factor); });
}

SymbolMatrix SymbolMatrix::map(
    const std::function<LaurentPoly(std::size_t, std::size_t, const LaurentPoly&)>& f) const {
  SymbolMatrix out(p_);
  for (std::size_t r = 0; r < p_; ++r)
    for (std::size_t c = 0; c < p_; ++c) out(r, c) = f(r, c, (*this)(r, c));
  return out;
}

SymbolMatrix& SymbolMatrix::operator+=(const SymbolMatrix& rhs) {
  if (p_ != rhs.p_) throw DimensionMismatch("SymbolMatrix +: dimension");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += rhs.entries_[i];
  return *this;
}

SymbolMatrix& SymbolMatrix::operator-=(const SymbolMatrix& rhs) {
  if (p_ != rhs.p_) throw DimensionMismatch("SymbolMatrix -: dimension");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= rhs.entries_[i];
  return *this;
}

SymbolMatrix& SymbolMatrix::operator*=(const Rat& s) {
  for (auto& e : entries_) e *= s;
  return *this;
}

SymbolMatrix operator*(const LaurentPoly& f, const SymbolMatrix& a) {
  return a.map([&f](std::size_t, std::size_t, const LaurentPoly& g) { return f * g; });
}

SymbolMatrix operator*(const SymbolMatrix& a, const SymbolMatrix& b) {
  if (a.p_ != b.p_) throw DimensionMismatch("SymbolMatrix *: dimension");
  SymbolMatrix out(a.p_);
  for (std::size_t i = 0; i < a.p_; ++i)
    for (std::size_t k = 0; k < a.p_; ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < a.p_; ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

SymbolMatrix operator*(const RatMatrix& m, const SymbolMatrix& a) {
  if (m.rows() != a.p_ || m.cols() != a.p_) throw DimensionMismatch("RatMatrix*SymbolMatrix");
  SymbolMatrix out(a.p_);
  for (std::size_t i = 0; i < a.p_; ++i)
    for (std::size_t k = 0; k < a.p_; ++k) {
      if (m(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < a.p_; ++j) out(i, j) += m(i, k) * a(k, j);
    }
  return out;
}

SymbolMatrix operator*(const SymbolMatrix& a, const RatMatrix& m) {
  if (m.rows() != a.p_ || m.cols() != a.p_) throw DimensionMismatch("SymbolMatrix*RatMatrix");
  SymbolMatrix out(a.p_);
  for (std::size_t i = 0; i < a.p_; ++i)
    for (std::size_t k = 0; k < a.p_; ++k)
      for (std::size_t j = 0; j < a.p_; ++j) {
        if (m(k, j).is_zero()) continue;
        out(i, j) += a(i, k) * m(k, j);
      }
  return out;
}

std::string SymbolMatrix::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < p_; ++r) {
    if (r) os << ", ";
    os << '[';
    for (std::size_t c = 0; c < p_; ++c) {
      if (c) os << ", ";
      os << (*this)(r, c);
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace subsmooth
