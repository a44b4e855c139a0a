#include "subsmooth/rat_matrix.hpp"

#include <sstream>
#include <utility>

#include "subsmooth/errors.hpp"

namespace subsmooth {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rat> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw DimensionMismatch("RatMatrix: entry count does not match rows*cols");
  }
}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rat>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DimensionMismatch("RatMatrix: ragged initializer");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::column(std::span<const Rat> values) {
  return RatMatrix(values.size(), 1, std::vector<Rat>(values.begin(), values.end()));
}

RatMatrix RatMatrix::diagonal(std::span<const Rat> values) {
  RatMatrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

bool RatMatrix::is_zero() const {
  for (const auto& e : entries_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

RatMatrix RatMatrix::col(std::size_t c) const {
  RatMatrix v(rows_, 1);
  for (std::size_t r = 0; r < rows_; ++r) v(r, 0) = (*this)(r, c);
  return v;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RatMatrix& RatMatrix::operator+=(const RatMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionMismatch("RatMatrix +: shape");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += rhs.entries_[i];
  return *this;
}

RatMatrix& RatMatrix::operator-=(const RatMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionMismatch("RatMatrix -: shape");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= rhs.entries_[i];
  return *this;
}

RatMatrix& RatMatrix::operator*=(const Rat& s) {
  for (auto& e : entries_) e *= s;
  return *this;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("RatMatrix *: inner dimensions");
  RatMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rat& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

std::string RatMatrix::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) os << ", ";
    os << '[';
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) os << ", ";
      os << (*this)(r, c);
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

RatMatrix hstack(std::span<const RatMatrix> blocks) {
  if (blocks.empty()) return {};
  const std::size_t rows = blocks.front().rows();
  std::size_t cols = 0;
  for (const auto& b : blocks) {
    if (b.rows() != rows) throw DimensionMismatch("hstack: row counts differ");
    cols += b.cols();
  }
  RatMatrix out(rows, cols);
  std::size_t offset = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) out(r, offset + c) = b(r, c);
    offset += b.cols();
  }
  return out;
}

RatMatrix vstack(std::span<const RatMatrix> blocks) {
  if (blocks.empty()) return {};
  const std::size_t cols = blocks.front().cols();
  std::size_t rows = 0;
  for (const auto& b : blocks) {
    if (b.cols() != cols) throw DimensionMismatch("vstack: column counts differ");
    rows += b.rows();
  }
  RatMatrix out(rows, cols);
  std::size_t offset = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < cols; ++c) out(offset + r, c) = b(r, c);
    offset += b.rows();
  }
  return out;
}

EchelonForm reduced_row_echelon(const RatMatrix& m) {
  EchelonForm ef{m, {}};
  RatMatrix& a = ef.reduced;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < a.rows() && a(pivot, col).is_zero()) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != row) {
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(row, c), a(pivot, c));
    }
    const Rat inv = Rat(1) / a(row, col);
    for (std::size_t c = col; c < a.cols(); ++c) a(row, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col).is_zero()) continue;
      const Rat factor = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c) a(r, c) -= factor * a(row, c);
    }
    ef.pivots.push_back(col);
    ++row;
  }
  return ef;
}

std::size_t rank(const RatMatrix& m) { return reduced_row_echelon(m).pivots.size(); }

std::vector<RatMatrix> kernel_basis(const RatMatrix& m) {
  const EchelonForm ef = reduced_row_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : ef.pivots) is_pivot[p] = true;

  std::vector<RatMatrix> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RatMatrix v(m.cols(), 1);
    v(free, 0) = 1;
    for (std::size_t r = 0; r < ef.pivots.size(); ++r) v(ef.pivots[r], 0) = -ef.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<RatMatrix> column_space_basis(const RatMatrix& m) {
  std::vector<RatMatrix> basis;
  for (auto p : reduced_row_echelon(m).pivots) basis.push_back(m.col(p));
  return basis;
}

RatMatrix invert(const RatMatrix& m) {
  if (!m.is_square()) throw DimensionMismatch("invert: matrix is not square");
  const std::size_t n = m.rows();
  const RatMatrix blocks[] = {m, RatMatrix::identity(n)};
  const EchelonForm ef = reduced_row_echelon(hstack(blocks));
  if (ef.pivots.size() < n || ef.pivots[n - 1] != n - 1) {
    throw SingularMatrix("invert: matrix is singular");
  }
  RatMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = ef.reduced(r, n + c);
  return inv;
}

Rat determinant(const RatMatrix& m) {
  if (!m.is_square()) throw DimensionMismatch("determinant: matrix is not square");
  RatMatrix a = m;
  Rat det = 1;
  const std::size_t n = a.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return Rat(0);
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(col, c), a(pivot, c));
      det = -det;
    }
    det *= a(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a(r, col).is_zero()) continue;
      const Rat factor = a(r, col) / a(col, col);
      for (std::size_t c = col; c < n; ++c) a(r, c) -= factor * a(col, c);
    }
  }
  return det;
}

// Faddeev–LeVerrier; exact over Q.
std::vector<Rat> characteristic_polynomial(const RatMatrix& m) {
  if (!m.is_square()) throw DimensionMismatch("characteristic_polynomial: not square");
  const std::size_t n = m.rows();
  std::vector<Rat> coeffs(n + 1);
  coeffs[n] = 1;
  RatMatrix aux(n, n);  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    aux = m * aux;
    for (std::size_t i = 0; i < n; ++i) aux(i, i) += coeffs[n - k + 1];
    const RatMatrix am = m * aux;
    Rat trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += am(i, i);
    coeffs[n - k] = -trace / Rat(static_cast<long>(k));
  }
  return coeffs;
}

bool same_span(std::span<const RatMatrix> a, std::span<const RatMatrix> b) {
  auto span_rank = [](std::span<const RatMatrix> vs) {
    return vs.empty() ? std::size_t{0} : rank(hstack(vs));
  };
  std::vector<RatMatrix> both(a.begin(), a.end());
  both.insert(both.end(), b.begin(), b.end());
  const std::size_t ra = span_rank(a);
  return ra == span_rank(b) && span_rank(both) == ra;
}

}  // namespace subsmooth
