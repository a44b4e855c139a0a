#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "subsmooth/mask.hpp"

namespace subsmooth {

/// Finitely supported sequence of p-vectors; index i holds values[i − offset].
class FinSeq {
 public:
  FinSeq() = default;
  /// Zero sequence on [offset, offset + length).
  FinSeq(std::size_t p, std::int64_t offset, std::size_t length);
  FinSeq(std::size_t p, std::int64_t offset, std::vector<std::vector<Rat>> values);
  /// δ·e_j (0-based j) at index 0.
  static FinSeq delta(std::size_t p, std::size_t j);

  [[nodiscard]] std::size_t dim() const { return p_; }
  [[nodiscard]] std::int64_t lo() const { return offset_; }
  /// One past the last stored index.
  [[nodiscard]] std::int64_t end() const {
    return offset_ + static_cast<std::int64_t>(values_.size());
  }
  [[nodiscard]] std::size_t length() const { return values_.size(); }
  [[nodiscard]] bool is_zero() const;
  /// Zero outside the stored window.
  [[nodiscard]] Rat at(std::int64_t i, std::size_t component) const;
  [[nodiscard]] const std::vector<Rat>& operator[](std::int64_t i) const {
    return values_[static_cast<std::size_t>(i - offset_)];
  }
  std::vector<Rat>& operator[](std::int64_t i) { return values_[static_cast<std::size_t>(i - offset_)]; }

  FinSeq& operator*=(const Rat& s);
  friend FinSeq operator*(const Rat& s, FinSeq c) { return c *= s; }
  /// Sum on the union of the two windows.
  friend FinSeq operator+(const FinSeq& a, const FinSeq& b);

 private:
  std::size_t p_ = 0;
  std::int64_t offset_ = 0;
  std::vector<std::vector<Rat>> values_;
};

/// (S_𝐀𝐜)ᵢ = Σⱼ A_{i−2j} cⱼ on the full output window.
FinSeq apply(const Mask& m, const FinSeq& c);

/// Δ on the first k components, identity on the rest; window grows by one on the left.
FinSeq difference(const FinSeq& c, std::size_t k);

/// (T𝐜)ᵢ = (c¹ᵢ₊₁ − c¹ᵢ − c²ᵢ, c²ᵢ).
FinSeq taylor_diff(const FinSeq& c);

/// 𝐀*(z)𝐀*(z²)⋯𝐀*(z^{2^{L−1}}), the symbol of S_𝐀^L (dilation 2^L).
SymbolMatrix iterated_symbol(const SymbolMatrix& symbol, unsigned levels);
SymbolMatrix iterated_symbol(const Mask& m, unsigned levels);

/// ‖(½S_𝐃)^L‖∞ computed exactly from the iterated symbol.
Rat contraction_norm(const SymbolMatrix& derived, unsigned levels);

inline constexpr unsigned kDefaultLmax = 12;

struct Certificate {
  enum class Kind { C0, Chain };
  Kind kind = Kind::C0;
  unsigned ell = 0;
  unsigned levels = 0;  // L
  Rat norm;             // ‖(½S)^L‖∞ < 1
  std::vector<std::string> steps;
};

/// The norm search was inconclusive, or a precondition failed at `stage`.
/// Never a proof of divergence.
struct Refusal {
  unsigned stage = 0;
  std::string reason;
  std::vector<Rat> norms;  // norms tried at L = 1, 2, ...
  bool precondition_failed = false;
  std::vector<std::string> steps;
};

using CertifyResult = std::variant<Certificate, Refusal>;

/// C⁰ via contractivity of ½S_{∂ₖ𝐀̄} in canonical coordinates.
CertifyResult certify_c0(const Mask& m, unsigned lmax = kDefaultLmax);

/// Cᵉˡˡ for scalar and vector masks: ell derived-scheme stages, then certify_c0.
CertifyResult certify_chain(const Mask& m, unsigned ell, unsigned lmax = kDefaultLmax);

/// HCᵉˡˡ for Hermite masks (ell ≥ 1): spectral condition, Taylor scheme with
/// 𝓔 = span{e₂}, ell − 1 derived stages, then certify_c0.
CertifyResult certify_hermite(const Mask& m, unsigned ell, unsigned lmax = kDefaultLmax);

/// Dispatch on the mask kind.
CertifyResult certify(const Mask& m, unsigned ell, unsigned lmax = kDefaultLmax);

struct LimitSample {
  struct Row {
    std::int64_t index = 0;  // t = index / 2ⁿ
    std::vector<Rat> values;
  };
  unsigned depth = 0;
  std::size_t dim = 0;
  std::vector<Row> rows;

  [[nodiscard]] Rat t_exact(const Row& row) const;
  [[nodiscard]] double t(const Row& row) const { return t_exact(row).to_double(); }
};

/// n refinement steps from δ·e_j (1-based j); Hermite data is rescaled by D⁻ⁿ.
LimitSample render(const Mask& m, unsigned depth, std::size_t basis);

/// Header `t,c1,...,cp`; decimals with 17 significant digits, or `p/q` when exact.
void write_csv(std::ostream& out, const LimitSample& sample, bool exact);

}  // namespace subsmooth
