#include "subsmooth/hermite_smoothing.hpp"

#include <string>

#include "subsmooth/vector_smoothing.hpp"

namespace subsmooth {
namespace {

void require_two(const Mask& m, const char* op) {
  if (m.dim() != 2) throw DimensionMismatch(std::string(op) + ": p must be 2");
}

LaurentPoly constant(const Rat& c) { return LaurentPoly::constant(c); }

/// Σ cᵢ z⁻ⁱ for i = 0, 1, ...
LaurentPoly in_zinv(std::initializer_list<Rat> coeffs) {
  LaurentPoly out;
  std::int64_t e = 0;
  for (const Rat& c : coeffs) out += LaurentPoly::monomial(c, -e++);
  return out;
}

bool is_span_e2(const std::vector<RatMatrix>& basis) {
  const RatMatrix e2{{Rat(0)}, {Rat(1)}};
  return same_span(basis, std::span<const RatMatrix>(&e2, 1));
}

std::string join(const std::vector<int>& ids) {
  std::string out;
  for (int id : ids) {
    if (!out.empty()) out += ",";
    out += std::to_string(id);
  }
  return out;
}

// R̄ = [[0,1],[1,−1]] and its inverse; valid for every Taylor mask.
const RatMatrix& taylor_transform() {
  static const RatMatrix r{{Rat(0), Rat(1)}, {Rat(1), Rat(-1)}};
  return r;
}
const RatMatrix& taylor_transform_inverse() {
  static const RatMatrix r{{Rat(1), Rat(1)}, {Rat(1), Rat(0)}};
  return r;
}

}  // namespace

SpectralReport check_spectral(const Mask& m) {
  require_two(m, "check_spectral");
  const SymbolMatrix& a = m.symbol();
  constexpr auto one = UnitPoint::One;
  constexpr auto minus_one = UnitPoint::MinusOne;

  SpectralReport report;
  if (a(0, 0).eval(one) != Rat(2) || !a(0, 0).eval(minus_one).is_zero()) {
    report.violated.push_back(1);
  }
  if (!a(1, 0).eval(one).is_zero() || !a(1, 0).eval(minus_one).is_zero()) {
    report.violated.push_back(2);
  }
  if (!(a(0, 0).deriv_eval(minus_one) + Rat(2) * a(0, 1).eval(minus_one)).is_zero()) {
    report.violated.push_back(3);
  }
  if (a(1, 0).deriv_eval(one) - Rat(2) * a(1, 1).eval(one) != Rat(-2) ||
      !(a(1, 0).deriv_eval(minus_one) + Rat(2) * a(1, 1).eval(minus_one)).is_zero()) {
    report.violated.push_back(4);
  }
  report.holds = report.violated.empty();
  report.phi = spectral_phi(a);
  if (report.holds && m.kind() == SchemeKind::Hermite && m.phi() != report.phi) {
    throw InternalError("check_spectral: stored phi " + m.phi().str() +
                        " disagrees with the symbol's " + report.phi.str());
  }
  return report;
}

bool check_interpolatory(const Mask& m) {
  require_two(m, "check_interpolatory");
  const RatMatrix d{{Rat(1), Rat(0)}, {Rat(0), Rat(1, 2)}};
  if (m.symbol().coefficient(0) != d) return false;
  const auto support = m.support();
  for (std::int64_t e = support->lo; e <= support->hi; ++e) {
    if (e != 0 && e % 2 == 0 && !m.symbol().coefficient(e).is_zero()) return false;
  }
  return true;
}

Mask taylor_scheme(const Mask& m) {
  require_two(m, "taylor_scheme");
  const SymbolMatrix& a = m.symbol();
  const LaurentPoly q1 = divide_exact(a(0, 0), Binomial::ZInvPlusOne);
  const LaurentPoly q2 = divide_exact(a(1, 0), Binomial::ZInvSqMinusOne);
  const LaurentPoly zinv_minus_one = binomial_poly(Binomial::ZInvMinusOne);
  const Rat two(2);
  return Mask::vector(SymbolMatrix(2, {
                                          two * (q1 - q2),
                                          two * (zinv_minus_one * a(0, 1) - a(1, 1) + q1 - q2),
                                          two * q2,
                                          two * (a(1, 1) + q2),
                                      }));
}

Mask inverse_taylor(const Mask& m) {
  require_two(m, "inverse_taylor");
  const SymbolMatrix& b = m.symbol();
  const Rat half(1, 2);
  SymbolMatrix c(2, {
                        half * (binomial_poly(Binomial::ZInvPlusOne) * (b(0, 0) + b(1, 0))),
                        half * divide_exact(b(0, 1) - b(0, 0) - b(1, 0) + b(1, 1),
                                            Binomial::ZInvMinusOne),
                        half * (binomial_poly(Binomial::ZInvSqMinusOne) * b(1, 0)),
                        half * (b(1, 1) - b(1, 0)),
                    });
  const TaylorReport report = check_taylor(m);
  if (!report.holds_taylor) {
    throw PreconditionFailed("inverse_taylor: Taylor conditions violated: " +
                             join(report.violated));
  }
  Rat phi = half * (b(0, 1).deriv_eval(UnitPoint::One) + b(1, 1).deriv_eval(UnitPoint::One) -
                    Rat(1));
  return Mask::hermite(std::move(c), std::move(phi));
}

TaylorReport check_taylor(const Mask& m) {
  require_two(m, "check_taylor");
  const SymbolMatrix& b = m.symbol();
  constexpr auto one = UnitPoint::One;
  constexpr auto minus_one = UnitPoint::MinusOne;

  TaylorReport report;
  if (!b(0, 1).eval(one).is_zero() || !b(0, 1).eval(minus_one).is_zero()) {
    report.violated.push_back(1);
  }
  if (b(1, 1).eval(one) != Rat(2) || !b(1, 1).eval(minus_one).is_zero()) {
    report.violated.push_back(2);
  }
  if (b(0, 0).eval(one) + b(1, 0).eval(one) != Rat(2)) report.violated.push_back(3);
  report.holds_taylor = report.violated.empty();

  const bool e2_only = is_span_e2(common_one_eigenspace(m));
  report.in_tilde = report.holds_taylor && e2_only;
  const Rat a = b(0, 0).eval(one);
  if (e2_only && a != Rat(2)) {
    report.zeta = Rat(2) + b(1, 0).eval(one) / (a - Rat(2));
  }
  return report;
}

RetaylorResult retaylor_transform(const Mask& m) {
  require_two(m, "retaylor_transform");
  if (!is_span_e2(common_one_eigenspace(m))) {
    throw NotInTilde("retaylor_transform: common 1-eigenspace is not span{e2}");
  }
  const Rat a = m.symbol()(0, 0).eval(UnitPoint::One);
  const Rat b = m.symbol()(1, 0).eval(UnitPoint::One);
  if (a == Rat(2)) throw DegenerateA("retaylor_transform: beta11(1) = 2");
  Rat eta = Rat(1) + b / (a - Rat(2));
  const RatMatrix r{{Rat(1), Rat(0)}, {eta, Rat(1)}};
  const RatMatrix r_inverse{{Rat(1), Rat(0)}, {-eta, Rat(1)}};
  return {Mask::vector(conjugate(m, r, r_inverse).symbol()), std::move(eta)};
}

HermiteSmoothingTrace smooth_hermite_traced(const Mask& m) {
  require_two(m, "smooth_hermite");
  const SpectralReport spectral = check_spectral(m);
  if (!spectral.holds) {
    throw PreconditionFailed("smooth_hermite: spectral condition violated: " +
                             join(spectral.violated));
  }

  Mask taylor = taylor_scheme(m);
  if (!is_span_e2(common_one_eigenspace(taylor))) {
    throw NotInTilde("smooth_hermite: Taylor scheme's common 1-eigenspace is not span{e2}");
  }

  const Mask conjugated = conjugate(taylor, taylor_transform(), taylor_transform_inverse());
  Mask smoothed_taylor =
      conjugate(smooth_k_raw(conjugated, 1), taylor_transform_inverse(), taylor_transform());

  const SymbolMatrix& b = taylor.symbol();
  const bool taylor_preserved =
      root_multiplicity_at_one(b(0, 0) + b(1, 0) - b(0, 1) - b(1, 1)) >= 2;
  if (taylor_preserved != check_taylor(smoothed_taylor).holds_taylor) {
    throw InternalError("smooth_hermite: Taylor preservation test disagrees with the symbol");
  }

  auto [retaylored, eta] = retaylor_transform(smoothed_taylor);
  Mask result = inverse_taylor(retaylored);

  const SpectralReport after = check_spectral(result);
  if (!after.holds || after.phi != spectral.phi - Rat(1, 2)) {
    throw InternalError("smooth_hermite: result does not satisfy the spectral condition with phi - 1/2");
  }
  const auto in_support = m.support();
  const auto out_support = result.support();
  if (in_support && out_support &&
      !Support{in_support->lo - 5, in_support->hi}.contains(*out_support)) {
    throw InternalError("smooth_hermite: support grew beyond [lo-5, hi]");
  }

  Rat zeta = eta + Rat(1);
  return {std::move(taylor),  std::move(smoothed_taylor), std::move(retaylored),
          std::move(result),  std::move(eta),             std::move(zeta),
          taylor_preserved};
}

Mask smooth_hermite(const Mask& m) { return smooth_hermite_traced(m).result; }

Mask smooth_hermite_closed_form(const Mask& m) {
  require_two(m, "smooth_hermite_closed_form");
  const SpectralReport spectral = check_spectral(m);
  if (!spectral.holds) {
    throw PreconditionFailed("smooth_hermite_closed_form: spectral condition violated: " +
                             join(spectral.violated));
  }
  const SymbolMatrix& s = m.symbol();
  const LaurentPoly& a11 = s(0, 0);
  const LaurentPoly& a12 = s(0, 1);
  const LaurentPoly& a21 = s(1, 0);
  const LaurentPoly& a22 = s(1, 1);
  const Rat a12_at_one = a12.eval(UnitPoint::One);
  const Rat a22_at_one = a22.eval(UnitPoint::One);
  if (a22_at_one == Rat(2)) throw DegenerateA("smooth_hermite_closed_form: alpha22(1) = 2");

  const Rat z = Rat(1) + a12_at_one / (Rat(2) - a22_at_one);  // ζ
  const Rat zz = z * z;
  const Rat w = Rat(1) - z;
  const Rat ww = w * w;
  const Rat half(1, 2);
  const LaurentPoly zinv_plus_one = in_zinv({1, 1});
  const LaurentPoly zinv_minus_one = in_zinv({-1, 1});
  const LaurentPoly zinv_sq_minus_one = in_zinv({-1, 0, 1});

  const LaurentPoly c11 =
      half * (zinv_plus_one *
              (a12 * in_zinv({-(zz + z), zz - Rat(1), zz, z - zz}) +
               a11 * (z * w * zinv_minus_one + constant(z)) +
               a22 * ((z * zinv_sq_minus_one - constant(1)) * (z - Rat(1))) + a21 * (zz - z)));
  const LaurentPoly c12 =
      half * divide_exact(a12 * in_zinv({zz, z * w, z * w, ww}) +
                              a22 * (-(ww * zinv_sq_minus_one) + constant(z - Rat(1))) +
                              a11 * (ww * zinv_minus_one + constant(w)) - ww * a21,
                          Binomial::ZInvMinusOne);
  const LaurentPoly c21 =
      half * (zinv_sq_minus_one *
              (a12 * in_zinv({-((z + Rat(1)) * (z + Rat(1))), z + zz, z + zz, -zz}) +
               z * (a11 * (constant(1) - z * zinv_minus_one)) +
               z * (a22 * (z * zinv_sq_minus_one - constant(1))) + zz * a21));
  const LaurentPoly c22 =
      half * (a12 * in_zinv({zz + z, -zz, Rat(1) - zz, zz - z}) +
              w * (a11 * (constant(1) - z * zinv_minus_one)) +
              z * (a22 * (w * zinv_sq_minus_one + constant(1))) + a21 * (z - zz));

  Mask closed = Mask::hermite(SymbolMatrix(2, {c11, c12, c21, c22}), spectral.phi - half);

  if (a12_at_one.is_zero()) {
    const LaurentPoly zinv_minus_two = in_zinv({-2, 1});
    const LaurentPoly zinv_sq_minus_two = in_zinv({-2, 0, 1});
    const SymbolMatrix special(
        2, {
               half * (zinv_plus_one * (zinv_sq_minus_two * a12 + a11)),
               half * divide_exact(a12, Binomial::ZInvMinusOne),
               half * (zinv_sq_minus_one * (a21 - a11 * zinv_minus_two + a22 * zinv_sq_minus_two -
                                            a12 * zinv_minus_two * zinv_sq_minus_two)),
               half * (a22 - zinv_minus_two * a12),
           });
    if (special != closed.symbol()) {
      throw InternalError("smooth_hermite_closed_form: zeta = 1 specialization disagrees");
    }
  }
  return closed;
}

std::size_t zeta_multiplicity_forecast(const Mask& m) {
  require_two(m, "zeta_multiplicity_forecast");
  return root_multiplicity_at_one(m.symbol()(0, 1));
}

}  // namespace subsmooth
