// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "subsmooth/cli/catalog.hpp"
#include "subsmooth/cli/commands.hpp"
#include "subsmooth/cli/mask_file.hpp"
#include "subsmooth/engine.hpp"
#include "subsmooth/hermite_smoothing.hpp"
#include "subsmooth/vector_smoothing.hpp"
#include "../support/golden.hpp"
#include "../support/oracles.hpp"
#include "../support/random_masks.hpp"

using namespace subsmooth;
using namespace subsmooth::testing;

namespace {

using Clock = std::chrono::steady_clock;

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure(what);
}

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void require_under(Clock::time_point start, double limit_ms, const std::string& what) {
  const double elapsed = ms_since(start);
  require(elapsed < limit_ms, what + " took " + std::to_string(elapsed) + " ms");
}

std::string support_text(const Mask& m) {
  const auto s = m.support();
  return s ? "[" + std::to_string(s->lo) + ", " + std::to_string(s->hi) + "]" : "empty";
}

Mask smooth_via_cli(const std::string& name) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run_cli({"smooth", "catalog:" + name}, out, err);
  require(code == cli::kOk, "smooth " + name + " exited " + std::to_string(code) + ": " + err.str());
  return cli::parse_mask(out.str());
}

// 2·D_k(z)·A*(z) = B*(z)·D_k(z²), the symbol form of Δ_k S_A = ½ S_B Δ_k.
bool intertwines(const SymbolMatrix& a, const SymbolMatrix& b, std::size_t k) {
  const std::size_t p = a.dim();
  return Rat(2) * (difference_symbol(p, k, 1) * a) == b * difference_symbol(p, k, 2);
}

bool is_eigenpair(const RatMatrix& m, const Rat& lambda, const std::vector<Rat>& v) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Rat lhs;
    for (std::size_t c = 0; c < m.cols(); ++c) lhs += m(r, c) * v[c];
    if (lhs != lambda * v[r]) return false;
  }
  return true;
}

RatMatrix matrix_of(std::size_t n, std::initializer_list<Rat> values, const Rat& scale) {
  RatMatrix m(n, n);
  std::size_t i = 0;
  for (const Rat& v : values) {
    m(i / n, i % n) = v * scale;
    ++i;
  }
  return m;
}

// c₀ + c₁λ + … as a polynomial in λ (stored as a Laurent polynomial in z).
LaurentPoly poly_from(const std::vector<Rat>& coeffs) {
  return LaurentPoly::from_coefficients(0, coeffs);
}

LaurentPoly linear(const Rat& root) {
  return LaurentPoly::monomial(Rat(1), 1) - LaurentPoly::constant(root);
}

LaurentPoly power(const LaurentPoly& f, std::size_t n) {
  LaurentPoly out = LaurentPoly::constant(Rat(1));
  for (std::size_t i = 0; i < n; ++i) out = out * f;
  return out;
}

// χ_A(λ)(λ−1)^k·2^p = χ_B(2λ)(λ−2)^k, plus a pointwise cross-check by cofactor expansion.
void require_eigenvalue_halving(const Mask& a, const Mask& b, std::size_t k, const std::string& label) {
  const std::size_t p = a.dim();
  const RatMatrix a1 = a.symbol().eval(UnitPoint::One);
  const RatMatrix b1 = b.symbol().eval(UnitPoint::One);
  const auto chi_a = characteristic_polynomial(a1);
  auto chi_b = characteristic_polynomial(b1);
  for (std::size_t i = 0; i < chi_b.size(); ++i) chi_b[i] *= pow2(static_cast<unsigned>(i));
  const LaurentPoly lhs = Rat(pow2(static_cast<unsigned>(p))) * (poly_from(chi_a) * power(linear(Rat(1)), k));
  const LaurentPoly rhs = poly_from(chi_b) * power(linear(Rat(2)), k);
  require(lhs == rhs, label + ": characteristic polynomial identity fails");
  for (int sample = -3; sample <= 3; ++sample) {
    const Rat lambda = Rat(sample, 3);
    const RatMatrix id = RatMatrix::identity(p);
    const Rat det_a = cofactor_determinant(lambda * id - a1);
    const Rat det_b = cofactor_determinant(Rat(2) * lambda * id - b1);
    Rat left = det_a * pow2(static_cast<unsigned>(p));
    Rat right = det_b;
    for (std::size_t i = 0; i < k; ++i) {
      left *= lambda - Rat(1);
      right *= lambda - Rat(2);
    }
    require(left == right, label + ": determinant check fails at lambda = " + lambda.str());
  }
}

double max_channel_deviation(const LimitSample& s) {
  const double scale = std::ldexp(1.0, static_cast<int>(s.depth));
  double worst = 0;
  for (std::size_t r = 0; r + 1 < s.rows.size(); ++r) {
    const double slope = (s.rows[r + 1].values[0].to_double() - s.rows[r].values[0].to_double()) * scale;
    worst = std::max(worst, std::abs(s.rows[r].values[1].to_double() - slope));
  }
  return worst;
}

std::string ac1() {
  const auto start = Clock::now();
  const Mask c = smooth_via_cli("merrien");
  require_under(start, 1000, "smoothing");
  require(c == golden_merrien_smoothed(), "symbol differs from the published smoothed Merrien mask");
  require(c.phi() == Rat(-1, 2), "phi = " + c.phi().str());
  require(c.support() && c.support()->lo == -6 && c.support()->hi == 1, "support " + support_text(c));
  return "C equals published symbol, phi -1/2, support [-6, 1]";
}

std::string ac2() {
  const auto start = Clock::now();
  const Mask c = smooth_via_cli("derham");
  require_under(start, 1000, "smoothing");
  require(c == golden_derham_smoothed(), "symbol differs from the published smoothed de Rham mask");
  require(c.phi() == Rat(-1), "phi = " + c.phi().str());
  require(c.support() && c.support()->lo == -7 && c.support()->hi == 1, "support " + support_text(c));
  return "C equals published symbol, phi -1, support [-7, 1]";
}

std::string ac3() {
  const auto start = Clock::now();
  const Mask b = golden_double_knot();
  const VectorSmoothingTrace trace = smooth_vector_traced(b);
  const Mask& a = trace.result;
  require_under(start, 1000, "smoothing");

  require(trace.eigen.k == 1, "k = " + std::to_string(trace.eigen.k));
  require(intertwines(trace.smoothed_conjugated.symbol(), trace.conjugated.symbol(), 1),
          "conjugated identity fails");
  const RatMatrix& r = trace.eigen.transform;
  const RatMatrix& r_inv = trace.eigen.inverse;
  require(Rat(2) * (difference_symbol(2, 1, 1) * (r_inv * a.symbol())) ==
              trace.conjugated.symbol() * (difference_symbol(2, 1, 2) * r_inv),
          "identity in original coordinates fails");
  require(r * r_inv == RatMatrix::identity(2), "transform inverse wrong");

  const RatMatrix a_one = a.symbol().eval(UnitPoint::One);
  const RatMatrix a_minus = a.symbol().eval(UnitPoint::MinusOne);
  require(a_one == matrix_of(2, {Rat(10), Rat(6), Rat(9), Rat(7)}, Rat(1, 8)), "A*(1) = " + a_one.str());
  require(a_minus == matrix_of(2, {Rat(-3), Rat(3), Rat(3), Rat(-3)}, Rat(1, 16)), "A*(-1) = " + a_minus.str());
  require(is_eigenpair(a_one, Rat(2), {Rat(1), Rat(1)}) && is_eigenpair(a_one, Rat(1, 8), {Rat(-2), Rat(3)}),
          "eigenpairs of A*(1)");
  require(is_eigenpair(a_minus, Rat(0), {Rat(1), Rat(1)}) &&
              is_eigenpair(a_minus, Rat(-3, 8), {Rat(-1), Rat(1)}),
          "eigenpairs of A*(-1)");
  require(a.support() && a.support()->lo >= -2 && a.support()->hi <= 2, "support " + support_text(a));

  // Same result through the published transform R = [[1,-1],[1,1]].
  const RatMatrix printed_r = golden_double_knot_r();
  const Mask b_bar = conjugate(b, printed_r);
  require(b_bar.symbol() == golden_double_knot_bbar(), "B-bar differs from the published B-bar");
  const Mask a_bar = smooth_k_raw(b_bar, 1);
  const RatMatrix printed_r_inv = invert(printed_r);
  require(conjugate(a_bar, printed_r_inv, printed_r) == a, "result depends on the complement basis");

  const SymbolMatrix printed_a = golden_double_knot_a_printed();
  require(a.symbol() != printed_a, "literal quotient unexpectedly matches the printed full symbol");
  SymbolMatrix shifted = a_bar.symbol();
  shifted(0, 1) = shifted(0, 1).shift(-2);
  require(shifted == golden_double_knot_abar_printed(), "shifted A-bar differs from the printed A-bar");
  require(printed_r * shifted * printed_r_inv == printed_a, "shifted block does not reproduce printed A");
  return "identity exact, A*(+-1) and eigenpairs match, support " + support_text(a) +
         ", printed A matches only after z^-2 on block (1,2)";
}

std::string ac4() {
  Mask alpha = Mask::scalar(golden_bspline(0));
  for (unsigned l = 1; l <= 6; ++l) {
    const Mask next = smooth_scalar(alpha);
    require(next.scalar_symbol() == golden_bspline(l), "smoothing step " + std::to_string(l));
    require(derived_scalar(next) == alpha, "derived step " + std::to_string(l));
    alpha = next;
  }
  return "alpha_1..alpha_6 exact, derived inverts each step";
}

std::string ac5() {
  const Mask merrien2 = smooth_hermite(golden_merrien_smoothed());
  const auto zm = smooth_hermite_traced(golden_merrien_smoothed()).zeta;
  const auto zd = smooth_hermite_traced(golden_derham_smoothed()).zeta;
  require(zm == Rat(14, 15), "Merrien second-round zeta = " + zm.str());
  require(zd == Rat(41, 44), "de Rham second-round zeta = " + zd.str());
  require(merrien2.phi() == Rat(-1), "Merrien second-round phi = " + merrien2.phi().str());
  return "zeta 14/15 (Merrien), 41/44 (de Rham)";
}

std::string ac6() {
  const Mask dk = golden_double_knot();
  require_eigenvalue_halving(smooth_vector(dk), dk, 1, "double-knot");
  MaskGen gen(6006);
  for (int i = 0; i < 50; ++i) {
    const std::size_t p = gen.uniform(2, 4);
    const std::size_t k = gen.uniform(1, p - 1);
    const Mask b = gen.convergent_style(p, k);
    const VectorSmoothingTrace trace = smooth_vector_traced(b);
    require(trace.eigen.k == k, "random mask " + std::to_string(i) + ": k mismatch");
    require_eigenvalue_halving(trace.result, b, k, "random mask " + std::to_string(i));
  }
  return "double-knot + 50 random masks (p = 2..4)";
}

std::string ac7() {
  const auto start = Clock::now();
  MaskGen gen(7007);
  const int n = 200;
  for (int i = 0; i < n; ++i) {
    const std::size_t p = gen.uniform(1, 4);
    const std::size_t k = gen.uniform(1, p);
    const Mask b = gen.in_lbk(p, k);
    require(derived_k(smooth_k_raw(b, k), k) == b, "d_k(I_k B) != B, case " + std::to_string(i));
    const Mask a = gen.in_lak(p, k);
    require(smooth_k_raw(derived_k(a, k), k) == a, "I_k(d_k A) != A, case " + std::to_string(i));
    const Mask t = gen.taylor();
    require(taylor_scheme(inverse_taylor(t)) == t, "d_t(I_t B) != B, case " + std::to_string(i));
    const Mask h = gen.spectral();
    require(inverse_taylor(taylor_scheme(h)) == h, "I_t(d_t A) != A, case " + std::to_string(i));
  }
  require_under(start, 30000, "suite");
  return "4 x 200 randomized round trips";
}

std::string ac8() {
  std::size_t zeta_not_one = 0;
  auto compare = [&](const Mask& m, const std::string& label) {
    const HermiteSmoothingTrace trace = smooth_hermite_traced(m);
    require(smooth_hermite_closed_form(m) == trace.result, label + ": closed form differs");
    if (trace.zeta != Rat(1)) ++zeta_not_one;
  };
  compare(golden_merrien(), "Merrien");
  compare(golden_derham(), "de Rham");
  compare(golden_merrien_smoothed(), "smoothed Merrien");
  MaskGen gen(8008);
  int accepted = 0;
  while (accepted < 100) {
    const Mask m = gen.spectral();
    // smooth_hermite needs 𝓔 = span{e₂} for the Taylor scheme; the closed form needs α₂₂(1) ≠ 2.
    if (!check_taylor(taylor_scheme(m)).in_tilde) continue;
    if (m.symbol()(1, 1).eval(UnitPoint::One) == Rat(2)) continue;
    compare(m, "random mask " + std::to_string(accepted));
    ++accepted;
  }
  require(zeta_not_one >= 50, "only " + std::to_string(zeta_not_one) + " cases with zeta != 1");
  return "Merrien, de Rham, smoothed Merrien + 100 random; " + std::to_string(zeta_not_one) +
         " with zeta != 1";
}

std::string ac9() {
  MaskGen gen(9009);
  for (int i = 0; i < 100; ++i) {
    const std::size_t p = gen.uniform(1, 4);
    const std::size_t k = gen.uniform(1, p);
    const Mask a = gen.in_lak(p, k);
    const Mask d = derived_k(a, k);
    const Seq c = gen.sequence(p, -static_cast<std::int64_t>(gen.uniform(0, 5)),
                               static_cast<std::int64_t>(gen.uniform(0, 5)));
    const Seq lhs = naive_difference(naive_apply(a.symbol(), c, p), k, p);
    const Seq rhs = scaled(naive_apply(d.symbol(), naive_difference(c, k, p), p), Rat(1, 2));
    require(seq_equal(lhs, rhs, p), "vector case " + std::to_string(i));
  }
  for (int i = 0; i < 100; ++i) {
    const Mask h = gen.spectral();
    const Mask t = taylor_scheme(h);
    const Seq c = gen.sequence(2, -static_cast<std::int64_t>(gen.uniform(0, 5)),
                               static_cast<std::int64_t>(gen.uniform(0, 5)));
    const Seq lhs = naive_taylor(naive_apply(h.symbol(), c, 2));
    const Seq rhs = scaled(naive_apply(t.symbol(), naive_taylor(c), 2), Rat(1, 2));
    require(seq_equal(lhs, rhs, 2), "Hermite case " + std::to_string(i));
  }
  return "100 vector (mask, k) + 100 Hermite instances";
}

std::string ac10() {
  const Mask alpha1 = Mask::scalar(golden_bspline(1));
  const Mask d = derived_scalar(alpha1);
  require(contraction_norm(d.symbol(), 1) == Rat(1, 2), "norm of (1/2)S at L=1");
  const auto linear_cert = certify_c0(alpha1);
  require(std::holds_alternative<Certificate>(linear_cert), "linear B-spline refused");
  const auto& lc = std::get<Certificate>(linear_cert);
  require(lc.levels == 1 && lc.norm == Rat(1, 2), "linear B-spline certificate L/norm");
  require(impulse_norm(d.symbol(), 1) == Rat(1, 2), "impulse recomputation for alpha_1");

  const Mask taylor = taylor_scheme(golden_merrien());
  const auto result = certify_c0(taylor, 12);
  require(std::holds_alternative<Certificate>(result), "Merrien Taylor scheme refused");
  const auto& cert = std::get<Certificate>(result);
  require(cert.levels <= 12 && cert.norm < Rat(1), "Merrien Taylor certificate out of range");
  const Eigenstructure es = canonical_transform(taylor);
  const Mask derived = derived_k(conjugate(taylor, es.transform, es.inverse), es.k);
  const Rat recomputed = impulse_norm(derived.symbol(), cert.levels);
  require(recomputed == cert.norm, "recomputed norm " + recomputed.str() + " != " + cert.norm.str());
  return "alpha_1: L=1 norm 1/2; Merrien Taylor: L=" + std::to_string(cert.levels) +
         " norm " + cert.norm.str();
}

std::string ac11() {
  const Mask c = golden_merrien_smoothed();
  double previous = INFINITY;
  std::string trail;
  for (unsigned n = 4; n <= 8; ++n) {
    const auto start = Clock::now();
    const double deviation = max_channel_deviation(render(c, n, 1));
    if (n == 8) require_under(start, 10000, "render at n=8");
    char buf[64];
    std::snprintf(buf, sizeof buf, "%s%.3g", trail.empty() ? "" : " ", deviation);
    trail += buf;
    require(deviation < previous, "deviation not decreasing at n=" + std::to_string(n) + ": " + trail);
    previous = deviation;
  }
  return "max deviation n=4..8: " + trail;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<std::string()>>> criteria = {
      {"AC1", ac1}, {"AC2", ac2}, {"AC3", ac3}, {"AC4", ac4},   {"AC5", ac5},   {"AC6", ac6},
      {"AC7", ac7}, {"AC8", ac8}, {"AC9", ac9}, {"AC10", ac10}, {"AC11", ac11},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    const auto start = Clock::now();
    std::string status = "PASS";
    std::string detail;
    try {
      detail = run();
    } catch (const Failure& f) {
      status = "FAIL";
      detail = f.what();
    } catch (const std::exception& e) {
      status = "FAIL";
      detail = std::string("exception: ") + e.what();
    }
    if (status == "FAIL") ++failures;
    std::printf("%-4s %s  (%.1f ms)  %s\n", name.c_str(), status.c_str(), ms_since(start), detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu criteria, %d failed\n", criteria.size(), failures);
  return failures == 0 ? 0 : 1;
}
