#include "subsmooth/engine.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <utility>

#include "subsmooth/hermite_smoothing.hpp"
#include "subsmooth/vector_smoothing.hpp"

namespace subsmooth {

FinSeq::FinSeq(std::size_t p, std::int64_t offset, std::size_t length)
    : p_(p), offset_(offset), values_(length, std::vector<Rat>(p)) {}

FinSeq::FinSeq(std::size_t p, std::int64_t offset, std::vector<std::vector<Rat>> values)
    : p_(p), offset_(offset), values_(std::move(values)) {
  for (const auto& v : values_) {
    if (v.size() != p_) throw DimensionMismatch("FinSeq: entry has the wrong dimension");
  }
}

FinSeq FinSeq::delta(std::size_t p, std::size_t j) {
  if (j >= p) throw DimensionMismatch("FinSeq::delta: component out of range");
  FinSeq c(p, 0, 1);
  c.values_[0][j] = Rat(1);
  return c;
}

bool FinSeq::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](const std::vector<Rat>& v) {
    return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x.is_zero(); });
  });
}

Rat FinSeq::at(std::int64_t i, std::size_t component) const {
  if (i < lo() || i >= end()) return Rat(0);
  return (*this)[i][component];
}

FinSeq& FinSeq::operator*=(const Rat& s) {
  for (auto& v : values_) {
    for (auto& x : v) x *= s;
  }
  return *this;
}

FinSeq operator+(const FinSeq& a, const FinSeq& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("FinSeq: dimension mismatch in sum");
  if (a.length() == 0) return b;
  if (b.length() == 0) return a;
  const std::int64_t lo = std::min(a.lo(), b.lo());
  const std::int64_t end = std::max(a.end(), b.end());
  FinSeq out(a.dim(), lo, static_cast<std::size_t>(end - lo));
  for (std::int64_t i = lo; i < end; ++i) {
    for (std::size_t r = 0; r < a.dim(); ++r) out[i][r] = a.at(i, r) + b.at(i, r);
  }
  return out;
}

FinSeq apply(const Mask& m, const FinSeq& c) {
  const std::size_t p = m.dim();
  if (c.dim() != p) throw DimensionMismatch("apply: sequence and mask dimensions differ");
  const auto support = m.support();
  if (!support || c.length() == 0) return FinSeq(p, 0, 0);

  std::vector<RatMatrix> coeffs;
  for (std::int64_t e = support->lo; e <= support->hi; ++e) {
    coeffs.push_back(m.symbol().coefficient(e));
  }
  const std::int64_t lo = 2 * c.lo() + support->lo;
  const std::int64_t end = 2 * (c.end() - 1) + support->hi + 1;
  FinSeq out(p, lo, static_cast<std::size_t>(end - lo));
  for (std::int64_t j = c.lo(); j < c.end(); ++j) {
    const std::vector<Rat>& cj = c[j];
    for (std::size_t idx = 0; idx < coeffs.size(); ++idx) {
      const RatMatrix& a = coeffs[idx];
      std::vector<Rat>& target = out[2 * j + support->lo + static_cast<std::int64_t>(idx)];
      for (std::size_t r = 0; r < p; ++r) {
        for (std::size_t s = 0; s < p; ++s) {
          if (!a(r, s).is_zero() && !cj[s].is_zero()) target[r] += a(r, s) * cj[s];
        }
      }
    }
  }
  return out;
}

FinSeq difference(const FinSeq& c, std::size_t k) {
  if (k > c.dim()) throw DimensionMismatch("difference: k exceeds the dimension");
  FinSeq out(c.dim(), c.lo() - 1, c.length() + 1);
  for (std::int64_t i = out.lo(); i < out.end(); ++i) {
    for (std::size_t r = 0; r < c.dim(); ++r) {
      out[i][r] = r < k ? c.at(i + 1, r) - c.at(i, r) : c.at(i, r);
    }
  }
  return out;
}

FinSeq taylor_diff(const FinSeq& c) {
  if (c.dim() != 2) throw DimensionMismatch("taylor_diff: p must be 2");
  FinSeq out(2, c.lo() - 1, c.length() + 1);
  for (std::int64_t i = out.lo(); i < out.end(); ++i) {
    out[i][0] = c.at(i + 1, 0) - c.at(i, 0) - c.at(i, 1);
    out[i][1] = c.at(i, 1);
  }
  return out;
}

SymbolMatrix iterated_symbol(const SymbolMatrix& symbol, unsigned levels) {
  if (levels == 0) throw DimensionMismatch("iterated_symbol: L must be at least 1");
  SymbolMatrix out = symbol;
  std::int64_t factor = 1;
  for (unsigned l = 1; l < levels; ++l) {
    factor *= 2;
    out = out * symbol.dilate(factor);
  }
  return out;
}

SymbolMatrix iterated_symbol(const Mask& m, unsigned levels) {
  return iterated_symbol(m.symbol(), levels);
}

Rat contraction_norm(const SymbolMatrix& derived, unsigned levels) {
  const std::uint64_t dilation = std::uint64_t{1} << levels;
  return operator_norm(iterated_symbol(derived, levels), dilation) / pow2(levels);
}

Rat LimitSample::t_exact(const Row& row) const { return Rat(row.index) / pow2(depth); }

namespace {

struct DerivedStage {
  Mask derived;
  std::size_t k;
};

DerivedStage derive_in_canonical_coordinates(const Mask& m) {
  const Eigenstructure eigen = canonical_transform(m);
  const Mask conjugated = conjugate(m, eigen.transform, eigen.inverse);
  return {derived_k(conjugated, eigen.k), eigen.k};
}

std::string describe(const Mask& m) {
  const auto support = m.support();
  std::string out = to_string(m.kind()) + " p=" + std::to_string(m.dim());
  if (support) {
    out += " support [" + std::to_string(support->lo) + "," + std::to_string(support->hi) + "]";
  }
  return out;
}

Refusal refuse(unsigned stage, std::string reason, bool precondition,
               std::vector<std::string> steps) {
  Refusal r;
  r.stage = stage;
  r.reason = std::move(reason);
  r.precondition_failed = precondition;
  r.steps = std::move(steps);
  return r;
}

// Contractivity search on an already derived mask.
CertifyResult contract(const Mask& derived, unsigned lmax, unsigned stage,
                       std::vector<std::string> steps) {
  std::vector<Rat> norms;
  const SymbolMatrix& d = derived.symbol();
  SymbolMatrix power = d;
  for (unsigned level = 1; level <= lmax; ++level) {
    if (level > 1) power = power * d.dilate(std::int64_t{1} << (level - 1));
    Rat norm = operator_norm(power, std::uint64_t{1} << level) / pow2(level);
    norms.push_back(norm);
    if (norm < Rat(1)) {
      steps.push_back("stage " + std::to_string(stage) + ": ||(S/2)^" + std::to_string(level) +
                      "|| = " + norm.str() + " < 1");
      Certificate cert;
      cert.levels = level;
      cert.norm = std::move(norm);
      cert.steps = std::move(steps);
      return cert;
    }
  }
  Refusal r = refuse(stage,
                     "inconclusive: no L <= " + std::to_string(lmax) +
                         " with ||(S/2)^L|| < 1 (the criterion is sufficient, not necessary)",
                     false, std::move(steps));
  r.norms = std::move(norms);
  return r;
}

// Runs `ell` derived stages starting at `stage`, then the contractivity search.
CertifyResult descend(Mask current, unsigned ell, unsigned lmax, unsigned stage,
                      std::vector<std::string> steps) {
  for (unsigned round = 0; round <= ell; ++round, ++stage) {
    try {
      DerivedStage next = derive_in_canonical_coordinates(current);
      steps.push_back("stage " + std::to_string(stage) + ": k=" + std::to_string(next.k) +
                      ", derived scheme " + describe(next.derived));
      current = std::move(next.derived);
    } catch (const Error& e) {
      return refuse(stage, e.what(), true, std::move(steps));
    }
  }
  return contract(current, lmax, stage - 1, std::move(steps));
}

}  // namespace

CertifyResult certify_c0(const Mask& m, unsigned lmax) {
  DerivedStage stage = derive_in_canonical_coordinates(m);
  std::vector<std::string> steps{"stage 0: k=" + std::to_string(stage.k) + ", derived scheme " +
                                 describe(stage.derived)};
  return contract(stage.derived, lmax, 0, std::move(steps));
}

CertifyResult certify_chain(const Mask& m, unsigned ell, unsigned lmax) {
  CertifyResult result = descend(m, ell, lmax, 0, {});
  if (auto* cert = std::get_if<Certificate>(&result)) {
    cert->kind = ell == 0 ? Certificate::Kind::C0 : Certificate::Kind::Chain;
    cert->ell = ell;
  }
  return result;
}

CertifyResult certify_hermite(const Mask& m, unsigned ell, unsigned lmax) {
  if (m.dim() != 2) return refuse(0, "Hermite certification needs p = 2", true, {});
  if (ell == 0) return refuse(0, "Hermite certification needs ell >= 1", true, {});
  std::vector<std::string> steps;
  const SpectralReport spectral = check_spectral(m);
  if (!spectral.holds) {
    std::string ids;
    for (int id : spectral.violated) ids += (ids.empty() ? "" : ",") + std::to_string(id);
    return refuse(0, "spectral condition violated: " + ids, true, std::move(steps));
  }
  steps.push_back("stage 0: spectral condition holds, phi = " + spectral.phi.str());

  Mask taylor = taylor_scheme(m);
  const TaylorReport report = check_taylor(taylor);
  if (!report.in_tilde) {
    return refuse(1, "Taylor scheme's common 1-eigenspace is not span{e2}", true,
                  std::move(steps));
  }
  steps.push_back("stage 1: Taylor scheme " + describe(taylor) + ", E = span{e2}");

  CertifyResult result = descend(std::move(taylor), ell - 1, lmax, 2, std::move(steps));
  if (auto* cert = std::get_if<Certificate>(&result)) {
    cert->kind = Certificate::Kind::Chain;
    cert->ell = ell;
  }
  return result;
}

CertifyResult certify(const Mask& m, unsigned ell, unsigned lmax) {
  if (m.kind() == SchemeKind::Hermite) return certify_hermite(m, ell, lmax);
  return certify_chain(m, ell, lmax);
}

LimitSample render(const Mask& m, unsigned depth, std::size_t basis) {
  if (depth == 0) throw PreconditionFailed("render: depth must be at least 1");
  if (basis == 0 || basis > m.dim()) throw DimensionMismatch("render: basis index out of range");
  FinSeq c = FinSeq::delta(m.dim(), basis - 1);
  for (unsigned n = 0; n < depth; ++n) c = apply(m, c);

  LimitSample sample;
  sample.depth = depth;
  sample.dim = m.dim();
  const Rat scale = pow2(depth);
  for (std::int64_t i = c.lo(); i < c.end(); ++i) {
    LimitSample::Row row{i, c[i]};
    if (m.kind() == SchemeKind::Hermite) row.values[1] *= scale;
    sample.rows.push_back(std::move(row));
  }
  return sample;
}

void write_csv(std::ostream& out, const LimitSample& sample, bool exact) {
  out << "t";
  for (std::size_t r = 1; r <= sample.dim; ++r) out << ",c" << r;
  out << "\n";
  char buffer[64];
  const auto decimal = [&](double v) {
    std::snprintf(buffer, sizeof buffer, "%.17g", v);
    return buffer;
  };
  for (const auto& row : sample.rows) {
    if (exact) {
      out << sample.t_exact(row).str();
      for (const Rat& v : row.values) out << "," << v.str();
    } else {
      out << decimal(sample.t(row));
      for (const Rat& v : row.values) out << "," << decimal(v.to_double());
    }
    out << "\n";
  }
}

}  // namespace subsmooth
