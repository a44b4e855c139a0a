#include "subsmooth/cli/commands.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "subsmooth/cli/mask_file.hpp"
#include "subsmooth/engine.hpp"
#include "subsmooth/hermite_smoothing.hpp"
#include "subsmooth/vector_smoothing.hpp"

namespace subsmooth::cli {
namespace {

std::string support_text(const std::optional<Support>& s) {
  if (!s) return "empty";
  return "[" + std::to_string(s->lo) + ", " + std::to_string(s->hi) + "]";
}

std::string vector_text(const RatMatrix& v) {
  std::string out = "(";
  for (std::size_t r = 0; r < v.rows(); ++r) out += (r ? ", " : "") + v(r, 0).str();
  return out + ")";
}

std::string ids_text(const std::vector<int>& ids) {
  std::string out;
  for (int id : ids) out += (out.empty() ? "" : ",") + std::to_string(id);
  return out;
}

std::string multiplicity_text(std::size_t r) {
  return r == kInfiniteMultiplicity ? "inf" : std::to_string(r);
}

void show_taylor_report(std::ostream& out, const TaylorReport& t, const std::string& label) {
  out << label << ": " << (t.holds_taylor ? "hold" : "fail");
  if (!t.violated.empty()) out << " (violated " << ids_text(t.violated) << ")";
  out << ", E = span{e2}: " << (t.in_tilde ? "yes" : "no");
  if (t.zeta) out << ", zeta = " << t.zeta->str();
  out << "\n";
}

int cmd_show(const std::string& path, std::ostream& out) {
  const Mask m = load_mask(path);
  out << "kind: " << to_string(m.kind()) << "\n";
  out << "p: " << m.dim() << "\n";
  if (m.kind() == SchemeKind::Hermite) out << "phi: " << m.phi().str() << "\n";
  out << "support: " << support_text(m.support()) << "\n";
  out << "symbol:\n";
  for (std::size_t r = 0; r < m.dim(); ++r) {
    for (std::size_t c = 0; c < m.dim(); ++c) {
      out << "  (" << r + 1 << "," << c + 1 << "): " << m.symbol()(r, c).str() << "\n";
    }
  }
  out << "A*(1): " << m.symbol().eval(UnitPoint::One).str() << "\n";
  out << "A*(-1): " << m.symbol().eval(UnitPoint::MinusOne).str() << "\n";
  const auto basis = common_one_eigenspace(m);
  out << "E: k=" << basis.size();
  for (std::size_t i = 0; i < basis.size(); ++i) out << (i ? ", " : " basis ") << vector_text(basis[i]);
  out << "\n";
  out << "operator norm: " << operator_norm(m).str() << "\n";

  if (m.dim() != 2) return kOk;
  const SpectralReport spectral = check_spectral(m);
  out << "spectral condition: " << (spectral.holds ? "holds" : "fails");
  if (spectral.holds) {
    out << ", phi = " << spectral.phi.str();
  } else {
    out << " (violated " << ids_text(spectral.violated) << ")";
  }
  out << "\n";
  if (m.kind() == SchemeKind::Hermite) {
    out << "interpolatory: " << (check_interpolatory(m) ? "yes" : "no") << "\n";
    if (spectral.holds) {
      const Mask taylor = taylor_scheme(m);
      show_taylor_report(out, check_taylor(taylor), "Taylor scheme, Taylor conditions");
      out << "root multiplicity of alpha12 at 1: "
          << multiplicity_text(zeta_multiplicity_forecast(m)) << "\n";
    }
  } else {
    show_taylor_report(out, check_taylor(m), "Taylor conditions");
  }
  return kOk;
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw std::runtime_error("cannot write '" + path + "'");
  file << text;
  if (!file) throw std::runtime_error("failed writing '" + path + "'");
}

int cmd_smooth(const std::string& path, unsigned rounds, const std::string& out_path,
               std::ostream& out, std::ostream& err) {
  Mask m = load_mask(path);
  for (unsigned round = 1; round <= rounds; ++round) {
    try {
      if (m.kind() == SchemeKind::Hermite) {
        HermiteSmoothingTrace trace = smooth_hermite_traced(m);
        m = std::move(trace.result);
        err << "round " << round << ": zeta = " << trace.zeta.str() << ", eta = " << trace.eta.str()
            << ", taylor_preserved = " << (trace.taylor_preserved ? "yes" : "no")
            << ", phi = " << m.phi().str() << ", support " << support_text(m.support()) << "\n";
      } else if (m.kind() == SchemeKind::Scalar) {
        m = smooth_scalar(m);
        err << "round " << round << ": k = 1, support " << support_text(m.support()) << "\n";
      } else {
        VectorSmoothingTrace trace = smooth_vector_traced(m);
        m = std::move(trace.result);
        err << "round " << round << ": k = " << trace.eigen.k << ", support "
            << support_text(m.support()) << "\n";
      }
    } catch (const Error& e) {
      throw Error("round " + std::to_string(round) + ": " + e.what());
    }
  }
  write_output(out_path, serialize_mask(m), out);
  return kOk;
}

unsigned default_lmax() {
  if (const char* env = std::getenv("SUBSMOOTH_LMAX")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v <= 24) return static_cast<unsigned>(v);
  }
  return kDefaultLmax;
}

int cmd_certify(const std::string& path, std::optional<unsigned> ell, std::optional<unsigned> lmax,
                std::ostream& out, std::ostream& err) {
  const Mask m = load_mask(path);
  const unsigned order = ell.value_or(m.kind() == SchemeKind::Hermite ? 1 : 0);
  const CertifyResult result = certify(m, order, lmax.value_or(default_lmax()));
  if (const auto* cert = std::get_if<Certificate>(&result)) {
    out << "certified: ";
    if (m.kind() == SchemeKind::Hermite) {
      out << "HC^" << cert->ell;
    } else {
      out << "C^" << cert->ell;
    }
    out << " (" << (cert->kind == Certificate::Kind::C0 ? "C0 contractivity" : "derived chain")
        << "), L = " << cert->levels << ", norm = " << cert->norm.str() << "\n";
    for (const auto& step : cert->steps) out << "  " << step << "\n";
    return kOk;
  }
  const auto& refusal = std::get<Refusal>(result);
  std::ostream& sink = refusal.precondition_failed ? err : out;
  sink << (refusal.precondition_failed ? "precondition failed: " : "") << refusal.reason << " [stage "
       << refusal.stage << "]\n";
  for (const auto& step : refusal.steps) sink << "  " << step << "\n";
  for (std::size_t i = 0; i < refusal.norms.size(); ++i) {
    sink << "  L = " << i + 1 << ": norm = " << refusal.norms[i].str() << "\n";
  }
  return refusal.precondition_failed ? kError : kInconclusive;
}

int cmd_render(const std::string& path, unsigned depth, std::size_t basis,
               const std::string& out_path, bool exact, std::ostream& out) {
  const Mask m = load_mask(path);
  const LimitSample sample = render(m, depth, basis);
  std::ostringstream csv;
  write_csv(csv, sample, exact);
  write_output(out_path, csv.str(), out);
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact smoothing, certification and rendering of subdivision schemes", "subsmooth"};
  app.require_subcommand(1);

  std::string path;
  auto* show = app.add_subcommand("show", "Print a mask's symbol and structural checks");
  show->add_option("path", path, "Mask file or catalog:<name>")->required();

  unsigned rounds = 1;
  std::string smooth_out;
  auto* smooth = app.add_subcommand("smooth", "Raise smoothness by one order per round");
  smooth->add_option("path", path, "Mask file or catalog:<name>")->required();
  smooth->add_option("--rounds", rounds, "Number of smoothing rounds")->check(CLI::Range(1u, 64u));
  smooth->add_option("--out", smooth_out, "Write the mask file here instead of stdout");

  std::optional<unsigned> ell;
  std::optional<unsigned> lmax;
  auto* certify_cmd = app.add_subcommand(
      "certify", "Contractivity certificate; exit 0 certified, 2 inconclusive, 1 error");
  certify_cmd->add_option("path", path, "Mask file or catalog:<name>")->required();
  certify_cmd->add_option("--ell", ell, "Smoothness order (default 0, or 1 for hermite)")
      ->check(CLI::Range(0u, 16u));
  certify_cmd->add_option("--lmax", lmax, "Largest power L tried (default $SUBSMOOTH_LMAX or 12)")
      ->check(CLI::Range(1u, 24u));

  unsigned depth = 0;
  std::size_t basis = 1;
  std::string render_out;
  bool exact = false;
  auto* render_cmd = app.add_subcommand("render", "Sample the basic limit function as CSV");
  render_cmd->add_option("path", path, "Mask file or catalog:<name>")->required();
  render_cmd->add_option("--depth", depth, "Refinement depth n >= 1")
      ->required()
      ->check(CLI::Range(1u, 20u));
  render_cmd->add_option("--basis", basis, "Component j of the delta data (1-based)")
      ->check(CLI::PositiveNumber);
  render_cmd->add_option("--out", render_out, "Write the CSV here instead of stdout");
  render_cmd->add_flag("--exact", exact, "Emit exact p/q values");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kError;
  }

  try {
    if (*show) return cmd_show(path, out);
    if (*smooth) return cmd_smooth(path, rounds, smooth_out, out, err);
    if (*certify_cmd) return cmd_certify(path, ell, lmax, out, err);
    if (*render_cmd) return cmd_render(path, depth, basis, render_out, exact, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}

}  // namespace subsmooth::cli
