#include "subsmooth/cli/mask_file.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "subsmooth/cli/catalog.hpp"
#include "subsmooth/hermite_smoothing.hpp"

namespace subsmooth::cli {
namespace {

using nlohmann::json;

std::string describe_error(std::size_t line, const std::string& field, const std::string& message) {
  std::string out = "mask file";
  if (line > 0) out += ":" + std::to_string(line);
  if (!field.empty()) out += ": field '" + field + "'";
  return out + ": " + message;
}

std::size_t line_of_offset(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(offset), '\n'));
}

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  [[noreturn]] void fail(const std::string& field, const std::string& message) const {
    std::size_t line = 0;
    const std::string key = "\"" + field.substr(0, field.find('[')) + "\"";
    if (const auto pos = text_.find(key); pos != std::string_view::npos) {
      line = line_of_offset(text_, pos);
    }
    throw ParseError(line, field, message);
  }

  const json& member(const json& doc, const std::string& key) const {
    const auto it = doc.find(key);
    if (it == doc.end()) fail(key, "missing");
    return *it;
  }

  std::int64_t integer(const json& doc, const std::string& key) const {
    const json& v = member(doc, key);
    if (!v.is_number_integer()) fail(key, "expected an integer");
    return v.get<std::int64_t>();
  }

  Rat rational(const json& v, const std::string& field) const {
    if (!v.is_string()) fail(field, "expected a rational string such as \"3/8\"");
    const auto text = v.get<std::string>();
    const auto parsed = Rat::parse(text);
    if (!parsed) fail(field, "malformed rational \"" + text + "\"");
    if (parsed->str() != text) fail(field, "rational \"" + text + "\" is not in lowest terms");
    return *parsed;
  }

 private:
  std::string_view text_;
};

}  // namespace

ParseError::ParseError(std::size_t line, std::string field, const std::string& message)
    : Error(describe_error(line, field, message)), line_(line), field_(std::move(field)) {}

Mask parse_mask(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(line_of_offset(text, e.byte > 0 ? e.byte - 1 : 0), "", e.what());
  }
  const Reader in(text);
  if (!doc.is_object()) throw ParseError(1, "", "expected a JSON object");

  if (in.integer(doc, "schema_version") != kSchemaVersion) {
    in.fail("schema_version", "unsupported version (expected " + std::to_string(kSchemaVersion) + ")");
  }
  const json& kind_field = in.member(doc, "kind");
  if (!kind_field.is_string()) in.fail("kind", "expected a string");
  const auto kind = kind_field.get<std::string>();
  if (kind != "scalar" && kind != "vector" && kind != "hermite") {
    in.fail("kind", "expected \"scalar\", \"vector\" or \"hermite\"");
  }
  const std::int64_t p = in.integer(doc, "p");
  if (p < 1 || p > 64) in.fail("p", "dimension must be in [1, 64]");
  if (kind == "scalar" && p != 1) in.fail("p", "scalar masks have p = 1");
  if (kind == "hermite" && p != 2) in.fail("p", "hermite masks have p = 2");
  const std::int64_t lo = in.integer(doc, "support_lo");

  const json& coeffs = in.member(doc, "coeffs");
  if (!coeffs.is_array()) in.fail("coeffs", "expected an array of p x p matrices");
  const auto dim = static_cast<std::size_t>(p);
  std::vector<RatMatrix> matrices;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const std::string where = "coeffs[" + std::to_string(i) + "]";
    const json& rows = coeffs[i];
    if (!rows.is_array() || rows.size() != dim) in.fail(where, "expected " + std::to_string(p) + " rows");
    RatMatrix m(dim, dim);
    for (std::size_t r = 0; r < dim; ++r) {
      const json& row = rows[r];
      if (!row.is_array() || row.size() != dim) {
        in.fail(where, "row " + std::to_string(r) + " must have " + std::to_string(p) + " entries");
      }
      for (std::size_t c = 0; c < dim; ++c) {
        m(r, c) = in.rational(row[c], where + "[" + std::to_string(r) + "][" + std::to_string(c) + "]");
      }
    }
    matrices.push_back(std::move(m));
  }
  const SymbolMatrix symbol =
      matrices.empty() ? SymbolMatrix(dim) : SymbolMatrix::from_coefficients(lo, matrices);

  const bool has_phi = doc.contains("phi");
  if (kind == "scalar") {
    if (has_phi) in.fail("phi", "only hermite masks carry phi");
    return Mask::scalar(symbol(0, 0));
  }
  if (kind == "vector") {
    if (has_phi) in.fail("phi", "only hermite masks carry phi");
    return Mask::vector(symbol);
  }
  const Rat phi = in.rational(in.member(doc, "phi"), "phi");
  Mask m = Mask::hermite(symbol, phi);
  const SpectralReport report = check_spectral(Mask::vector(symbol));
  if (report.holds && report.phi != phi) {
    in.fail("phi", "symbol satisfies the spectral condition with phi = " + report.phi.str());
  }
  return m;
}

std::string serialize_mask(const Mask& m) {
  // Keys in sorted order, one coefficient matrix per line.
  const auto support = m.support();
  std::ostringstream out;
  out << "{\n  \"coeffs\": [";
  if (support) {
    for (std::int64_t e = support->lo; e <= support->hi; ++e) {
      const RatMatrix a = m.symbol().coefficient(e);
      json rows = json::array();
      for (std::size_t r = 0; r < a.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < a.cols(); ++c) row.push_back(a(r, c).str());
        rows.push_back(std::move(row));
      }
      out << (e == support->lo ? "\n    " : ",\n    ") << rows.dump();
    }
    out << "\n  ";
  }
  out << "],\n";
  out << "  \"kind\": " << json(to_string(m.kind())).dump() << ",\n";
  out << "  \"p\": " << m.dim() << ",\n";
  if (m.kind() == SchemeKind::Hermite) out << "  \"phi\": " << json(m.phi().str()).dump() << ",\n";
  out << "  \"schema_version\": " << kSchemaVersion << ",\n";
  out << "  \"support_lo\": " << (support ? support->lo : 0) << "\n}\n";
  return out.str();
}

Mask load_mask(const std::string& path) {
  constexpr std::string_view scheme = "catalog:";
  if (path.starts_with(scheme)) {
    const std::string name = path.substr(scheme.size());
    if (auto m = catalog_lookup(name)) return *m;
    std::string known;
    for (const auto& n : catalog_names()) known += (known.empty() ? "" : ", ") + n;
    throw ParseError(0, "", "unknown catalog entry '" + name + "' (known: " + known + ")");
  }
  std::ifstream file(path);
  if (!file) throw ParseError(0, "", "cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << file.rdbuf();
  return parse_mask(buffer.str());
}

}  // namespace subsmooth::cli
