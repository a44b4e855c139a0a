#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "subsmooth/errors.hpp"
#include "subsmooth/mask.hpp"

namespace subsmooth::cli {

inline constexpr int kSchemaVersion = 1;

/// Malformed mask file. `line` is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::string field, const std::string& message);
  [[nodiscard]] std::size_t line() const { return line_; }
  [[nodiscard]] const std::string& field() const { return field_; }

 private:
  std::size_t line_;
  std::string field_;
};

/// JSON mask file: schema_version, kind, p, phi (hermite only), support_lo,
/// coeffs (one p×p array of rational strings per exponent).
Mask parse_mask(std::string_view text);

/// Canonical form: keys sorted, rationals reduced, trailing newline.
std::string serialize_mask(const Mask& m);

/// `catalog:<name>` or a file path.
Mask load_mask(const std::string& path);

}  // namespace subsmooth::cli
