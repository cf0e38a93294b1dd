#pragma once

#include <filesystem>
#include <string>

#include "rgrec/laurent_poly.hpp"

namespace rgrec {

/// Canonical JSON: {"nvars":n,"terms":[{"exp":[...],"coeff":"num/den"},...]}
/// with terms in ascending lexicographic exponent order. Byte-stable.
std::string to_canonical_json(const LaurentPoly& p);
LaurentPoly from_json(const std::string& text);

void write_poly_file(const std::filesystem::path& path, const LaurentPoly& p);
LaurentPoly read_poly_file(const std::filesystem::path& path);

}  // namespace rgrec
