#pragma once

#include <string>
#include <vector>

#include "hermpsh/herm_poly.hpp"

namespace hermpsh {

/// Canonical text, leading term first, parseable by parse_expression.
/// Empty `variables` means z1..zn.
std::string format_poly(const HermPoly& p, const std::vector<std::string>& variables = {});
std::string format_poly(const MixedPoly& p, const std::vector<std::string>& variables = {});
std::string format_poly(const HoloPoly& p, const std::vector<std::string>& variables = {});

}  // namespace hermpsh
