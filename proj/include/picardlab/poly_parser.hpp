#pragma once

#include <string_view>
#include <variant>

#include "picardlab/curve_lab.hpp"

namespace picardlab {

// Plain-text term sums: `c*x^i*y^j` (local, variables x and y) or
// `c*X0^i*X1^j*X2^k` (homogeneous). Coefficients are integers or `p/q`;
// `*` between factors is required, whitespace is ignored. Mixing the two
// variable sets, or a non-homogeneous X-polynomial, is a parse error.
using ParsedPolynomial = std::variant<LocalPoly, HomPoly>;

ParsedPolynomial parse_polynomial(std::string_view text);
LocalPoly parse_local(std::string_view text);
HomPoly parse_homogeneous(std::string_view text);

}  // namespace picardlab
