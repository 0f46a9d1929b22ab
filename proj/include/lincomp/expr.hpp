#pragma once

#include <string_view>

#include "lincomp/mpoly.hpp"
#include "lincomp/operator_poly.hpp"

namespace lincomp {

/// Reads an operator-polynomial expression such as
/// `(D + a21 + a41)*(D + a32)*a35*a24` or `D^2 + (a01+a12) D - 1/2*a21`.
/// Symbols: parameters (`a21`, `a12_3`), coefficient symbols (`c4`), `D` for
/// the differential operator. Juxtaposition multiplies. Throws ParseError.
OperatorPoly parse_operator_poly(std::string_view text);

/// As parse_operator_poly, but rejects `D`.
MPoly parse_mpoly(std::string_view text);

}  // namespace lincomp
