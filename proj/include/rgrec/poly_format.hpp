#pragma once

#include <string>
#include <vector>

#include "rgrec/laurent_poly.hpp"
#include "rgrec/rational.hpp"

namespace rgrec {

/// LaTeX rendering with terms in descending total degree. A monomial and
/// its reciprocal that share a coefficient are printed as one grouped term.
/// One-variable input uses the bare symbol t and, when F is a polynomial
/// in z = (t+1)^2/(4t), appends "= <z-form>".
std::string to_latex(const LaurentPoly& p);

/// LaTeX of sum c_k z^k, highest power first.
std::string z_polynomial_latex(const std::vector<BigRational>& coeffs);

/// Plain text: the expanded polynomial, plus "z-form: ..." for one variable.
std::string to_pretty(const LaurentPoly& p);

}  // namespace rgrec
