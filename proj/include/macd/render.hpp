#pragma once

// Plain-text and LaTeX rendering.  LaTeX follows the display conventions of
// the source material: descending x-monomials and factored (1 - q^a t^b)
// denominators, so output can be eyeballed against printed formulas.

#include <string>

#include "macd/qt_rational.hpp"
#include "macd/x_polynomial.hpp"

namespace macd {

std::string to_text(const RationalQT& r);
std::string to_text(const XPolynomial& p);

std::string to_latex(const RationalQT& r);
std::string to_latex(const XPolynomial& p);

} // namespace macd
