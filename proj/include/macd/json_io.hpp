#pragma once

// JSON encodings of the exchange types.  Term order follows the canonical
// orderings (ascending (q,t) for coefficients, ascending lex for monomials,
// ascending (a,b) for denominator factors) so output is bit-reproducible.
//
//   RationalQT  {"unit":{"q":int,"t":int},
//                "num":[{"q":int,"t":int,"c":"decimal-string"},...],
//                "den":[{"a":int,"b":int,"m":int},...]}
//   XPolynomial {"n":int,"terms":[{"x":[int,...],"coef":<RationalQT>},...]}
//   Filling     {"shape":[...],"basement":[...],
//                "rows":[[label-or-null per column,...],...]}   (rows[0] = row 1)

#include <json.hpp>

#include "macd/filling.hpp"
#include "macd/qt_rational.hpp"
#include "macd/x_polynomial.hpp"

namespace macd {

using Json = nlohmann::json;

Json to_json(const RationalQT& r);
RationalQT rational_qt_from_json(const Json& j);

Json to_json(const XPolynomial& p);
XPolynomial x_polynomial_from_json(const Json& j);

Json to_json(const Filling& f);
Filling filling_from_json(const Json& j);

} // namespace macd
