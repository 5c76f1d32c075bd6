#pragma once

// Demazure-Lusztig operators T_i, the q-twisted cyclic shift g, the
// Cherednik-Dunkl operators Y_i, and the operator route to E_alpha^sigma.
// This is the algebraic cross-check against the tableau formula: the two
// constructions share nothing but the ground ring.

#include "macd/filling.hpp"
#include "macd/words.hpp"
#include "macd/x_polynomial.hpp"

namespace macd {

// s_i acting on polynomials by swapping x_i and x_{i+1}.
XPolynomial apply_si(const XPolynomial& f, int i);

// T_i(f) = t s_i(f) + (1-t) x_{i+1} (f - s_i(f)) / (x_i - x_{i+1})
XPolynomial apply_T(const XPolynomial& f, int i);

// T_i^{-1} = t^{-1} (T_i - (t-1)), from the quadratic relation
// T_i^2 = (t-1) T_i + t.
XPolynomial apply_T_inverse(const XPolynomial& f, int i);

// g(f)(x_1, ..., x_n) = f(x_2, ..., x_n, q^{-1} x_1)
XPolynomial apply_g(const XPolynomial& f);

// Y_i = t^{i-1} T_{i-1}^{-1} ... T_1^{-1} g T_{n-1} ... T_i,
// rightmost factor applied first.
XPolynomial apply_Y(const XPolynomial& f, int i);

struct EigenData {
    Composition alpha;
    std::vector<int> k;                  // k_1 .. k_n
    std::vector<RationalQT> eigenvalues; // q^{-alpha_i} t^{k_i}
};

// k_i = |{j < i : alpha_j > alpha_i}| + |{j > i : alpha_j >= alpha_i}|
EigenData k_exponents(const Composition& alpha);

// The nonsymmetric Macdonald polynomial E_alpha, realized through the
// tableau formula as E_alpha = E_{rev(alpha)}^{w_0}.
XPolynomial nonsymmetric_E(const Composition& alpha);

// E_alpha^sigma = t^{-twinv(alpha, sigma)} T_{rev(sigma)} E_{rev(alpha)},
// with T_{rev(sigma)} expanded along a reduced word.
XPolynomial operator_E(const Composition& alpha, const Permutation& sigma);

} // namespace macd
