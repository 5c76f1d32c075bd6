#pragma once

// The probabilistic bijection between NAF(alpha, sigma) and
// NAF(alpha, sigma s_i) for columns i, i+1 of equal height: prefix swap
// operators, the six-case row transition value rho_i^(r), and the induced
// probability map P_i over prefix-swapped fillings.

#include <map>
#include <vector>

#include "macd/filling.hpp"
#include "macd/qt_rational.hpp"

namespace macd {

// Swaps the entries of boxes (i, r) and (i+1, r); r = 0 swaps the basement
// entries, turning basement sigma into sigma s_i.
Filling swap_row(const Filling& T, int i, int r);

// swap^{[0,h]}_i: swaps rows 0..h within columns i and i+1.
Filling swap_prefix(const Filling& T, int i, int h);

// rho_i^(r)(T) per the six-case table, with
// a = T(i,r), b = T(i+1,r), c = T(i,r+1), d = T(i+1,r+1),
// ell = leg(i+1, r+1), A = arm(i+1, r+1); rho_i^(alpha_i) = 0 by convention.
// Requires T non-attacking and alpha_i = alpha_{i+1}.
RationalQT rho(const Filling& T, const ShapeInfo& info, int i, int r);

// The distribution P_i(T, -): rho values for r = 0..alpha_i and the map from
// each target swap^{[0,h]}_i(T) to its probability.  Values of colliding
// targets are summed (collisions cannot occur for non-attacking T, since the
// swapped column pair never agrees row-by-row).
struct ProbabilityRow {
    Filling source;
    int column = 0;
    std::vector<RationalQT> rho_values;
    std::map<Filling, RationalQT> dist;
};

ProbabilityRow probability_row(const Filling& T, const ShapeInfo& info, int i);

// P_i(T, U): the product formula when U is a prefix swap of T, else zero.
RationalQT transition_probability(const Filling& T, const Filling& U, const ShapeInfo& info,
                                  int i);

} // namespace macd
