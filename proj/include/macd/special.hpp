#pragma once

// q = 0 and sorted-shape specializations: permuted-basement t-atoms, t-key
// polynomials, ASEP polynomials F_alpha, and the decomposition of the
// symmetric Macdonald polynomial P_lambda into permuted-basement pieces.

#include <optional>
#include <vector>

#include "macd/words.hpp"
#include "macd/x_polynomial.hpp"

namespace macd {

// The shortest permutation tau with tau . source = target (source and target
// rearrange each other); equal parts keep their relative order.
Permutation sorting_permutation(const Composition& source, const Composition& target);

// All permutations tau with tau . source = target.
std::vector<Permutation> all_sorting_permutations(const Composition& source,
                                                  const Composition& target);

// A_alpha^sigma(x; t) = E_alpha^sigma(x; 0, t); sigma defaults to the identity.
XPolynomial t_atom(const Composition& alpha,
                   const std::optional<Permutation>& sigma = std::nullopt);

// K_alpha(x; t) = A_alpha^{w_0}(x; t)
XPolynomial t_key(const Composition& alpha);

// F_alpha(x; q, t) = E_{inc(alpha)}^{tau}(x; q, t) for the deterministic
// shortest tau with tau . inc(alpha) = alpha.
XPolynomial asep_F(const Composition& alpha);

// P_lambda(x; q, t) = sum over distinct rearrangements mu of lambda of
// E_{inc(lambda)}^{sigma_mu}; throws not_a_partition unless lambda is
// weakly decreasing.
XPolynomial symmetric_P(const Composition& lambda);

// Distinct rearrangements of lambda in lexicographic order.
std::vector<Composition> rearrangements(const Composition& alpha);

} // namespace macd
