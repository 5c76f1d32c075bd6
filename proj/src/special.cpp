#include "macd/special.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "macd/filling.hpp"

namespace macd {

Permutation sorting_permutation(const Composition& source, const Composition& target) {
    if (source.size() != target.size())
        throw dimension_mismatch("sorting_permutation: sizes differ");
    if (source.sorted_increasing() != target.sorted_increasing())
        throw invalid_arguments("compositions are not rearrangements of each other");
    const int n = source.size();
    // tau^{-1}(j) = the position in source of the k-th copy of the value
    // target_j, where j is the k-th position of that value in target.
    std::map<int, std::vector<int>> positions;
    for (int i = 1; i <= n; ++i)
        positions[source[i]].push_back(i);
    std::map<int, int> taken;
    std::vector<int> inv(n);
    for (int j = 1; j <= n; ++j) {
        int v = target[j];
        inv[j - 1] = positions[v][taken[v]++];
    }
    return Permutation(std::move(inv)).inverse();
}

std::vector<Permutation> all_sorting_permutations(const Composition& source,
                                                  const Composition& target) {
    const int n = source.size();
    std::vector<Permutation> out;
    std::vector<int> window(n);
    std::iota(window.begin(), window.end(), 1);
    do {
        Permutation tau{window};
        if (left_action(tau, source) == target)
            out.push_back(tau);
    } while (std::next_permutation(window.begin(), window.end()));
    return out;
}

XPolynomial t_atom(const Composition& alpha, const std::optional<Permutation>& sigma) {
    Permutation basement = sigma ? *sigma : Permutation::identity(alpha.size());
    return tableau_E(alpha, basement).specialize_q0();
}

XPolynomial t_key(const Composition& alpha) {
    return t_atom(alpha, Permutation::longest(alpha.size()));
}

XPolynomial asep_F(const Composition& alpha) {
    Composition inc = alpha.sorted_increasing();
    Permutation tau = sorting_permutation(inc, alpha);
    return tableau_E(inc, tau);
}

std::vector<Composition> rearrangements(const Composition& alpha) {
    std::vector<int> parts = alpha.sorted_increasing().parts();
    std::vector<Composition> out;
    do {
        out.emplace_back(parts);
    } while (std::next_permutation(parts.begin(), parts.end()));
    return out;
}

XPolynomial symmetric_P(const Composition& lambda) {
    if (!lambda.is_partition())
        throw not_a_partition("symmetric_P requires a weakly decreasing shape");
    Composition inc = lambda.sorted_increasing();
    XPolynomial sum(lambda.size());
    for (const Composition& mu : rearrangements(lambda)) {
        Permutation sigma_mu = sorting_permutation(inc, mu);
        sum += tableau_E(inc, sigma_mu);
    }
    return sum;
}

} // namespace macd
