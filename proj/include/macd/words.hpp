#pragma once

// Compositions, permutations in one-line notation, the left action of S_n on
// compositions, and the word statistics the polynomial constructions depend
// on (twinv, reduced words, the C_alpha coset test).

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "macd/errors.hpp"

namespace macd {

// Weak composition <a_1, ..., a_n>, parts >= 0.
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> parts);

    int size() const { return static_cast<int>(parts_.size()); }
    int sum() const;
    // 1-based part access
    int operator[](int i) const { return parts_[i - 1]; }
    const std::vector<int>& parts() const { return parts_; }

    bool is_partition() const;     // weakly decreasing
    bool is_antipartition() const; // weakly increasing

    Composition sorted_decreasing() const;
    Composition sorted_increasing() const;
    Composition reversed() const;

    // Exponent notation p_1^{m_1} ... p_k^{m_k} with p_i != p_{i+1}.
    std::vector<std::pair<int, int>> exponent_notation() const;

    auto operator<=>(const Composition&) const = default;

private:
    std::vector<int> parts_;
};

// Permutation of {1..n} in one-line notation [w_1, ..., w_n]; the window is
// the function, w(i) = w_i, and products compose as (sigma pi)(i) = sigma(pi(i)).
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> window);

    static Permutation identity(int n);
    static Permutation longest(int n); // w_0 = [n, n-1, ..., 1]
    static Permutation transposition(int n, int i); // s_i

    int size() const { return static_cast<int>(window_.size()); }
    int operator[](int i) const { return window_[i - 1]; } // 1-based
    int operator()(int i) const { return window_[i - 1]; }
    const std::vector<int>& window() const { return window_; }

    Permutation inverse() const;
    friend Permutation operator*(const Permutation& s, const Permutation& p);

    // sigma * s_i: swaps the window entries at positions i, i+1.
    Permutation times_s(int i) const;
    // [w_n, ..., w_1] = w * w_0
    Permutation reversed() const;

    bool is_identity() const;
    int length() const; // inversion count

    // Deterministic reduced word (i_1, ..., i_k) with s_{i_1} ... s_{i_k}
    // equal to *this and k = length().  Produced by repeatedly removing the
    // smallest descent on the right.
    std::vector<int> reduced_word() const;

    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> window_;
};

// pi . alpha = <alpha_{pi^{-1}(1)}, ..., alpha_{pi^{-1}(n)}>
Composition left_action(const Permutation& pi, const Composition& alpha);

// |{ (i,j) : i < j, alpha_i >= alpha_j, sigma_i < sigma_j }|
int twinv(const Composition& alpha, const Permutation& sigma);

// Whether sigma^{-1} tau lies in C_alpha, the subgroup generated by
// { s_i : alpha_i = alpha_{i+1} }.  Decided by the block decomposition of
// alpha into maximal runs of equal adjacent parts.
bool coset_related(const Composition& alpha, const Permutation& sigma, const Permutation& tau);

std::string to_string(const Composition& alpha);
std::string to_string(const Permutation& sigma);

} // namespace macd
