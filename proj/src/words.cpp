#include "macd/words.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace macd {

// ----------------------------------------------------------------- Composition

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
        if (p < 0)
            throw invalid_arguments("composition parts must be nonnegative");
}

int Composition::sum() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Composition::is_partition() const {
    return std::is_sorted(parts_.begin(), parts_.end(), std::greater<int>());
}

bool Composition::is_antipartition() const {
    return std::is_sorted(parts_.begin(), parts_.end());
}

Composition Composition::sorted_decreasing() const {
    std::vector<int> p = parts_;
    std::sort(p.begin(), p.end(), std::greater<int>());
    return Composition(std::move(p));
}

Composition Composition::sorted_increasing() const {
    std::vector<int> p = parts_;
    std::sort(p.begin(), p.end());
    return Composition(std::move(p));
}

Composition Composition::reversed() const {
    std::vector<int> p(parts_.rbegin(), parts_.rend());
    return Composition(std::move(p));
}

std::vector<std::pair<int, int>> Composition::exponent_notation() const {
    std::vector<std::pair<int, int>> out;
    for (int p : parts_) {
        if (!out.empty() && out.back().first == p)
            ++out.back().second;
        else
            out.emplace_back(p, 1);
    }
    return out;
}

// ----------------------------------------------------------------- Permutation

Permutation::Permutation(std::vector<int> window) : window_(std::move(window)) {
    std::vector<bool> seen(window_.size(), false);
    for (int v : window_) {
        if (v < 1 || v > size() || seen[v - 1])
            throw invalid_arguments("window is not a permutation of 1..n");
        seen[v - 1] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
}

Permutation Permutation::longest(int n) {
    std::vector<int> w(n);
    for (int i = 0; i < n; ++i)
        w[i] = n - i;
    return Permutation(std::move(w));
}

Permutation Permutation::transposition(int n, int i) {
    if (i < 1 || i >= n)
        throw index_out_of_range("transposition index out of range");
    Permutation p = identity(n);
    std::swap(p.window_[i - 1], p.window_[i]);
    return p;
}

Permutation Permutation::inverse() const {
    std::vector<int> w(window_.size());
    for (int i = 1; i <= size(); ++i)
        w[window_[i - 1] - 1] = i;
    return Permutation(std::move(w));
}

Permutation operator*(const Permutation& s, const Permutation& p) {
    if (s.size() != p.size())
        throw dimension_mismatch("permutation sizes differ");
    std::vector<int> w(s.size());
    for (int i = 1; i <= s.size(); ++i)
        w[i - 1] = s[p[i]];
    return Permutation(std::move(w));
}

Permutation Permutation::times_s(int i) const {
    if (i < 1 || i >= size())
        throw index_out_of_range("simple transposition index out of range");
    Permutation p = *this;
    std::swap(p.window_[i - 1], p.window_[i]);
    return p;
}

Permutation Permutation::reversed() const {
    std::vector<int> w(window_.rbegin(), window_.rend());
    return Permutation(std::move(w));
}

bool Permutation::is_identity() const {
    for (int i = 1; i <= size(); ++i)
        if (window_[i - 1] != i)
            return false;
    return true;
}

int Permutation::length() const {
    int inv = 0;
    for (int i = 0; i < size(); ++i)
        for (int j = i + 1; j < size(); ++j)
            if (window_[i] > window_[j])
                ++inv;
    return inv;
}

std::vector<int> Permutation::reduced_word() const {
    // Each step multiplies by s_i at the smallest descent, removing exactly
    // one inversion; unwinding gives sigma = s_{j_m} ... s_{j_1}.
    std::vector<int> w = window_;
    std::vector<int> word;
    bool progress = true;
    while (progress) {
        progress = false;
        for (int i = 0; i + 1 < size(); ++i) {
            if (w[i] > w[i + 1]) {
                std::swap(w[i], w[i + 1]);
                word.push_back(i + 1);
                progress = true;
                break;
            }
        }
    }
    std::reverse(word.begin(), word.end());
    return word;
}

// ------------------------------------------------------------------ operations

Composition left_action(const Permutation& pi, const Composition& alpha) {
    if (pi.size() != alpha.size())
        throw dimension_mismatch("left_action: sizes differ");
    Permutation inv = pi.inverse();
    std::vector<int> out(alpha.size());
    for (int j = 1; j <= alpha.size(); ++j)
        out[j - 1] = alpha[inv[j]];
    return Composition(std::move(out));
}

int twinv(const Composition& alpha, const Permutation& sigma) {
    if (alpha.size() != sigma.size())
        throw dimension_mismatch("twinv: sizes differ");
    int count = 0;
    for (int i = 1; i <= alpha.size(); ++i)
        for (int j = i + 1; j <= alpha.size(); ++j)
            if (alpha[i] >= alpha[j] && sigma[i] < sigma[j])
                ++count;
    return count;
}

bool coset_related(const Composition& alpha, const Permutation& sigma, const Permutation& tau) {
    if (alpha.size() != sigma.size() || alpha.size() != tau.size())
        throw dimension_mismatch("coset_related: sizes differ");
    // Block id per position: maximal runs of equal adjacent parts.
    std::vector<int> block(alpha.size());
    int id = 0;
    for (int i = 1; i <= alpha.size(); ++i) {
        if (i > 1 && alpha[i] != alpha[i - 1])
            ++id;
        block[i - 1] = id;
    }
    Permutation pi = sigma.inverse() * tau;
    for (int i = 1; i <= alpha.size(); ++i)
        if (block[pi[i] - 1] != block[i - 1])
            return false;
    return true;
}

std::string to_string(const Composition& alpha) {
    std::ostringstream os;
    os << '<';
    for (int i = 1; i <= alpha.size(); ++i)
        os << (i > 1 ? "," : "") << alpha[i];
    os << '>';
    return os.str();
}

std::string to_string(const Permutation& sigma) {
    std::ostringstream os;
    os << '[';
    for (int i = 1; i <= sigma.size(); ++i)
        os << (i > 1 ? "," : "") << sigma[i];
    os << ']';
    return os.str();
}

} // namespace macd
