#include "macd/hecke.hpp"

namespace macd {

XPolynomial apply_si(const XPolynomial& f, int i) {
    if (i < 1 || i >= f.n())
        throw index_out_of_range("apply_si index out of range");
    return f.permuted(Permutation::transposition(f.n(), i));
}

XPolynomial apply_T(const XPolynomial& f, int i) {
    if (i < 1 || i >= f.n())
        throw index_out_of_range("apply_T index out of range");
    XPolynomial swapped = apply_si(f, i);
    XPolynomial quotient = divide_by_xdiff(f - swapped, i);
    XMonomial xi1{std::vector<int>(f.n(), 0)};
    xi1.e[i] = 1;
    RationalQT one_minus_t =
        RationalQT::polynomial(QTPolynomial::one() - QTPolynomial::term(0, 1, 1));
    return swapped.scaled(RationalQT::t_power(1)) +
           quotient.times_monomial(xi1).scaled(one_minus_t);
}

XPolynomial apply_T_inverse(const XPolynomial& f, int i) {
    RationalQT t_minus_one =
        RationalQT::polynomial(QTPolynomial::term(0, 1, 1) - QTPolynomial::one());
    XPolynomial g = apply_T(f, i) - f.scaled(t_minus_one);
    return g.scaled(RationalQT::t_power(-1));
}

XPolynomial apply_g(const XPolynomial& f) {
    const int n = f.n();
    XPolynomial out(n);
    for (const auto& [m, c] : f.terms()) {
        XMonomial shifted{std::vector<int>(n, 0)};
        shifted.e[0] = m.e[n - 1];
        for (int k = 1; k < n; ++k)
            shifted.e[k] = m.e[k - 1];
        out.add_term(shifted, c * RationalQT::q_power(-m.e[n - 1]));
    }
    return out;
}

XPolynomial apply_Y(const XPolynomial& f, int i) {
    const int n = f.n();
    if (i < 1 || i > n)
        throw index_out_of_range("apply_Y index out of range");
    XPolynomial g = f;
    for (int j = i; j <= n - 1; ++j)
        g = apply_T(g, j);
    g = apply_g(g);
    for (int j = 1; j <= i - 1; ++j)
        g = apply_T_inverse(g, j);
    return g.scaled(RationalQT::t_power(i - 1));
}

EigenData k_exponents(const Composition& alpha) {
    const int n = alpha.size();
    EigenData data;
    data.alpha = alpha;
    for (int i = 1; i <= n; ++i) {
        int k = 0;
        for (int j = 1; j < i; ++j)
            if (alpha[j] > alpha[i])
                ++k;
        for (int j = i + 1; j <= n; ++j)
            if (alpha[j] >= alpha[i])
                ++k;
        data.k.push_back(k);
        data.eigenvalues.push_back(RationalQT::monomial(-alpha[i], k));
    }
    return data;
}

XPolynomial nonsymmetric_E(const Composition& alpha) {
    return tableau_E(alpha.reversed(), Permutation::longest(alpha.size()));
}

XPolynomial operator_E(const Composition& alpha, const Permutation& sigma) {
    if (alpha.size() != sigma.size())
        throw dimension_mismatch("shape and basement sizes differ");
    XPolynomial f = tableau_E(alpha, Permutation::longest(alpha.size())); // E_{rev(alpha)}
    std::vector<int> word = sigma.reversed().reduced_word();
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        f = apply_T(f, *it);
    return f.scaled(RationalQT::t_power(-twinv(alpha, sigma)));
}

} // namespace macd
