#include "macd/bijection.hpp"

namespace macd {

Filling swap_row(const Filling& T, int i, int r) {
    if (i < 1 || i >= T.n())
        throw index_out_of_range("swap_row column index out of range");
    if (T.height(i) != T.height(i + 1))
        throw unequal_column_heights("swap_row requires alpha_i = alpha_{i+1}");
    if (r < 0 || r > T.height(i))
        throw row_out_of_range("swap_row row out of range");
    Filling out = T;
    if (r == 0) {
        out.set_basement(T.basement().times_s(i));
    } else {
        out.set_label(i, r, T.label(i + 1, r));
        out.set_label(i + 1, r, T.label(i, r));
    }
    return out;
}

Filling swap_prefix(const Filling& T, int i, int h) {
    Filling out = T;
    for (int r = 0; r <= h; ++r)
        out = swap_row(out, i, r);
    return out;
}

RationalQT rho(const Filling& T, const ShapeInfo& info, int i, int r) {
    if (i < 1 || i >= T.n())
        throw precondition_violated("rho column index out of range");
    const int h = T.height(i);
    if (T.height(i + 1) != h)
        throw precondition_violated("rho requires alpha_i = alpha_{i+1}");
    if (r < 0 || r > h)
        throw precondition_violated("rho row out of range");
    if (r == h)
        return RationalQT::zero(); // stated convention

    const int a = T.label(i, r);
    const int b = T.label(i + 1, r);
    const int c = T.label(i, r + 1);
    const int d = T.label(i + 1, r + 1);
    // The non-attacking property forces a != b, a != d, c != d, so the cases
    // below partition the inputs; anything else is a malformed filling.
    if (a == b || a == d || c == d)
        throw precondition_violated("rho applied to an attacking filling");

    int distinct = 4;
    if (a == c)
        --distinct;
    if (b == c)
        --distinct;
    if (b == d)
        --distinct;

    switch (distinct) {
    case 4: {
        const int cda = indicator3(c, d, a);
        const bool zero_case = cda == indicator3(c, d, b);
        const bool one_case = cda == indicator3(d, c, b);
        if (zero_case == one_case) // the two conditions partition distinct inputs
            throw precondition_violated("rho: table cases are not a partition here");
        return zero_case ? RationalQT::zero() : RationalQT::one();
    }
    case 3: {
        if (b == c)
            return RationalQT::zero();
        if (b == d)
            return RationalQT::one();
        // a == c
        Box upper{i + 1, r + 1};
        const int ell = info.leg(upper);
        const int A = info.arm(upper);
        QTPolynomial num = QTPolynomial::cyclotomic(ell + 1, A + 1);
        DenominatorFactors den;
        den[CyclotomicFactor(ell + 1, A + 2)] = 1;
        return RationalQT::fraction(0, 1 - indicator3(d, a, b), std::move(num), std::move(den));
    }
    case 2:
        return RationalQT::one(); // a == c and b == d
    default:
        throw precondition_violated("rho case dispatch fell through");
    }
}

ProbabilityRow probability_row(const Filling& T, const ShapeInfo& info, int i) {
    ProbabilityRow out;
    out.source = T;
    out.column = i;
    const int h_max = T.height(i);
    for (int r = 0; r <= h_max; ++r)
        out.rho_values.push_back(rho(T, info, i, r));

    RationalQT prefix = RationalQT::one();
    Filling target = T;
    for (int h = 0; h <= h_max; ++h) {
        target = swap_row(target, i, h); // now equals swap^{[0,h]}(T)
        RationalQT p = prefix * (RationalQT::one() - out.rho_values[h]);
        auto [it, inserted] = out.dist.emplace(target, p);
        if (!inserted)
            it->second += p;
        prefix *= out.rho_values[h];
    }
    return out;
}

RationalQT transition_probability(const Filling& T, const Filling& U, const ShapeInfo& info,
                                  int i) {
    if (T.shape() != U.shape())
        throw precondition_violated("transition between different shapes");
    RationalQT total = RationalQT::zero();
    RationalQT prefix = RationalQT::one();
    Filling target = T;
    for (int h = 0; h <= T.height(i); ++h) {
        target = swap_row(target, i, h);
        if (target == U)
            total += prefix * (RationalQT::one() - rho(T, info, i, h));
        prefix *= rho(T, info, i, h);
    }
    return total;
}

} // namespace macd
