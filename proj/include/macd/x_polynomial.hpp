#pragma once

// Sparse polynomials in x_1..x_n with RationalQT coefficients.  This is the
// ring Q(q,t)[x] where all the Macdonald-type polynomials live.

#include <compare>
#include <map>
#include <vector>

#include "macd/qt_rational.hpp"
#include "macd/words.hpp"

namespace macd {

// Exponent vector of x_1^{e_1} ... x_n^{e_n}.
struct XMonomial {
    std::vector<int> e;
    int degree() const;
    auto operator<=>(const XMonomial&) const = default;
};

class XPolynomial {
public:
    XPolynomial() = default;
    explicit XPolynomial(int n) : n_(n) {}

    static XPolynomial constant(int n, RationalQT c);
    static XPolynomial monomial(XMonomial m, RationalQT c);
    static XPolynomial variable(int n, int i); // x_i

    int n() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<XMonomial, RationalQT>& terms() const { return terms_; }

    RationalQT coefficient(const XMonomial& m) const;

    void add_term(const XMonomial& m, const RationalQT& c);

    XPolynomial& operator+=(const XPolynomial& rhs);
    XPolynomial& operator-=(const XPolynomial& rhs);
    friend XPolynomial operator+(XPolynomial a, const XPolynomial& b) { return a += b; }
    friend XPolynomial operator-(XPolynomial a, const XPolynomial& b) { return a -= b; }
    friend XPolynomial operator*(const XPolynomial& a, const XPolynomial& b);
    XPolynomial operator-() const;

    XPolynomial scaled(const RationalQT& c) const;
    XPolynomial times_monomial(const XMonomial& m) const;

    // Substitution x_j <- x_{sigma(j)}, i.e. x^beta -> x^{sigma . beta}.
    XPolynomial permuted(const Permutation& sigma) const;

    // q = 0 specialization applied coefficient-wise.
    XPolynomial specialize_q0() const;

    // Value equality (coefficient-wise).
    friend bool operator==(const XPolynomial& a, const XPolynomial& b);

private:
    void check_same_ring(const XPolynomial& other) const;
    int n_ = 0;
    std::map<XMonomial, RationalQT> terms_;
};

// Exact quotient (f - s_i(f)) / (x_i - x_{i+1}) for f antisymmetric in
// x_i, x_{i+1}; the caller passes the already-antisymmetrized polynomial.
// Throws inexact_division on a nonzero remainder.
XPolynomial divide_by_xdiff(const XPolynomial& f, int i);

} // namespace macd
