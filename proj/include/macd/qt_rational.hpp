#pragma once

// Exact arithmetic over Q(q,t), restricted to the fragment the weight
// formulas live in: every value is a monomial unit q^u t^v times an integer
// polynomial in q,t, divided by a multiset of factors (1 - q^a t^b) with
// a >= 1.  Equality is decided by cross-multiplication, so no multivariate
// gcd is ever needed; a denominator factor is cancelled only when it divides
// the numerator exactly.

#include <compare>
#include <map>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "macd/errors.hpp"

namespace macd {

using BigInt = boost::multiprecision::cpp_int;

// Exponent pair of a monomial q^q_exp t^t_exp.
struct QTExp {
    int q = 0;
    int t = 0;
    auto operator<=>(const QTExp&) const = default;
};

// Integer polynomial in q and t with nonnegative exponents.
// Canonical form: no stored coefficient is zero; terms ordered by (q,t).
class QTPolynomial {
public:
    QTPolynomial() = default;

    static QTPolynomial constant(BigInt c);
    static QTPolynomial one() { return constant(1); }
    static QTPolynomial term(int q, int t, BigInt c);
    // 1 - q^a t^b
    static QTPolynomial cyclotomic(int a, int b);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    const std::map<QTExp, BigInt>& terms() const { return terms_; }

    // Smallest q-exponent and smallest t-exponent over all terms
    // (independently).  Requires a nonzero polynomial.
    QTExp min_exponents() const;

    QTPolynomial& operator+=(const QTPolynomial& rhs);
    QTPolynomial& operator-=(const QTPolynomial& rhs);
    friend QTPolynomial operator+(QTPolynomial a, const QTPolynomial& b) { return a += b; }
    friend QTPolynomial operator-(QTPolynomial a, const QTPolynomial& b) { return a -= b; }
    friend QTPolynomial operator*(const QTPolynomial& a, const QTPolynomial& b);
    QTPolynomial operator-() const;

    // Multiplies by q^dq t^dt.  The shifted exponents must stay nonnegative.
    QTPolynomial shifted(int dq, int dt) const;

    // Exact division in lex order (q before t).  Returns the quotient when
    // divisor | *this, otherwise nullopt.  Divisor must be nonzero.
    std::optional<QTPolynomial> divide_exact(const QTPolynomial& divisor) const;

    bool operator==(const QTPolynomial&) const = default;

private:
    void add_term(QTExp e, const BigInt& c);
    std::map<QTExp, BigInt> terms_;
};

// One denominator factor 1 - q^a t^b.  Every factor produced by the weight
// formulas has a = 1 + leg >= 1, which is what makes the q = 0
// specialization total.
struct CyclotomicFactor {
    int a = 1;
    int b = 0;

    CyclotomicFactor() = default;
    CyclotomicFactor(int a_, int b_) : a(a_), b(b_) {
        if (a < 1 || b < 0)
            throw invalid_arguments("cyclotomic factor requires a >= 1, b >= 0");
    }

    QTPolynomial expand() const { return QTPolynomial::cyclotomic(a, b); }
    auto operator<=>(const CyclotomicFactor&) const = default;
};

// factor -> multiplicity, multiplicities always > 0
using DenominatorFactors = std::map<CyclotomicFactor, int>;

// Element of Q(q,t) in the form q^uq t^ut * num / prod (1 - q^a t^b)^m.
// Zero is the empty numerator with trivial unit and denominator.
class RationalQT {
public:
    RationalQT() = default; // zero

    static RationalQT zero() { return {}; }
    static RationalQT one() { return integer(1); }
    static RationalQT integer(long v);
    // c * q^uq t^ut
    static RationalQT monomial(int uq, int ut, BigInt c = 1);
    static RationalQT q_power(int e) { return monomial(e, 0); }
    static RationalQT t_power(int e) { return monomial(0, e); }
    static RationalQT polynomial(QTPolynomial p);
    static RationalQT fraction(int uq, int ut, QTPolynomial num, DenominatorFactors den);

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;

    int unit_q() const { return unit_q_; }
    int unit_t() const { return unit_t_; }
    const QTPolynomial& numerator() const { return num_; }
    const DenominatorFactors& denominator() const { return den_; }

    RationalQT& operator+=(const RationalQT& rhs);
    RationalQT& operator-=(const RationalQT& rhs);
    RationalQT& operator*=(const RationalQT& rhs);
    friend RationalQT operator+(RationalQT a, const RationalQT& b) { return a += b; }
    friend RationalQT operator-(RationalQT a, const RationalQT& b) { return a -= b; }
    friend RationalQT operator*(RationalQT a, const RationalQT& b) { return a *= b; }
    RationalQT operator-() const;

    // Value equality of the represented rational functions, decided by
    // cross-multiplying numerators over the union denominator.
    friend bool operator==(const RationalQT& a, const RationalQT& b);

    // The q = 0 specialization.  Every denominator factor evaluates to 1;
    // throws negative_q_unit when the limit is not a polynomial in t.
    RationalQT specialize_q0() const;

private:
    void normalize();

    int unit_q_ = 0;
    int unit_t_ = 0;
    QTPolynomial num_;
    DenominatorFactors den_;
};

} // namespace macd
