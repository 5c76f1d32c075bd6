#include "macd/x_polynomial.hpp"

#include <algorithm>
#include <numeric>

namespace macd {

int XMonomial::degree() const { return std::accumulate(e.begin(), e.end(), 0); }

XPolynomial XPolynomial::constant(int n, RationalQT c) {
    XPolynomial p(n);
    p.add_term(XMonomial{std::vector<int>(n, 0)}, c);
    return p;
}

XPolynomial XPolynomial::monomial(XMonomial m, RationalQT c) {
    XPolynomial p(static_cast<int>(m.e.size()));
    p.add_term(m, c);
    return p;
}

XPolynomial XPolynomial::variable(int n, int i) {
    if (i < 1 || i > n)
        throw index_out_of_range("variable index out of range");
    XMonomial m{std::vector<int>(n, 0)};
    m.e[i - 1] = 1;
    return monomial(std::move(m), RationalQT::one());
}

RationalQT XPolynomial::coefficient(const XMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? RationalQT::zero() : it->second;
}

void XPolynomial::add_term(const XMonomial& m, const RationalQT& c) {
    if (static_cast<int>(m.e.size()) != n_)
        throw dimension_mismatch("monomial length differs from ring dimension");
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

void XPolynomial::check_same_ring(const XPolynomial& other) const {
    if (n_ != other.n_)
        throw dimension_mismatch("polynomials live in different rings");
}

XPolynomial& XPolynomial::operator+=(const XPolynomial& rhs) {
    check_same_ring(rhs);
    for (const auto& [m, c] : rhs.terms_)
        add_term(m, c);
    return *this;
}

XPolynomial& XPolynomial::operator-=(const XPolynomial& rhs) {
    check_same_ring(rhs);
    for (const auto& [m, c] : rhs.terms_)
        add_term(m, -c);
    return *this;
}

XPolynomial XPolynomial::operator-() const {
    XPolynomial p(n_);
    for (const auto& [m, c] : terms_)
        p.terms_.emplace(m, -c);
    return p;
}

XPolynomial operator*(const XPolynomial& a, const XPolynomial& b) {
    a.check_same_ring(b);
    XPolynomial p(a.n_);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            XMonomial m = ma;
            for (int k = 0; k < p.n_; ++k)
                m.e[k] += mb.e[k];
            p.add_term(m, ca * cb);
        }
    }
    return p;
}

XPolynomial XPolynomial::scaled(const RationalQT& c) const {
    XPolynomial p(n_);
    if (c.is_zero())
        return p;
    for (const auto& [m, coef] : terms_)
        p.add_term(m, coef * c);
    return p;
}

XPolynomial XPolynomial::times_monomial(const XMonomial& m) const {
    if (static_cast<int>(m.e.size()) != n_)
        throw dimension_mismatch("monomial length differs from ring dimension");
    XPolynomial p(n_);
    for (const auto& [mt, c] : terms_) {
        XMonomial shifted = mt;
        for (int k = 0; k < n_; ++k)
            shifted.e[k] += m.e[k];
        p.terms_.emplace(std::move(shifted), c);
    }
    return p;
}

XPolynomial XPolynomial::permuted(const Permutation& sigma) const {
    if (sigma.size() != n_)
        throw dimension_mismatch("permutation size differs from ring dimension");
    XPolynomial p(n_);
    for (const auto& [m, c] : terms_) {
        XMonomial out{std::vector<int>(n_, 0)};
        for (int k = 1; k <= n_; ++k)
            out.e[sigma[k] - 1] = m.e[k - 1];
        p.add_term(out, c);
    }
    return p;
}

XPolynomial XPolynomial::specialize_q0() const {
    XPolynomial p(n_);
    for (const auto& [m, c] : terms_)
        p.add_term(m, c.specialize_q0());
    return p;
}

bool operator==(const XPolynomial& a, const XPolynomial& b) {
    a.check_same_ring(b);
    XPolynomial d = a - b;
    return d.is_zero();
}

XPolynomial divide_by_xdiff(const XPolynomial& f, int i) {
    const int n = f.n();
    if (i < 1 || i >= n)
        throw index_out_of_range("divide_by_xdiff index out of range");
    XPolynomial quotient(n);
    XPolynomial rem = f;
    while (!rem.is_zero()) {
        // Reduce a term with maximal x_i exponent; each step lowers it by one.
        XMonomial lead = rem.terms().begin()->first;
        for (const auto& [m, c] : rem.terms())
            if (m.e[i - 1] > lead.e[i - 1])
                lead = m;
        if (lead.e[i - 1] == 0)
            throw inexact_division("polynomial not divisible by x_i - x_{i+1}");
        RationalQT c = rem.coefficient(lead);
        XMonomial qm = lead;
        qm.e[i - 1] -= 1;
        quotient.add_term(qm, c);
        // rem -= c * qm * (x_i - x_{i+1})
        XMonomial lo = qm;
        lo.e[i] += 1;
        rem.add_term(lead, -c);
        rem.add_term(lo, c);
    }
    return quotient;
}

} // namespace macd
