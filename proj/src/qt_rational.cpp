#include "macd/qt_rational.hpp"

#include <algorithm>
#include <climits>

namespace macd {

// ---------------------------------------------------------------- QTPolynomial

QTPolynomial QTPolynomial::constant(BigInt c) { return term(0, 0, std::move(c)); }

QTPolynomial QTPolynomial::term(int q, int t, BigInt c) {
    if (q < 0 || t < 0)
        throw invalid_arguments("QTPolynomial exponents must be nonnegative");
    QTPolynomial p;
    if (c != 0)
        p.terms_.emplace(QTExp{q, t}, std::move(c));
    return p;
}

QTPolynomial QTPolynomial::cyclotomic(int a, int b) {
    QTPolynomial p = one();
    p.add_term(QTExp{a, b}, -1);
    return p;
}

bool QTPolynomial::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == QTExp{0, 0} &&
           terms_.begin()->second == 1;
}

QTExp QTPolynomial::min_exponents() const {
    if (is_zero())
        throw invalid_arguments("min_exponents of the zero polynomial");
    int mq = INT_MAX, mt = INT_MAX;
    for (const auto& [e, c] : terms_) {
        mq = std::min(mq, e.q);
        mt = std::min(mt, e.t);
    }
    return {mq, mt};
}

void QTPolynomial::add_term(QTExp e, const BigInt& c) {
    if (c == 0)
        return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

QTPolynomial& QTPolynomial::operator+=(const QTPolynomial& rhs) {
    for (const auto& [e, c] : rhs.terms_)
        add_term(e, c);
    return *this;
}

QTPolynomial& QTPolynomial::operator-=(const QTPolynomial& rhs) {
    for (const auto& [e, c] : rhs.terms_)
        add_term(e, -c);
    return *this;
}

QTPolynomial QTPolynomial::operator-() const {
    QTPolynomial p;
    for (const auto& [e, c] : terms_)
        p.terms_.emplace(e, -c);
    return p;
}

QTPolynomial operator*(const QTPolynomial& a, const QTPolynomial& b) {
    QTPolynomial p;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            p.add_term(QTExp{ea.q + eb.q, ea.t + eb.t}, ca * cb);
    return p;
}

QTPolynomial QTPolynomial::shifted(int dq, int dt) const {
    QTPolynomial p;
    for (const auto& [e, c] : terms_) {
        if (e.q + dq < 0 || e.t + dt < 0)
            throw invalid_arguments("shift would produce a negative exponent");
        p.terms_.emplace(QTExp{e.q + dq, e.t + dt}, c);
    }
    return p;
}

std::optional<QTPolynomial> QTPolynomial::divide_exact(const QTPolynomial& divisor) const {
    if (divisor.is_zero())
        throw invalid_arguments("division by the zero polynomial");
    QTPolynomial quotient;
    QTPolynomial rem = *this;
    const auto& [de, dc] = *divisor.terms_.rbegin(); // leading term in (q,t) lex order
    while (!rem.is_zero()) {
        const auto& [re, rc] = *rem.terms_.rbegin();
        if (re.q < de.q || re.t < de.t || rc % dc != 0)
            return std::nullopt; // any smaller term cannot cancel the leader
        QTPolynomial qt = term(re.q - de.q, re.t - de.t, rc / dc);
        quotient += qt;
        rem -= qt * divisor;
    }
    return quotient;
}

// ------------------------------------------------------------------ RationalQT

RationalQT RationalQT::integer(long v) { return polynomial(QTPolynomial::constant(v)); }

RationalQT RationalQT::monomial(int uq, int ut, BigInt c) {
    RationalQT r;
    r.unit_q_ = uq;
    r.unit_t_ = ut;
    r.num_ = QTPolynomial::constant(std::move(c));
    r.normalize();
    return r;
}

RationalQT RationalQT::polynomial(QTPolynomial p) {
    RationalQT r;
    r.num_ = std::move(p);
    r.normalize();
    return r;
}

RationalQT RationalQT::fraction(int uq, int ut, QTPolynomial num, DenominatorFactors den) {
    RationalQT r;
    r.unit_q_ = uq;
    r.unit_t_ = ut;
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    r.normalize();
    return r;
}

bool RationalQT::is_one() const {
    return unit_q_ == 0 && unit_t_ == 0 && den_.empty() && num_.is_one();
}

void RationalQT::normalize() {
    if (num_.is_zero()) {
        unit_q_ = unit_t_ = 0;
        den_.clear();
        return;
    }
    // Cancel denominator factors that divide the numerator exactly.
    bool progress = true;
    while (progress) {
        progress = false;
        for (auto it = den_.begin(); it != den_.end(); ++it) {
            if (auto q = num_.divide_exact(it->first.expand())) {
                num_ = std::move(*q);
                if (--it->second == 0)
                    den_.erase(it);
                progress = true;
                break;
            }
        }
    }
    // Pull the common monomial of the numerator into the unit.
    QTExp m = num_.min_exponents();
    if (m.q != 0 || m.t != 0) {
        num_ = num_.shifted(-m.q, -m.t);
        unit_q_ += m.q;
        unit_t_ += m.t;
    }
}

RationalQT& RationalQT::operator*=(const RationalQT& rhs) {
    if (is_zero())
        return *this;
    if (rhs.is_zero())
        return *this = zero();
    unit_q_ += rhs.unit_q_;
    unit_t_ += rhs.unit_t_;
    num_ = num_ * rhs.num_;
    for (const auto& [f, m] : rhs.den_)
        den_[f] += m;
    normalize();
    return *this;
}

RationalQT& RationalQT::operator+=(const RationalQT& rhs) {
    if (rhs.is_zero())
        return *this;
    if (is_zero())
        return *this = rhs;
    // Common denominator: factor-wise maximum multiplicity.
    DenominatorFactors common = den_;
    for (const auto& [f, m] : rhs.den_) {
        auto& cm = common[f];
        cm = std::max(cm, m);
    }
    auto scaled_num = [&common](const RationalQT& r) {
        QTPolynomial p = r.num_;
        for (const auto& [f, m] : common) {
            auto it = r.den_.find(f);
            int have = it == r.den_.end() ? 0 : it->second;
            for (int k = have; k < m; ++k)
                p = p * f.expand();
        }
        return p;
    };
    int uq = std::min(unit_q_, rhs.unit_q_);
    int ut = std::min(unit_t_, rhs.unit_t_);
    QTPolynomial sum = scaled_num(*this).shifted(unit_q_ - uq, unit_t_ - ut);
    sum += scaled_num(rhs).shifted(rhs.unit_q_ - uq, rhs.unit_t_ - ut);
    unit_q_ = uq;
    unit_t_ = ut;
    num_ = std::move(sum);
    den_ = std::move(common);
    normalize();
    return *this;
}

RationalQT RationalQT::operator-() const {
    RationalQT r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalQT& RationalQT::operator-=(const RationalQT& rhs) { return *this += -rhs; }

bool operator==(const RationalQT& a, const RationalQT& b) { return (a - b).is_zero(); }

RationalQT RationalQT::specialize_q0() const {
    if (is_zero())
        return zero();
    int mq = num_.min_exponents().q;
    if (unit_q_ + mq < 0)
        throw negative_q_unit("no q = 0 limit: value has a pole at q = 0");
    if (unit_q_ + mq > 0)
        return zero();
    // Denominator factors all have a >= 1, so each evaluates to 1 at q = 0.
    QTPolynomial p;
    for (const auto& [e, c] : num_.terms())
        if (e.q == mq)
            p += QTPolynomial::term(0, e.t, c);
    return fraction(0, unit_t_, std::move(p), {});
}

} // namespace macd
