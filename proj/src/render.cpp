#include "macd/render.hpp"

#include <sstream>

namespace macd {

namespace {

// "q^2*t" / "q^{2} t" for a unit monomial; empty when both exponents vanish.
std::string unit_text(int uq, int ut, bool latex) {
    std::ostringstream os;
    auto emit = [&](const char* var, int e) {
        if (e == 0)
            return;
        if (os.tellp() > 0)
            os << (latex ? " " : "*");
        os << var;
        if (e != 1)
            os << (latex ? "^{" : "^") << e << (latex ? "}" : "");
    };
    emit("q", uq);
    emit("t", ut);
    return os.str();
}

std::string poly_text(const QTPolynomial& p, bool latex) {
    if (p.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        std::string mono = unit_text(e.q, e.t, latex);
        if (mono.empty())
            os << mag.str();
        else {
            if (mag != 1)
                os << mag.str() << (latex ? " " : "*");
            os << mono;
        }
    }
    return os.str();
}

std::string factor_text(const CyclotomicFactor& f, int m, bool latex) {
    std::ostringstream os;
    os << "(1 - " << unit_text(f.a, f.b, latex) << ")";
    if (m != 1)
        os << (latex ? "^{" : "^") << m << (latex ? "}" : "");
    return os.str();
}

// When wrap_compound is set, a multi-term numerator gets parentheses so it
// binds correctly against a following '/'.
std::string numerator_text(const RationalQT& r, bool latex, bool wrap_compound) {
    std::string unit = unit_text(r.unit_q(), r.unit_t(), latex);
    const QTPolynomial& num = r.numerator();
    if (num.is_one())
        return unit.empty() ? "1" : unit;
    std::string poly = poly_text(num, latex);
    bool compound = num.terms().size() > 1 || poly[0] == '-';
    if (unit.empty())
        return compound && wrap_compound ? "(" + poly + ")" : poly;
    std::ostringstream os;
    os << unit << (latex ? " " : "*");
    if (compound)
        os << "(" << poly << ")";
    else
        os << poly;
    return os.str();
}

std::string rational_text(const RationalQT& r, bool latex) {
    if (r.is_zero())
        return "0";
    if (r.denominator().empty())
        return numerator_text(r, latex, false);
    std::string num = numerator_text(r, latex, !latex);
    std::ostringstream den;
    bool first = true;
    for (const auto& [f, m] : r.denominator()) {
        if (!first)
            den << (latex ? " " : "*");
        first = false;
        den << factor_text(f, m, latex);
    }
    bool lone_factor =
        r.denominator().size() == 1 && r.denominator().begin()->second == 1;
    std::ostringstream os;
    if (latex)
        os << "\\frac{" << num << "}{" << den.str() << "}";
    else
        os << num << "/" << (lone_factor ? den.str() : "(" + den.str() + ")");
    return os.str();
}

std::string monomial_text(const XMonomial& m, bool latex) {
    std::ostringstream os;
    for (size_t k = 0; k < m.e.size(); ++k) {
        if (m.e[k] == 0)
            continue;
        if (os.tellp() > 0)
            os << (latex ? " " : "*");
        os << (latex ? "x_{" : "x") << k + 1 << (latex ? "}" : "");
        if (m.e[k] != 1)
            os << (latex ? "^{" : "^") << m.e[k] << (latex ? "}" : "");
    }
    return os.str();
}

bool needs_parens(const std::string& s) {
    return s.find(" + ") != std::string::npos || s.find(" - ") != std::string::npos ||
           s.find('/') != std::string::npos;
}

std::string polynomial_text(const XPolynomial& p, bool latex) {
    if (p.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    // descending lex, matching the printed conventions
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        if (!first)
            os << " + ";
        first = false;
        std::string mono = monomial_text(it->first, latex);
        std::string coef = rational_text(it->second, latex);
        if (mono.empty()) {
            os << coef;
        } else if (it->second.is_one()) {
            os << mono;
        } else if (latex) {
            os << mono << " " << coef;
        } else {
            os << (needs_parens(coef) ? "(" + coef + ")" : coef) << "*" << mono;
        }
    }
    return os.str();
}

} // namespace

std::string to_text(const RationalQT& r) { return rational_text(r, false); }
std::string to_text(const XPolynomial& p) { return polynomial_text(p, false); }
std::string to_latex(const RationalQT& r) { return rational_text(r, true); }
std::string to_latex(const XPolynomial& p) { return polynomial_text(p, true); }

} // namespace macd
