#include "macd/json_io.hpp"

namespace macd {

Json to_json(const RationalQT& r) {
    Json num = Json::array();
    for (const auto& [e, c] : r.numerator().terms())
        num.push_back({{"q", e.q}, {"t", e.t}, {"c", c.str()}});
    Json den = Json::array();
    for (const auto& [f, m] : r.denominator())
        den.push_back({{"a", f.a}, {"b", f.b}, {"m", m}});
    return Json{{"unit", {{"q", r.unit_q()}, {"t", r.unit_t()}}},
                {"num", num},
                {"den", den}};
}

RationalQT rational_qt_from_json(const Json& j) {
    QTPolynomial num;
    for (const auto& term : j.at("num"))
        num += QTPolynomial::term(term.at("q").get<int>(), term.at("t").get<int>(),
                                  BigInt(term.at("c").get<std::string>()));
    DenominatorFactors den;
    for (const auto& fac : j.at("den"))
        den[CyclotomicFactor(fac.at("a").get<int>(), fac.at("b").get<int>())] +=
            fac.at("m").get<int>();
    return RationalQT::fraction(j.at("unit").at("q").get<int>(),
                                j.at("unit").at("t").get<int>(), std::move(num),
                                std::move(den));
}

Json to_json(const XPolynomial& p) {
    Json terms = Json::array();
    for (const auto& [m, c] : p.terms())
        terms.push_back({{"x", m.e}, {"coef", to_json(c)}});
    return Json{{"n", p.n()}, {"terms", terms}};
}

XPolynomial x_polynomial_from_json(const Json& j) {
    XPolynomial p(j.at("n").get<int>());
    for (const auto& term : j.at("terms"))
        p.add_term(XMonomial{term.at("x").get<std::vector<int>>()},
                   rational_qt_from_json(term.at("coef")));
    return p;
}

Json to_json(const Filling& f) {
    int L = 0;
    for (int i = 1; i <= f.n(); ++i)
        L = std::max(L, f.height(i));
    Json rows = Json::array();
    for (int r = 1; r <= L; ++r) {
        Json row = Json::array();
        for (int i = 1; i <= f.n(); ++i) {
            if (f.height(i) >= r)
                row.push_back(f.label(i, r));
            else
                row.push_back(nullptr);
        }
        rows.push_back(row);
    }
    return Json{{"shape", f.shape().parts()},
                {"basement", f.basement().window()},
                {"rows", rows}};
}

Filling filling_from_json(const Json& j) {
    Composition shape(j.at("shape").get<std::vector<int>>());
    Permutation basement(j.at("basement").get<std::vector<int>>());
    std::vector<std::vector<int>> columns(shape.size());
    for (int i = 1; i <= shape.size(); ++i)
        columns[i - 1].assign(shape[i], 0);
    const auto& rows = j.at("rows");
    for (size_t r = 0; r < rows.size(); ++r)
        for (int i = 1; i <= shape.size(); ++i)
            if (!rows[r][i - 1].is_null())
                columns[i - 1][r] = rows[r][i - 1].get<int>();
    return Filling(std::move(shape), std::move(basement), std::move(columns));
}

} // namespace macd
