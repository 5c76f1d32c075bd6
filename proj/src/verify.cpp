#include "macd/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <thread>

#include "macd/bijection.hpp"
#include "macd/filling.hpp"
#include "macd/hecke.hpp"
#include "macd/json_io.hpp"
#include "macd/render.hpp"
#include "macd/special.hpp"

namespace macd {

using nlohmann::json;

json VerificationReport::to_json() const {
    return json{{"claim", claim},
                {"params", params},
                {"pairs_checked", pairs_checked},
                {"violations", violations}};
}

void VerificationReport::absorb(VerificationReport other) {
    pairs_checked += other.pairs_checked;
    for (auto& v : other.violations)
        violations.push_back(std::move(v));
}

namespace {

json symmetry_params(const Composition& alpha, const Permutation& sigma, int i) {
    return json{{"shape", alpha.parts()}, {"basement", sigma.window()}, {"i", i}};
}

void require_equal_heights(const Composition& alpha, int i) {
    if (i < 1 || i >= alpha.size() || alpha[i] != alpha[i + 1])
        throw unequal_column_heights("claim requires alpha_i = alpha_{i+1}");
}

void report_poly_mismatch(VerificationReport& report, const XPolynomial& lhs,
                          const XPolynomial& rhs, const std::string& what) {
    std::set<XMonomial> monomials;
    for (const auto& [m, c] : lhs.terms())
        monomials.insert(m);
    for (const auto& [m, c] : rhs.terms())
        monomials.insert(m);
    for (const XMonomial& m : monomials) {
        ++report.pairs_checked;
        RationalQT a = lhs.coefficient(m);
        RationalQT b = rhs.coefficient(m);
        if (!(a == b))
            report.violations.push_back(json{{"check", what},
                                             {"monomial", m.e},
                                             {"lhs", to_json(a)},
                                             {"rhs", to_json(b)}});
    }
}

RationalQT content_weight_sum(const Composition& alpha, const Permutation& sigma,
                              const Composition& beta, const ShapeInfo& info) {
    RationalQT sum;
    enumerate_naf(alpha, sigma, beta, [&](const Filling& T) {
        sum += qt_weight(T, info);
        return true;
    });
    return sum;
}

} // namespace

VerificationReport verify_symmetry(const Composition& alpha, const Permutation& sigma, int i) {
    require_equal_heights(alpha, i);
    VerificationReport report{"symmetry", symmetry_params(alpha, sigma, i)};
    Permutation tau = sigma.times_s(i);
    XPolynomial lhs = tableau_E(alpha, sigma);
    XPolynomial rhs = tableau_E(alpha, tau);
    report_poly_mismatch(report, lhs, rhs, "coefficient");

    // Refined check: the per-content weight sums, recomputed through the
    // content-filtered enumeration rather than the assembled polynomials.
    ShapeInfo info(alpha);
    std::set<XMonomial> contents;
    for (const auto& [m, c] : lhs.terms())
        contents.insert(m);
    for (const auto& [m, c] : rhs.terms())
        contents.insert(m);
    for (const XMonomial& m : contents) {
        ++report.pairs_checked;
        Composition beta(m.e);
        RationalQT a = content_weight_sum(alpha, sigma, beta, info);
        RationalQT b = content_weight_sum(alpha, tau, beta, info);
        if (!(a == b))
            report.violations.push_back(json{{"check", "content-sum"},
                                             {"content", beta.parts()},
                                             {"lhs", to_json(a)},
                                             {"rhs", to_json(b)}});
    }
    return report;
}

VerificationReport verify_ale19(const Composition& alpha, const Permutation& sigma, int i) {
    require_equal_heights(alpha, i);
    if (sigma[i + 1] != sigma[i] + 1 && sigma[i + 1] != sigma[i] - 1)
        throw precondition_violated("ale19 requires sigma_{i+1} = sigma_i +- 1");
    VerificationReport report = verify_symmetry(alpha, sigma, i);
    report.claim = "ale19";
    return report;
}

namespace {

// Shared machinery for the probabilistic-bijection claims.  Scans every
// prefix-swap target of every filling on both sides; pairs outside the scan
// have both transition values identically zero (U = swap^{[0,h]} T iff
// T = swap^{[0,h]} U), so the full NAF x NAF product is covered.
struct BalanceContext {
    Composition alpha;
    Permutation sigma, tau;
    int i;
    ShapeInfo info;
    std::vector<Filling> side_a, side_b;
    std::map<Filling, int> index_a, index_b;

    BalanceContext(const Composition& alpha_, const Permutation& sigma_, int i_)
        : alpha(alpha_), sigma(sigma_), tau(sigma_.times_s(i_)), i(i_), info(alpha_) {
        side_a = all_naf(alpha, sigma);
        side_b = all_naf(alpha, tau);
        for (size_t k = 0; k < side_a.size(); ++k)
            index_a.emplace(side_a[k], static_cast<int>(k));
        for (size_t k = 0; k < side_b.size(); ++k)
            index_b.emplace(side_b[k], static_cast<int>(k));
    }
};

json filling_witness(const Filling& f) { return to_json(f); }

// One direction of the target scan: normalization, support restriction,
// content preservation; records the nonzero transition values.
void scan_direction(VerificationReport& report, const BalanceContext& ctx,
                    const std::vector<Filling>& sources,
                    const std::map<Filling, int>& target_index, bool forward,
                    std::map<std::pair<int, int>, RationalQT>* values, bool check_side_claims) {
    for (size_t s = 0; s < sources.size(); ++s) {
        const Filling& T = sources[s];
        ProbabilityRow row = probability_row(T, ctx.info, ctx.i);
        if (check_side_claims) {
            ++report.pairs_checked;
            RationalQT total;
            for (const auto& [U, p] : row.dist)
                total += p;
            if (!total.is_one())
                report.violations.push_back(json{{"check", "normalization"},
                                                 {"filling", filling_witness(T)},
                                                 {"sum", to_json(total)}});
        }
        FillingStatistics stats = statistics(T, ctx.info);
        for (const auto& [U, p] : row.dist) {
            if (!U.is_non_attacking(ctx.info)) {
                if (check_side_claims && !p.is_zero())
                    report.violations.push_back(json{{"check", "support"},
                                                     {"filling", filling_witness(T)},
                                                     {"target", filling_witness(U)},
                                                     {"value", to_json(p)}});
                continue;
            }
            if (check_side_claims) {
                FillingStatistics target_stats = statistics(U, ctx.info);
                if (!p.is_zero() && target_stats.content != stats.content)
                    report.violations.push_back(json{{"check", "content-preservation"},
                                                     {"filling", filling_witness(T)},
                                                     {"target", filling_witness(U)}});
            }
            if (values && !p.is_zero()) {
                auto it = target_index.find(U);
                if (it == target_index.end()) {
                    report.violations.push_back(json{{"check", "support-closure"},
                                                     {"filling", filling_witness(T)},
                                                     {"target", filling_witness(U)}});
                    continue;
                }
                int t_idx = forward ? static_cast<int>(s) : it->second;
                int u_idx = forward ? it->second : static_cast<int>(s);
                (*values)[{t_idx, u_idx}] = p;
            }
        }
    }
}

} // namespace

VerificationReport verify_normalization(const Composition& alpha, const Permutation& sigma,
                                        int i) {
    require_equal_heights(alpha, i);
    VerificationReport report{"normalization", symmetry_params(alpha, sigma, i)};
    BalanceContext ctx(alpha, sigma, i);
    scan_direction(report, ctx, ctx.side_a, ctx.index_b, true, nullptr, true);
    scan_direction(report, ctx, ctx.side_b, ctx.index_a, true, nullptr, true);
    return report;
}

VerificationReport verify_support(const Composition& alpha, const Permutation& sigma, int i) {
    require_equal_heights(alpha, i);
    VerificationReport report{"support", symmetry_params(alpha, sigma, i)};
    BalanceContext ctx(alpha, sigma, i);
    scan_direction(report, ctx, ctx.side_a, ctx.index_b, true, nullptr, true);
    scan_direction(report, ctx, ctx.side_b, ctx.index_a, true, nullptr, true);
    // Normalization violations are not part of this claim; keep support only.
    std::erase_if(report.violations,
                  [](const json& v) { return v.at("check") == "normalization"; });
    return report;
}

VerificationReport verify_balance(const Composition& alpha, const Permutation& sigma, int i) {
    require_equal_heights(alpha, i);
    VerificationReport report{"detailed-balance", symmetry_params(alpha, sigma, i)};
    BalanceContext ctx(alpha, sigma, i);

    std::map<std::pair<int, int>, RationalQT> forward, backward;
    scan_direction(report, ctx, ctx.side_a, ctx.index_b, true, &forward, true);
    scan_direction(report, ctx, ctx.side_b, ctx.index_a, false, &backward, true);

    std::vector<RationalQT> weight_a, weight_b;
    std::vector<WeightBreakdown> rows_a, rows_b;
    for (const Filling& T : ctx.side_a) {
        weight_a.push_back(qt_weight(T, ctx.info));
        rows_a.push_back(weight(T, ctx.info));
    }
    for (const Filling& U : ctx.side_b) {
        weight_b.push_back(qt_weight(U, ctx.info));
        rows_b.push_back(weight(U, ctx.info));
    }

    // Detailed balance over the full product; only scanned pairs can carry a
    // nonzero transition value in either direction.
    report.pairs_checked +=
        static_cast<long long>(ctx.side_a.size()) * static_cast<long long>(ctx.side_b.size());
    std::set<std::pair<int, int>> pairs;
    for (const auto& [key, value] : forward)
        pairs.insert(key);
    for (const auto& [key, value] : backward)
        pairs.insert(key);
    for (const auto& [t_idx, u_idx] : pairs) {
        auto fit = forward.find({t_idx, u_idx});
        auto bit = backward.find({t_idx, u_idx});
        RationalQT lhs = weight_a[t_idx] *
                         (fit == forward.end() ? RationalQT::zero() : fit->second);
        RationalQT rhs = weight_b[u_idx] *
                         (bit == backward.end() ? RationalQT::zero() : bit->second);
        if (!(lhs == rhs))
            report.violations.push_back(
                json{{"check", "detailed-balance"},
                     {"T", filling_witness(ctx.side_a[t_idx])},
                     {"U", filling_witness(ctx.side_b[u_idx])},
                     {"wt_T_prob_TU", to_json(lhs)},
                     {"wt_U_prob_UT", to_json(rhs)}});
    }

    // Row-local balance identities, giving finer failure localization than
    // the product identity above.
    const int h_max = alpha[i];
    for (size_t s = 0; s < ctx.side_a.size(); ++s) {
        const Filling& T = ctx.side_a[s];
        for (int h = 0; h <= h_max; ++h) {
            Filling U = swap_prefix(T, i, h);
            auto it = ctx.index_b.find(U);
            if (it == ctx.index_b.end())
                continue; // attacking target: covered by the support claim
            const WeightBreakdown& wt = rows_a[s];
            const WeightBreakdown& wu = rows_b[it->second];
            for (int r = 0; r < h; ++r) {
                ++report.pairs_checked;
                RationalQT lhs = wu.row_components[r] * rho(U, ctx.info, ctx.i, r);
                RationalQT rhs = wt.row_components[r] * rho(T, ctx.info, ctx.i, r);
                if (!(lhs == rhs))
                    report.violations.push_back(json{{"check", "row-balance-r"},
                                                     {"T", filling_witness(T)},
                                                     {"U", filling_witness(U)},
                                                     {"r", r},
                                                     {"lhs", to_json(lhs)},
                                                     {"rhs", to_json(rhs)}});
            }
            if (h < ctx.info.rows()) {
                ++report.pairs_checked;
                RationalQT lhs =
                    wu.row_components[h] * (RationalQT::one() - rho(U, ctx.info, ctx.i, h));
                RationalQT rhs =
                    wt.row_components[h] * (RationalQT::one() - rho(T, ctx.info, ctx.i, h));
                if (!(lhs == rhs))
                    report.violations.push_back(json{{"check", "row-balance-h"},
                                                     {"T", filling_witness(T)},
                                                     {"U", filling_witness(U)},
                                                     {"h", h},
                                                     {"lhs", to_json(lhs)},
                                                     {"rhs", to_json(rhs)}});
            }
        }
    }
    return report;
}

VerificationReport verify_route_equivalence(const Composition& alpha, const Permutation& sigma) {
    VerificationReport report{
        "route-equivalence", json{{"shape", alpha.parts()}, {"basement", sigma.window()}}};
    report_poly_mismatch(report, operator_E(alpha, sigma), tableau_E(alpha, sigma),
                         "coefficient");
    return report;
}

VerificationReport verify_eigen(const Composition& alpha) {
    VerificationReport report{"eigen", json{{"shape", alpha.parts()}}};
    XPolynomial E = nonsymmetric_E(alpha);
    EigenData data = k_exponents(alpha);
    for (int i = 1; i <= alpha.size(); ++i) {
        ++report.pairs_checked;
        XPolynomial lhs = apply_Y(E, i);
        XPolynomial rhs = E.scaled(data.eigenvalues[i - 1]);
        if (!(lhs == rhs))
            report.violations.push_back(json{{"check", "eigen"},
                                             {"i", i},
                                             {"eigenvalue", to_json(data.eigenvalues[i - 1])}});
    }
    ++report.pairs_checked;
    RationalQT leading = E.coefficient(XMonomial{alpha.parts()});
    if (!leading.is_one())
        report.violations.push_back(
            json{{"check", "monic"}, {"coefficient", to_json(leading)}});
    return report;
}

VerificationReport verify_atoms(const Composition& alpha) {
    VerificationReport report{"atoms", json{{"shape", alpha.parts()}}};
    Composition inc = alpha.sorted_increasing();
    Composition dec = alpha.sorted_decreasing();
    XPolynomial atom = t_atom(alpha);
    for (const Permutation& tau : all_sorting_permutations(inc, alpha)) {
        ++report.pairs_checked;
        XPolynomial other = t_atom(inc, tau);
        if (!(atom == other))
            report.violations.push_back(
                json{{"check", "atom-basement-independence"}, {"tau", tau.window()}});
    }
    // The key identity holds for the basements with pi . dec(alpha) =
    // rev(alpha); see the counterexample to the alternative reading in the
    // t-key unit tests.
    XPolynomial key = t_key(alpha);
    for (const Permutation& pi : all_sorting_permutations(dec, alpha.reversed())) {
        ++report.pairs_checked;
        XPolynomial other = t_atom(dec, pi);
        if (!(key == other))
            report.violations.push_back(
                json{{"check", "key-basement-independence"}, {"pi", pi.window()}});
    }
    return report;
}

VerificationReport verify_asep(const Composition& alpha) {
    VerificationReport report{"asep", json{{"shape", alpha.parts()}}};
    Composition inc = alpha.sorted_increasing();
    XPolynomial F = asep_F(alpha);
    for (const Permutation& tau : all_sorting_permutations(inc, alpha)) {
        ++report.pairs_checked;
        XPolynomial other = tableau_E(inc, tau);
        if (!(F == other))
            report.violations.push_back(
                json{{"check", "asep-tau-independence"}, {"tau", tau.window()}});
    }
    ++report.pairs_checked;
    if (!(F.specialize_q0() == t_atom(alpha)))
        report.violations.push_back(json{{"check", "asep-q0-atom"}});
    return report;
}

VerificationReport verify_symmetric_p(const Composition& lambda) {
    VerificationReport report{"symmetricP", json{{"shape", lambda.parts()}}};
    XPolynomial P = symmetric_P(lambda);
    for (int i = 1; i < lambda.size(); ++i) {
        ++report.pairs_checked;
        if (!(apply_si(P, i) == P))
            report.violations.push_back(json{{"check", "symmetric-under-s_i"}, {"i", i}});
    }
    ++report.pairs_checked;
    RationalQT leading = P.coefficient(XMonomial{lambda.parts()});
    if (!leading.is_one())
        report.violations.push_back(
            json{{"check", "monic"}, {"coefficient", to_json(leading)}});
    return report;
}

// ---------------------------------------------------------------------- sweeps

std::vector<Composition> compositions_of(int n, int part_max) {
    std::vector<Composition> out;
    std::vector<int> parts(n, 0);
    while (true) {
        out.emplace_back(parts);
        int k = n - 1;
        while (k >= 0 && parts[k] == part_max)
            parts[k--] = 0;
        if (k < 0)
            break;
        ++parts[k];
    }
    return out;
}

std::vector<Permutation> permutations_of(int n) {
    std::vector<Permutation> out;
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    do {
        out.emplace_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

const std::vector<std::string>& claim_names() {
    static const std::vector<std::string> names = {
        "symmetry", "ale19",  "balance", "normalization", "support",
        "route-equivalence", "eigen", "atoms", "asep", "symmetricP"};
    return names;
}

VerificationReport run_sweep(const std::string& claim, const SweepConfig& config) {
    using Item = std::function<VerificationReport()>;
    std::vector<Item> items;

    for (int n = 1; n <= config.n_max; ++n) {
        auto alphas = compositions_of(n, config.part_max);
        auto sigmas = permutations_of(n);
        for (const Composition& alpha : alphas) {
            if (claim == "eigen") {
                items.push_back([alpha] { return verify_eigen(alpha); });
            } else if (claim == "atoms") {
                items.push_back([alpha] { return verify_atoms(alpha); });
            } else if (claim == "asep") {
                items.push_back([alpha] { return verify_asep(alpha); });
            } else if (claim == "symmetricP") {
                if (alpha.is_partition())
                    items.push_back([alpha] { return verify_symmetric_p(alpha); });
            } else if (claim == "route-equivalence") {
                for (const Permutation& sigma : sigmas)
                    items.push_back(
                        [alpha, sigma] { return verify_route_equivalence(alpha, sigma); });
            } else if (claim == "symmetry" || claim == "ale19" || claim == "balance" ||
                       claim == "normalization" || claim == "support") {
                for (const Permutation& sigma : sigmas) {
                    for (int i = 1; i < n; ++i) {
                        if (alpha[i] != alpha[i + 1])
                            continue;
                        if (claim == "ale19" && sigma[i + 1] != sigma[i] + 1 &&
                            sigma[i + 1] != sigma[i] - 1)
                            continue;
                        items.push_back([claim, alpha, sigma, i]() {
                            if (claim == "symmetry")
                                return verify_symmetry(alpha, sigma, i);
                            if (claim == "ale19")
                                return verify_ale19(alpha, sigma, i);
                            if (claim == "balance")
                                return verify_balance(alpha, sigma, i);
                            if (claim == "normalization")
                                return verify_normalization(alpha, sigma, i);
                            return verify_support(alpha, sigma, i);
                        });
                    }
                }
            } else {
                throw invalid_arguments("unknown claim: " + claim);
            }
        }
    }

    std::vector<VerificationReport> results(items.size());
    int workers = std::max(1, config.parallelism);
    workers = std::min<int>(workers, static_cast<int>(items.size()) > 0
                                         ? static_cast<int>(items.size())
                                         : 1);
    if (workers == 1) {
        for (size_t k = 0; k < items.size(); ++k)
            results[k] = items[k]();
    } else {
        std::atomic<size_t> next{0};
        auto worker = [&] {
            while (true) {
                size_t k = next.fetch_add(1);
                if (k >= items.size())
                    return;
                results[k] = items[k]();
            }
        };
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back(worker);
        for (auto& th : pool)
            th.join();
    }

    VerificationReport merged{claim, json{{"sweep", {{"n_max", config.n_max},
                                                     {"part_max", config.part_max}}},
                                          {"items", items.size()}}};
    for (auto& r : results)
        merged.absorb(std::move(r));
    return merged;
}

} // namespace macd
