#include "macd/filling.hpp"

#include <algorithm>

namespace macd {

// ------------------------------------------------------------------ ShapeInfo

ShapeInfo::ShapeInfo(Composition shape) : shape_(std::move(shape)) {
    const int n = shape_.size();
    for (int i = 1; i <= n; ++i)
        rows_ = std::max(rows_, shape_[i]);

    offsets_.assign(n + 1, 0);
    for (int i = 1; i <= n; ++i)
        offsets_[i] = offsets_[i - 1] + shape_[i];
    const int total = offsets_[n];
    left_arm_.resize(total);
    right_arm_.resize(total);

    for (int i = 1; i <= n; ++i) {
        for (int r = 1; r <= shape_[i]; ++r) {
            Box u{i, r};
            auto& left = left_arm_[box_index(u)];
            auto& right = right_arm_[box_index(u)];
            for (int j = 1; j < i; ++j)
                if (shape_[j] < shape_[i] && (r - 1 == 0 || r - 1 <= shape_[j]))
                    left.push_back(Box{j, r - 1});
            for (int j = i + 1; j <= n; ++j)
                if (shape_[j] <= shape_[i] && r <= shape_[j])
                    right.push_back(Box{j, r});
            for (Box v : right)
                triples_.push_back(Triple{u, v, false});
            for (Box v : left)
                triples_.push_back(Triple{u, v, true});
        }
    }

    for (int r = 1; r <= rows_; ++r)
        for (int i = 1; i <= n; ++i)
            if (shape_[i] >= r)
                boxes_.push_back(Box{i, r});

    std::vector<Box> all;
    for (int i = 1; i <= n; ++i)
        for (int r = 0; r <= shape_[i]; ++r)
            all.push_back(Box{i, r});
    for (size_t a = 0; a < all.size(); ++a)
        for (size_t b = a + 1; b < all.size(); ++b)
            if (attacking(all[a], all[b]))
                attacking_.emplace_back(all[a], all[b]);
}

int ShapeInfo::box_index(Box u) const {
    if (!in_diagram(u))
        throw box_outside_diagram("box outside the skyline diagram");
    return offsets_[u.col - 1] + (u.row - 1);
}

bool ShapeInfo::in_diagram(Box u) const {
    return u.col >= 1 && u.col <= n() && u.row >= 1 && u.row <= shape_[u.col];
}

bool ShapeInfo::in_augmented_diagram(Box u) const {
    return u.col >= 1 && u.col <= n() && (u.row == 0 || u.row <= shape_[u.col]);
}

int ShapeInfo::leg(Box u) const {
    if (!in_diagram(u))
        throw box_outside_diagram("leg of a box outside the diagram");
    return shape_[u.col] - u.row;
}

int ShapeInfo::arm(Box u) const {
    int idx = box_index(u);
    return static_cast<int>(left_arm_[idx].size() + right_arm_[idx].size());
}

const std::vector<Box>& ShapeInfo::left_arm(Box u) const { return left_arm_[box_index(u)]; }
const std::vector<Box>& ShapeInfo::right_arm(Box u) const { return right_arm_[box_index(u)]; }

bool attacking(Box u, Box v) {
    if (u.row == v.row)
        return u.col != v.col;
    if (u.row == v.row + 1)
        return u.col > v.col;
    if (v.row == u.row + 1)
        return v.col > u.col;
    return false;
}

int indicator3(int a, int b, int c) {
    if (a == b || b == c)
        throw invalid_arguments("indicator3 requires a != b and b != c");
    return indicator(a, b) + indicator(b, c) - indicator(a, c);
}

// -------------------------------------------------------------------- Filling

Filling::Filling(Composition shape, Permutation basement)
    : shape_(std::move(shape)), basement_(std::move(basement)) {
    if (shape_.size() != basement_.size())
        throw dimension_mismatch("shape and basement sizes differ");
    columns_.resize(shape_.size());
    for (int i = 1; i <= shape_.size(); ++i)
        columns_[i - 1].assign(shape_[i], 0);
}

Filling::Filling(Composition shape, Permutation basement, std::vector<std::vector<int>> columns)
    : Filling(std::move(shape), std::move(basement)) {
    if (static_cast<int>(columns.size()) != shape_.size())
        throw dimension_mismatch("column count differs from shape length");
    for (int i = 1; i <= shape_.size(); ++i) {
        if (static_cast<int>(columns[i - 1].size()) != shape_[i])
            throw dimension_mismatch("column height differs from shape part");
        for (int v : columns[i - 1])
            if (v < 1 || v > n())
                throw invalid_arguments("label outside 1..n");
    }
    columns_ = std::move(columns);
}

int Filling::label(int i, int r) const {
    if (i < 1 || i > n() || r < 0 || r > shape_[i])
        throw box_outside_diagram("label lookup outside the augmented diagram");
    return r == 0 ? basement_[i] : columns_[i - 1][r - 1];
}

void Filling::set_label(int i, int r, int v) {
    if (i < 1 || i > n() || r < 1 || r > shape_[i])
        throw box_outside_diagram("label store outside the diagram");
    if (v < 1 || v > n())
        throw invalid_arguments("label outside 1..n");
    columns_[i - 1][r - 1] = v;
}

void Filling::set_basement(Permutation sigma) {
    if (sigma.size() != shape_.size())
        throw dimension_mismatch("basement size differs from shape length");
    basement_ = std::move(sigma);
}

bool Filling::is_non_attacking(const ShapeInfo& info) const {
    for (const auto& [u, v] : info.attacking_pairs())
        if (label(u) == label(v))
            return false;
    return true;
}

// ----------------------------------------------------------------- statistics

FillingStatistics statistics(const Filling& T, const ShapeInfo& info) {
    FillingStatistics s;
    std::vector<int> content(T.n(), 0);
    for (Box u : info.boxes()) {
        ++content[T.label(u) - 1];
        int below = T.label(u.col, u.row - 1);
        if (T.label(u) > below) {
            s.descents.push_back(u);
            s.maj += info.leg(u) + 1;
        }
    }
    s.content = Composition(std::move(content));
    for (const Triple& t : info.triples()) {
        int i3 = indicator3(T.label(t.u), T.label(t.v), T.label(t.w()));
        if (i3 == 1)
            ++s.inversions;
        else
            ++s.coinversions;
    }
    return s;
}

namespace {

QTPolynomial one_minus_t_power(int k) {
    QTPolynomial lin = QTPolynomial::one() - QTPolynomial::term(0, 1, 1);
    QTPolynomial p = QTPolynomial::one();
    for (int j = 0; j < k; ++j)
        p = p * lin;
    return p;
}

} // namespace

RationalQT qt_weight(const Filling& T, const ShapeInfo& info) {
    FillingStatistics s = statistics(T, info);
    int factor_count = 0;
    DenominatorFactors den;
    for (Box u : info.boxes()) {
        if (T.label(u) != T.label(u.col, u.row - 1)) {
            ++factor_count;
            ++den[CyclotomicFactor(1 + info.leg(u), 1 + info.arm(u))];
        }
    }
    return RationalQT::fraction(s.maj, s.coinversions, one_minus_t_power(factor_count),
                                std::move(den));
}

WeightBreakdown weight(const Filling& T, const ShapeInfo& info) {
    if (!T.is_non_attacking(info))
        throw attacking_filling("weight of an attacking filling");

    WeightBreakdown out;
    FillingStatistics s = statistics(T, info);
    out.x_weight = XMonomial{s.content.parts()};

    out.row_components.reserve(info.rows());
    for (int r = 0; r < info.rows(); ++r) {
        int maj_r = 0;
        int coinv_r = 0;
        int factors = 0;
        DenominatorFactors den;
        for (Box u : info.boxes()) {
            if (u.row != r + 1)
                continue;
            int below = T.label(u.col, u.row - 1);
            if (T.label(u) > below)
                maj_r += info.leg(u) + 1;
            if (T.label(u) != below) {
                ++factors;
                ++den[CyclotomicFactor(1 + info.leg(u), 1 + info.arm(u))];
            }
        }
        for (const Triple& t : info.triples()) {
            if (t.u.row != r + 1)
                continue;
            if (indicator3(T.label(t.u), T.label(t.v), T.label(t.w())) == 0)
                ++coinv_r;
        }
        out.row_components.push_back(
            RationalQT::fraction(maj_r, coinv_r, one_minus_t_power(factors), std::move(den)));
    }

    out.total = RationalQT::one();
    for (const RationalQT& c : out.row_components)
        out.total *= c;
    return out;
}

// ---------------------------------------------------------------- enumeration

namespace {

struct Enumerator {
    const ShapeInfo& info;
    const std::optional<Composition>& target;
    const std::function<bool(const Filling&)>& visit;
    Filling current;
    std::vector<int> used; // labels placed so far, per value
    bool stopped = false;

    bool allowed(Box u, int v) const {
        const Composition& alpha = info.shape();
        // same row, columns strictly left
        for (int j = 1; j < u.col; ++j)
            if (alpha[j] >= u.row && current.label(j, u.row) == v)
                return false;
        // row below, columns strictly left
        for (int j = 1; j < u.col; ++j) {
            if (u.row - 1 == 0 || alpha[j] >= u.row - 1)
                if (current.label(j, u.row - 1) == v)
                    return false;
        }
        return true;
    }

    void run(size_t k) {
        if (stopped)
            return;
        if (k == info.boxes().size()) {
            if (!visit(current))
                stopped = true;
            return;
        }
        Box u = info.boxes()[k];
        for (int v = 1; v <= info.n(); ++v) {
            if (target && used[v - 1] >= (*target)[v])
                continue;
            if (!allowed(u, v))
                continue;
            current.set_label(u.col, u.row, v);
            ++used[v - 1];
            run(k + 1);
            --used[v - 1];
            if (stopped)
                return;
        }
    }
};

} // namespace

void enumerate_naf(const Composition& alpha, const Permutation& sigma,
                   const std::optional<Composition>& content,
                   const std::function<bool(const Filling&)>& visit) {
    if (alpha.size() != sigma.size())
        throw dimension_mismatch("shape and basement sizes differ");
    if (content) {
        if (content->size() != alpha.size())
            throw dimension_mismatch("content length differs from shape length");
        if (content->sum() != alpha.sum())
            return; // no filling can have that content
    }
    ShapeInfo info(alpha);
    Enumerator e{info, content, visit, Filling(alpha, sigma),
                 std::vector<int>(alpha.size(), 0)};
    e.run(0);
}

std::vector<Filling> all_naf(const Composition& alpha, const Permutation& sigma,
                             const std::optional<Composition>& content) {
    std::vector<Filling> out;
    enumerate_naf(alpha, sigma, content, [&](const Filling& f) {
        out.push_back(f);
        return true;
    });
    return out;
}

XPolynomial tableau_E(const Composition& alpha, const Permutation& sigma) {
    if (alpha.size() != sigma.size())
        throw dimension_mismatch("shape and basement sizes differ");
    ShapeInfo info(alpha);
    XPolynomial result(alpha.size());
    enumerate_naf(alpha, sigma, std::nullopt, [&](const Filling& T) {
        FillingStatistics s = statistics(T, info);
        result.add_term(XMonomial{s.content.parts()}, qt_weight(T, info));
        return true;
    });
    return result;
}

} // namespace macd
