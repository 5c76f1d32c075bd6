#pragma once

// Skyline diagrams, non-attacking fillings and their statistics (arm, leg,
// maj, inversion/coinversion triples, content), the q,t-weight with its
// row-by-row decomposition, and the tableau formula for E_alpha^sigma.
//
// Boxes are addressed as (column i, row r) with 1 <= i <= n and
// 0 <= r <= alpha_i; row 0 is the basement, which holds a permutation.

#include <compare>
#include <functional>
#include <optional>
#include <vector>

#include "macd/words.hpp"
#include "macd/x_polynomial.hpp"

namespace macd {

struct Box {
    int col = 0;
    int row = 0;
    auto operator<=>(const Box&) const = default;
};

// A triple (u, v, w): w directly below u, v in Arm(u).  Type I has v in the
// right-arm (same row as u), type II has v in the left-arm (row of w).
struct Triple {
    Box u;
    Box v;
    bool type_two = false;
    Box w() const { return {u.col, u.row - 1}; }
};

// Per-shape precomputation shared by every filling of that shape: arm/leg
// statistics, the triple list, and the attacking pairs of the augmented
// diagram.
class ShapeInfo {
public:
    explicit ShapeInfo(Composition shape);

    const Composition& shape() const { return shape_; }
    int n() const { return shape_.size(); }
    int rows() const { return rows_; } // L = max_i alpha_i

    bool in_diagram(Box u) const;           // u in dg(alpha), r >= 1
    bool in_augmented_diagram(Box u) const; // u in adg(alpha)

    int leg(Box u) const; // alpha_i - r
    int arm(Box u) const;
    const std::vector<Box>& left_arm(Box u) const;
    const std::vector<Box>& right_arm(Box u) const;

    const std::vector<Triple>& triples() const { return triples_; }
    // All unordered attacking pairs of adg(alpha).
    const std::vector<std::pair<Box, Box>>& attacking_pairs() const { return attacking_; }

    // Diagram boxes in reading order: row 1 left to right, then row 2, ...
    const std::vector<Box>& boxes() const { return boxes_; }

private:
    int box_index(Box u) const; // throws box_outside_diagram
    Composition shape_;
    int rows_ = 0;
    std::vector<int> offsets_; // column-major indexing of dg boxes
    std::vector<std::vector<Box>> left_arm_, right_arm_;
    std::vector<Triple> triples_;
    std::vector<std::pair<Box, Box>> attacking_;
    std::vector<Box> boxes_;
};

// Whether two boxes of adg(alpha) attack: same row, or consecutive rows with
// the higher box strictly to the right.
bool attacking(Box u, Box v);

// Indicator of a > b.
inline int indicator(int a, int b) { return a > b ? 1 : 0; }

// I(a,b,c) = I(a,b) + I(b,c) - I(a,c), the cyclically-weakly-decreasing
// indicator; requires a != b and b != c.
int indicator3(int a, int b, int c);

// A filling of shape alpha with basement sigma: T(i,0) = sigma_i, and every
// box (i,r), 1 <= r <= alpha_i, carries a label in 1..n.
class Filling {
public:
    Filling() = default;
    Filling(Composition shape, Permutation basement);
    Filling(Composition shape, Permutation basement, std::vector<std::vector<int>> columns);

    const Composition& shape() const { return shape_; }
    const Permutation& basement() const { return basement_; }
    int n() const { return shape_.size(); }
    int height(int i) const { return shape_[i]; }

    int label(int i, int r) const; // r = 0 reads the basement
    int label(Box u) const { return label(u.col, u.row); }
    void set_label(int i, int r, int v);
    void set_basement(Permutation sigma);

    // Definitional scan over all attacking pairs of the shape.
    bool is_non_attacking(const ShapeInfo& info) const;

    auto operator<=>(const Filling&) const = default;

private:
    Composition shape_;
    Permutation basement_;
    std::vector<std::vector<int>> columns_; // columns_[i-1][r-1]
};

struct FillingStatistics {
    Composition content;
    std::vector<Box> descents;
    int maj = 0;
    int inversions = 0;
    int coinversions = 0;
};

FillingStatistics statistics(const Filling& T, const ShapeInfo& info);

// wtqt(T) assembled in one pass: q^maj t^coinv times
// prod_{T(u) != T(south u)} (1-t) / (1 - q^{1+leg} t^{1+arm}).
RationalQT qt_weight(const Filling& T, const ShapeInfo& info);

struct WeightBreakdown {
    XMonomial x_weight;
    std::vector<RationalQT> row_components; // r = 0 .. L-1
    RationalQT total;                       // product of the components
};

// Row decomposition wtqt(T) = prod_r wtqt^(r)(T); the r-th component collects
// the descents of row r+1 and the triples between rows r and r+1.
// Throws attacking_filling when T is not non-attacking.
WeightBreakdown weight(const Filling& T, const ShapeInfo& info);

// Streams NAF(alpha, sigma) — optionally restricted to content beta — in
// lexicographic reading-word order, each filling exactly once.  The callback
// returns false to stop early.
void enumerate_naf(const Composition& alpha, const Permutation& sigma,
                   const std::optional<Composition>& content,
                   const std::function<bool(const Filling&)>& visit);

std::vector<Filling> all_naf(const Composition& alpha, const Permutation& sigma,
                             const std::optional<Composition>& content = std::nullopt);

// E_alpha^sigma(x; q, t) as the weight generating function over NAF(alpha, sigma).
XPolynomial tableau_E(const Composition& alpha, const Permutation& sigma);

} // namespace macd
