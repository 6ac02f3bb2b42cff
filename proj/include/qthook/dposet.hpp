#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "qthook/partition.hpp"
#include "qthook/report.hpp"
#include "qthook/series.hpp"

namespace qthook {

using Coord = std::pair<int, int>;

// Integer color, optionally primed. Variable names: z3, zm2 (for -2), z1p (for 1').
struct Color {
    int value = 0;
    bool primed = false;
    std::string name() const;
    auto operator<=>(const Color&) const = default;
};

enum class Family { Shifted, Bird, Banner, Custom };
std::string familyName(Family f);
Family parseFamily(const std::string& name);

struct FamilyParams {
    Family family = Family::Custom;
    Partition alpha;
    Partition beta;
    int f = 0;
    nlohmann::json toJson() const;
};

struct DkInterval {
    int bottom = -1;
    int top = -1;
    int sideA = -1;
    int sideB = -1;
    int k = 0;
};

// Y(f;g,h): a chain of f elements above a branch element, two chains of g <= h below.
struct TreeShape {
    int f = 0;
    int g = 0;
    int h = 0;
    bool operator==(const TreeShape&) const = default;
    std::string toString() const;
};

class ColoredPoset {
public:
    // relations: pairs (x, y) meaning x < y; the order is their transitive closure.
    ColoredPoset(FamilyParams params, std::vector<Coord> coords, std::vector<Color> colors,
                 const std::vector<std::pair<int, int>>& relations);

    const FamilyParams& params() const { return params_; }
    int size() const { return static_cast<int>(coords_.size()); }
    const Coord& coord(int x) const { return coords_.at(x); }
    const std::vector<Coord>& coords() const { return coords_; }
    const Color& color(int x) const { return colors_.at(x); }
    int index(const Coord& c) const;
    std::optional<int> find(const Coord& c) const;

    bool leq(int x, int y) const { return le_[x][y]; }
    bool less(int x, int y) const { return x != y && le_[x][y]; }
    bool comparable(int x, int y) const { return le_[x][y] || le_[y][x]; }
    const std::vector<int>& upperCovers(int x) const { return upper_[x]; }
    const std::vector<int>& lowerCovers(int x) const { return lower_[x]; }
    std::vector<std::pair<int, int>> covers() const;  // (lower, upper)

    // Unique maximal element and depth ranks (top = 0, increasing downward);
    // both are absent when the poset does not admit them.
    std::optional<int> top() const { return top_; }
    int depth(int x) const { return depth_.at(x); }
    bool hasRank() const { return !depth_.empty(); }

    bool inTopTree(int x) const { return inTopTree_[x]; }
    std::vector<int> topTree() const;
    std::optional<TreeShape> topTreeShape() const;

    // Colors as series variables.
    const VarSetPtr& vars() const { return vars_; }
    int colorIndex(int x) const { return colorIndex_[x]; }
    // Colors adjacent in the top tree; the virtual top is adjacent to c(top) only.
    bool colorsAdjacent(int a, int b) const { return adjacent_.count({std::min(a, b), std::max(a, b)}) > 0; }
    int topColor() const { return colorIndex_.at(*top_); }

    std::vector<int> downSet(int x) const;
    std::string label(int x) const;

private:
    FamilyParams params_;
    std::vector<Coord> coords_;
    std::vector<Color> colors_;
    std::map<Coord, int> index_;
    std::vector<std::vector<char>> le_;
    std::vector<std::vector<int>> upper_, lower_;
    std::optional<int> top_;
    std::vector<int> depth_;
    std::vector<char> inTopTree_;
    VarSetPtr vars_;
    std::vector<int> colorIndex_;
    std::set<std::pair<int, int>> adjacent_;
};

ColoredPoset buildShifted(const Partition& alpha);
ColoredPoset buildBird(const Partition& alpha, const Partition& beta, int f);
ColoredPoset buildBanner(const Partition& alpha, int f);
ColoredPoset buildFamily(const FamilyParams& params);

std::vector<DkInterval> findDkIntervals(const ColoredPoset& P);
// Intervals isomorphic to d_k(1) minus its top (k >= 4), and d3^- triples.
struct DkMinus {
    std::vector<int> elements;  // sorted
    int bottom = -1;
    std::vector<int> maximal;
    int k = 0;
};
std::vector<DkMinus> findDkMinusIntervals(const ColoredPoset& P);

VerificationReport dCompleteCheck(const ColoredPoset& P);
VerificationReport coloringCheck(const ColoredPoset& P);

// The abbreviations of the closed-form hook tables as Laurent exponent
// vectors over P.vars(). Shifted: w and z^_i (their form depends on the parity
// of the length). Bird: x~_i = x_i...x_f with x_0 = z0, x_k = z_{-k}, and
// y~_i, z~_i = products of the first i-1 primed / unprimed positive colors.
// Banner: w = z0/z0', x~_i with x_1 = z0, x_k = z_{-k+1}, z~_i = z0' z1...z_{i-1}.
class HookAliases {
public:
    explicit HookAliases(const ColoredPoset& P) : P_(&P) {}
    Exps w() const;
    Exps xt(int i) const;
    Exps yt(int i) const;
    Exps zt(int i) const;
    // Strict parts of [n] missing from a, and the pairs (c, l) with c < l, c missing, l a part.
    static std::vector<int> complement(const Partition& a, int n);
    static std::vector<std::pair<int, int>> complementPairs(const Partition& a, int n);

private:
    Exps var(int value, bool primed = false) const;
    Exps run(int a, int b, bool primed = false) const;
    const ColoredPoset* P_;
};

// Hook monomials by the recursive definition and by the closed-form tables.
std::vector<Exps> hookMonomials(const ColoredPoset& P);
std::vector<Exps> hookMonomialsClosedForm(const ColoredPoset& P);
VerificationReport hookAgreementCheck(const ColoredPoset& P);

using PPartition = std::vector<int>;  // values indexed by element
// Visits every order-reversing map with total weight <= D, in lexicographic
// order over a fixed top-down linear extension.
void forEachPPartition(const ColoredPoset& P, int D, const std::function<void(const PPartition&)>& fn);
std::vector<PPartition> enumeratePPartitions(const ColoredPoset& P, int D);
bool isPPartition(const ColoredPoset& P, const PPartition& pi);
Exps zMonomial(const ColoredPoset& P, const PPartition& pi);

std::string toDot(const ColoredPoset& P);
nlohmann::json toJson(const ColoredPoset& P);

}  // namespace qthook
