#include "qthook/dposet.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace qthook {

std::string Color::name() const {
    std::string s = value >= 0 ? "z" + std::to_string(value) : "zm" + std::to_string(-value);
    return primed ? s + "p" : s;
}

std::string familyName(Family f) {
    switch (f) {
        case Family::Shifted: return "shifted";
        case Family::Bird: return "bird";
        case Family::Banner: return "banner";
        case Family::Custom: return "custom";
    }
    return "custom";
}

Family parseFamily(const std::string& name) {
    if (name == "shifted") return Family::Shifted;
    if (name == "bird") return Family::Bird;
    if (name == "banner") return Family::Banner;
    if (name == "custom") return Family::Custom;
    throw std::invalid_argument("unknown family: " + name);
}

nlohmann::json FamilyParams::toJson() const {
    nlohmann::json j = nlohmann::json::object();
    switch (family) {
        case Family::Shifted: j["alpha"] = alpha.toString(); break;
        case Family::Bird:
            j["alpha"] = alpha.toString();
            j["beta"] = beta.toString();
            j["f"] = f;
            break;
        case Family::Banner:
            j["alpha"] = alpha.toString();
            j["f"] = f;
            break;
        case Family::Custom: break;
    }
    return j;
}

std::string TreeShape::toString() const {
    return "Y(" + std::to_string(f) + ";" + std::to_string(g) + "," + std::to_string(h) + ")";
}

ColoredPoset::ColoredPoset(FamilyParams params, std::vector<Coord> coords, std::vector<Color> colors,
                           const std::vector<std::pair<int, int>>& relations)
    : params_(std::move(params)), coords_(std::move(coords)), colors_(std::move(colors)) {
    const int n = size();
    if (static_cast<int>(colors_.size()) != n) throw std::invalid_argument("ColoredPoset: color count mismatch");
    for (int x = 0; x < n; ++x)
        if (!index_.emplace(coords_[x], x).second) throw std::invalid_argument("ColoredPoset: duplicate coordinate");

    le_.assign(n, std::vector<char>(n, 0));
    for (int x = 0; x < n; ++x) le_[x][x] = 1;
    for (auto [x, y] : relations) {
        if (x < 0 || y < 0 || x >= n || y >= n) throw std::out_of_range("ColoredPoset: relation index");
        le_[x][y] = 1;
    }
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if (le_[i][k])
                for (int j = 0; j < n; ++j)
                    if (le_[k][j]) le_[i][j] = 1;
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            if (le_[x][y] && le_[y][x]) throw std::invalid_argument("ColoredPoset: relations contain a cycle");

    upper_.assign(n, {});
    lower_.assign(n, {});
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (!less(x, y)) continue;
            bool cover = true;
            for (int z = 0; z < n && cover; ++z)
                if (less(x, z) && less(z, y)) cover = false;
            if (cover) {
                upper_[x].push_back(y);
                lower_[y].push_back(x);
            }
        }

    std::vector<int> maximal;
    for (int x = 0; x < n; ++x)
        if (upper_[x].empty()) maximal.push_back(x);
    if (maximal.size() == 1) top_ = maximal[0];

    if (top_) {
        std::vector<int> d(n, -1);
        std::deque<int> queue{*top_};
        d[*top_] = 0;
        bool ok = true;
        while (!queue.empty()) {
            int x = queue.front();
            queue.pop_front();
            for (int y : lower_[x]) {
                if (d[y] < 0) {
                    d[y] = d[x] + 1;
                    queue.push_back(y);
                } else if (d[y] != d[x] + 1) {
                    ok = false;
                }
            }
        }
        for (int x = 0; x < n; ++x)
            for (int y : upper_[x])
                if (d[x] != d[y] + 1) ok = false;
        if (ok) depth_ = std::move(d);
    }

    inTopTree_.assign(n, 0);
    for (int x = 0; x < n; ++x) {
        bool in = true;
        for (int y = 0; y < n && in; ++y)
            if (le_[x][y] && upper_[y].size() > 1) in = false;
        inTopTree_[x] = in;
    }

    std::vector<Color> distinct(colors_);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    std::vector<std::string> names;
    for (const auto& c : distinct) names.push_back(c.name());
    vars_ = makeVarSet(names);
    colorIndex_.resize(n);
    for (int x = 0; x < n; ++x)
        colorIndex_[x] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), colors_[x]) -
                                          distinct.begin());
    for (int x = 0; x < n; ++x)
        if (inTopTree_[x])
            for (int y : upper_[x])
                if (inTopTree_[y]) {
                    int a = colorIndex_[x], b = colorIndex_[y];
                    adjacent_.insert({std::min(a, b), std::max(a, b)});
                }
}

int ColoredPoset::index(const Coord& c) const {
    auto it = index_.find(c);
    if (it == index_.end())
        throw std::out_of_range("no element (" + std::to_string(c.first) + "," + std::to_string(c.second) + ")");
    return it->second;
}

std::optional<int> ColoredPoset::find(const Coord& c) const {
    auto it = index_.find(c);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::vector<std::pair<int, int>> ColoredPoset::covers() const {
    std::vector<std::pair<int, int>> out;
    for (int x = 0; x < size(); ++x)
        for (int y : upper_[x]) out.emplace_back(x, y);
    return out;
}

std::vector<int> ColoredPoset::topTree() const {
    std::vector<int> out;
    for (int x = 0; x < size(); ++x)
        if (inTopTree_[x]) out.push_back(x);
    return out;
}

std::optional<TreeShape> ColoredPoset::topTreeShape() const {
    if (!top_) return std::nullopt;
    auto treeChildren = [&](int x) {
        std::vector<int> c;
        for (int y : lower_[x])
            if (inTopTree_[y]) c.push_back(y);
        return c;
    };
    auto chainBelow = [&](int x) -> std::optional<int> {
        int len = 0;
        for (;;) {
            ++len;
            auto c = treeChildren(x);
            if (c.empty()) return len;
            if (c.size() > 1) return std::nullopt;
            x = c[0];
        }
    };
    int x = *top_, above = 0;
    for (;;) {
        auto c = treeChildren(x);
        if (c.size() == 2) {
            auto g = chainBelow(c[0]), h = chainBelow(c[1]);
            if (!g || !h) return std::nullopt;
            return TreeShape{above, std::min(*g, *h), std::max(*g, *h)};
        }
        if (c.size() != 1) return std::nullopt;
        x = c[0];
        ++above;
    }
}

std::vector<int> ColoredPoset::downSet(int x) const {
    std::vector<int> out;
    for (int y = 0; y < size(); ++y)
        if (le_[y][x]) out.push_back(y);
    return out;
}

std::string ColoredPoset::label(int x) const {
    return "(" + std::to_string(coords_[x].first) + "," + std::to_string(coords_[x].second) + ")";
}

namespace {

struct Builder {
    std::vector<Coord> coords;
    std::vector<Color> colors;
    std::map<Coord, int> at;
    std::vector<std::pair<int, int>> rel;

    int add(Coord c, Color col) {
        auto [it, fresh] = at.emplace(c, static_cast<int>(coords.size()));
        if (fresh) {
            coords.push_back(c);
            colors.push_back(col);
        } else if (colors[it->second] != col) {
            throw std::logic_error("builder: conflicting colors on shared element");
        }
        return it->second;
    }

    // Northwest is larger: a >= b iff a.i <= b.i and a.j <= b.j.
    void relateBlock(const std::vector<int>& block) {
        for (int a : block)
            for (int b : block) {
                if (a == b) continue;
                const auto& ca = coords[a];
                const auto& cb = coords[b];
                if (ca.first <= cb.first && ca.second <= cb.second) rel.emplace_back(b, a);
            }
    }
};

void requireStrict(const Partition& a, const char* what) {
    if (!a.isStrict()) throw std::invalid_argument(std::string(what) + ": partition must be strict");
}

}  // namespace

ColoredPoset buildShifted(const Partition& alpha) {
    requireStrict(alpha, "buildShifted");
    if (alpha.empty()) throw std::invalid_argument("buildShifted: empty partition");
    Builder b;
    std::vector<int> all;
    for (int i = 1; i <= alpha.length(); ++i)
        for (int j = i; j <= alpha.part(i) + i - 1; ++j) {
            Color c = i != j ? Color{j - i, false} : Color{0, i % 2 == 0};
            all.push_back(b.add({i, j}, c));
        }
    b.relateBlock(all);
    return ColoredPoset({Family::Shifted, alpha, {}, 0}, b.coords, b.colors, b.rel);
}

ColoredPoset buildBird(const Partition& alpha, const Partition& beta, int f) {
    requireStrict(alpha, "buildBird");
    requireStrict(beta, "buildBird");
    if (alpha.length() != 2 || beta.length() != 2) throw std::invalid_argument("buildBird: alpha, beta need length 2");
    if (f < 1) throw std::invalid_argument("buildBird: f must be positive");
    Builder b;
    std::vector<int> main, tail;
    for (int j = -f + 1; j <= 1; ++j) main.push_back(b.add({1, j}, {j - 1, false}));
    for (int i = 1; i <= 2; ++i)
        for (int j = i; j <= alpha.part(i) + i - 1; ++j) main.push_back(b.add({i, j}, {j - i, false}));
    for (int j = 1; j <= 2; ++j)
        for (int i = j; i <= beta.part(j) + j - 1; ++i)
            main.push_back(b.add({i, j}, i == j ? Color{0, false} : Color{i - j, true}));
    for (int i = 2; i <= f + 2; ++i) tail.push_back(b.add({i, i}, {-i + 2, false}));
    std::sort(main.begin(), main.end());
    main.erase(std::unique(main.begin(), main.end()), main.end());
    b.relateBlock(main);
    b.relateBlock(tail);
    return ColoredPoset({Family::Bird, alpha, beta, f}, b.coords, b.colors, b.rel);
}

ColoredPoset buildBanner(const Partition& alpha, int f) {
    requireStrict(alpha, "buildBanner");
    if (alpha.length() != 4) throw std::invalid_argument("buildBanner: alpha needs length 4");
    if (f < 2) throw std::invalid_argument("buildBanner: f must be at least 2");
    auto color = [](int i, int j) { return i != j ? Color{j - i, false} : Color{0, i % 2 == 0}; };
    Builder b;
    std::vector<int> main, tail;
    for (int j = -f + 2; j <= 1; ++j) main.push_back(b.add({1, j}, color(1, j)));
    for (int i = 1; i <= 4; ++i)
        for (int j = i; j <= alpha.part(i) + i - 1; ++j) main.push_back(b.add({i, j}, color(i, j)));
    for (int i = 3; i <= f + 2; ++i) tail.push_back(b.add({i, 3}, color(i, 3)));
    std::sort(main.begin(), main.end());
    main.erase(std::unique(main.begin(), main.end()), main.end());
    b.relateBlock(main);
    b.relateBlock(tail);
    return ColoredPoset({Family::Banner, alpha, {}, f}, b.coords, b.colors, b.rel);
}

ColoredPoset buildFamily(const FamilyParams& p) {
    switch (p.family) {
        case Family::Shifted: return buildShifted(p.alpha);
        case Family::Bird: return buildBird(p.alpha, p.beta, p.f);
        case Family::Banner: return buildBanner(p.alpha, p.f);
        case Family::Custom: break;
    }
    throw std::invalid_argument("buildFamily: custom posets have no builder");
}

namespace {

std::vector<int> interval(const ColoredPoset& P, int w, int v) {
    std::vector<int> out;
    for (int z = 0; z < P.size(); ++z)
        if (P.leq(w, z) && P.leq(z, v)) out.push_back(z);
    return out;
}

// Elements of I split as: one incomparable pair {x,y}, the rest a chain with
// each element above both or below both. Returns (x, y, #above, #below).
struct DiamondShape {
    int x, y, above, below;
};

std::optional<DiamondShape> diamondShape(const ColoredPoset& P, const std::vector<int>& I) {
    int x = -1, y = -1;
    for (std::size_t a = 0; a < I.size(); ++a)
        for (std::size_t b = a + 1; b < I.size(); ++b)
            if (!P.comparable(I[a], I[b])) {
                if (x >= 0) return std::nullopt;
                x = I[a];
                y = I[b];
            }
    if (x < 0) return std::nullopt;
    int above = 0, below = 0;
    for (int z : I) {
        if (z == x || z == y) continue;
        if (P.less(x, z) && P.less(y, z))
            ++above;
        else if (P.less(z, x) && P.less(z, y))
            ++below;
        else
            return std::nullopt;
    }
    return DiamondShape{x, y, above, below};
}

}  // namespace

std::vector<DkInterval> findDkIntervals(const ColoredPoset& P) {
    std::vector<DkInterval> out;
    for (int w = 0; w < P.size(); ++w)
        for (int v = 0; v < P.size(); ++v) {
            if (!P.less(w, v)) continue;
            auto I = interval(P, w, v);
            if (I.size() < 4 || I.size() % 2 != 0) continue;
            auto s = diamondShape(P, I);
            if (!s || s->above != s->below) continue;
            int k = static_cast<int>(I.size() + 2) / 2;
            out.push_back({w, v, std::min(s->x, s->y), std::max(s->x, s->y), k});
        }
    return out;
}

std::vector<DkMinus> findDkMinusIntervals(const ColoredPoset& P) {
    std::vector<DkMinus> out;
    for (int w = 0; w < P.size(); ++w) {
        const auto& up = P.upperCovers(w);
        for (std::size_t a = 0; a < up.size(); ++a)
            for (std::size_t b = a + 1; b < up.size(); ++b) {
                std::vector<int> els{w, up[a], up[b]};
                std::sort(els.begin(), els.end());
                out.push_back({els, w, {std::min(up[a], up[b]), std::max(up[a], up[b])}, 3});
            }
    }
    for (int w = 0; w < P.size(); ++w)
        for (int u = 0; u < P.size(); ++u) {
            if (!P.less(w, u)) continue;
            auto I = interval(P, w, u);
            if (I.size() < 5 || I.size() % 2 != 1) continue;
            auto s = diamondShape(P, I);
            if (!s || s->below != s->above + 1) continue;
            int k = static_cast<int>(I.size() + 3) / 2;
            out.push_back({I, w, {u}, k});
        }
    return out;
}

VerificationReport dCompleteCheck(const ColoredPoset& P) {
    Stopwatch sw;
    VerificationReport rep;
    rep.check = "d-complete";
    rep.family = familyName(P.params().family);
    rep.params = P.params().toJson();
    auto dk = findDkIntervals(P);
    auto dkm = findDkMinusIntervals(P);
    auto names = [&](const std::vector<int>& els) {
        std::string s;
        for (int e : els) s += (s.empty() ? "" : " ") + P.label(e);
        return s;
    };

    for (const auto& I : dkm) {
        ++rep.cases;
        bool completed = false;
        for (int v = 0; v < P.size() && !completed; ++v) {
            bool coversAll = std::all_of(I.maximal.begin(), I.maximal.end(), [&](int m) {
                const auto& up = P.upperCovers(m);
                return std::find(up.begin(), up.end(), v) != up.end();
            });
            if (!coversAll) continue;
            auto J = interval(P, I.bottom, v);
            std::vector<int> expect = I.elements;
            expect.push_back(v);
            std::sort(expect.begin(), expect.end());
            if (J != expect) continue;
            auto s = diamondShape(P, J);
            completed = s && s->above == s->below;
        }
        if (!completed) rep.fail({"D1", "no completion of d" + std::to_string(I.k) + "- {" + names(I.elements) + "}", ""});
    }
    for (const auto& I : dk) {
        ++rep.cases;
        auto J = interval(P, I.bottom, I.top);
        for (int u : P.lowerCovers(I.top))
            if (!std::binary_search(J.begin(), J.end(), u))
                rep.fail({"D2", P.label(u) + " covered by top of d" + std::to_string(I.k) + "-interval [" +
                                    P.label(I.bottom) + "," + P.label(I.top) + "]",
                          ""});
    }
    for (std::size_t a = 0; a < dkm.size(); ++a)
        for (std::size_t b = a + 1; b < dkm.size(); ++b) {
            const auto& I = dkm[a];
            const auto& J = dkm[b];
            if (I.k != J.k || I.bottom == J.bottom) continue;
            std::vector<int> ri, rj;
            for (int e : I.elements)
                if (e != I.bottom) ri.push_back(e);
            for (int e : J.elements)
                if (e != J.bottom) rj.push_back(e);
            if (ri == rj) rep.fail({"D3", "d" + std::to_string(I.k) + "- intervals differ only at bottoms " +
                                              P.label(I.bottom) + ", " + P.label(J.bottom),
                                    ""});
        }
    if (!P.top()) rep.fail({"unique-max", "poset has no unique maximal element", ""});
    else if (!P.hasRank()) rep.fail({"rank", "saturated chains to the top differ in length", ""});
    rep.note = std::to_string(dk.size()) + " dk-intervals, " + std::to_string(dkm.size()) + " dk- intervals";
    rep.elapsedMs = sw.ms();
    return rep;
}

VerificationReport coloringCheck(const ColoredPoset& P) {
    Stopwatch sw;
    VerificationReport rep;
    rep.check = "coloring";
    rep.family = familyName(P.params().family);
    rep.params = P.params().toJson();
    const int n = P.size();
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            ++rep.cases;
            if (P.colorIndex(x) != P.colorIndex(y)) continue;
            if (!P.comparable(x, y)) rep.fail({"C1", P.label(x) + " " + P.label(y) + " incomparable, same color", ""});
            int lo = P.less(x, y) ? x : y, hi = lo == x ? y : x;
            const auto& up = P.upperCovers(lo);
            if (std::find(up.begin(), up.end(), hi) != up.end())
                rep.fail({"C2", P.label(lo) + " covered by " + P.label(hi) + ", same color", ""});
            if (P.comparable(x, y)) {
                auto I = interval(P, lo, hi);
                bool chain = true;
                for (std::size_t a = 0; a < I.size() && chain; ++a)
                    for (std::size_t b = a + 1; b < I.size() && chain; ++b)
                        if (!P.comparable(I[a], I[b])) chain = false;
                if (chain) rep.fail({"C3", "chain [" + P.label(lo) + "," + P.label(hi) + "] repeats a color", ""});
            }
        }
    for (const auto& I : findDkIntervals(P)) {
        ++rep.cases;
        if (P.colorIndex(I.bottom) != P.colorIndex(I.top))
            rep.fail({"C4", "d" + std::to_string(I.k) + "-interval [" + P.label(I.bottom) + "," + P.label(I.top) +
                                "] has distinct end colors",
                      ""});
    }
    auto T = P.topTree();
    std::set<int> tcolors;
    for (int x : T) tcolors.insert(P.colorIndex(x));
    if (tcolors.size() != T.size() || static_cast<int>(tcolors.size()) != P.vars()->size())
        rep.fail({"top-tree", "coloring restricted to the top tree is not a bijection onto the colors", ""});
    rep.elapsedMs = sw.ms();
    return rep;
}

std::vector<Exps> hookMonomials(const ColoredPoset& P) {
    if (!P.hasRank()) throw std::invalid_argument("hookMonomials: poset has no rank function");
    const int n = P.size(), w = P.vars()->size();
    std::vector<int> order(n);
    for (int x = 0; x < n; ++x) order[x] = x;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return P.depth(a) > P.depth(b); });

    std::map<int, std::vector<DkInterval>> byTop;
    for (const auto& I : findDkIntervals(P)) byTop[I.top].push_back(I);

    std::vector<Exps> hook(n);
    for (int v : order) {
        auto it = byTop.find(v);
        if (it == byTop.end()) {
            Exps e(w, 0);
            for (int z : P.downSet(v)) ++e[P.colorIndex(z)];
            hook[v] = e;
            continue;
        }
        auto viaInterval = [&](const DkInterval& I) {
            return subExps(addExps(hook[I.sideA], hook[I.sideB]), hook[I.bottom]);
        };
        const auto& ivs = it->second;
        auto best = std::max_element(ivs.begin(), ivs.end(),
                                     [](const DkInterval& a, const DkInterval& b) { return a.k < b.k; });
        Exps e = viaInterval(*best);
        for (const auto& I : ivs)
            if (viaInterval(I) != e)
                throw std::logic_error("hookMonomials: d_k-intervals at " + P.label(v) + " disagree");
        if (!nonnegative(e)) throw std::domain_error("hookMonomials: negative exponent at " + P.label(v));
        hook[v] = e;
    }
    return hook;
}

Exps HookAliases::var(int value, bool primed) const { return P_->vars()->unit(Color{value, primed}.name()); }

Exps HookAliases::run(int a, int b, bool primed) const {
    Exps e = P_->vars()->one();
    for (int k = a; k <= b; ++k) e = addExps(e, var(k, primed));
    return e;
}

Exps HookAliases::w() const {
    const auto& pr = P_->params();
    bool oddLength = pr.family == Family::Shifted && pr.alpha.length() % 2 == 1;
    if (pr.family != Family::Shifted && pr.family != Family::Banner)
        throw std::invalid_argument("HookAliases::w: only shifted shapes and banners");
    Exps y0 = var(0, true), z0 = var(0);
    return oddLength ? subExps(y0, z0) : subExps(z0, y0);
}

Exps HookAliases::xt(int i) const {
    const auto& pr = P_->params();
    Exps e = P_->vars()->one();
    if (pr.family == Family::Bird) {
        for (int k = i; k <= pr.f; ++k) e = addExps(e, var(-k));
    } else if (pr.family == Family::Banner) {
        for (int k = i; k <= pr.f; ++k) e = addExps(e, var(-k + 1));
    } else {
        throw std::invalid_argument("HookAliases::xt: only birds and banners");
    }
    return e;
}

Exps HookAliases::yt(int i) const {
    if (P_->params().family != Family::Bird) throw std::invalid_argument("HookAliases::yt: only birds");
    return run(1, i - 1, true);
}

Exps HookAliases::zt(int i) const {
    const auto& pr = P_->params();
    switch (pr.family) {
        case Family::Shifted:
            if (pr.alpha.length() % 2 == 1) return run(0, i - 1);
            return addExps(var(0, true), run(1, i - 1));
        case Family::Bird: return run(1, i - 1);
        case Family::Banner: return addExps(var(0, true), run(1, i - 1));
        case Family::Custom: break;
    }
    throw std::invalid_argument("HookAliases::zt: custom posets have no aliases");
}

std::vector<int> HookAliases::complement(const Partition& a, int n) {
    std::vector<int> out;
    for (int k = 1; k <= n; ++k)
        if (std::find(a.parts().begin(), a.parts().end(), k) == a.parts().end()) out.push_back(k);
    return out;
}

std::vector<std::pair<int, int>> HookAliases::complementPairs(const Partition& a, int n) {
    std::vector<std::pair<int, int>> out;
    for (int c : complement(a, n))
        for (int l : a.parts())
            if (l > c) out.emplace_back(c, l);
    return out;
}

std::vector<Exps> hookMonomialsClosedForm(const ColoredPoset& P) {
    const auto& pr = P.params();
    if (pr.family == Family::Custom)
        throw std::invalid_argument("hookMonomialsClosedForm: custom posets have no closed form");
    HookAliases A(P);
    std::vector<Exps> hooks;
    auto sum = [](std::initializer_list<Exps> xs) {
        Exps e = *xs.begin();
        for (auto it = xs.begin() + 1; it != xs.end(); ++it) e = addExps(e, *it);
        return e;
    };
    const Partition& a = pr.alpha;
    for (auto [c, l] : HookAliases::complementPairs(a, a.part(1))) hooks.push_back(subExps(A.zt(l), A.zt(c)));
    if (pr.family == Family::Shifted) {
        int r = a.length();
        for (int i = 1; i <= r; ++i) hooks.push_back(A.zt(a.part(i)));
        for (int i = 1; i <= r; ++i)
            for (int j = i + 1; j <= r; ++j) hooks.push_back(sum({A.w(), A.zt(a.part(i)), A.zt(a.part(j))}));
    } else if (pr.family == Family::Bird) {
        const Partition& b = pr.beta;
        int f = pr.f;
        for (auto [c, l] : HookAliases::complementPairs(b, b.part(1))) hooks.push_back(subExps(A.yt(l), A.yt(c)));
        for (int i = 1; i <= f; ++i) hooks.push_back(A.xt(i));
        Exps wings = sum({A.zt(a.part(1)), A.zt(a.part(2)), A.yt(b.part(1)), A.yt(b.part(2))});
        for (int i = 1; i <= f; ++i) hooks.push_back(addExps(subExps(scaleExps(A.xt(0), 2), A.xt(i)), wings));
        for (int i = 1; i <= 2; ++i)
            for (int j = 1; j <= 2; ++j) hooks.push_back(sum({A.xt(0), A.yt(b.part(j)), A.zt(a.part(i))}));
    } else {
        int f = pr.f;
        for (int i = 2; i <= f; ++i) hooks.push_back(A.xt(i));
        Exps wing = sum({A.zt(a.part(1)), A.zt(a.part(2)), A.zt(a.part(3)), A.zt(a.part(4))});
        Exps head = addExps(scaleExps(addExps(A.xt(2), A.w()), 2), wing);
        for (int i = 2; i <= f; ++i) hooks.push_back(subExps(head, A.xt(i)));
        for (int i = 1; i <= 4; ++i) hooks.push_back(A.zt(a.part(i)));
        for (int i = 1; i <= 4; ++i)
            for (int j = i + 1; j <= 4; ++j)
                hooks.push_back(sum({A.xt(2), A.w(), A.zt(a.part(i)), A.zt(a.part(j))}));
    }
    return hooks;
}

VerificationReport hookAgreementCheck(const ColoredPoset& P) {
    Stopwatch sw;
    VerificationReport rep;
    rep.check = "hook-agreement";
    rep.family = familyName(P.params().family);
    rep.params = P.params().toJson();
    auto rec = hookMonomials(P);
    auto closed = hookMonomialsClosedForm(P);
    rep.cases = P.size();
    for (std::size_t v = 0; v < rec.size(); ++v)
        if (!nonnegative(rec[v]) || totalDegree(rec[v]) < 1)
            rep.fail({P.vars()->format(rec[v]), "hook at " + P.label(static_cast<int>(v)) + " is degenerate", ""});
    auto a = rec, b = closed;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a.size() != b.size()) {
        rep.fail({"size", std::to_string(a.size()), std::to_string(b.size())});
    } else if (a != b) {
        std::vector<Exps> onlyA, onlyB;
        std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(onlyA));
        std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(onlyB));
        rep.fail({"multiset", onlyA.empty() ? "" : P.vars()->format(onlyA[0]),
                  onlyB.empty() ? "" : P.vars()->format(onlyB[0])});
    }
    rep.elapsedMs = sw.ms();
    return rep;
}

namespace {

std::vector<int> topDownOrder(const ColoredPoset& P) {
    std::vector<int> order(P.size());
    for (int x = 0; x < P.size(); ++x) order[x] = x;
    // Sorting by the size of the up-set is a linear extension for any poset.
    std::vector<int> ups(P.size(), 0);
    for (int x = 0; x < P.size(); ++x)
        for (int y = 0; y < P.size(); ++y)
            if (P.leq(x, y)) ++ups[x];
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        if (ups[a] != ups[b]) return ups[a] < ups[b];
        return P.coord(a) < P.coord(b);
    });
    return order;
}

}  // namespace

void forEachPPartition(const ColoredPoset& P, int D, const std::function<void(const PPartition&)>& fn) {
    const int n = P.size();
    auto order = topDownOrder(P);
    std::vector<int> downCount(n);
    for (int x = 0; x < n; ++x) downCount[x] = static_cast<int>(P.downSet(x).size());
    PPartition pi(n, 0);
    auto rec = [&](auto&& self, int pos, int used) -> void {
        if (pos == n) {
            fn(pi);
            return;
        }
        int x = order[pos];
        int lo = 0;
        for (int y : P.upperCovers(x)) lo = std::max(lo, pi[y]);
        for (int val = lo; used + val * downCount[x] <= D; ++val) {
            pi[x] = val;
            self(self, pos + 1, used + val);
        }
        pi[x] = 0;
    };
    rec(rec, 0, 0);
}

std::vector<PPartition> enumeratePPartitions(const ColoredPoset& P, int D) {
    std::vector<PPartition> out;
    forEachPPartition(P, D, [&](const PPartition& pi) { out.push_back(pi); });
    return out;
}

bool isPPartition(const ColoredPoset& P, const PPartition& pi) {
    if (static_cast<int>(pi.size()) != P.size()) return false;
    for (int x = 0; x < P.size(); ++x) {
        if (pi[x] < 0) return false;
        for (int y : P.upperCovers(x))
            if (pi[x] < pi[y]) return false;
    }
    return true;
}

Exps zMonomial(const ColoredPoset& P, const PPartition& pi) {
    Exps e(P.vars()->size(), 0);
    for (int x = 0; x < P.size(); ++x) e[P.colorIndex(x)] += pi[x];
    return e;
}

std::string toDot(const ColoredPoset& P) {
    std::ostringstream os;
    os << "digraph poset {\n  rankdir=TB;\n";
    for (int x = 0; x < P.size(); ++x)
        os << "  n" << x << " [label=\"" << P.label(x) << ":" << P.color(x).name() << "\""
           << (P.inTopTree(x) ? ", shape=box" : "") << "];\n";
    for (auto [lo, hi] : P.covers()) os << "  n" << hi << " -> n" << lo << ";\n";
    os << "}\n";
    return os.str();
}

nlohmann::json toJson(const ColoredPoset& P) {
    nlohmann::json j;
    j["family"] = familyName(P.params().family);
    j["params"] = P.params().toJson();
    j["colors"] = P.vars()->names();
    nlohmann::json els = nlohmann::json::array();
    std::vector<Exps> rec, closed;
    bool haveRec = false, haveClosed = false;
    try {
        rec = hookMonomials(P);
        haveRec = true;
    } catch (const std::exception&) {
    }
    if (P.params().family != Family::Custom) {
        closed = hookMonomialsClosedForm(P);
        haveClosed = true;
    }
    for (int x = 0; x < P.size(); ++x) {
        nlohmann::json e;
        e["coord"] = {P.coord(x).first, P.coord(x).second};
        e["color"] = P.color(x).name();
        e["rank"] = P.hasRank() ? nlohmann::json(P.depth(x)) : nlohmann::json(nullptr);
        e["topTree"] = static_cast<bool>(P.inTopTree(x));
        if (haveRec) e["hook"] = P.vars()->format(rec[x]);
        els.push_back(e);
    }
    j["elements"] = els;
    nlohmann::json cov = nlohmann::json::array();
    for (auto [lo, hi] : P.covers()) cov.push_back({P.label(lo), P.label(hi)});
    j["covers"] = cov;
    nlohmann::json dk = nlohmann::json::array();
    for (const auto& I : findDkIntervals(P))
        dk.push_back({{"k", I.k},
                      {"top", P.label(I.top)},
                      {"bottom", P.label(I.bottom)},
                      {"sides", {P.label(I.sideA), P.label(I.sideB)}}});
    j["dkIntervals"] = dk;
    if (auto s = P.topTreeShape()) j["topTreeShape"] = s->toString();
    if (haveClosed) {
        nlohmann::json cf = nlohmann::json::array();
        for (const auto& e : closed) cf.push_back(P.vars()->format(e));
        j["closedFormHooks"] = cf;
        j["hooksAgree"] = hookAgreementCheck(P).pass;
    }
    return j;
}

}  // namespace qthook
