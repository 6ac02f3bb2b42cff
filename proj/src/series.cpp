#include "qthook/series.hpp"

namespace qthook {

VarSet::VarSet(std::vector<std::string> names) : names_(std::move(names)) {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (!index_.emplace(names_[i], static_cast<int>(i)).second)
            throw std::invalid_argument("duplicate variable name " + names_[i]);
}

int VarSet::indexOf(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw std::out_of_range("unknown variable " + name);
    return it->second;
}

Exps VarSet::unit(const std::string& name) const {
    Exps e = one();
    e[indexOf(name)] = 1;
    return e;
}

std::string VarSet::format(const Exps& e) const {
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += names_.at(i);
        if (e[i] != 1) out += "^" + std::to_string(e[i]);
    }
    return out.empty() ? "1" : out;
}

VarSetPtr makeVarSet(std::vector<std::string> names) { return std::make_shared<const VarSet>(std::move(names)); }

int totalDegree(const Exps& e) { return std::accumulate(e.begin(), e.end(), 0); }

Exps addExps(const Exps& a, const Exps& b) {
    Exps r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b.at(i);
    return r;
}

Exps subExps(const Exps& a, const Exps& b) {
    Exps r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b.at(i);
    return r;
}

Exps scaleExps(const Exps& a, int k) {
    Exps r(a);
    for (auto& x : r) x *= k;
    return r;
}

bool nonnegative(const Exps& e) {
    return std::all_of(e.begin(), e.end(), [](int x) { return x >= 0; });
}

bool gradedLess(const Exps& a, const Exps& b) {
    int da = totalDegree(a), db = totalDegree(b);
    return da != db ? da < db : a < b;
}

}  // namespace qthook
