#include "qthook/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qthook {

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

Partition Partition::parse(std::string_view text) {
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        std::string token(text.substr(pos, comma - pos));
        token.erase(std::remove_if(token.begin(), token.end(), ::isspace), token.end());
        if (token.empty()) throw std::invalid_argument("empty partition part");
        std::size_t used = 0;
        int value = std::stoi(token, &used);
        if (used != token.size()) throw std::invalid_argument("bad partition part '" + token + "'");
        parts.push_back(value);
        pos = comma + 1;
    }
    return Partition(std::move(parts));
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::conjugate() const {
    std::vector<int> conj(parts_.empty() ? 0 : parts_[0], 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++conj[j];
    return Partition(std::move(conj));
}

int Partition::oddRows() const {
    return static_cast<int>(std::count_if(parts_.begin(), parts_.end(), [](int p) { return p % 2 != 0; }));
}

bool Partition::isStrict() const {
    for (std::size_t i = 1; i < parts_.size(); ++i)
        if (parts_[i] == parts_[i - 1]) return false;
    return true;
}

int Partition::leg(int i, int j) const {
    int l = 0;
    while (part(i + l + 1) >= j) ++l;
    return l;
}

bool Partition::contains(const Partition& mu) const {
    if (mu.length() > length()) return false;
    for (int i = 1; i <= mu.length(); ++i)
        if (mu.part(i) > part(i)) return false;
    return true;
}

bool Partition::dominates(const Partition& mu) const {
    if (weight() != mu.weight()) return false;
    int a = 0, b = 0;
    for (int i = 1; i <= std::max(length(), mu.length()); ++i) {
        a += part(i);
        b += mu.part(i);
        if (a < b) return false;
    }
    return true;
}

std::string Partition::toString() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

bool isHorizontalStrip(const Partition& lambda, const Partition& mu) {
    if (!lambda.contains(mu)) return false;
    for (int i = 1; i <= lambda.length(); ++i)
        if (mu.part(i) < lambda.part(i + 1)) return false;
    return true;
}

namespace {

void partitionsRec(int remaining, int maxPart, int maxLength, std::vector<int>& cur,
                   std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    if (maxLength == 0) return;
    for (int p = std::min(remaining, maxPart); p >= 1; --p) {
        cur.push_back(p);
        partitionsRec(remaining - p, p, maxLength - 1, cur, out);
        cur.pop_back();
    }
}

void stripRec(const Partition& mu, int row, int left, int maxLength, std::vector<int>& cur,
              std::vector<Partition>& out) {
    // Row `row` (1-based) may grow from mu_row up to mu_{row-1} (unbounded for row 1).
    if (left == 0) {
        std::vector<int> parts = cur;
        for (int i = row; i <= mu.length(); ++i) parts.push_back(mu.part(i));
        out.emplace_back(std::move(parts));
        return;
    }
    if (maxLength >= 0 && row > maxLength) return;
    if (row > mu.length() + 1) return;
    int base = mu.part(row);
    int cap = row == 1 ? base + left : std::min(base + left, mu.part(row - 1));
    for (int v = cap; v >= base; --v) {
        if (v == 0) continue;
        cur.push_back(v);
        stripRec(mu, row + 1, left - (v - base), maxLength, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitionsOf(int n, int maxLength, int maxPart) {
    std::vector<Partition> out;
    if (n < 0) return out;
    std::vector<int> cur;
    partitionsRec(n, maxPart < 0 ? n : maxPart, maxLength, cur, out);
    return out;
}

std::vector<Partition> partitionsUpTo(int n, int maxLength) {
    std::vector<Partition> out;
    for (int k = 0; k <= n; ++k) {
        auto ps = partitionsOf(k, maxLength);
        out.insert(out.end(), ps.begin(), ps.end());
    }
    return out;
}

std::vector<Partition> strictPartitionsOf(int n) {
    std::vector<Partition> out;
    for (auto& p : partitionsOf(n))
        if (p.isStrict()) out.push_back(p);
    return out;
}

std::vector<Partition> addHorizontalStrip(const Partition& mu, int r, int maxLength) {
    std::vector<Partition> out;
    if (r < 0) return out;
    std::vector<int> cur;
    stripRec(mu, 1, r, maxLength, cur, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Partition> removeHorizontalStrip(const Partition& lambda, int r) {
    std::vector<Partition> out;
    for (auto& nu : removeAnyHorizontalStrip(lambda))
        if (lambda.weight() - nu.weight() == r) out.push_back(nu);
    return out;
}

std::vector<Partition> removeAnyHorizontalStrip(const Partition& lambda) {
    // nu_i ranges over [lambda_{i+1}, lambda_i].
    std::vector<Partition> out;
    int len = lambda.length();
    std::vector<int> cur(len, 0);
    auto rec = [&](auto&& self, int i) -> void {
        if (i > len) {
            out.emplace_back(cur);
            return;
        }
        for (int v = lambda.part(i); v >= lambda.part(i + 1); --v) {
            cur[i - 1] = v;
            self(self, i + 1);
        }
    };
    rec(rec, 1);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Partition> stripsBetween(const Partition& kappa, const Partition& lambda) {
    // nu_i ranges over [kappa_i, min(lambda_i, kappa_{i-1})].
    std::vector<Partition> out;
    if (!lambda.contains(kappa)) return out;
    int len = lambda.length();
    std::vector<int> cur(len, 0);
    auto rec = [&](auto&& self, int i) -> void {
        if (i > len) {
            out.emplace_back(cur);
            return;
        }
        int hi = i == 1 ? lambda.part(1) : std::min(lambda.part(i), kappa.part(i - 1));
        for (int v = kappa.part(i); v <= hi; ++v) {
            cur[i - 1] = v;
            self(self, i + 1);
        }
    };
    rec(rec, 1);
    return out;
}

std::vector<Partition> partitionsContaining(const Partition& mu, int maxExtra, int maxLength) {
    std::vector<Partition> out;
    for (int k = 0; k <= maxExtra; ++k)
        for (auto& lam : partitionsOf(mu.weight() + k, maxLength))
            if (lam.contains(mu)) out.push_back(lam);
    return out;
}

std::vector<Partition> subPartitions(const Partition& lambda) {
    std::vector<Partition> out;
    for (auto& mu : partitionsUpTo(lambda.weight(), lambda.length()))
        if (lambda.contains(mu)) out.push_back(mu);
    return out;
}

}  // namespace qthook
