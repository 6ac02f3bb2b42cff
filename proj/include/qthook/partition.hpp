#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace qthook {

// Weakly decreasing positive parts; part(i) is 1-based and returns 0 past the end.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);

    static Partition parse(std::string_view text);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int weight() const;
    bool empty() const { return parts_.empty(); }
    int part(int i) const { return i >= 1 && i <= length() ? parts_[i - 1] : 0; }

    Partition conjugate() const;
    int oddRows() const;
    int oddColumns() const { return conjugate().oddRows(); }
    bool isStrict() const;

    // Cell (i,j), 1-based, must lie in the diagram.
    int arm(int i, int j) const { return part(i) - j; }
    int leg(int i, int j) const;

    bool contains(const Partition& mu) const;
    bool dominates(const Partition& mu) const;

    std::string toString() const;

    auto operator<=>(const Partition&) const = default;
    bool operator==(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

// lambda/mu is a horizontal strip: lambda_1 >= mu_1 >= lambda_2 >= mu_2 >= ...
bool isHorizontalStrip(const Partition& lambda, const Partition& mu);

std::vector<Partition> partitionsOf(int n, int maxLength = -1, int maxPart = -1);
std::vector<Partition> partitionsUpTo(int n, int maxLength = -1);
std::vector<Partition> strictPartitionsOf(int n);

// All lambda with lambda/mu a horizontal strip of size r and length(lambda) <= maxLength.
std::vector<Partition> addHorizontalStrip(const Partition& mu, int r, int maxLength = -1);
// All nu with lambda/nu a horizontal strip of size r.
std::vector<Partition> removeHorizontalStrip(const Partition& lambda, int r);
// All nu with lambda/nu a horizontal strip (any size).
std::vector<Partition> removeAnyHorizontalStrip(const Partition& lambda);

// All nu with kappa ⊆ nu ⊆ lambda and nu/kappa a horizontal strip.
std::vector<Partition> stripsBetween(const Partition& kappa, const Partition& lambda);
// All lambda ⊇ mu with |lambda| - |mu| <= maxExtra.
std::vector<Partition> partitionsContaining(const Partition& mu, int maxExtra, int maxLength = -1);
// All mu ⊆ lambda, including the empty partition and lambda itself.
std::vector<Partition> subPartitions(const Partition& lambda);

}  // namespace qthook
