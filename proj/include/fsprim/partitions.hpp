#pragma once

// Integer partitions and cycle types.
//
// Canonical order (used by every report and every formal-sum serialization):
// graded by weight, and reverse-lexicographic within a weight, so that
// partitions_of(3) is (3), (2,1), (1,1,1).

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace fsprim {

class Partition {
public:
    Partition() = default;
    /// Throws std::invalid_argument unless parts are positive and weakly decreasing.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// (n) for n > 0, the empty partition for n == 0.
    static Partition row(int n);
    /// (1^n).
    static Partition column(int n);
    /// The hook (arm, 1^leg); arm must be positive.
    static Partition hook(int arm, int leg);

    [[nodiscard]] const std::vector<int>& parts() const noexcept { return parts_; }
    [[nodiscard]] int weight() const noexcept { return weight_; }
    [[nodiscard]] std::size_t length() const noexcept { return parts_.size(); }
    [[nodiscard]] bool empty() const noexcept { return parts_.empty(); }
    /// Part i, or 0 past the end.
    [[nodiscard]] int part(std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

    /// "[2,1]", "[]".
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    /// Canonical order: smaller weight first, then reverse-lexicographic.
    friend std::strong_ordering operator<=>(const Partition& lhs, const Partition& rhs);

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

/// A partition read as the cycle lengths of a conjugacy class of S_n.
using CycleType = Partition;

[[nodiscard]] const std::vector<Partition>& partitions_of(int n);
[[nodiscard]] Partition conjugate(const Partition& lambda);
/// Number of standard Young tableaux of shape lambda (hook-length formula).
[[nodiscard]] std::uint64_t irrep_dimension(const Partition& lambda);
/// Order of the centralizer of a permutation of cycle type mu.
[[nodiscard]] std::uint64_t centralizer_order(const CycleType& mu);
/// n!/z_mu.
[[nodiscard]] std::uint64_t class_size(const CycleType& mu);
[[nodiscard]] std::uint64_t factorial(int n);
[[nodiscard]] std::uint64_t binomial(int n, int k);

/// Position of lambda in partitions_of(lambda.weight()).
[[nodiscard]] std::size_t partition_index(const Partition& lambda);

} // namespace fsprim
