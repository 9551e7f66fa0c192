#pragma once

// Skeletal categories of finite sets: FA (all maps), FS (surjections),
// FI (injections), FB (bijections). Objects are sizes n standing for
// {1, ..., n}; morphisms are value arrays.
//
// enumerate_hom lists a hom-set in lexicographic order of the value array;
// that order is the canonical basis of the linearized hom-space everywhere
// else in the library.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace fsprim {

enum class HomClass { all, surjection, injection, bijection };

[[nodiscard]] std::string_view to_string(HomClass flavor);

/// A map {1..source} -> {1..target}. Values are stored 0-based (value i
/// stands for element i+1); to_string prints the 1-based form.
class FinMap {
public:
    FinMap() = default;
    /// Throws std::invalid_argument if a value is out of range.
    FinMap(int target_size, std::vector<int> values);

    static FinMap identity(int n);

    [[nodiscard]] int source_size() const noexcept { return static_cast<int>(values_.size()); }
    [[nodiscard]] int target_size() const noexcept { return target_; }
    [[nodiscard]] const std::vector<int>& values() const noexcept { return values_; }
    [[nodiscard]] int operator()(int x) const { return values_[static_cast<std::size_t>(x)]; }

    [[nodiscard]] bool is_surjective() const;
    [[nodiscard]] bool is_injective() const;
    [[nodiscard]] bool is_bijective() const { return source_size() == target_size() && is_injective(); }
    [[nodiscard]] bool belongs_to(HomClass flavor) const;

    /// "[2,1,2]" in 1-based values.
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const FinMap&, const FinMap&) = default;
    friend auto operator<=>(const FinMap&, const FinMap&) = default;

private:
    int target_ = 0;
    std::vector<int> values_;
};

/// All maps b -> a of the given flavor in lexicographic order.
[[nodiscard]] std::vector<FinMap> enumerate_hom(HomClass flavor, int b, int a);
/// Closed-form size of the hom-set b -> a.
[[nodiscard]] std::uint64_t hom_dimension(HomClass flavor, int b, int a);
[[nodiscard]] std::uint64_t stirling2(int n, int k);

/// g o f. Throws std::invalid_argument unless source(g) == target(f).
[[nodiscard]] FinMap compose(const FinMap& g, const FinMap& f);
/// All s with f o s = id, lexicographic. Throws std::invalid_argument unless f is surjective.
[[nodiscard]] std::vector<FinMap> sections(const FinMap& f);

/// Canonical basis of a hom-set together with a constant-time index lookup.
class HomBasis {
public:
    HomBasis(HomClass flavor, int b, int a);

    [[nodiscard]] HomClass flavor() const noexcept { return flavor_; }
    [[nodiscard]] int source_size() const noexcept { return b_; }
    [[nodiscard]] int target_size() const noexcept { return a_; }
    [[nodiscard]] std::size_t size() const noexcept { return maps_.size(); }
    [[nodiscard]] const std::vector<FinMap>& maps() const noexcept { return maps_; }
    [[nodiscard]] const FinMap& operator[](std::size_t i) const { return maps_[i]; }

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    /// Index of the map with these values, or npos if it is not in the hom-set.
    [[nodiscard]] std::size_t index_of(const std::vector<int>& values) const;
    [[nodiscard]] std::size_t index_of(const FinMap& f) const { return index_of(f.values()); }

private:
    HomClass flavor_;
    int b_;
    int a_;
    std::vector<FinMap> maps_;
    std::vector<std::uint32_t> lookup_; // base-a code -> index + 1, 0 if absent
};

} // namespace fsprim
