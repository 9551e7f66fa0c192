#include "fsprim/finsetcat.hpp"

#include <stdexcept>

#include "fsprim/partitions.hpp"

namespace fsprim {

std::string_view to_string(HomClass flavor)
{
    switch (flavor) {
    case HomClass::all: return "FA";
    case HomClass::surjection: return "FS";
    case HomClass::injection: return "FI";
    case HomClass::bijection: return "FB";
    }
    return "?";
}

FinMap::FinMap(int target_size, std::vector<int> values) : target_(target_size), values_(std::move(values))
{
    if (target_ < 0) throw std::invalid_argument("FinMap: negative target size");
    for (int v : values_)
        if (v < 0 || v >= target_) throw std::invalid_argument("FinMap: value out of range");
}

FinMap FinMap::identity(int n)
{
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i;
    return FinMap(n, std::move(v));
}

bool FinMap::is_surjective() const
{
    std::vector<bool> hit(static_cast<std::size_t>(target_), false);
    for (int v : values_) hit[static_cast<std::size_t>(v)] = true;
    for (bool h : hit)
        if (!h) return false;
    return true;
}

bool FinMap::is_injective() const
{
    std::vector<bool> hit(static_cast<std::size_t>(target_), false);
    for (int v : values_) {
        if (hit[static_cast<std::size_t>(v)]) return false;
        hit[static_cast<std::size_t>(v)] = true;
    }
    return true;
}

bool FinMap::belongs_to(HomClass flavor) const
{
    switch (flavor) {
    case HomClass::all: return true;
    case HomClass::surjection: return is_surjective();
    case HomClass::injection: return is_injective();
    case HomClass::bijection: return is_bijective();
    }
    return false;
}

std::string FinMap::to_string() const
{
    std::string out = "[";
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(values_[i] + 1);
    }
    return out + "]";
}

std::vector<FinMap> enumerate_hom(HomClass flavor, int b, int a)
{
    if (a < 0 || b < 0) throw std::invalid_argument("enumerate_hom: negative size");
    std::vector<FinMap> out;
    if (b > 0 && a == 0) return out;
    // Odometer over a^b value arrays, most significant digit first, which is
    // lexicographic order.
    std::vector<int> values(static_cast<std::size_t>(b), 0);
    while (true) {
        FinMap f(a, values);
        if (f.belongs_to(flavor)) out.push_back(std::move(f));
        int pos = b - 1;
        while (pos >= 0 && values[static_cast<std::size_t>(pos)] == a - 1) {
            values[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++values[static_cast<std::size_t>(pos)];
    }
    return out;
}

std::uint64_t stirling2(int n, int k)
{
    if (n < 0 || k < 0) return 0;
    std::vector<std::vector<std::uint64_t>> s(static_cast<std::size_t>(n) + 1,
                                              std::vector<std::uint64_t>(static_cast<std::size_t>(k) + 1, 0));
    s[0][0] = 1;
    for (std::size_t i = 1; i <= static_cast<std::size_t>(n); ++i)
        for (std::size_t j = 1; j <= static_cast<std::size_t>(k); ++j) s[i][j] = j * s[i - 1][j] + s[i - 1][j - 1];
    return s[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

std::uint64_t hom_dimension(HomClass flavor, int b, int a)
{
    if (a < 0 || b < 0) throw std::invalid_argument("hom_dimension: negative size");
    switch (flavor) {
    case HomClass::all: {
        std::uint64_t r = 1;
        for (int i = 0; i < b; ++i) r *= static_cast<std::uint64_t>(a);
        return r;
    }
    case HomClass::surjection: return factorial(a) * stirling2(b, a);
    case HomClass::injection: return b <= a ? factorial(a) / factorial(a - b) : 0;
    case HomClass::bijection: return a == b ? factorial(a) : 0;
    }
    return 0;
}

FinMap compose(const FinMap& g, const FinMap& f)
{
    if (g.source_size() != f.target_size())
        throw std::invalid_argument("compose: source of g (" + std::to_string(g.source_size()) +
                                    ") differs from target of f (" + std::to_string(f.target_size()) + ")");
    std::vector<int> v(f.values().size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = g(f.values()[i]);
    return FinMap(g.target_size(), std::move(v));
}

std::vector<FinMap> sections(const FinMap& f)
{
    if (!f.is_surjective()) throw std::invalid_argument("sections: map " + f.to_string() + " is not surjective");
    // A section picks one preimage per target point; the lexicographic order
    // of the value arrays is the product order of the sorted fibers.
    const int a = f.target_size();
    std::vector<std::vector<int>> fibers(static_cast<std::size_t>(a));
    for (int x = 0; x < f.source_size(); ++x) fibers[static_cast<std::size_t>(f(x))].push_back(x);
    std::vector<FinMap> out;
    std::vector<std::size_t> choice(static_cast<std::size_t>(a), 0);
    while (true) {
        std::vector<int> v(static_cast<std::size_t>(a));
        for (std::size_t y = 0; y < v.size(); ++y) v[y] = fibers[y][choice[y]];
        out.emplace_back(f.source_size(), std::move(v));
        int pos = a - 1;
        while (pos >= 0 && choice[static_cast<std::size_t>(pos)] + 1 == fibers[static_cast<std::size_t>(pos)].size()) {
            choice[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++choice[static_cast<std::size_t>(pos)];
    }
    return out;
}

HomBasis::HomBasis(HomClass flavor, int b, int a) : flavor_(flavor), b_(b), a_(a), maps_(enumerate_hom(flavor, b, a))
{
    std::uint64_t codes = hom_dimension(HomClass::all, b, a);
    if (codes > (1u << 26)) throw std::length_error("HomBasis: hom-set too large to index");
    lookup_.assign(static_cast<std::size_t>(codes), 0);
    for (std::size_t i = 0; i < maps_.size(); ++i) {
        std::size_t code = 0;
        for (int v : maps_[i].values()) code = code * static_cast<std::size_t>(a) + static_cast<std::size_t>(v);
        lookup_[code] = static_cast<std::uint32_t>(i + 1);
    }
}

std::size_t HomBasis::index_of(const std::vector<int>& values) const
{
    if (static_cast<int>(values.size()) != b_) return npos;
    std::size_t code = 0;
    for (int v : values) {
        if (v < 0 || v >= a_) return npos;
        code = code * static_cast<std::size_t>(a_) + static_cast<std::size_t>(v);
    }
    std::uint32_t slot = lookup_[code];
    return slot == 0 ? npos : slot - 1;
}

} // namespace fsprim
