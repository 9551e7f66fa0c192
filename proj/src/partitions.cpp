#include "fsprim/partitions.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace fsprim {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("Partition: parts must be weakly decreasing");
        weight_ += parts_[i];
    }
}

Partition Partition::row(int n)
{
    if (n < 0) throw std::invalid_argument("Partition::row: negative size");
    return n == 0 ? Partition() : Partition(std::vector<int>{n});
}

Partition Partition::column(int n)
{
    if (n < 0) throw std::invalid_argument("Partition::column: negative size");
    return Partition(std::vector<int>(static_cast<std::size_t>(n), 1));
}

Partition Partition::hook(int arm, int leg)
{
    if (arm <= 0 || leg < 0) throw std::invalid_argument("Partition::hook: need arm > 0, leg >= 0");
    std::vector<int> parts{arm};
    parts.insert(parts.end(), static_cast<std::size_t>(leg), 1);
    return Partition(std::move(parts));
}

std::string Partition::to_string() const
{
    std::string out = "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(parts_[i]);
    }
    return out + "]";
}

std::strong_ordering operator<=>(const Partition& lhs, const Partition& rhs)
{
    if (auto c = lhs.weight_ <=> rhs.weight_; c != 0) return c;
    // Reverse lexicographic: the larger sequence comes first.
    return std::lexicographical_compare_three_way(rhs.parts_.begin(), rhs.parts_.end(), lhs.parts_.begin(),
                                                  lhs.parts_.end());
}

namespace {

void generate(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out)
{
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int k = std::min(remaining, max_part); k >= 1; --k) {
        prefix.push_back(k);
        generate(remaining - k, k, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

const std::vector<Partition>& partitions_of(int n)
{
    if (n < 0) throw std::invalid_argument("partitions_of: negative weight");
    static std::mutex mutex;
    static std::map<int, std::vector<Partition>> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<Partition> out;
    std::vector<int> prefix;
    generate(n, n, prefix, out);
    return cache.emplace(n, std::move(out)).first->second;
}

Partition conjugate(const Partition& lambda)
{
    std::vector<int> parts;
    for (int j = 1; j <= lambda.part(0); ++j) {
        int count = 0;
        for (int p : lambda.parts())
            if (p >= j) ++count;
        parts.push_back(count);
    }
    return Partition(std::move(parts));
}

std::uint64_t factorial(int n)
{
    if (n < 0 || n > 20) throw std::out_of_range("factorial: argument out of range");
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

std::uint64_t binomial(int n, int k)
{
    if (k < 0 || n < 0 || k > n) return 0;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return r;
}

std::uint64_t irrep_dimension(const Partition& lambda)
{
    Partition conj = conjugate(lambda);
    std::uint64_t hooks = 1;
    for (std::size_t i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda.parts()[i]; ++j) {
            int arm = lambda.parts()[i] - j - 1;
            int leg = conj.parts()[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1;
            hooks *= static_cast<std::uint64_t>(arm + leg + 1);
        }
    return factorial(lambda.weight()) / hooks;
}

std::uint64_t centralizer_order(const CycleType& mu)
{
    std::uint64_t z = 1;
    std::size_t i = 0;
    while (i < mu.length()) {
        int k = mu.parts()[i];
        int m = 0;
        while (i < mu.length() && mu.parts()[i] == k) {
            ++m;
            ++i;
        }
        for (int r = 0; r < m; ++r) z *= static_cast<std::uint64_t>(k);
        z *= factorial(m);
    }
    return z;
}

std::uint64_t class_size(const CycleType& mu) { return factorial(mu.weight()) / centralizer_order(mu); }

std::size_t partition_index(const Partition& lambda)
{
    const auto& all = partitions_of(lambda.weight());
    auto it = std::lower_bound(all.begin(), all.end(), lambda);
    if (it == all.end() || *it != lambda) throw std::logic_error("partition_index: not found");
    return static_cast<std::size_t>(it - all.begin());
}

} // namespace fsprim
