#include <codea/core.hpp>

#include <algorithm>
#include <numeric>

namespace codea
{

std::size_t RngStream::below(std::size_t n)
{
    if (n == 0) {
        throw contract_violation("RngStream::below: n must be positive");
    }
    const auto bound = static_cast<std::uint64_t>(n);
    // Reject the low residue class so every value is equally likely.
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        const std::uint64_t x = m_engine();
        if (x >= threshold) {
            return static_cast<std::size_t>(x % bound);
        }
    }
}

std::vector<std::size_t> RngStream::sample_without_replacement(std::size_t n, std::size_t k)
{
    if (k > n) {
        throw contract_violation("sample_without_replacement: k exceeds n");
    }
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    // Partial Fisher-Yates: the first k slots end up holding the sample.
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t j = i + below(n - i);
        std::swap(idx[i], idx[j]);
    }
    idx.resize(k);
    std::sort(idx.begin(), idx.end());
    return idx;
}

bool dominates(std::span<const double> a, std::span<const double> b)
{
    if (a.size() != b.size()) {
        throw contract_violation("dominates: objective vectors differ in length");
    }
    bool strictly_better = false;
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (a[j] > b[j]) {
            return false;
        }
        if (a[j] < b[j]) {
            strictly_better = true;
        }
    }
    return strictly_better;
}

std::vector<ObjectiveVector> objectives_of(const Population &pop)
{
    std::vector<ObjectiveVector> out;
    out.reserve(pop.size());
    for (const auto &ind : pop.members) {
        out.push_back(ind.objectives);
    }
    return out;
}

} // namespace codea
