#ifndef CODEA_CORE_HPP
#define CODEA_CORE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace codea
{

// Decision and objective vectors are plain 64-bit arrays. Minimization is
// assumed everywhere; maximization problems must be negated by the caller.
using DecisionVector = std::vector<double>;
using ObjectiveVector = std::vector<double>;

/// Raised when a caller breaks a documented precondition (length mismatch,
/// zero-norm direction, undersized population, ...).
class contract_violation : public std::logic_error
{
public:
    using std::logic_error::logic_error;
};

struct Individual {
    DecisionVector decision;
    ObjectiveVector objectives;
    // Annotations written by environmental selection. `normalized` is only
    // meaningful for the generation in which it was computed.
    std::optional<ObjectiveVector> normalized;
    std::optional<std::size_t> assoc;
    std::optional<std::size_t> front;
    std::optional<std::size_t> cod_rank;

    void clear_annotations()
    {
        normalized.reset();
        assoc.reset();
        front.reset();
        cod_rank.reset();
    }
};

struct Population {
    std::vector<Individual> members;
    std::size_t capacity = 0;

    [[nodiscard]] std::size_t size() const noexcept { return members.size(); }
    [[nodiscard]] bool empty() const noexcept { return members.empty(); }
    Individual &operator[](std::size_t i) { return members[i]; }
    const Individual &operator[](std::size_t i) const { return members[i]; }
};

/// The single random stream of a run.
///
/// Every draw is derived from the raw 64-bit output of mt19937_64 with
/// explicit arithmetic (no std::*_distribution), so a seed replays the same
/// sequence on every standard library.
class RngStream
{
public:
    explicit RngStream(std::uint64_t seed) : m_seed(seed), m_engine(seed) {}

    [[nodiscard]] std::uint64_t seed() const noexcept { return m_seed; }

    std::uint64_t next_u64() { return m_engine(); }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(m_engine() >> 11) * 0x1.0p-53; }

    /// Uniform double in [lo, hi].
    double uniform(double lo, double hi)
    {
        const double v = lo + (hi - lo) * uniform();
        return v > hi ? hi : v;
    }

    /// Unbiased integer in [0, n). n must be positive.
    std::size_t below(std::size_t n);

    /// Fisher-Yates shuffle driven by below().
    template <typename T>
    void shuffle(std::vector<T> &v)
    {
        for (std::size_t i = v.size(); i > 1; --i) {
            const std::size_t j = below(i);
            std::swap(v[i - 1], v[j]);
        }
    }

    /// k distinct indices from [0, n), returned in ascending order.
    std::vector<std::size_t> sample_without_replacement(std::size_t n, std::size_t k);

private:
    std::uint64_t m_seed;
    std::mt19937_64 m_engine;
};

/// Pareto dominance for minimization: a <= b everywhere and a < b somewhere.
bool dominates(std::span<const double> a, std::span<const double> b);

std::vector<ObjectiveVector> objectives_of(const Population &pop);

} // namespace codea

#endif
