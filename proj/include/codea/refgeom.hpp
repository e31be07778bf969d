#ifndef CODEA_REFGEOM_HPP
#define CODEA_REFGEOM_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace codea
{

enum class Layer { Boundary, Inner };

std::string to_string(Layer layer);

/// A direction on the unit simplex. `r` (the per-point rotation factor) is
/// only defined for boundary points.
struct ReferencePoint {
    std::vector<double> w;
    Layer layer = Layer::Boundary;
    std::optional<double> r;
};

struct RotationFactor {
    double alpha;
    double beta;
    double r;
};

struct ReferenceSet {
    std::vector<ReferencePoint> points;
    std::size_t m = 0;
    // Objective-count rotation factor, kept apart from the per-point r so that
    // either can be zeroed independently.
    double k_m = 0.0;
    // Boundary points occupy [0, boundary_count) of `points`.
    std::size_t boundary_count = 0;

    [[nodiscard]] std::size_t size() const noexcept { return points.size(); }
};

/// Divisions used to lay out a reference set: a single lattice (h2 absent) or
/// a boundary lattice plus a shrunk inner lattice.
struct LatticeDivisions {
    std::size_t h1 = 0;
    std::optional<std::size_t> h2;
};

/// Number of compositions of `h` into `m` nonnegative parts, C(h+m-1, m-1).
std::size_t lattice_size(std::size_t m, std::size_t h);

/// Das-Dennis simplex lattice with step 1/h. Points are ordered
/// lexicographically, descending in the first coordinate, ties recursively.
std::vector<std::vector<double>> das_dennis(std::size_t m, std::size_t h);

/// Boundary lattice (h1) followed by an inner lattice (h2) mapped by
/// w' = w/2 + 1/(2m). No rotation factors are attached.
ReferenceSet two_layer(std::size_t m, std::size_t h1, std::size_t h2);

/// Single-layer set, every point tagged Boundary.
ReferenceSet single_layer(std::size_t m, std::size_t h);

/// alpha = 1 - m*min(w), beta = 2*(1 - max(w)), r = (alpha + beta)/2.
RotationFactor rotation_factor(const std::vector<double> &w);

/// Attaches r to every boundary point and k_m to the set.
ReferenceSet rotation_factors(ReferenceSet refset);

/// k_m = m / (1 + exp(-m (m - 5.5))).
double objective_rotation_factor(std::size_t m);

/// Default divisions for m in {3, 5, 8, 10, 15}; throws std::invalid_argument
/// otherwise.
LatticeDivisions default_divisions(std::size_t m);

/// Reference set with rotation factors applied. Without an override, m must
/// be one of the supported objective counts.
ReferenceSet build_reference_set(std::size_t m, std::optional<LatticeDivisions> divisions = std::nullopt);

} // namespace codea

#endif
