#ifndef CODEA_SCALARIZE_HPP
#define CODEA_SCALARIZE_HPP

#include <span>

namespace codea
{

// Aggregation functions over normalized objective vectors (ideal point at the
// origin). Every function takes the reference direction as raw weights; only
// its direction matters for d1/d2, while g_nbi uses the weights as a point on
// the unit hyperplane.

struct PbiConfig {
    double theta = 5.0;
    double theta_axis = 1e6;
};

/// Signed scalar projection of f onto the ray through w. Not clamped.
double d1(std::span<const double> f, std::span<const double> w);

/// Perpendicular distance from f to the ray through w.
double d2(std::span<const double> f, std::span<const double> w);

/// True when w has exactly one nonzero component.
bool is_axis(std::span<const double> w);

/// d1 + theta * d2, with theta_axis on axis directions.
double g_pbi(std::span<const double> f, std::span<const double> w, const PbiConfig &cfg = {});

/// max_j (f_j - w_j).
double g_nbi(std::span<const double> f, std::span<const double> w);

/// g_nbi(f, w) + r * k_m * d2(f, w).
double g_cod(std::span<const double> f, std::span<const double> w, double r, double k_m);

/// Acute angle between f and the centre direction (1/m, ..., 1/m).
/// The zero vector is treated as lying on the centre line (angle 0).
double center_angle(std::span<const double> f);

} // namespace codea

#endif
