#ifndef CODEA_DETAIL_WFG_TOOLKIT_HPP
#define CODEA_DETAIL_WFG_TOOLKIT_HPP

#include <cstddef>
#include <span>
#include <vector>

// Transformation and shape functions of the WFG toolkit. Inputs are expected
// in [0, 1]; results are snapped back into [0, 1] when rounding drifts them
// out by less than 1e-10.
namespace codea::wfg_toolkit
{

double correct_to_01(double a);

// Bias.
double b_poly(double y, double alpha);
double b_flat(double y, double a, double b, double c);
double b_param(double y, double u, double a, double b, double c);

// Shift.
double s_linear(double y, double a);
double s_decept(double y, double a, double b, double c);
double s_multi(double y, double a, double b, double c);

// Reduction.
double r_sum(std::span<const double> y, std::span<const double> w);
double r_nonsep(std::span<const double> y, std::size_t a);

// Shapes; `m` is 1-based in [1, x.size() + 1].
double linear(std::span<const double> x, std::size_t m);
double convex(std::span<const double> x, std::size_t m);
double concave(std::span<const double> x, std::size_t m);
double mixed(std::span<const double> x, double a, double alpha);
double disc(std::span<const double> x, double a, double alpha, double beta);

/// Evaluates WFG`problem` (1-9) on z, where z_i lies in [0, 2i] and the first
/// `k` entries are position parameters.
std::vector<double> evaluate(unsigned problem, std::span<const double> z, std::size_t k, std::size_t m);

} // namespace codea::wfg_toolkit

#endif
