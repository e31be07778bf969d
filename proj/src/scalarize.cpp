#include <codea/scalarize.hpp>

#include <codea/core.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

namespace codea
{

namespace
{

void check_pair(std::span<const double> f, std::span<const double> w, const char *who)
{
    if (f.size() != w.size()) {
        throw contract_violation(std::string(who) + ": objective and reference lengths differ");
    }
}

double norm_of(std::span<const double> w, const char *who)
{
    double s = 0.0;
    for (double v : w) {
        s += v * v;
    }
    const double n = std::sqrt(s);
    if (!(n > 0.0)) {
        throw contract_violation(std::string(who) + ": reference direction has zero norm");
    }
    return n;
}

double dot(std::span<const double> a, std::span<const double> b)
{
    double s = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        s += a[j] * b[j];
    }
    return s;
}

} // namespace

double d1(std::span<const double> f, std::span<const double> w)
{
    check_pair(f, w, "d1");
    return dot(f, w) / norm_of(w, "d1");
}

double d2(std::span<const double> f, std::span<const double> w)
{
    check_pair(f, w, "d2");
    (void)norm_of(w, "d2");
    const double t = dot(f, w) / dot(w, w);
    double s = 0.0;
    for (std::size_t j = 0; j < f.size(); ++j) {
        const double diff = f[j] - t * w[j];
        s += diff * diff;
    }
    return std::sqrt(s);
}

bool is_axis(std::span<const double> w)
{
    return std::count_if(w.begin(), w.end(), [](double v) { return v != 0.0; }) == 1;
}

double g_pbi(std::span<const double> f, std::span<const double> w, const PbiConfig &cfg)
{
    const double theta = is_axis(w) ? cfg.theta_axis : cfg.theta;
    return d1(f, w) + theta * d2(f, w);
}

double g_nbi(std::span<const double> f, std::span<const double> w)
{
    check_pair(f, w, "g_nbi");
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < f.size(); ++j) {
        best = std::max(best, f[j] - w[j]);
    }
    return best;
}

double g_cod(std::span<const double> f, std::span<const double> w, double r, double k_m)
{
    return g_nbi(f, w) + r * k_m * d2(f, w);
}

double center_angle(std::span<const double> f)
{
    double s = 0.0;
    double ss = 0.0;
    for (double v : f) {
        s += v;
        ss += v * v;
    }
    if (ss == 0.0) {
        return 0.0;
    }
    // lambda = (1/m,...,1/m): f.lambda / (|f| |lambda|) = sum(f) / (|f| sqrt(m)).
    const double c = std::abs(s) / (std::sqrt(ss) * std::sqrt(static_cast<double>(f.size())));
    return std::acos(std::min(1.0, c));
}

} // namespace codea
