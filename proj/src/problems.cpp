#include <codea/problems.hpp>

#include <codea/detail/wfg_toolkit.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace codea
{

namespace
{

constexpr double half_pi = std::numbers::pi / 2.0;

void check_objectives(std::size_t m)
{
    if (m < 2) {
        throw std::invalid_argument("benchmark problems need at least 2 objectives, got m=" + std::to_string(m));
    }
}

// g of DTLZ1/DTLZ3 over the distance variables x[m-1..n).
double rastrigin_g(std::span<const double> x, std::size_t m)
{
    const auto tail = x.subspan(m - 1);
    double s = 0.0;
    for (double v : tail) {
        const double d = v - 0.5;
        s += d * d - std::cos(20.0 * std::numbers::pi * d);
    }
    return 100.0 * (static_cast<double>(tail.size()) + s);
}

double sphere_g(std::span<const double> x, std::size_t m)
{
    double s = 0.0;
    for (double v : x.subspan(m - 1)) {
        s += (v - 0.5) * (v - 0.5);
    }
    return s;
}

ObjectiveVector linear_front(std::span<const double> x, std::size_t m, double g)
{
    ObjectiveVector f(m, 0.5 * (1.0 + g));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j + 1 < m - i; ++j) {
            f[i] *= x[j];
        }
        if (i > 0) {
            f[i] *= 1.0 - x[m - 1 - i];
        }
    }
    return f;
}

ObjectiveVector spherical_front(std::span<const double> x, std::size_t m, double g, double alpha)
{
    ObjectiveVector f(m, 1.0 + g);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j + 1 < m - i; ++j) {
            f[i] *= std::cos(std::pow(x[j], alpha) * half_pi);
        }
        if (i > 0) {
            f[i] *= std::sin(std::pow(x[m - 1 - i], alpha) * half_pi);
        }
    }
    return f;
}

ObjectiveVector dtlz_eval(unsigned k, std::span<const double> x, std::size_t m)
{
    switch (k) {
    case 1:
        return linear_front(x, m, rastrigin_g(x, m));
    case 2:
        return spherical_front(x, m, sphere_g(x, m), 1.0);
    case 3:
        return spherical_front(x, m, rastrigin_g(x, m), 1.0);
    default:
        return spherical_front(x, m, sphere_g(x, m), 100.0);
    }
}

void convexify(ObjectiveVector &f)
{
    const std::size_t m = f.size();
    for (std::size_t j = 0; j + 1 < m; ++j) {
        f[j] = std::pow(f[j], 4.0);
    }
    f[m - 1] = f[m - 1] * f[m - 1];
}

std::string lower(std::string s)
{
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

} // namespace

ProblemDef dtlz(unsigned k, std::size_t m)
{
    if (k < 1 || k > 4) {
        throw std::invalid_argument("DTLZ index must be in 1..4, got " + std::to_string(k));
    }
    check_objectives(m);
    ProblemDef p;
    p.name = "DTLZ" + std::to_string(k);
    p.family = Family::Dtlz;
    p.index = k;
    p.m = m;
    p.n = m - 1 + (k == 1 ? 5 : 10);
    p.lower.assign(p.n, 0.0);
    p.upper.assign(p.n, 1.0);
    p.evaluate = [k, m](std::span<const double> x) { return dtlz_eval(k, x, m); };
    std::tie(p.hv_ideal, p.hv_nadir) = known_hv_bounds(p);
    return p;
}

ProblemDef convex_dtlz(unsigned k, std::size_t m)
{
    ProblemDef p = dtlz(k, m);
    p.name = "CDTLZ" + std::to_string(k);
    p.family = Family::ConvexDtlz;
    p.evaluate = [k, m](std::span<const double> x) {
        ObjectiveVector f = dtlz_eval(k, x, m);
        convexify(f);
        return f;
    };
    std::tie(p.hv_ideal, p.hv_nadir) = known_hv_bounds(p);
    return p;
}

ProblemDef wfg(unsigned k, std::size_t m)
{
    if (k < 1 || k > 9) {
        throw std::invalid_argument("WFG index must be in 1..9, got " + std::to_string(k));
    }
    check_objectives(m);
    const std::size_t position = 2 * (m - 1);
    const std::size_t distance = 20;
    ProblemDef p;
    p.name = "WFG" + std::to_string(k);
    p.family = Family::Wfg;
    p.index = k;
    p.m = m;
    p.n = position + distance;
    p.lower.assign(p.n, 0.0);
    p.upper.resize(p.n);
    for (std::size_t i = 0; i < p.n; ++i) {
        p.upper[i] = 2.0 * static_cast<double>(i + 1);
    }
    p.evaluate = [k, position, m](std::span<const double> z) { return wfg_toolkit::evaluate(k, z, position, m); };
    std::tie(p.hv_ideal, p.hv_nadir) = known_hv_bounds(p);
    return p;
}

ProblemDef make_problem(const std::string &id, std::size_t m)
{
    const std::string s = lower(id);
    auto parse_index = [&](std::size_t prefix) -> unsigned {
        const std::string digits = s.substr(prefix);
        if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); })
            || digits.size() > 2) {
            throw std::invalid_argument("unknown problem id '" + id + "'");
        }
        return static_cast<unsigned>(std::stoul(digits));
    };
    if (s.rfind("cdtlz", 0) == 0) {
        return convex_dtlz(parse_index(5), m);
    }
    if (s.rfind("dtlz", 0) == 0) {
        return dtlz(parse_index(4), m);
    }
    if (s.rfind("wfg", 0) == 0) {
        return wfg(parse_index(3), m);
    }
    throw std::invalid_argument("unknown problem id '" + id + "'");
}

std::pair<ObjectiveVector, ObjectiveVector> known_hv_bounds(const ProblemDef &problem)
{
    const std::size_t m = problem.m;
    ObjectiveVector ideal(m, 0.0);
    ObjectiveVector nadir(m, 1.0);
    switch (problem.family) {
    case Family::Dtlz:
        if (problem.index == 1) {
            nadir.assign(m, 0.5);
        }
        break;
    case Family::ConvexDtlz:
        if (problem.index == 1) {
            nadir.assign(m, 0.5);
        }
        convexify(nadir);
        break;
    case Family::Wfg:
        for (std::size_t j = 0; j < m; ++j) {
            nadir[j] = 2.0 * static_cast<double>(j + 1);
        }
        break;
    case Family::Custom:
        if (problem.hv_ideal.size() == m && problem.hv_nadir.size() == m) {
            return {problem.hv_ideal, problem.hv_nadir};
        }
        throw std::invalid_argument("no known hypervolume bounds for problem '" + problem.name + "'");
    }
    return {ideal, nadir};
}

std::string problem_id(const ProblemDef &problem) { return lower(problem.name); }

} // namespace codea
