#include <codea/detail/wfg_toolkit.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace codea::wfg_toolkit
{

namespace
{

constexpr double pi = std::numbers::pi;
constexpr double epsilon = 1.0e-10;

std::vector<double> ones(std::size_t n) { return std::vector<double>(n, 1.0); }

std::span<const double> slice(const std::vector<double> &v, std::size_t head, std::size_t tail)
{
    return std::span<const double>(v).subspan(head, tail - head);
}

// Position groups: t_i = r(y[(i-1)k/(M-1), ik/(M-1))) for i < M.
template <typename Reduce>
std::vector<double> reduce_groups(std::size_t k, std::size_t m, std::size_t n_total, Reduce reduce)
{
    std::vector<double> t;
    t.reserve(m);
    for (std::size_t i = 1; i < m; ++i) {
        const std::size_t head = (i - 1) * k / (m - 1);
        const std::size_t tail = i * k / (m - 1);
        t.push_back(reduce(head, tail));
    }
    t.push_back(reduce(k, n_total));
    return t;
}

std::vector<double> uniform_sum_groups(const std::vector<double> &y, std::size_t k, std::size_t m)
{
    return reduce_groups(k, m, y.size(), [&](std::size_t h, std::size_t t) {
        const auto w = ones(t - h);
        return r_sum(slice(y, h, t), w);
    });
}

std::vector<double> nonsep_groups(const std::vector<double> &y, std::size_t k, std::size_t m)
{
    const std::size_t l = y.size() - k;
    return reduce_groups(k, m, y.size(), [&](std::size_t h, std::size_t t) {
        const std::size_t a = (h >= k) ? l : k / (m - 1);
        return r_nonsep(slice(y, h, t), a);
    });
}

std::vector<double> distance_linear_shift(std::vector<double> y, std::size_t k)
{
    for (std::size_t i = k; i < y.size(); ++i) {
        y[i] = s_linear(y[i], 0.35);
    }
    return y;
}

// WFG2/WFG3: distance parameters reduced pairwise with r_nonsep(., 2).
std::vector<double> pairwise_nonsep(const std::vector<double> &y, std::size_t k)
{
    const std::size_t l = y.size() - k;
    std::vector<double> out(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(k));
    for (std::size_t i = k + 1; i <= k + l / 2; ++i) {
        const std::size_t head = k + 2 * (i - k) - 2;
        out.push_back(r_nonsep(slice(y, head, head + 2), 2));
    }
    return out;
}

std::vector<double> param_dependent_bias_tail(const std::vector<double> &y, std::size_t upto)
{
    // b_param on y_i using the mean of y_{i+1..n}; indices >= upto untouched.
    std::vector<double> out = y;
    for (std::size_t i = 0; i < upto; ++i) {
        const auto rest = slice(y, i + 1, y.size());
        const auto w = ones(rest.size());
        out[i] = b_param(y[i], r_sum(rest, w), 0.98 / 49.98, 0.02, 50.0);
    }
    return out;
}

std::vector<double> to_x(const std::vector<double> &t, bool degenerate)
{
    const std::size_t m = t.size();
    std::vector<double> x(m);
    for (std::size_t i = 0; i + 1 < m; ++i) {
        const double a = (degenerate && i > 0) ? 0.0 : 1.0;
        x[i] = std::max(t[m - 1], a) * (t[i] - 0.5) + 0.5;
    }
    x[m - 1] = t[m - 1];
    return x;
}

enum class Shape { Wfg1, Wfg2, Linear, Concave };

std::vector<double> to_f(const std::vector<double> &x, Shape shape)
{
    const std::size_t m = x.size();
    const auto head = std::span<const double>(x).first(m - 1);
    std::vector<double> f(m);
    for (std::size_t j = 1; j <= m; ++j) {
        double h = 0.0;
        switch (shape) {
        case Shape::Wfg1:
            h = (j < m) ? convex(head, j) : mixed(head, 5.0, 1.0);
            break;
        case Shape::Wfg2:
            h = (j < m) ? convex(head, j) : disc(head, 5.0, 1.0, 1.0);
            break;
        case Shape::Linear:
            h = linear(head, j);
            break;
        case Shape::Concave:
            h = concave(head, j);
            break;
        }
        f[j - 1] = x[m - 1] + 2.0 * static_cast<double>(j) * h;
    }
    return f;
}

} // namespace

double correct_to_01(double a)
{
    if (a <= 0.0 && a >= -epsilon) {
        return 0.0;
    }
    if (a >= 1.0 && a <= 1.0 + epsilon) {
        return 1.0;
    }
    return a;
}

double b_poly(double y, double alpha) { return correct_to_01(std::pow(y, alpha)); }

double b_flat(double y, double a, double b, double c)
{
    const double tmp1 = std::min(0.0, std::floor(y - b)) * a * (b - y) / b;
    const double tmp2 = std::min(0.0, std::floor(c - y)) * (1.0 - a) * (y - c) / (1.0 - c);
    return correct_to_01(a + tmp1 - tmp2);
}

double b_param(double y, double u, double a, double b, double c)
{
    const double v = a - (1.0 - 2.0 * u) * std::abs(std::floor(0.5 - u) + a);
    return correct_to_01(std::pow(y, b + (c - b) * v));
}

double s_linear(double y, double a) { return correct_to_01(std::abs(y - a) / std::abs(std::floor(a - y) + a)); }

double s_decept(double y, double a, double b, double c)
{
    const double tmp1 = std::floor(y - a + b) * (1.0 - c + (a - b) / b) / (a - b);
    const double tmp2 = std::floor(a + b - y) * (1.0 - c + (1.0 - a - b) / b) / (1.0 - a - b);
    return correct_to_01(1.0 + (std::abs(y - a) - b) * (tmp1 + tmp2 + 1.0 / b));
}

double s_multi(double y, double a, double b, double c)
{
    const double tmp1 = std::abs(y - c) / (2.0 * (std::floor(c - y) + c));
    const double tmp2 = (4.0 * a + 2.0) * pi * (0.5 - tmp1);
    return correct_to_01((1.0 + std::cos(tmp2) + 4.0 * b * tmp1 * tmp1) / (b + 2.0));
}

double r_sum(std::span<const double> y, std::span<const double> w)
{
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i) {
        num += w[i] * y[i];
        den += w[i];
    }
    return correct_to_01(num / den);
}

double r_nonsep(std::span<const double> y, std::size_t a)
{
    const std::size_t n = y.size();
    double num = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        num += y[j];
        for (std::size_t k = 0; k + 2 <= a; ++k) {
            num += std::abs(y[j] - y[(j + k + 1) % n]);
        }
    }
    const double ad = static_cast<double>(a);
    const double tmp = std::ceil(ad / 2.0);
    const double den = static_cast<double>(n) * tmp * (1.0 + 2.0 * ad - 2.0 * tmp) / ad;
    return correct_to_01(num / den);
}

double linear(std::span<const double> x, std::size_t m)
{
    const std::size_t big_m = x.size() + 1;
    double result = 1.0;
    for (std::size_t i = 1; i <= big_m - m; ++i) {
        result *= x[i - 1];
    }
    if (m != 1) {
        result *= 1.0 - x[big_m - m];
    }
    return correct_to_01(result);
}

double convex(std::span<const double> x, std::size_t m)
{
    const std::size_t big_m = x.size() + 1;
    double result = 1.0;
    for (std::size_t i = 1; i <= big_m - m; ++i) {
        result *= 1.0 - std::cos(x[i - 1] * pi / 2.0);
    }
    if (m != 1) {
        result *= 1.0 - std::sin(x[big_m - m] * pi / 2.0);
    }
    return correct_to_01(result);
}

double concave(std::span<const double> x, std::size_t m)
{
    const std::size_t big_m = x.size() + 1;
    double result = 1.0;
    for (std::size_t i = 1; i <= big_m - m; ++i) {
        result *= std::sin(x[i - 1] * pi / 2.0);
    }
    if (m != 1) {
        result *= std::cos(x[big_m - m] * pi / 2.0);
    }
    return correct_to_01(result);
}

double mixed(std::span<const double> x, double a, double alpha)
{
    const double tmp = 2.0 * a * pi;
    return correct_to_01(std::pow(1.0 - x[0] - std::cos(tmp * x[0] + pi / 2.0) / tmp, alpha));
}

double disc(std::span<const double> x, double a, double alpha, double beta)
{
    const double tmp = a * std::pow(x[0], beta) * pi;
    return correct_to_01(1.0 - std::pow(x[0], alpha) * std::pow(std::cos(tmp), 2.0));
}

std::vector<double> evaluate(unsigned problem, std::span<const double> z, std::size_t k, std::size_t m)
{
    const std::size_t n = z.size();
    if (m < 2 || k == 0 || k >= n || k % (m - 1) != 0) {
        throw std::invalid_argument("WFG: inconsistent position/objective counts");
    }
    std::vector<double> y(n);
    for (std::size_t i = 0; i < n; ++i) {
        y[i] = correct_to_01(z[i] / (2.0 * static_cast<double>(i + 1)));
    }

    switch (problem) {
    case 1: {
        y = distance_linear_shift(std::move(y), k);
        for (std::size_t i = k; i < n; ++i) {
            y[i] = b_flat(y[i], 0.8, 0.75, 0.85);
        }
        for (double &v : y) {
            v = b_poly(v, 0.02);
        }
        std::vector<double> w(n);
        for (std::size_t i = 0; i < n; ++i) {
            w[i] = 2.0 * static_cast<double>(i + 1);
        }
        const auto t = reduce_groups(k, m, n, [&](std::size_t h, std::size_t tl) {
            return r_sum(slice(y, h, tl), slice(w, h, tl));
        });
        return to_f(to_x(t, false), Shape::Wfg1);
    }
    case 2:
    case 3: {
        if ((n - k) % 2 != 0) {
            throw std::invalid_argument("WFG2/WFG3 need an even number of distance parameters");
        }
        y = pairwise_nonsep(distance_linear_shift(std::move(y), k), k);
        const auto t = uniform_sum_groups(y, k, m);
        return problem == 2 ? to_f(to_x(t, false), Shape::Wfg2) : to_f(to_x(t, true), Shape::Linear);
    }
    case 4:
        for (double &v : y) {
            v = s_multi(v, 30.0, 10.0, 0.35);
        }
        return to_f(to_x(uniform_sum_groups(y, k, m), false), Shape::Concave);
    case 5:
        for (double &v : y) {
            v = s_decept(v, 0.35, 0.001, 0.05);
        }
        return to_f(to_x(uniform_sum_groups(y, k, m), false), Shape::Concave);
    case 6:
        y = distance_linear_shift(std::move(y), k);
        return to_f(to_x(nonsep_groups(y, k, m), false), Shape::Concave);
    case 7:
        y = distance_linear_shift(param_dependent_bias_tail(y, k), k);
        return to_f(to_x(uniform_sum_groups(y, k, m), false), Shape::Concave);
    case 8: {
        std::vector<double> b = y;
        for (std::size_t i = k; i < n; ++i) {
            const auto head = slice(y, 0, i);
            const auto w = ones(i);
            b[i] = b_param(y[i], r_sum(head, w), 0.98 / 49.98, 0.02, 50.0);
        }
        y = distance_linear_shift(std::move(b), k);
        return to_f(to_x(uniform_sum_groups(y, k, m), false), Shape::Concave);
    }
    case 9: {
        y = param_dependent_bias_tail(y, n - 1);
        for (std::size_t i = 0; i < n; ++i) {
            y[i] = (i < k) ? s_decept(y[i], 0.35, 0.001, 0.05) : s_multi(y[i], 30.0, 95.0, 0.35);
        }
        return to_f(to_x(nonsep_groups(y, k, m), false), Shape::Concave);
    }
    default:
        throw std::invalid_argument("WFG problem index must be in 1..9, got " + std::to_string(problem));
    }
}

} // namespace codea::wfg_toolkit
