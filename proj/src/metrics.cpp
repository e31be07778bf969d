#include <codea/metrics.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace codea
{

namespace
{

using Point = std::vector<double>;

// Hypervolume of `pts` (all strictly inside the box) in their first `d`
// coordinates.
double sweep(std::vector<Point> pts, std::span<const double> ref, std::size_t d)
{
    if (pts.empty()) {
        return 0.0;
    }
    if (d == 1) {
        double lo = ref[0];
        for (const auto &p : pts) {
            lo = std::min(lo, p[0]);
        }
        return ref[0] - lo;
    }
    if (d == 2) {
        std::sort(pts.begin(), pts.end(), [](const Point &a, const Point &b) {
            return a[0] != b[0] ? a[0] < b[0] : a[1] < b[1];
        });
        double vol = 0.0;
        double ceiling = ref[1];
        for (const auto &p : pts) {
            if (p[1] < ceiling) {
                vol += (ref[0] - p[0]) * (ceiling - p[1]);
                ceiling = p[1];
            }
        }
        return vol;
    }
    const std::size_t last = d - 1;
    std::sort(pts.begin(), pts.end(), [last](const Point &a, const Point &b) { return a[last] < b[last]; });
    double vol = 0.0;
    std::vector<Point> active;
    active.reserve(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        // Keep the slice set free of points weakly dominated in d-1 coordinates.
        const Point &p = pts[i];
        auto covers = [last](const Point &a, const Point &b) {
            for (std::size_t j = 0; j < last; ++j) {
                if (a[j] > b[j]) {
                    return false;
                }
            }
            return true;
        };
        const bool redundant = std::any_of(active.begin(), active.end(), [&](const Point &a) { return covers(a, p); });
        if (!redundant) {
            std::erase_if(active, [&](const Point &a) { return covers(p, a); });
            active.push_back(p);
        }
        const double next = (i + 1 < pts.size()) ? pts[i + 1][last] : ref[last];
        if (next > p[last]) {
            vol += sweep(active, ref, last) * (next - p[last]);
        }
    }
    return vol;
}

std::vector<Point> contributing(std::span<const ObjectiveVector> points, std::span<const double> ref)
{
    std::vector<Point> out;
    for (const auto &p : points) {
        if (p.size() != ref.size()) {
            throw contract_violation("hypervolume: point and reference differ in length");
        }
        bool inside = true;
        for (std::size_t j = 0; j < p.size(); ++j) {
            if (!(p[j] < ref[j])) {
                inside = false;
                break;
            }
        }
        if (inside) {
            out.push_back(p);
        }
    }
    return out;
}

double median_sorted(const std::vector<double> &v)
{
    const std::size_t n = v.size();
    return n % 2 == 1 ? v[n / 2] : (v[n / 2 - 1] + v[n / 2]) / 2.0;
}

} // namespace

double hypervolume_exact(std::span<const ObjectiveVector> points, std::span<const double> ref)
{
    auto pts = contributing(points, ref);
    return sweep(std::move(pts), ref, ref.size());
}

McEstimate hypervolume_mc(std::span<const ObjectiveVector> points, std::span<const double> ref, std::size_t samples,
                          RngStream &rng)
{
    auto pts = contributing(points, ref);
    if (pts.empty() || samples == 0) {
        return {};
    }
    // Points dominated by another contribute no extra volume.
    std::vector<Point> front;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        bool dominated = false;
        for (std::size_t k = 0; k < pts.size() && !dominated; ++k) {
            dominated = k != i && (dominates(pts[k], pts[i]) || (k < i && pts[k] == pts[i]));
        }
        if (!dominated) {
            front.push_back(pts[i]);
        }
    }
    const std::size_t m = ref.size();
    Point lo(m, 0.0);
    for (std::size_t j = 0; j < m; ++j) {
        lo[j] = front[0][j];
        for (const auto &p : front) {
            lo[j] = std::min(lo[j], p[j]);
        }
    }
    double box = 1.0;
    for (std::size_t j = 0; j < m; ++j) {
        box *= ref[j] - lo[j];
    }

    std::size_t hits = 0;
    Point u(m);
    for (std::size_t s = 0; s < samples; ++s) {
        for (std::size_t j = 0; j < m; ++j) {
            u[j] = lo[j] + (ref[j] - lo[j]) * rng.uniform();
        }
        for (const auto &p : front) {
            bool weakly = true;
            for (std::size_t j = 0; j < m; ++j) {
                if (p[j] > u[j]) {
                    weakly = false;
                    break;
                }
            }
            if (weakly) {
                ++hits;
                break;
            }
        }
    }
    const double n = static_cast<double>(samples);
    const double frac = static_cast<double>(hits) / n;
    return {box * frac, box * std::sqrt(frac * (1.0 - frac) / n)};
}

double normalized_hv(std::span<const ObjectiveVector> objectives, std::span<const double> ideal,
                     std::span<const double> nadir, const HvOptions &opts)
{
    const std::size_t m = ideal.size();
    if (nadir.size() != m || m == 0) {
        throw std::invalid_argument("normalized_hv: ideal and nadir differ in length");
    }
    for (std::size_t j = 0; j < m; ++j) {
        if (!(nadir[j] > ideal[j])) {
            throw std::invalid_argument("normalized_hv: degenerate ideal/nadir in objective " + std::to_string(j + 1));
        }
    }
    std::vector<ObjectiveVector> scaled;
    scaled.reserve(objectives.size());
    for (const auto &f : objectives) {
        if (f.size() != m) {
            throw contract_violation("normalized_hv: objective vector has the wrong length");
        }
        ObjectiveVector g(m);
        for (std::size_t j = 0; j < m; ++j) {
            g[j] = (f[j] - ideal[j]) / (nadir[j] - ideal[j]);
        }
        scaled.push_back(std::move(g));
    }
    const std::vector<double> ref(m, hv_reference);
    const double divisor = std::pow(hv_reference, static_cast<double>(m));
    if (m <= opts.exact_max_m) {
        return hypervolume_exact(scaled, ref) / divisor;
    }
    RngStream rng(opts.metric_seed);
    return hypervolume_mc(scaled, ref, opts.samples, rng).volume / divisor;
}

double normalized_hv(std::span<const ObjectiveVector> objectives, const ProblemDef &problem, const HvOptions &opts)
{
    const auto [ideal, nadir] = known_hv_bounds(problem);
    return normalized_hv(objectives, ideal, nadir, opts);
}

double normalized_hv(const Population &pop, const ProblemDef &problem, const HvOptions &opts)
{
    const auto objs = objectives_of(pop);
    return normalized_hv(objs, problem, opts);
}

std::string verdict_symbol(Verdict v)
{
    switch (v) {
    case Verdict::Better:
        return "+";
    case Verdict::Worse:
        return "-";
    case Verdict::Similar:
        break;
    }
    return "≈";
}

Verdict parse_verdict(const std::string &s)
{
    if (s == "+") {
        return Verdict::Better;
    }
    if (s == "-") {
        return Verdict::Worse;
    }
    if (s == "≈") {
        return Verdict::Similar;
    }
    throw std::invalid_argument("unknown verdict '" + s + "'");
}

WilcoxonResult wilcoxon_rank_sum(std::span<const double> a, std::span<const double> b, double alpha)
{
    if (a.size() < 5 || b.size() < 5) {
        throw contract_violation("wilcoxon_rank_sum: each sample needs at least 5 values");
    }
    const std::size_t n1 = a.size();
    const std::size_t n2 = b.size();
    const std::size_t n = n1 + n2;

    struct Tagged {
        double v;
        bool first;
    };
    std::vector<Tagged> pooled;
    pooled.reserve(n);
    for (double v : a) {
        pooled.push_back({v, true});
    }
    for (double v : b) {
        pooled.push_back({v, false});
    }
    std::sort(pooled.begin(), pooled.end(), [](const Tagged &x, const Tagged &y) { return x.v < y.v; });

    double rank_sum = 0.0;
    double tie_term = 0.0;
    for (std::size_t i = 0; i < n;) {
        std::size_t j = i;
        while (j < n && pooled[j].v == pooled[i].v) {
            ++j;
        }
        const double t = static_cast<double>(j - i);
        const double avg_rank = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
        for (std::size_t k = i; k < j; ++k) {
            if (pooled[k].first) {
                rank_sum += avg_rank;
            }
        }
        tie_term += t * t * t - t;
        i = j;
    }

    const double d1 = static_cast<double>(n1);
    const double d2 = static_cast<double>(n2);
    const double dn = static_cast<double>(n);
    const double mean = d1 * (dn + 1.0) / 2.0;
    const double var = d1 * d2 / 12.0 * ((dn + 1.0) - tie_term / (dn * (dn - 1.0)));

    WilcoxonResult res;
    res.statistic = rank_sum;
    if (!(var > 0.0)) {
        return res;
    }
    const double diff = rank_sum - mean;
    const double corrected = std::max(0.0, std::abs(diff) - 0.5);
    res.z = std::copysign(corrected, diff) / std::sqrt(var);
    res.p = std::erfc(std::abs(res.z) / std::sqrt(2.0));

    if (res.p < alpha) {
        std::vector<double> sa(a.begin(), a.end());
        std::vector<double> sb(b.begin(), b.end());
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        const double ma = median_sorted(sa);
        const double mb = median_sorted(sb);
        if (ma > mb) {
            res.verdict = Verdict::Better;
        } else if (ma < mb) {
            res.verdict = Verdict::Worse;
        }
    }
    return res;
}

double quantile(std::span<const double> sample, double q)
{
    if (sample.empty()) {
        throw contract_violation("quantile: empty sample");
    }
    std::vector<double> v(sample.begin(), sample.end());
    std::sort(v.begin(), v.end());
    const double h = (static_cast<double>(v.size()) - 1.0) * q;
    const auto lo = static_cast<std::size_t>(std::floor(h));
    const std::size_t hi = std::min(lo + 1, v.size() - 1);
    return v[lo] + (h - static_cast<double>(lo)) * (v[hi] - v[lo]);
}

MedianIqr median_iqr(std::span<const double> sample)
{
    if (sample.empty()) {
        throw contract_violation("median_iqr: empty sample");
    }
    std::vector<double> v(sample.begin(), sample.end());
    std::sort(v.begin(), v.end());
    return {median_sorted(v), quantile(v, 0.75) - quantile(v, 0.25)};
}

} // namespace codea
