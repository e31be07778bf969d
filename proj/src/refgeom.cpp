#include <codea/refgeom.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace codea
{

namespace
{

void check_lattice_args(std::size_t m, std::size_t h)
{
    if (m < 2) {
        throw std::invalid_argument("reference lattice needs at least 2 objectives, got m=" + std::to_string(m));
    }
    if (h < 1) {
        throw std::invalid_argument("reference lattice needs at least 1 division");
    }
}

void compose(std::size_t m, std::size_t h, std::size_t left, std::vector<std::size_t> &parts,
             std::vector<std::vector<double>> &out)
{
    const std::size_t k = parts.size();
    if (k + 1 == m) {
        parts.push_back(left);
        std::vector<double> w(m);
        for (std::size_t j = 0; j < m; ++j) {
            w[j] = static_cast<double>(parts[j]) / static_cast<double>(h);
        }
        out.push_back(std::move(w));
        parts.pop_back();
        return;
    }
    // Descending so that the first coordinate leads with the largest share.
    for (std::size_t i = left + 1; i-- > 0;) {
        parts.push_back(i);
        compose(m, h, left - i, parts, out);
        parts.pop_back();
    }
}

} // namespace

std::string to_string(Layer layer)
{
    return layer == Layer::Boundary ? "boundary" : "inner";
}

std::size_t lattice_size(std::size_t m, std::size_t h)
{
    // C(h+m-1, m-1) computed incrementally; each partial product is itself a
    // binomial coefficient so the division is exact.
    std::size_t c = 1;
    for (std::size_t i = 1; i < m; ++i) {
        c = c * (h + i) / i;
    }
    return c;
}

std::vector<std::vector<double>> das_dennis(std::size_t m, std::size_t h)
{
    check_lattice_args(m, h);
    std::vector<std::vector<double>> out;
    out.reserve(lattice_size(m, h));
    std::vector<std::size_t> parts;
    parts.reserve(m);
    compose(m, h, h, parts, out);
    return out;
}

ReferenceSet single_layer(std::size_t m, std::size_t h)
{
    ReferenceSet set;
    set.m = m;
    for (auto &w : das_dennis(m, h)) {
        set.points.push_back(ReferencePoint{std::move(w), Layer::Boundary, std::nullopt});
    }
    set.boundary_count = set.points.size();
    return set;
}

ReferenceSet two_layer(std::size_t m, std::size_t h1, std::size_t h2)
{
    ReferenceSet set = single_layer(m, h1);
    const double shift = 1.0 / (2.0 * static_cast<double>(m));
    for (auto w : das_dennis(m, h2)) {
        for (double &v : w) {
            v = v / 2.0 + shift;
        }
        set.points.push_back(ReferencePoint{std::move(w), Layer::Inner, std::nullopt});
    }
    return set;
}

RotationFactor rotation_factor(const std::vector<double> &w)
{
    if (w.empty()) {
        throw std::invalid_argument("rotation_factor: empty reference point");
    }
    const auto [lo, hi] = std::minmax_element(w.begin(), w.end());
    const double m = static_cast<double>(w.size());
    const double alpha = 1.0 - *lo * m;
    const double beta = (1.0 - *hi) * 2.0;
    return {alpha, beta, (alpha + beta) / 2.0};
}

ReferenceSet rotation_factors(ReferenceSet refset)
{
    for (auto &p : refset.points) {
        if (p.layer == Layer::Boundary) {
            p.r = rotation_factor(p.w).r;
        } else {
            p.r.reset();
        }
    }
    refset.k_m = objective_rotation_factor(refset.m);
    return refset;
}

double objective_rotation_factor(std::size_t m)
{
    const double md = static_cast<double>(m);
    return md / (1.0 + std::exp(-md * (md - 5.5)));
}

LatticeDivisions default_divisions(std::size_t m)
{
    switch (m) {
    case 3:
        return {12, std::nullopt};
    case 5:
        return {6, std::nullopt};
    case 8:
    case 10:
        return {3, 2};
    case 15:
        return {2, 1};
    default:
        throw std::invalid_argument("no default reference divisions for m=" + std::to_string(m)
                                    + " (supported: 3, 5, 8, 10, 15); supply explicit divisions");
    }
}

ReferenceSet build_reference_set(std::size_t m, std::optional<LatticeDivisions> divisions)
{
    const LatticeDivisions div = divisions ? *divisions : default_divisions(m);
    ReferenceSet set = div.h2 ? two_layer(m, div.h1, *div.h2) : single_layer(m, div.h1);
    return rotation_factors(std::move(set));
}

} // namespace codea
