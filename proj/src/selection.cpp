#include <codea/selection.hpp>

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace codea
{

namespace
{

constexpr double asf_epsilon = 1e-6;
constexpr double min_span = 1e-10;

enum class Measure { Cod, Angle, Pbi, Nbi };

Measure measure_for(Layer layer, const RankingConfig &cfg)
{
    const bool inner = layer == Layer::Inner;
    switch (cfg.variant) {
    case RankingVariant::Codea:
        return inner ? Measure::Angle : Measure::Cod;
    case RankingVariant::CodeaStar:
        return Measure::Cod;
    case RankingVariant::Pbi:
        return (inner || cfg.scope == AblationScope::AllNiches) ? Measure::Pbi : Measure::Cod;
    case RankingVariant::Nbi:
        return (inner || cfg.scope == AblationScope::AllNiches) ? Measure::Nbi : Measure::Cod;
    }
    return Measure::Cod;
}

const ObjectiveVector &normalized_of(const Individual &ind)
{
    if (!ind.normalized) {
        throw contract_violation("selection: member has no normalized objectives");
    }
    return *ind.normalized;
}

} // namespace

std::string to_string(RankingVariant v)
{
    switch (v) {
    case RankingVariant::Codea:
        return "codea";
    case RankingVariant::CodeaStar:
        return "codea-star";
    case RankingVariant::Pbi:
        return "codea-pbi";
    case RankingVariant::Nbi:
        return "codea-nbi";
    }
    return "codea";
}

std::string to_string(InnerAngleOrder o) { return o == InnerAngleOrder::Max ? "max" : "min"; }

std::string to_string(AblationScope s) { return s == AblationScope::AllNiches ? "all" : "inner"; }

RankingVariant parse_variant(const std::string &s)
{
    if (s == "codea") {
        return RankingVariant::Codea;
    }
    if (s == "codea-star" || s == "star" || s == "codea*") {
        return RankingVariant::CodeaStar;
    }
    if (s == "codea-pbi" || s == "pbi" || s == "codea+pbi") {
        return RankingVariant::Pbi;
    }
    if (s == "codea-nbi" || s == "nbi" || s == "codea+nbi") {
        return RankingVariant::Nbi;
    }
    throw std::invalid_argument("unknown variant '" + s + "' (expected codea, codea-star, codea-pbi, codea-nbi)");
}

InnerAngleOrder parse_inner_angle_order(const std::string &s)
{
    if (s == "max") {
        return InnerAngleOrder::Max;
    }
    if (s == "min") {
        return InnerAngleOrder::Min;
    }
    throw std::invalid_argument("inner angle order must be 'min' or 'max', got '" + s + "'");
}

AblationScope parse_ablation_scope(const std::string &s)
{
    if (s == "all") {
        return AblationScope::AllNiches;
    }
    if (s == "inner") {
        return AblationScope::InnerOnly;
    }
    throw std::invalid_argument("ablation scope must be 'all' or 'inner', got '" + s + "'");
}

Fronts nondominated_sort(std::span<const ObjectiveVector> objectives)
{
    const std::size_t n = objectives.size();
    std::vector<std::vector<std::size_t>> dominated(n);
    std::vector<std::size_t> dom_count(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (dominates(objectives[i], objectives[j])) {
                dominated[i].push_back(j);
                ++dom_count[j];
            } else if (dominates(objectives[j], objectives[i])) {
                dominated[j].push_back(i);
                ++dom_count[i];
            }
        }
    }
    Fronts fronts;
    std::vector<std::size_t> current;
    for (std::size_t i = 0; i < n; ++i) {
        if (dom_count[i] == 0) {
            current.push_back(i);
        }
    }
    while (!current.empty()) {
        std::vector<std::size_t> next;
        for (std::size_t i : current) {
            for (std::size_t j : dominated[i]) {
                if (--dom_count[j] == 0) {
                    next.push_back(j);
                }
            }
        }
        std::sort(next.begin(), next.end());
        fronts.push_back(std::move(current));
        current = std::move(next);
    }
    return fronts;
}

Fronts nondominated_sort(const Population &pop)
{
    const auto objs = objectives_of(pop);
    return nondominated_sort(objs);
}

std::vector<std::size_t> select_candidates(const Fronts &fronts, std::size_t n)
{
    std::vector<std::size_t> s;
    for (const auto &front : fronts) {
        if (s.size() >= n) {
            break;
        }
        s.insert(s.end(), front.begin(), front.end());
    }
    if (s.size() < n) {
        throw contract_violation("select_candidates: fronts hold fewer than N members");
    }
    return s;
}

void update_ideal(NormalizationState &state, std::span<const Individual> members)
{
    for (const auto &ind : members) {
        const auto &f = ind.objectives;
        if (!state.initialized) {
            state.z_star = f;
            state.initialized = true;
            continue;
        }
        for (std::size_t j = 0; j < f.size(); ++j) {
            state.z_star[j] = std::min(state.z_star[j], f[j]);
        }
    }
}

NormalizationState update_normalization(std::span<Individual> s, NormalizationState state)
{
    if (s.empty()) {
        throw contract_violation("update_normalization: empty candidate set");
    }
    update_ideal(state, s);
    const std::size_t m = state.z_star.size();
    const auto &z = state.z_star;

    const bool has_fronts = std::any_of(s.begin(), s.end(), [](const Individual &x) { return x.front.has_value(); });
    ObjectiveVector front_max(m, -std::numeric_limits<double>::infinity());
    ObjectiveVector all_max(m, -std::numeric_limits<double>::infinity());
    for (const auto &ind : s) {
        const bool first = !has_fronts || (ind.front && *ind.front == 0);
        for (std::size_t j = 0; j < m; ++j) {
            all_max[j] = std::max(all_max[j], ind.objectives[j]);
            if (first) {
                front_max[j] = std::max(front_max[j], ind.objectives[j]);
            }
        }
    }
    state.z_nadir = front_max;

    // Extreme point per axis: minimal achievement scalarizing value with the
    // axis weight vector (asf_epsilon elsewhere).
    Eigen::MatrixXd extremes(m, m);
    for (std::size_t axis = 0; axis < m; ++axis) {
        double best = std::numeric_limits<double>::infinity();
        std::size_t best_i = 0;
        for (std::size_t i = 0; i < s.size(); ++i) {
            double asf = -std::numeric_limits<double>::infinity();
            for (std::size_t j = 0; j < m; ++j) {
                const double w = (j == axis) ? 1.0 : asf_epsilon;
                asf = std::max(asf, (s[i].objectives[j] - z[j]) / w);
            }
            if (asf < best) {
                best = asf;
                best_i = i;
            }
        }
        for (std::size_t j = 0; j < m; ++j) {
            extremes(static_cast<Eigen::Index>(axis), static_cast<Eigen::Index>(j)) = s[best_i].objectives[j] - z[j];
        }
    }

    ObjectiveVector span(m, 0.0);
    bool ok = false;
    {
        Eigen::FullPivLU<Eigen::MatrixXd> lu(extremes);
        if (lu.isInvertible()) {
            const Eigen::VectorXd b = lu.solve(Eigen::VectorXd::Ones(static_cast<Eigen::Index>(m)));
            ok = true;
            for (std::size_t j = 0; j < m; ++j) {
                const double a = 1.0 / b(static_cast<Eigen::Index>(j));
                if (!std::isfinite(a) || !(a > min_span)) {
                    ok = false;
                    break;
                }
                span[j] = a;
            }
        }
    }
    if (!ok) {
        for (std::size_t j = 0; j < m; ++j) {
            span[j] = front_max[j] - z[j];
            if (!(span[j] > min_span)) {
                span[j] = all_max[j] - z[j];
            }
            if (!(span[j] > min_span)) {
                span[j] = 1.0;
            }
        }
    }

    state.intercepts.resize(m);
    for (std::size_t j = 0; j < m; ++j) {
        state.intercepts[j] = z[j] + span[j];
    }
    for (auto &ind : s) {
        ObjectiveVector fn(m);
        for (std::size_t j = 0; j < m; ++j) {
            fn[j] = (ind.objectives[j] - z[j]) / span[j];
        }
        ind.normalized = std::move(fn);
    }
    return state;
}

std::vector<std::size_t> associate(std::span<Individual> s, const ReferenceSet &refset)
{
    if (refset.points.empty()) {
        throw contract_violation("associate: empty reference set");
    }
    std::vector<std::size_t> out(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        const auto &f = normalized_of(s[i]);
        double best = std::numeric_limits<double>::infinity();
        std::size_t best_k = 0;
        for (std::size_t k = 0; k < refset.points.size(); ++k) {
            const double d = d2(f, refset.points[k].w);
            if (d < best) {
                best = d;
                best_k = k;
            }
        }
        out[i] = best_k;
        s[i].assoc = best_k;
    }
    return out;
}

std::vector<std::size_t> rank_within_niche(std::span<const Individual> s, std::span<const std::size_t> members,
                                           std::size_t point, const ReferenceSet &refset, const RankingConfig &cfg)
{
    if (point >= refset.points.size()) {
        throw contract_violation("rank_within_niche: reference index out of range");
    }
    const ReferencePoint &rp = refset.points[point];
    const Measure measure = measure_for(rp.layer, cfg);

    double r = 0.0;
    if (measure == Measure::Cod) {
        // Inner points carry no r; CoD on an inner niche evaluates the same
        // rotation formula on the shrunk weights.
        r = rp.r ? *rp.r : rotation_factor(rp.w).r;
    }

    struct Keyed {
        double primary;
        double tie;
        std::size_t pos;
        std::size_t index;
    };
    std::vector<Keyed> keyed;
    keyed.reserve(members.size());
    for (std::size_t pos = 0; pos < members.size(); ++pos) {
        const std::size_t idx = members[pos];
        const auto &f = normalized_of(s[idx]);
        double primary = 0.0;
        switch (measure) {
        case Measure::Cod:
            primary = g_cod(f, rp.w, r, refset.k_m);
            break;
        case Measure::Angle:
            primary = center_angle(f);
            if (cfg.inner_angle_order == InnerAngleOrder::Max) {
                primary = -primary;
            }
            break;
        case Measure::Pbi:
            primary = g_pbi(f, rp.w, cfg.pbi);
            break;
        case Measure::Nbi:
            primary = g_nbi(f, rp.w);
            break;
        }
        keyed.push_back({primary, g_nbi(f, rp.w), pos, idx});
    }
    std::sort(keyed.begin(), keyed.end(), [](const Keyed &a, const Keyed &b) {
        if (a.primary != b.primary) {
            return a.primary < b.primary;
        }
        if (a.tie != b.tie) {
            return a.tie < b.tie;
        }
        return a.pos < b.pos;
    });
    std::vector<std::size_t> out;
    out.reserve(keyed.size());
    for (const auto &k : keyed) {
        out.push_back(k.index);
    }
    return out;
}

RankPartition build_rank_partition(std::span<Individual> s, const ReferenceSet &refset, const RankingConfig &cfg)
{
    std::vector<std::vector<std::size_t>> niches(refset.points.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (!s[i].assoc || *s[i].assoc >= niches.size()) {
            throw contract_violation("build_rank_partition: member without a valid association");
        }
        niches[*s[i].assoc].push_back(i);
    }
    RankPartition partition;
    for (std::size_t k = 0; k < niches.size(); ++k) {
        if (niches[k].empty()) {
            continue;
        }
        const auto ordered = rank_within_niche(s, niches[k], k, refset, cfg);
        if (partition.ranks.size() < ordered.size()) {
            partition.ranks.resize(ordered.size());
        }
        for (std::size_t place = 0; place < ordered.size(); ++place) {
            partition.ranks[place].push_back(ordered[place]);
            s[ordered[place]].cod_rank = place;
        }
    }
    return partition;
}

SelectionResult environmental_selection(const Population &u, const ReferenceSet &refset, NormalizationState state,
                                        const RankingConfig &cfg, std::size_t n, RngStream &rng)
{
    if (u.size() < n) {
        throw contract_violation("environmental_selection: union smaller than N");
    }
    const Fronts fronts = nondominated_sort(u);
    const auto candidates = select_candidates(fronts, n);

    std::vector<std::size_t> front_of(u.size(), 0);
    for (std::size_t f = 0; f < fronts.size(); ++f) {
        for (std::size_t i : fronts[f]) {
            front_of[i] = f;
        }
    }
    std::vector<Individual> s;
    s.reserve(candidates.size());
    for (std::size_t i : candidates) {
        Individual ind = u[i];
        ind.clear_annotations();
        ind.front = front_of[i];
        s.push_back(std::move(ind));
    }

    update_ideal(state, u.members);
    state = update_normalization(s, std::move(state));
    associate(s, refset);
    const RankPartition partition = build_rank_partition(s, refset, cfg);

    Population next;
    next.capacity = n;
    next.members.reserve(n);
    std::size_t i = 0;
    while (i < partition.ranks.size() && next.size() + partition.ranks[i].size() < n) {
        for (std::size_t idx : partition.ranks[i]) {
            next.members.push_back(s[idx]);
        }
        ++i;
    }
    const std::size_t remaining = n - next.size();
    if (remaining > 0) {
        const auto &last = partition.ranks.at(i);
        if (remaining == last.size()) {
            for (std::size_t idx : last) {
                next.members.push_back(s[idx]);
            }
        } else {
            for (std::size_t pick : rng.sample_without_replacement(last.size(), remaining)) {
                next.members.push_back(s[last[pick]]);
            }
        }
    }
    return {std::move(next), std::move(state)};
}

} // namespace codea
