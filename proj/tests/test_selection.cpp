#include <codea/selection.hpp>

#include <codea/refgeom.hpp>
#include <codea/scalarize.hpp>

#include <doctest.h>

#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <set>

using namespace codea;
using V = std::vector<double>;

namespace
{

Individual ind(V f)
{
    Individual x;
    x.objectives = std::move(f);
    return x;
}

Individual normalized(V f, std::size_t assoc = 0)
{
    Individual x;
    x.objectives = f;
    x.normalized = std::move(f);
    x.assoc = assoc;
    return x;
}

Population population(const std::vector<V> &objs)
{
    Population p;
    for (const auto &f : objs) {
        p.members.push_back(ind(f));
    }
    p.capacity = p.size();
    return p;
}

std::vector<std::set<std::size_t>> as_sets(const Fronts &fronts)
{
    std::vector<std::set<std::size_t>> out;
    for (const auto &f : fronts) {
        out.emplace_back(f.begin(), f.end());
    }
    return out;
}

} // namespace

TEST_CASE("nondominated sort examples")
{
    const std::vector<V> pts{{1, 2}, {2, 1}, {3, 3}};
    const Fronts f = nondominated_sort(pts);
    REQUIRE(f.size() == 2);
    CHECK(f[0] == std::vector<std::size_t>{0, 1});
    CHECK(f[1] == std::vector<std::size_t>{2});

    const std::vector<V> same(6, V{0.5, 0.5, 0.5});
    CHECK(nondominated_sort(same).size() == 1);
    CHECK(nondominated_sort(same)[0].size() == 6);
}

TEST_CASE("nondominated sort matches the brute-force oracle")
{
    RngStream rng(314);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + rng.below(64);
        const std::size_t m = 2 + rng.below(4);
        const bool coarse = trial % 2 == 0;
        std::vector<V> pts(n, V(m));
        for (auto &p : pts) {
            for (auto &x : p) {
                x = coarse ? static_cast<double>(rng.below(5)) : rng.uniform();
            }
        }
        REQUIRE(as_sets(nondominated_sort(pts)) == oracle::nondominated_sort(pts));
    }
}

TEST_CASE("candidate set")
{
    auto fronts_of = [](std::vector<std::size_t> sizes) {
        Fronts f;
        std::size_t next = 0;
        for (std::size_t s : sizes) {
            f.emplace_back();
            for (std::size_t i = 0; i < s; ++i) {
                f.back().push_back(next++);
            }
        }
        return f;
    };
    CHECK(select_candidates(fronts_of({5, 4, 3}), 7).size() == 9);
    CHECK(select_candidates(fronts_of({10}), 10).size() == 10);
    CHECK(select_candidates(fronts_of({3, 3, 3}), 9).size() == 9);
    CHECK(select_candidates(fronts_of({3, 3, 3}), 4).size() == 6);
}

TEST_CASE("normalization")
{
    SUBCASE("identity on a clean simplex")
    {
        std::vector<Individual> s{ind({1, 0, 0}), ind({0, 1, 0}), ind({0, 0, 1}), ind({0.2, 0.3, 0.4})};
        const auto st = update_normalization(s, NormalizationState{});
        CHECK(st.z_star == V{0, 0, 0});
        for (std::size_t j = 0; j < 3; ++j) {
            CHECK(st.intercepts[j] == doctest::Approx(1.0));
        }
        for (const auto &x : s) {
            REQUIRE(x.normalized);
            for (std::size_t j = 0; j < 3; ++j) {
                CHECK((*x.normalized)[j] == doctest::Approx(x.objectives[j]).epsilon(1e-12));
            }
        }
    }

    SUBCASE("translation and scaling invariance, extremes on the vertices")
    {
        RngStream rng(77);
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<V> base;
            // Three clear extremes plus interior points.
            base.push_back({1.0 + rng.uniform(), 0.0, 0.0});
            base.push_back({0.0, 1.0 + rng.uniform(), 0.0});
            base.push_back({0.0, 0.0, 1.0 + rng.uniform()});
            for (int i = 0; i < 10; ++i) {
                base.push_back({0.1 + rng.uniform(), 0.1 + rng.uniform(), 0.1 + rng.uniform()});
            }
            auto run = [](const std::vector<V> &objs) {
                std::vector<Individual> s;
                for (const auto &f : objs) {
                    s.push_back(ind(f));
                }
                update_normalization(s, NormalizationState{});
                std::vector<V> out;
                for (const auto &x : s) {
                    out.push_back(*x.normalized);
                }
                return out;
            };
            const auto ref = run(base);
            for (std::size_t axis = 0; axis < 3; ++axis) {
                for (std::size_t j = 0; j < 3; ++j) {
                    CHECK(std::abs(ref[axis][j] - (j == axis ? 1.0 : 0.0)) <= 1e-9);
                }
            }
            auto shifted = base;
            auto scaled = base;
            const double c = rng.uniform(-5.0, 5.0);
            const V scale{rng.uniform(0.1, 10.0), rng.uniform(0.1, 10.0), rng.uniform(0.1, 10.0)};
            for (std::size_t i = 0; i < base.size(); ++i) {
                for (std::size_t j = 0; j < 3; ++j) {
                    shifted[i][j] += c;
                    scaled[i][j] *= scale[j];
                }
            }
            const auto a = run(shifted);
            const auto b = run(scaled);
            for (std::size_t i = 0; i < base.size(); ++i) {
                for (std::size_t j = 0; j < 3; ++j) {
                    CHECK(std::abs(a[i][j] - ref[i][j]) <= 1e-9);
                    CHECK(std::abs(b[i][j] - ref[i][j]) <= 1e-9);
                }
            }
        }
    }

    SUBCASE("degenerate extremes fall back to positive spans")
    {
        std::vector<Individual> s{ind({1, 1, 1}), ind({1, 1, 1})};
        const auto st = update_normalization(s, NormalizationState{});
        for (std::size_t j = 0; j < 3; ++j) {
            CHECK(st.intercepts[j] > st.z_star[j]);
            CHECK(st.z_star[j] <= st.z_nadir[j]);
        }
    }
}

TEST_CASE("association")
{
    ReferenceSet set;
    set.m = 3;
    set.points = {{{1, 0, 0}, Layer::Boundary, 0.5}, {{1.0 / 3, 1.0 / 3, 1.0 / 3}, Layer::Boundary, 2.0 / 3}};
    set.boundary_count = 2;

    std::vector<Individual> s{normalized({0.9, 0.1, 0.0}), normalized({0.2, 0.2, 0.2}), normalized({0.5, 0, 0})};
    const auto d = associate(s, set);
    CHECK(*s[0].assoc == 0);
    CHECK(*s[1].assoc == 1);
    CHECK(*s[2].assoc == 0);
    CHECK(oracle::perpendicular_distance({0.9, 0.1, 0.0}, {1, 0, 0}) == doctest::Approx(0.1));
    CHECK(oracle::perpendicular_distance({0.9, 0.1, 0.0}, {1, 1, 1}) == doctest::Approx(std::sqrt(1.46 / 3.0)));
    (void)d;

    // Argmin of the perpendicular distance, checked against the oracle and
    // under a common rescaling.
    const auto big = build_reference_set(5);
    RngStream rng(4);
    for (int trial = 0; trial < 200; ++trial) {
        V f(5);
        for (auto &x : f) {
            x = rng.uniform();
        }
        std::vector<Individual> one{normalized(f)};
        associate(one, big);
        std::size_t best = 0;
        for (std::size_t k = 1; k < big.size(); ++k) {
            if (oracle::perpendicular_distance(f, big.points[k].w)
                < oracle::perpendicular_distance(f, big.points[best].w) - 1e-12) {
                best = k;
            }
        }
        CHECK(oracle::perpendicular_distance(f, big.points[*one[0].assoc].w)
              == doctest::Approx(oracle::perpendicular_distance(f, big.points[best].w)).epsilon(1e-9));
        V g = f;
        for (auto &x : g) {
            x *= 3.5;
        }
        std::vector<Individual> two{normalized(g)};
        associate(two, big);
        CHECK(*two[0].assoc == *one[0].assoc);
    }

    std::vector<Individual> ray{normalized({0.2, 0.2, 0.2}), normalized({0.5, 0.5, 0.5}), normalized({2, 2, 2})};
    associate(ray, set);
    for (const auto &x : ray) {
        CHECK(*x.assoc == 1);
    }
}

TEST_CASE("niche ranking")
{
    ReferenceSet set = rotation_factors(two_layer(3, 2, 1));
    REQUIRE(set.points[1].w == V{0.5, 0.5, 0});
    REQUIRE(set.points[6].layer == Layer::Inner);
    REQUIRE(set.points[1].r);
    CHECK(*set.points[1].r == 1.0);

    RankingConfig cfg;
    SUBCASE("boundary niche by g_cod")
    {
        std::vector<Individual> s{normalized({0.7, 0.7, 0.2}, 1), normalized({0.6, 0.6, 0.1}, 1)};
        const std::vector<std::size_t> members{0, 1};
        CHECK(rank_within_niche(s, members, 1, set, cfg) == std::vector<std::size_t>{1, 0});
        CHECK(g_cod(*s[1].normalized, set.points[1].w, 1.0, set.k_m) == doctest::Approx(0.10017).epsilon(1e-4));
        CHECK(g_cod(*s[0].normalized, set.points[1].w, 1.0, set.k_m) == doctest::Approx(0.20033).epsilon(1e-4));
    }
    SUBCASE("inner niche by angle")
    {
        std::vector<Individual> s{normalized({0.4, 0.3, 0.3}, 6), normalized({1.0 / 3, 1.0 / 3, 1.0 / 3}, 6)};
        const std::vector<std::size_t> members{0, 1};
        cfg.inner_angle_order = InnerAngleOrder::Min;
        CHECK(rank_within_niche(s, members, 6, set, cfg) == std::vector<std::size_t>{1, 0});
        cfg.inner_angle_order = InnerAngleOrder::Max;
        CHECK(rank_within_niche(s, members, 6, set, cfg) == std::vector<std::size_t>{0, 1});
        const std::vector<std::size_t> single{1};
        CHECK(rank_within_niche(s, single, 6, set, cfg) == std::vector<std::size_t>{1});
        cfg.inner_angle_order = InnerAngleOrder::Min;
        CHECK(rank_within_niche(s, single, 6, set, cfg) == std::vector<std::size_t>{1});
    }
    SUBCASE("equal d2 makes g_cod and g_nbi agree")
    {
        RngStream rng(21);
        for (int trial = 0; trial < 100; ++trial) {
            std::vector<Individual> s;
            std::vector<std::size_t> members;
            // Same perpendicular offset (0,0,0.1), varying position along the ray.
            for (std::size_t i = 0; i < 6; ++i) {
                const double t = rng.uniform(0.1, 2.0);
                s.push_back(normalized({0.5 * t, 0.5 * t, 0.1}, 1));
                members.push_back(i);
            }
            const auto order = rank_within_niche(s, members, 1, set, cfg);
            std::size_t best = 0;
            for (std::size_t i = 1; i < s.size(); ++i) {
                if (g_nbi(*s[i].normalized, set.points[1].w) < g_nbi(*s[best].normalized, set.points[1].w)) {
                    best = i;
                }
            }
            CHECK(order.front() == best);
        }
    }
    SUBCASE("ablation scope")
    {
        set.k_m = 10.0;
        // a wins on g_nbi, b wins on g_cod.
        std::vector<Individual> s{normalized({0.5, 0.5, 0.3}, 1), normalized({0.9, 0.9, 0.0}, 1)};
        const std::vector<std::size_t> members{0, 1};
        CHECK(rank_within_niche(s, members, 1, set, cfg) == std::vector<std::size_t>{1, 0});
        cfg.variant = RankingVariant::Nbi;
        CHECK(rank_within_niche(s, members, 1, set, cfg) == std::vector<std::size_t>{0, 1});
        cfg.scope = AblationScope::InnerOnly;
        CHECK(rank_within_niche(s, members, 1, set, cfg) == std::vector<std::size_t>{1, 0});
    }
}

TEST_CASE("rank partition")
{
    ReferenceSet set = rotation_factors(single_layer(3, 1));
    std::vector<Individual> s{normalized({1, 0.1, 0.1}, 0), normalized({2, 0.2, 0.2}, 0), normalized({0.1, 1, 0.1}, 1)};
    const auto part = build_rank_partition(s, set, RankingConfig{});
    REQUIRE(part.ranks.size() == 2);
    CHECK(part.ranks[0].size() == 2);
    CHECK(part.ranks[1].size() == 1);
    CHECK(*s[1].cod_rank == 1);

    std::vector<Individual> singles{normalized({1, 0, 0}, 0), normalized({0, 1, 0}, 1), normalized({0, 0, 1}, 2)};
    CHECK(build_rank_partition(singles, set, RankingConfig{}).ranks.size() == 1);

    const ReferenceSet ten = rotation_factors(single_layer(2, 9));
    RngStream rng(3);
    std::vector<Individual> many;
    for (int i = 0; i < 30; ++i) {
        many.push_back(normalized({rng.uniform(), rng.uniform()}, rng.below(10)));
    }
    const auto p30 = build_rank_partition(many, ten, RankingConfig{});
    std::multiset<std::size_t> seen;
    for (const auto &r : p30.ranks) {
        CHECK(r.size() <= ten.size());
        seen.insert(r.begin(), r.end());
    }
    CHECK(seen.size() == 30);
    CHECK(std::set<std::size_t>(seen.begin(), seen.end()).size() == 30);
}

TEST_CASE("environmental selection")
{
    const ReferenceSet set = build_reference_set(2, LatticeDivisions{4, std::nullopt});
    REQUIRE(set.size() == 5);

    SUBCASE("singleton niches keep everything")
    {
        const Population u = population({{1, 0}, {0.75, 0.25}, {0.5, 0.5}, {0.25, 0.75}, {0, 1}});
        RngStream rng(1);
        const auto res = environmental_selection(u, set, NormalizationState{}, RankingConfig{}, 5, rng);
        REQUIRE(res.population.size() == 5);
        for (std::size_t i = 0; i < 5; ++i) {
            CHECK(res.population[i].objectives == u[i].objectives);
        }
    }

    SUBCASE("whole ranks then a random slice")
    {
        std::vector<V> objs;
        for (double centre : {1.0, 0.75, 0.5, 0.25, 0.0}) {
            for (double off : {-0.02, 0.0, 0.02}) {
                const double t = std::clamp(centre + off + (centre == 1.0 ? -0.02 : centre == 0.0 ? 0.02 : 0.0), 0.0, 1.0);
                objs.push_back({t, 1.0 - t});
            }
        }
        const Population u = population(objs);
        RngStream r1(9), r2(9);
        const auto a = environmental_selection(u, set, NormalizationState{}, RankingConfig{}, 8, r1);
        const auto b = environmental_selection(u, set, NormalizationState{}, RankingConfig{}, 8, r2);
        REQUIRE(a.population.size() == 8);
        std::size_t rank0 = 0, rank1 = 0;
        std::set<std::size_t> niches0;
        for (const auto &x : a.population.members) {
            rank0 += *x.cod_rank == 0;
            rank1 += *x.cod_rank == 1;
            if (*x.cod_rank == 0) {
                niches0.insert(*x.assoc);
            }
        }
        CHECK(rank0 == 5);
        CHECK(rank1 == 3);
        CHECK(niches0.size() == 5);
        for (std::size_t i = 0; i < 8; ++i) {
            CHECK(a.population[i].objectives == b.population[i].objectives);
        }
    }

    SUBCASE("output is a sub-multiset of the union; first front kept when it is large enough")
    {
        const ReferenceSet s3 = build_reference_set(3);
        RngStream rng(17);
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<V> objs;
            for (int i = 0; i < 182; ++i) {
                objs.push_back({rng.uniform(), rng.uniform(), rng.uniform()});
            }
            const Population u = population(objs);
            const auto res = environmental_selection(u, s3, NormalizationState{}, RankingConfig{}, 91, rng);
            REQUIRE(res.population.size() == 91);
            std::multiset<V> pool(objs.begin(), objs.end());
            for (const auto &x : res.population.members) {
                auto it = pool.find(x.objectives);
                REQUIRE(it != pool.end());
                pool.erase(it);
            }
            const Fronts fr = nondominated_sort(objs);
            if (fr[0].size() >= 91) {
                for (const auto &x : res.population.members) {
                    CHECK(*x.front == 0);
                }
            }
        }
    }

    CHECK_THROWS_AS(
        [&] {
            RngStream rng(1);
            environmental_selection(population({{1, 0}}), set, NormalizationState{}, RankingConfig{}, 5, rng);
        }(),
        contract_violation);
}

TEST_CASE("variant names round-trip")
{
    for (auto v : {RankingVariant::Codea, RankingVariant::CodeaStar, RankingVariant::Pbi, RankingVariant::Nbi}) {
        CHECK(parse_variant(to_string(v)) == v);
    }
    CHECK(parse_variant("pbi") == RankingVariant::Pbi);
    CHECK(parse_inner_angle_order("min") == InnerAngleOrder::Min);
    CHECK(parse_ablation_scope("inner") == AblationScope::InnerOnly);
    CHECK_THROWS(parse_variant("moead"));
}
