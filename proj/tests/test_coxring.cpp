#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "coxfan/coxring.hpp"
#include "coxfan/errors.hpp"
#include "coxfan/geometry.hpp"

using namespace coxfan;

TEST_CASE("sample_points") {
    {
        const PointConfig cfg = sample_points(2, 17);
        REQUIRE(cfg.points.size() == 3);  // exactly the fixed points, no sampling
        CHECK(cfg.points[0] == std::pair<Rat, Rat>{Rat(0), Rat(1)});
        CHECK(cfg.points[1] == std::pair<Rat, Rat>{Rat(1), Rat(0)});
        CHECK(cfg.points[2] == std::pair<Rat, Rat>{Rat(1), Rat(1)});
    }
    {
        const PointConfig cfg = sample_points(3, 5);
        REQUIRE(cfg.points.size() == 4);
        int nonzero_minors = 0;
        for (int i = 1; i <= 4; ++i)
            for (int j = i + 1; j <= 4; ++j)
                if (cfg.minor(i, j) != 0) ++nonzero_minors;
        CHECK(nonzero_minors == 6);
    }
    for (int n = 2; n <= 6; ++n)
        for (std::uint64_t seed : {0, 1, 2}) {
            const PointConfig a = sample_points(n, seed);
            const PointConfig b = sample_points(n, seed);
            CHECK(a.points == b.points);
        }
}

TEST_CASE("presentation structure") {
    {
        const auto pres = build_presentation(2, sample_points(2, 0));
        REQUIRE(pres.generators.size() == 9);
        REQUIRE(pres.relations.size() == 1);
        // minors of ([0,1],[1,0],[1,1]) give coefficients (1, 1, -1)
        CHECK(pres.relations[0][0].coeff == 1);
        CHECK(pres.relations[0][1].coeff == 1);
        CHECK(pres.relations[0][2].coeff == -1);
        CHECK(pres.relations[0][0].factors == std::pair<int, int>{pres.t_index(1, 1),
                                                                  pres.t_index(1, 2)});
        CHECK(pres.relations[0][2].factors == std::pair<int, int>{pres.t_index(3, 1),
                                                                  pres.t_index(3, 2)});
    }
    {
        const auto pres = build_presentation(3, sample_points(3, 0));
        REQUIRE(pres.relations.size() == 2);
        // relation g_i involves consecutive pair triples (i, i+1, i+2)
        CHECK(pres.relations[0][0].factors.first == pres.t_index(1, 1));
        CHECK(pres.relations[1][0].factors.first == pres.t_index(2, 1));
        CHECK(pres.relations[1][2].factors.first == pres.t_index(4, 1));
    }
    {
        const auto pres = build_presentation(1, sample_points(1, 0));
        CHECK(pres.generators.size() == 6);
        CHECK(pres.relations.empty());
    }
    // degenerate configuration is rejected
    PointConfig bad;
    bad.n = 3;
    bad.points = {{Rat(0), Rat(1)}, {Rat(1), Rat(0)}, {Rat(1), Rat(1)}, {Rat(1), Rat(1)}};
    CHECK_THROWS_AS(build_presentation(3, bad), degenerate_error);
}

TEST_CASE("generator degrees") {
    const auto pres = build_presentation(2, sample_points(2, 0));
    const Signature sig(2, 3);
    // S_0 misses E_1
    CHECK(pres.generators[0].degree ==
          divisor_H2(sig) - divisor_E(sig, 2) - divisor_E(sig, 3));
    CHECK(pres.generators[pres.t_index(2, 1)].degree == divisor_H1(sig) - divisor_E(sig, 2));
    CHECK(pres.generators[pres.t_index(2, 2)].degree == divisor_E(sig, 2));
}

TEST_CASE("homogeneity") {
    for (int n = 2; n <= 6; ++n)
        for (std::uint64_t seed : {0, 1, 2}) {
            const auto pres = build_presentation(n, sample_points(n, seed));
            CHECK(check_homogeneity(pres));
            // common degree is H1
            const auto& m = pres.relations[0][0];
            CHECK(pres.generators[m.factors.first].degree +
                      pres.generators[m.factors.second].degree ==
                  divisor_H1(Signature(n, n + 1)));
        }
    // negative control: corrupt one T-degree
    auto pres = build_presentation(2, sample_points(2, 0));
    const Signature sig(2, 3);
    pres.generators[pres.t_index(1, 2)].degree = Rat(2) * divisor_E(sig, 1);
    CHECK_FALSE(check_homogeneity(pres));
}

TEST_CASE("alpha and beta satisfy every relation") {
    for (int n = 2; n <= 5; ++n) {
        const auto pres = build_presentation(n, sample_points(n, 3));
        for (const auto& rel : pres.relations) {
            Rat on_alpha = 0, on_beta = 0;
            for (const auto& m : rel) {
                // monomial T_{i,1}T_{i,2} evaluates to u_i; substitute u = alpha, beta
                const int i = (m.factors.first - (n + 1)) / 2;  // 0-based pair index
                on_alpha += m.coeff * pres.config.points[i].first;
                on_beta += m.coeff * pres.config.points[i].second;
            }
            CHECK(on_alpha == 0);
            CHECK(on_beta == 0);
        }
    }
}

TEST_CASE("a-faces: examples") {
    const auto pres3 = build_presentation(3, sample_points(3, 0));
    const auto faces = a_faces(pres3);
    std::set<std::uint32_t> masks;
    for (const auto& f : faces) masks.insert(f.subset);

    CHECK(masks.count(0));  // the origin
    const std::uint32_t all = (std::uint32_t(1) << (3 * 4)) - 1;
    CHECK(masks.count(all));  // full support

    // u_1 = u_2 = 0 with u_3, u_4 != 0 is infeasible: two vanishing
    // coordinates kill the plane spanned by alpha and beta
    std::uint32_t bad = 0;
    bad |= std::uint32_t(1) << pres3.t_index(3, 1);
    bad |= std::uint32_t(1) << pres3.t_index(3, 2);
    bad |= std::uint32_t(1) << pres3.t_index(4, 1);
    bad |= std::uint32_t(1) << pres3.t_index(4, 2);
    CHECK_FALSE(masks.count(bad));

    // one incomplete pair is always feasible
    std::uint32_t one_out = all & ~(std::uint32_t(1) << pres3.t_index(2, 2));
    CHECK(masks.count(one_out));
}

TEST_CASE("a-face count matches the general-position closed form") {
    // S-subsets are free; T-patterns: all pairs complete, one incomplete
    // pair (3 states), or no complete pair (3 states each)
    for (int n = 2; n <= 4; ++n) {
        const auto pres = build_presentation(n, sample_points(n, 0));
        const std::size_t expect =
            (std::size_t(1) << (n + 1)) *
            (1 + 3 * std::size_t(n + 1) + [](int k) {
                 std::size_t p = 1;
                 for (int i = 0; i < k; ++i) p *= 3;
                 return p;
             }(n + 1));
        CHECK(a_faces(pres).size() == expect);
    }
}

TEST_CASE("a-faces are seed-invariant") {
    for (int n = 2; n <= 4; ++n) {
        std::set<std::uint32_t> reference;
        for (std::uint64_t seed : {0, 1, 2}) {
            const auto faces = a_faces(build_presentation(n, sample_points(n, seed)));
            std::set<std::uint32_t> masks;
            for (const auto& f : faces) masks.insert(f.subset);
            if (seed == 0)
                reference = masks;
            else
                CHECK(reference == masks);
        }
    }
}

TEST_CASE("adding an S-variable keeps a face feasible") {
    const auto pres = build_presentation(3, sample_points(3, 1));
    const auto faces = a_faces(pres);
    std::set<std::uint32_t> masks;
    for (const auto& f : faces) masks.insert(f.subset);
    for (const auto& f : faces)
        for (int s = 0; s <= pres.n; ++s) CHECK(masks.count(f.subset | (std::uint32_t(1) << s)));
}

TEST_CASE("orbit cones") {
    const auto pres = build_presentation(2, sample_points(2, 0));
    const auto cones = orbit_cones(pres);

    // the full-support cone is the effective cone
    const RationalCone eff = effective_cone(2);
    const std::uint32_t all = (std::uint32_t(1) << 9) - 1;
    CHECK(a_face_orbit_cone(pres, AFace{all}).equals(eff));
    CHECK(a_face_orbit_cone(pres, AFace{0}).is_zero());
    bool eff_found = false;
    for (const auto& c : cones) {
        if (c.pointed() && c.full_dimensional() && c.equals(eff)) eff_found = true;
        for (const auto& ray : c.extremal_rays()) CHECK(eff.contains(ray));
    }
    CHECK(eff_found);

    // canonical order and no duplicates
    for (std::size_t i = 1; i < cones.size(); ++i)
        CHECK(cones[i - 1].extremal_rays() < cones[i].extremal_rays());

    // regression pin from the first correct run, cross-validated against the
    // chamber counts downstream; every a-face yields a distinct cone here
    CHECK(cones.size() == 296);
    std::size_t fulldim = 0;
    for (const auto& c : cones) fulldim += c.full_dimensional();
    CHECK(fulldim == 82);
}
