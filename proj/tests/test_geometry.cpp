#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coxfan/errors.hpp"
#include "coxfan/geometry.hpp"

using namespace coxfan;

TEST_CASE("mori cone generator counts") {
    CHECK(mori_cone(Signature(3, 4)).extremal_rays().size() == 12);
    CHECK(mori_cone(Signature(2, 4)).extremal_rays().size() == 13);
    CHECK(mori_cone(Signature(2, 5)).extremal_rays().size() == 20);
    CHECK_THROWS_AS(mori_cone(Signature(5, 8)), unsupported_signature_error);
    CHECK_THROWS_AS(mori_cone(Signature(2, 6)), unsupported_signature_error);
    CHECK_THROWS_AS(nef_cone(Signature(5, 8)), unsupported_signature_error);
}

TEST_CASE("mori cone membership example") {
    const Signature sig(2, 4);
    const RationalCone mori = mori_cone(sig);
    CurveVector c = curve_h1(sig) + Rat(2) * curve_h2(sig);
    for (int i = 1; i <= 4; ++i) c -= curve_e(sig, i);
    CHECK(mori.contains(c.coeffs));
}

TEST_CASE("every listed mori generator is extremal") {
    for (int n = 1; n <= 4; ++n)
        for (int r : {n + 1, n + 2, n + 3}) {
            const RationalCone mori = mori_cone(Signature(n, r));
            const std::size_t expected =
                r == n + 3 ? 3 * std::size_t(r) + (n + 3) : 3 * std::size_t(r) + (r == n + 2);
            CHECK(mori.extremal_rays().size() == expected);
        }
}

TEST_CASE("nef ray counts") {
    CHECK(nef_cone(Signature(2, 3)).extremal_rays().size() == 9);
    CHECK(nef_cone(Signature(2, 4)).extremal_rays().size() == 18);
    CHECK(nef_cone(Signature(4, 7)).extremal_rays().size() == 256 - 21);
}

TEST_CASE("duality of mori and nef cones (small range)") {
    for (int n = 1; n <= 4; ++n)
        for (int r = 0; r <= n + 2; ++r) {
            const Signature sig(n, r);
            CHECK(dual_via_pairing(mori_cone(sig)).equals(nef_cone(sig)));
            CHECK(dual_via_pairing(nef_cone(sig)).equals(mori_cone(sig)));
        }
    for (int n = 1; n <= 4; ++n) {
        const Signature sig(n, n + 3);
        CHECK(dual_via_pairing(mori_cone(sig)).equals(nef_cone(sig)));
    }
}

TEST_CASE("movable and moving-curve cones") {
    {
        const RationalCone mov = movable_cone(2);
        CHECK(mov.full_dimensional());
        const Signature sig(2, 3);
        CHECK(mov.contains(divisor_H1(sig).coeffs));
        const DivisorVector d2 = Rat(2) * divisor_H2(sig) - divisor_E(sig, 1) -
                                 divisor_E(sig, 2) - divisor_E(sig, 3);
        CHECK(mov.contains(d2.coeffs));
    }
    {
        const RationalCone mc = moving_curve_cone(2);
        // h1, h2-ei (3), h1+h2-ei-ej (3), ei (3): all ten generators extremal
        CHECK(mc.extremal_rays().size() == 10);
    }
    for (int n = 2; n <= 4; ++n)
        CHECK(dual_via_pairing(movable_cone(n)).equals(moving_curve_cone(n)));
}

TEST_CASE("dual of movable cone example at n=2") {
    const Signature sig(2, 3);
    std::vector<VecQ> gens{curve_h1(sig).coeffs};
    for (int i = 1; i <= 3; ++i) gens.push_back((curve_h2(sig) - curve_e(sig, i)).coeffs);
    for (int i = 1; i <= 3; ++i)
        for (int j = i + 1; j <= 3; ++j)
            gens.push_back(
                (curve_h1(sig) + curve_h2(sig) - curve_e(sig, i) - curve_e(sig, j)).coeffs);
    for (int i = 1; i <= 3; ++i) gens.push_back(curve_e(sig, i).coeffs);
    CHECK(dual_via_pairing(movable_cone(2)).equals(RationalCone::from_generators(5, gens)));
}

TEST_CASE("inclusion chain nef in movable in effective") {
    for (int n = 2; n <= 4; ++n) {
        const RationalCone nef = nef_cone(Signature(n, n + 1));
        const RationalCone mov = movable_cone(n);
        const RationalCone eff = effective_cone(n);
        for (const auto& ray : nef.extremal_rays()) CHECK(mov.contains(ray));
        for (const auto& ray : mov.extremal_rays()) CHECK(eff.contains(ray));
    }
}

TEST_CASE("effective cone") {
    const RationalCone eff = effective_cone(2);
    CHECK(eff.ambient_dim() == 5);
    CHECK(eff.full_dimensional());
    CHECK(eff.pointed());
    // -K sits strictly inside
    CHECK(eff.contains(anticanonical(Signature(2, 3)).coeffs, /*strict=*/true));
}

TEST_CASE("del Pezzo tables") {
    CHECK(del_pezzo_row_sizes(3) == std::vector<std::size_t>{6, 15, 6});
    CHECK(del_pezzo_row_sizes(2) == std::vector<std::size_t>{7, 21, 21, 7});
    CHECK(del_pezzo_row_sizes(1) == std::vector<std::size_t>{8, 28, 56, 56, 56, 28, 8});
    CHECK(del_pezzo_mori_rays(3).size() == 27);
    CHECK(del_pezzo_mori_rays(2).size() == 56);
    CHECK(del_pezzo_mori_rays(1).size() == 240);
    CHECK_THROWS_AS(del_pezzo_mori_rays(4), input_error);
}

TEST_CASE("del Pezzo embeddings on basis classes") {
    {
        // n=2: ebar_3 -> e_2 (source lattice hbar, ebar_1..ebar_6)
        VecZ cls(7, Int(0));
        cls[3] = 1;
        const CurveVector img = del_pezzo_image(2, cls);
        CHECK(img == curve_e(Signature(2, 5), 2));
    }
    {
        // n=3: hbar - ebar_1 - ebar_2 = e_1
        VecZ cls(8, Int(0));
        cls[0] = 1;
        cls[1] = -1;
        cls[2] = -1;
        CHECK(del_pezzo_image(3, cls) == curve_e(Signature(3, 6), 1));
    }
    {
        // n=4: hbar - ebar_1 - ebar_j = h_2 - e_{j-1}
        for (int j = 2; j <= 8; ++j) {
            VecZ cls(9, Int(0));
            cls[0] = 1;
            cls[1] = -1;
            cls[j] = -1;
            const Signature sig(4, 7);
            CHECK(del_pezzo_image(4, cls) == curve_h2(sig) - curve_e(sig, j - 1));
        }
    }
}

TEST_CASE("del Pezzo embedding verification") {
    CHECK(verify_del_pezzo_embedding(2));
    CHECK(verify_del_pezzo_embedding(3));
    CHECK(verify_del_pezzo_embedding(4));
}

TEST_CASE("ampleness and nefness") {
    {
        const Signature sig(3, 4);
        const DivisorVector d = anticanonical(sig) - Rat(2, 3) * boundary_divisor(sig);
        CHECK(is_ample(d));
        CHECK(is_nef(d));
        const DivisorVector boundary_case = anticanonical(sig) - boundary_divisor(sig);
        CHECK_FALSE(is_ample(boundary_case));
        CHECK(is_nef(boundary_case));
    }
    {
        const Signature sig(2, 3);
        DivisorVector d = divisor_H1(sig) + divisor_H2(sig);
        for (int i = 1; i <= 3; ++i) d -= divisor_E(sig, i);
        CHECK(is_nef(d));
        CHECK_FALSE(is_ample(d));
    }
}

TEST_CASE("log Fano interval") {
    CHECK(log_fano_interval(3) == std::pair<Rat, Rat>{Rat(1, 3), Rat(1)});
    CHECK(log_fano_interval(2) == std::pair<Rat, Rat>{Rat(0), Rat(1)});
    // eps = 3/5 is the left endpoint at n=5, hence not ample
    const Signature sig(5, 6);
    const DivisorVector d = anticanonical(sig) - Rat(3, 5) * boundary_divisor(sig);
    CHECK_FALSE(is_ample(d));
}

TEST_CASE("ampleness scan matches the interval") {
    for (int n = 2; n <= 5; ++n) {
        const Signature sig(n, n + 1);
        const auto [lo, hi] = log_fano_interval(n);
        for (int k = 0; k <= 20; ++k) {
            const Rat eps(k, 20);
            const DivisorVector d = anticanonical(sig) - eps * boundary_divisor(sig);
            CHECK(is_ample(d) == (eps > lo && eps < hi));
        }
    }
}

TEST_CASE("Castravet-Tevelev criterion") {
    CHECK(ct_criterion(1, 2, 6));
    CHECK_FALSE(ct_criterion(1, 2, 9));  // the sum equals 1 exactly
    CHECK(ct_criterion(1, 1, 4));
    CHECK_THROWS_AS(ct_criterion(1, 2, 3), domain_error);
}

TEST_CASE("scroll type") {
    CHECK(scroll_type(5) == std::pair<int, int>{3, 3});
    CHECK(scroll_type(4) == std::pair<int, int>{2, 3});
    for (int n = 1; n <= 10; ++n) {
        const auto [a, b] = scroll_type(n);
        CHECK(a + b == n + 1);
    }
}
