#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "coxfan/errors.hpp"
#include "coxfan/lattice.hpp"

using namespace coxfan;

TEST_CASE("pairing on basis classes") {
    // H_i.h_j = delta_ij, E_i.e_j = -delta_ij, cross terms vanish
    for (int n = 1; n <= 3; ++n)
        for (int r = 0; r <= n + 2; ++r) {
            const Signature sig(n, r);
            CHECK(pairing(divisor_H1(sig), curve_h1(sig)) == 1);
            CHECK(pairing(divisor_H1(sig), curve_h2(sig)) == 0);
            CHECK(pairing(divisor_H2(sig), curve_h1(sig)) == 0);
            CHECK(pairing(divisor_H2(sig), curve_h2(sig)) == 1);
            for (int i = 1; i <= r; ++i) {
                CHECK(pairing(divisor_H1(sig), curve_e(sig, i)) == 0);
                CHECK(pairing(divisor_H2(sig), curve_e(sig, i)) == 0);
                CHECK(pairing(divisor_E(sig, i), curve_h1(sig)) == 0);
                CHECK(pairing(divisor_E(sig, i), curve_h2(sig)) == 0);
                for (int j = 1; j <= r; ++j)
                    CHECK(pairing(divisor_E(sig, i), curve_e(sig, j)) == (i == j ? -1 : 0));
            }
        }
}

TEST_CASE("pairing worked examples") {
    {
        const Signature sig(3, 4);
        // -K - (1/2) * boundary divisor against e_1
        const DivisorVector D = anticanonical(sig) - Rat(1, 2) * boundary_divisor(sig);
        CHECK(pairing(D, curve_e(sig, 1)) == Rat(3, 2));
    }
    {
        const Signature sig(2, 3);
        const DivisorVector D = divisor_H1(sig) + divisor_H2(sig) - divisor_E(sig, 1) -
                                divisor_E(sig, 2);
        const CurveVector C = curve_h1(sig) - curve_e(sig, 1);
        CHECK(pairing(D, C) == 0);
    }
    {
        const Signature sig(2, 3);
        const CurveVector C = curve_h2(sig) - curve_e(sig, 1);
        CHECK(pairing(boundary_divisor(sig), C) == 1);
    }
}

TEST_CASE("pairing is bilinear") {
    std::mt19937_64 gen(7);
    const auto rnd = [&gen] {
        const long num = static_cast<long>(gen() % 41) - 20;
        const long den = static_cast<long>(gen() % 9) + 1;
        Rat q(num, den);
        q.canonicalize();
        return q;
    };
    const Signature sig(3, 4);
    for (int trial = 0; trial < 50; ++trial) {
        VecQ a(sig.rank()), b(sig.rank()), c(sig.rank());
        for (int i = 0; i < sig.rank(); ++i) {
            a[i] = rnd();
            b[i] = rnd();
            c[i] = rnd();
        }
        const DivisorVector D1(sig, a), D2(sig, b);
        const CurveVector C(sig, c);
        const Rat x = rnd(), y = rnd();
        CHECK(pairing(x * D1 + y * D2, C) == x * pairing(D1, C) + y * pairing(D2, C));
    }
}

TEST_CASE("anticanonical class") {
    CHECK(anticanonical(Signature(3, 4)).coeffs == VecQ{2, 4, -3, -3, -3, -3});
    CHECK(anticanonical(Signature(1, 2)).coeffs == VecQ{2, 2, -1, -1});
    CHECK(anticanonical(Signature(2, 0)).coeffs == VecQ{2, 3});
    for (int n = 1; n <= 6; ++n) {
        const Signature sig(n, n + 1);
        DivisorVector expect = Rat(2) * divisor_H1(sig) + Rat(n + 1) * divisor_H2(sig);
        for (int i = 1; i <= n + 1; ++i) expect -= Rat(n) * divisor_E(sig, i);
        CHECK(anticanonical(sig) == expect);
    }
}

TEST_CASE("boundary divisor") {
    CHECK(boundary_divisor(Signature(2, 3)).coeffs == VecQ{0, 3, -2, -2, -2});
    CHECK(boundary_divisor(Signature(1, 2)).coeffs == VecQ{0, 2, -1, -1});
    CHECK_THROWS_AS(boundary_divisor(Signature(2, 4)), unsupported_signature_error);
}

TEST_CASE("signature and dimension errors") {
    CHECK_THROWS_AS(Signature(0, 1), input_error);
    CHECK_THROWS_AS(Signature(2, -1), input_error);
    const Signature a(2, 3), b(2, 4);
    CHECK_THROWS_AS(pairing(divisor_H1(a), curve_h1(b)), dimension_error);
    CHECK_THROWS_AS(DivisorVector(a, VecQ{1, 2}), dimension_error);
    CHECK_THROWS_AS(divisor_E(a, 4), input_error);
    CHECK_THROWS_AS(divisor_E(a, 0), input_error);
}
