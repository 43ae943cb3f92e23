#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "coxfan/cone.hpp"
#include "coxfan/lattice.hpp"

namespace coxfan {

// P^1-coordinates [alpha_i : beta_i] of the n+1 blown-up points. The first
// three are normalized to [0,1], [1,0], [1,1]; generality means all
// pairwise minors beta_i*alpha_j - beta_j*alpha_i are nonzero.
struct PointConfig {
    int n = 0;
    std::vector<std::pair<Rat, Rat>> points;

    Rat minor(int i, int j) const;  // 1-based
    void validate() const;          // throws degenerate_error
};

// First three points fixed; the remaining n-2 drawn from a seeded
// deterministic generator with small-height rational values, resampled
// until the configuration is general.
PointConfig sample_points(int n, std::uint64_t seed);

// Presentation of the total coordinate ring of X^{1,n}_{n+1}: 3n+3 graded
// generators S_0..S_n, T_{1,1}, T_{1,2}, ..., T_{n+1,1}, T_{n+1,2} and the
// n-1 trinomial relations
//   g_i = c1 * T_{i,1}T_{i,2} + c2 * T_{j,1}T_{j,2} + c3 * T_{k,1}T_{k,2},
// with k = j+1 = i+2 and coefficients given by point minors. All isotropy
// orders are 1 and every monomial is a product of two generators.
struct CoxPresentation {
    struct Generator {
        std::string name;
        DivisorVector degree;
    };
    struct Monomial {
        Rat coeff;
        std::pair<int, int> factors;  // generator indices
    };
    using Trinomial = std::array<Monomial, 3>;

    int n = 0;
    PointConfig config;
    std::vector<Generator> generators;  // fixed order, see above
    std::vector<Trinomial> relations;

    int num_generators() const { return static_cast<int>(generators.size()); }
    // index helpers for the fixed generator order
    int s_index(int i) const { return i; }                        // S_i, 0 <= i <= n
    int t_index(int i, int j) const { return (n + 1) + 2 * (i - 1) + (j - 1); }  // T_{i,j}
};

CoxPresentation build_presentation(int n, const PointConfig& config);

// Every relation monomial shares one Cl-degree (which telescopes to H1).
bool check_homogeneity(const CoxPresentation& pres);

// A subset of generators supporting a point of the characteristic variety.
// The subset is a bitmask in the fixed generator order (bit i = generator i).
struct AFace {
    std::uint32_t subset = 0;
};

// All feasible supports. The relations are linear in the pair products
// u_i = T_{i,1}T_{i,2} and their solution space is exactly
// span{alpha, beta}; a support is feasible iff that plane admits a vector
// vanishing on the incomplete pairs and nonvanishing on the complete ones.
// Decided by exact linear algebra with an explicit witness.
std::vector<AFace> a_faces(const CoxPresentation& pres);

// Cone spanned by the degrees of one a-face support.
RationalCone a_face_orbit_cone(const CoxPresentation& pres, const AFace& face);

// Deduplicated cones of degrees of a-face supports, canonical order.
std::vector<RationalCone> orbit_cones(const CoxPresentation& pres);

// Degrees of all generators as integer vectors (order as in generators).
std::vector<VecZ> generator_degrees(const CoxPresentation& pres);

}  // namespace coxfan
