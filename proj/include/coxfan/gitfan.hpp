#pragma once

#include <cstddef>
#include <vector>

#include "coxfan/cone.hpp"
#include "coxfan/coxring.hpp"

namespace coxfan {

// Full-dimensional chambers of the fan on the effective cone determined by
// the orbit cones of the Cox presentation. Chambers carry a certified
// exact interior point and come in canonical (extremal-ray) order.
struct ChamberSet {
    struct Chamber {
        RationalCone cone;
        VecQ interior_point;
    };
    std::vector<Chamber> chambers;
    RationalCone support;  // the effective cone
};

// The chamber of a generic point w: the intersection of every orbit cone
// containing w, cut to the support. w must be interior to the support and
// off every wall hyperplane of the arrangement; otherwise domain_error /
// wall_error.
RationalCone chamber_of(const VecQ& w, const std::vector<RationalCone>& orbit_cones,
                        const RationalCone& support);

// Complete chamber enumeration by exact facet-crossing traversal, seeded
// inside the nef chamber. Deterministic canonical output for any number of
// worker threads.
ChamberSet mori_chamber_decomposition(const CoxPresentation& pres, int jobs = 1,
                                      std::size_t max_chambers = 200000);

std::size_t chamber_count(const CoxPresentation& pres, int jobs = 1);

// Chamber location of a divisor class. Either the unique chamber whose
// interior contains D, or the list of chambers whose boundary D lies on.
struct LocateResult {
    bool on_wall = false;
    std::size_t chamber = 0;              // valid when !on_wall
    std::vector<std::size_t> incident;    // valid when on_wall
};

LocateResult locate(const DivisorVector& D, const ChamberSet& cs);

}  // namespace coxfan
