#pragma once

#include <vector>

#include "coxfan/rational.hpp"

namespace coxfan {

/*
 * Pointed convex polyhedral cone over Q with exact data.
 *
 * A cone is stored fully canonicalized: extremal rays and facet normals are
 * primitive integer vectors in ascending lexicographic order, so set
 * equality of cones reduces to sequence equality.  Lower-dimensional cones
 * are supported throughout: the linear span is recorded as a canonical
 * system of integer equations, and facet normals are lifted functionals
 * that cut out the facets inside the span.  A vector v belongs to the cone
 * iff it satisfies every span equation with value 0 and pairs >= 0 with
 * every facet normal; replacing >= with > on the normals tests the
 * relative interior.
 *
 * Cones with lineality (containing a line) are representable only as far
 * as construction goes; ray enumeration and duals reject them.
 */
class RationalCone {
public:
    RationalCone() = default;

    // Smallest convex cone containing the generators.
    static RationalCone from_generators(int ambient_dim, const std::vector<VecQ>& gens);
    static RationalCone from_generators_z(int ambient_dim, const std::vector<VecZ>& gens);

    // {x : e.x = 0 for all equations, h.x >= 0 for all inequalities}.
    // Rejects systems whose solution cone contains a line.
    static RationalCone from_constraints(int ambient_dim, const std::vector<VecZ>& equations,
                                         const std::vector<VecZ>& inequalities);

    int ambient_dim() const { return ambient_dim_; }
    int dim() const { return dim_; }
    bool pointed() const { return pointed_; }
    bool full_dimensional() const { return dim_ == ambient_dim_; }
    bool is_zero() const { return dim_ == 0; }

    // Canonical minimal generating set; every element is extremal.
    const std::vector<VecZ>& extremal_rays() const;

    // Inward facet normals of a full-dimensional pointed cone.
    const std::vector<VecZ>& facet_normals() const;

    // H-representation pieces valid in any dimension.
    const std::vector<VecZ>& span_equations() const { return equations_; }
    const std::vector<VecZ>& relative_facet_normals() const { return facets_; }

    bool contains(const VecQ& v, bool strict = false) const;
    bool contains(const VecZ& v, bool strict = false) const;

    // Sum of the canonical extremal rays; exact relative-interior point.
    VecQ relative_interior_point() const;

    // {w : w.v >= 0 for all v in the cone} under the standard dot product.
    // Defined here only for full-dimensional pointed cones.
    RationalCone dual() const;

    RationalCone intersect(const RationalCone& other) const;

    bool equals(const RationalCone& other) const;

private:
    int ambient_dim_ = 0;
    int dim_ = 0;
    bool pointed_ = true;
    std::vector<VecZ> rays_;       // canonical extremal rays (empty if not pointed)
    std::vector<VecZ> facets_;     // lifted inward facet normals, canonical
    std::vector<VecZ> equations_;  // canonical basis of span(C)^perp
};

namespace detail {

// Double description: extremal rays of {x : h.x >= 0 for h in ineqs} in
// R^dim.  Requires the inequality system to have rank dim (pointed cone);
// throws unsupported_error otherwise.  Output is primitive and lex-sorted.
std::vector<VecZ> dd_extremal_rays(std::vector<VecZ> ineqs, int dim);

// Reduced row echelon form over Q; returns rank. Pivot columns, in order,
// are appended to pivots when non-null.
int rref(std::vector<VecQ>& rows, std::vector<int>* pivots);

// Canonical primitive integer basis of {x : row.x = 0 for all rows}.
std::vector<VecZ> kernel_basis(const std::vector<VecZ>& rows, int dim);

}  // namespace detail

}  // namespace coxfan
