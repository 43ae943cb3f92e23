#pragma once

#include <utility>
#include <vector>

#include "coxfan/cone.hpp"
#include "coxfan/lattice.hpp"

namespace coxfan {

// Supported range for the Mori/nef cone generator lists: r <= n+2 always,
// r = n+3 only for n <= 4. Everything else is undetermined and errors out.
bool signature_supported(Signature sig);

// Cone of effective curves, in the curve lattice (h1, h2, e_1..e_r).
// Generators: h1-e_i, h2-e_i, e_i; plus h1+n*h2-e_1-...-e_{n+2} when
// r = n+2; plus h1+n*h2 minus every (n+2)-subset when r = n+3.
RationalCone mori_cone(Signature sig);

// Nef cone in the Picard lattice (H1, H2, E_1..E_r), built from the
// explicit generator lists; equals the pairing-dual of the Mori cone.
RationalCone nef_cone(Signature sig);

// Dual of a curve-space cone inside the Picard lattice: standard dual
// composed with the E-sign involution induced by the intersection pairing
// (and vice versa; the identification is an involution).
RationalCone dual_via_pairing(const RationalCone& c);

// Movable cone of X^{1,n}_{n+1} in the Picard lattice.
RationalCone movable_cone(int n);

// Cone of curve classes covering a divisor; pairing-dual of the movable cone.
RationalCone moving_curve_cone(int n);

// Effective cone of X^{1,n}_{n+1}: generated by the 3n+3 degrees of the
// Cox ring generators (H2 - sum E + E_i, H1 - E_i, E_i).
RationalCone effective_cone(int n);

// Expanded extremal-ray table of the del Pezzo surface of the given degree
// (1, 2 or 3), in the lattice (hbar, ebar_1..ebar_{9-degree}).
std::vector<VecZ> del_pezzo_mori_rays(int degree);

// Sizes of the expanded table rows, in table order.
std::vector<std::size_t> del_pezzo_row_sizes(int degree);

// Linear embedding of the del Pezzo curve lattice into the curve lattice
// of X^{1,n}_{n+3}, for n = 2, 3, 4. Column i is the image of the i-th
// basis vector (hbar, ebar_1, ebar_2, ...).
std::vector<VecZ> del_pezzo_embedding(int n);

// Image of a del Pezzo class under the embedding.
CurveVector del_pezzo_image(int n, const VecZ& del_pezzo_class);

// Every del Pezzo extremal ray maps into mori_cone(n, n+3).
bool verify_del_pezzo_embedding(int n);

// Kleiman tests against the Mori extremal rays.
bool is_nef(const DivisorVector& D);
bool is_ample(const DivisorVector& D);

// Open interval ((n-2)/n, 1): -K - eps*D is ample exactly for eps inside.
std::pair<Rat, Rat> log_fano_interval(int n);

// 1/(s+1) + 1/(r-n-1) + 1/(n+1) > 1, exactly.
bool ct_criterion(int s, int n, int r);

// Splitting type of a general codimension n-1 linear section of the Segre
// variety of P^1 x P^n: ((n+1)/2,(n+1)/2) for odd n, (n/2,(n+2)/2) for even.
std::pair<int, int> scroll_type(int n);

}  // namespace coxfan
