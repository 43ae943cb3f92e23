#pragma once

#include <string>

#include "coxfan/rational.hpp"

namespace coxfan {

// Blow-up of P^1 x P^n in r general points. Both the Picard lattice and
// the lattice of 1-cycles have rank r + 2.
struct Signature {
    int n = 1;
    int r = 0;

    Signature() = default;
    Signature(int n_, int r_);

    int rank() const { return r + 2; }
    bool operator==(const Signature&) const = default;
    std::string str() const;
};

// Divisor class a1*H1 + a2*H2 + b1*E1 + ... + br*Er, coefficients in that
// basis order. H1 is the fiber class of the projection to P^1, H2 the
// hyperplane pull-back from P^n, E_i the exceptional divisors.
struct DivisorVector {
    Signature sig;
    VecQ coeffs;  // length sig.r + 2

    DivisorVector() = default;
    DivisorVector(Signature s, VecQ c);

    DivisorVector& operator+=(const DivisorVector& o);
    DivisorVector& operator-=(const DivisorVector& o);
    DivisorVector& operator*=(const Rat& x);
    friend DivisorVector operator+(DivisorVector a, const DivisorVector& b) { return a += b; }
    friend DivisorVector operator-(DivisorVector a, const DivisorVector& b) { return a -= b; }
    friend DivisorVector operator*(const Rat& x, DivisorVector a) { return a *= x; }
    bool operator==(const DivisorVector&) const = default;
};

// Curve class c1*h1 + c2*h2 + d1*e1 + ... + dr*er. h1 is a fiber of the
// projection to P^n, h2 a line in a fiber over P^1, e_i a line in E_i.
struct CurveVector {
    Signature sig;
    VecQ coeffs;

    CurveVector() = default;
    CurveVector(Signature s, VecQ c);

    CurveVector& operator+=(const CurveVector& o);
    CurveVector& operator-=(const CurveVector& o);
    CurveVector& operator*=(const Rat& x);
    friend CurveVector operator+(CurveVector a, const CurveVector& b) { return a += b; }
    friend CurveVector operator-(CurveVector a, const CurveVector& b) { return a -= b; }
    friend CurveVector operator*(const Rat& x, CurveVector a) { return a *= x; }
    bool operator==(const CurveVector&) const = default;
};

// Basis classes. Exceptional indices are 1-based.
DivisorVector divisor_H1(Signature sig);
DivisorVector divisor_H2(Signature sig);
DivisorVector divisor_E(Signature sig, int i);
CurveVector curve_h1(Signature sig);
CurveVector curve_h2(Signature sig);
CurveVector curve_e(Signature sig, int i);

// Intersection number a1*c1 + a2*c2 - sum b_i*d_i: the bilinear form with
// H_i.h_j = delta_ij, E_i.e_j = -delta_ij and vanishing cross terms.
Rat pairing(const DivisorVector& D, const CurveVector& C);

// -K = 2H1 + (n+1)H2 - n*sum(E_i). Stated for r = n+1 and extended with
// the same coefficient n on every E_i for all other r.
DivisorVector anticanonical(Signature sig);

// (n+1)H2 - n*sum(E_i): the union of the n+1 hyperplane pull-backs through
// n of the n+1 projected points. Only defined for r = n+1.
DivisorVector boundary_divisor(Signature sig);

}  // namespace coxfan
