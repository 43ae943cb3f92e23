#include "coxfan/lattice.hpp"

#include "coxfan/errors.hpp"

namespace coxfan {

Signature::Signature(int n_, int r_) : n(n_), r(r_) {
    if (n < 1) throw input_error("signature requires n >= 1");
    if (r < 0) throw input_error("signature requires r >= 0");
}

std::string Signature::str() const {
    return "(n=" + std::to_string(n) + ", r=" + std::to_string(r) + ")";
}

namespace {
VecQ check_len(const Signature& s, VecQ c, const char* what) {
    if (static_cast<int>(c.size()) != s.rank())
        throw dimension_error(std::string(what) + ": expected " + std::to_string(s.rank()) +
                              " coefficients, got " + std::to_string(c.size()));
    return c;
}

VecQ basis_vec(const Signature& s, int idx) {
    VecQ v(s.rank(), Rat(0));
    v[idx] = 1;
    return v;
}

int e_index(const Signature& s, int i, const char* what) {
    if (i < 1 || i > s.r)
        throw input_error(std::string(what) + ": exceptional index " + std::to_string(i) +
                          " out of range for " + s.str());
    return 1 + i;
}
}  // namespace

DivisorVector::DivisorVector(Signature s, VecQ c)
    : sig(s), coeffs(check_len(s, std::move(c), "DivisorVector")) {}

CurveVector::CurveVector(Signature s, VecQ c)
    : sig(s), coeffs(check_len(s, std::move(c), "CurveVector")) {}

namespace {
template <typename T>
T& add_impl(T& a, const T& b, int sign) {
    if (!(a.sig == b.sig))
        throw dimension_error("vector arithmetic: signature mismatch " + a.sig.str() + " vs " +
                              b.sig.str());
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
        a.coeffs[i] += sign > 0 ? b.coeffs[i] : -b.coeffs[i];
    return a;
}
}  // namespace

DivisorVector& DivisorVector::operator+=(const DivisorVector& o) { return add_impl(*this, o, 1); }
DivisorVector& DivisorVector::operator-=(const DivisorVector& o) { return add_impl(*this, o, -1); }
DivisorVector& DivisorVector::operator*=(const Rat& x) {
    for (auto& c : coeffs) c *= x;
    return *this;
}

CurveVector& CurveVector::operator+=(const CurveVector& o) { return add_impl(*this, o, 1); }
CurveVector& CurveVector::operator-=(const CurveVector& o) { return add_impl(*this, o, -1); }
CurveVector& CurveVector::operator*=(const Rat& x) {
    for (auto& c : coeffs) c *= x;
    return *this;
}

DivisorVector divisor_H1(Signature sig) { return {sig, basis_vec(sig, 0)}; }
DivisorVector divisor_H2(Signature sig) { return {sig, basis_vec(sig, 1)}; }
DivisorVector divisor_E(Signature sig, int i) {
    return {sig, basis_vec(sig, e_index(sig, i, "divisor_E"))};
}
CurveVector curve_h1(Signature sig) { return {sig, basis_vec(sig, 0)}; }
CurveVector curve_h2(Signature sig) { return {sig, basis_vec(sig, 1)}; }
CurveVector curve_e(Signature sig, int i) {
    return {sig, basis_vec(sig, e_index(sig, i, "curve_e"))};
}

Rat pairing(const DivisorVector& D, const CurveVector& C) {
    if (!(D.sig == C.sig))
        throw dimension_error("pairing: signature mismatch " + D.sig.str() + " vs " + C.sig.str());
    Rat s = D.coeffs[0] * C.coeffs[0] + D.coeffs[1] * C.coeffs[1];
    for (int i = 2; i < D.sig.rank(); ++i) s -= D.coeffs[i] * C.coeffs[i];
    return s;
}

DivisorVector anticanonical(Signature sig) {
    VecQ v(sig.rank());
    v[0] = 2;
    v[1] = sig.n + 1;
    for (int i = 2; i < sig.rank(); ++i) v[i] = -sig.n;
    return {sig, std::move(v)};
}

DivisorVector boundary_divisor(Signature sig) {
    if (sig.r != sig.n + 1)
        throw unsupported_signature_error("boundary_divisor requires r = n+1, got " + sig.str());
    VecQ v(sig.rank());
    v[0] = 0;
    v[1] = sig.n + 1;
    for (int i = 2; i < sig.rank(); ++i) v[i] = -sig.n;
    return {sig, std::move(v)};
}

}  // namespace coxfan
