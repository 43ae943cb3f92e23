#include "coxfan/rational.hpp"

#include "coxfan/errors.hpp"

namespace coxfan {

Int dot(const VecZ& a, const VecZ& b) {
    if (a.size() != b.size()) throw dimension_error("dot: length mismatch");
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rat dot_q(const VecZ& a, const VecQ& b) {
    if (a.size() != b.size()) throw dimension_error("dot_q: length mismatch");
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
    return s;
}

VecZ primitive(VecZ v) {
    Int g = 0;
    for (const auto& x : v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) return v;
    }
    if (g == 0) return v;
    for (auto& x : v) x /= g;
    return v;
}

VecZ integer_primitive(const VecQ& v) {
    Int den = 1;
    for (const auto& q : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den().get_mpz_t());
    VecZ out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].get_num() * (den / v[i].get_den());
    return primitive(std::move(out));
}

VecQ to_rational(const VecZ& v) {
    VecQ out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rat(v[i]);
    return out;
}

VecZ negate(VecZ v) {
    for (auto& x : v) x = -x;
    return v;
}

VecZ canonical_sign(VecZ v) {
    for (const auto& x : v) {
        if (x > 0) return v;
        if (x < 0) return negate(std::move(v));
    }
    return v;
}

bool lex_less(const VecZ& a, const VecZ& b) {
    const std::size_t m = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < m; ++i) {
        const int c = cmp(a[i], b[i]);
        if (c != 0) return c < 0;
    }
    return a.size() < b.size();
}

std::string rat_to_string(const Rat& q) { return q.get_str(); }

Rat rat_from_string(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0) throw input_error("cannot parse rational: " + s);
    q.canonicalize();
    return q;
}

}  // namespace coxfan
