#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace coxfan {

// Exact scalars. No floating point anywhere in the library.
using Int = mpz_class;
using Rat = mpq_class;
using VecZ = std::vector<Int>;
using VecQ = std::vector<Rat>;

Int dot(const VecZ& a, const VecZ& b);
Rat dot_q(const VecZ& a, const VecQ& b);

// Divide by the content (gcd of entries). The zero vector stays zero.
VecZ primitive(VecZ v);

// Clear denominators and reduce to a primitive integer vector.
VecZ integer_primitive(const VecQ& v);

VecQ to_rational(const VecZ& v);
VecZ negate(VecZ v);

// Canonical orientation for an undirected hyperplane normal: first nonzero
// entry positive.
VecZ canonical_sign(VecZ v);

bool lex_less(const VecZ& a, const VecZ& b);

// "p/q" with q omitted when 1 (mpq_class canonical form).
std::string rat_to_string(const Rat& q);
Rat rat_from_string(const std::string& s);

}  // namespace coxfan
