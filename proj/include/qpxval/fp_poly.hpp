#pragma once

// Dense arithmetic for F_p[t] at desk scale. Coefficients are canonical
// representatives in [0, p); the vector is little-endian and trimmed.
// Shared by the residue-field arithmetic and the Newton-polygon residual
// factorization; not part of the public module surface.

#include <cstdint>
#include <utility>
#include <vector>

namespace qpxval::fp {

using Coeff = std::int64_t;
using FpPoly = std::vector<Coeff>;

Coeff mod_reduce(Coeff a, Coeff p);
Coeff mod_inverse(Coeff a, Coeff p); // a != 0 mod p

void trim(FpPoly& f);
bool is_zero(const FpPoly& f);
int degree(const FpPoly& f); // -1 for the zero polynomial (internal use only)

FpPoly add(const FpPoly& a, const FpPoly& b, Coeff p);
FpPoly sub(const FpPoly& a, const FpPoly& b, Coeff p);
FpPoly mul(const FpPoly& a, const FpPoly& b, Coeff p);
FpPoly scalar_mul(const FpPoly& a, Coeff s, Coeff p);
std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b, Coeff p);
FpPoly mod(const FpPoly& a, const FpPoly& m, Coeff p);
FpPoly monic(const FpPoly& a, Coeff p);
FpPoly gcd(FpPoly a, FpPoly b, Coeff p);

// Inverse of a modulo m (gcd(a, m) = 1 required).
FpPoly inverse_mod(const FpPoly& a, const FpPoly& m, Coeff p);

std::vector<Coeff> roots(const FpPoly& f, Coeff p);

// Full factorization into monic irreducibles with multiplicities, by root
// extraction and trial division with monic factors of increasing degree.
// Desk scale: intended for small p and degree.
std::vector<std::pair<FpPoly, int>> factor(FpPoly f, Coeff p);

bool is_irreducible(const FpPoly& f, Coeff p);

} // namespace qpxval::fp
