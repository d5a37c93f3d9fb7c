#pragma once

#include <optional>
#include <vector>

#include "qeuler/big_rational.hpp"

// Dense polynomials over the integers. Used underneath QPoly/QRat so that
// canonicalization works on primitive integer polynomials and never pays
// for rational-coefficient gcds.
namespace qeuler::detail {

// Coefficients indexed by degree; no trailing zeros. Zero polynomial is empty.
using ZPoly = std::vector<BigInteger>;

void trim(ZPoly& p);
int degree(const ZPoly& p);  // -1 for the zero polynomial

ZPoly add(const ZPoly& a, const ZPoly& b);
ZPoly sub(const ZPoly& a, const ZPoly& b);
ZPoly mul(const ZPoly& a, const ZPoly& b);
ZPoly scale(const ZPoly& a, const BigInteger& c);

// Nonnegative gcd of the coefficients; 0 for the zero polynomial.
BigInteger content(const ZPoly& p);
// Divides out the content and makes the leading coefficient positive.
// Returns the signed factor that was removed (p == factor * result).
BigInteger make_primitive(ZPoly& p);

// Exact division in Z[x]; nullopt when b does not divide a.
std::optional<ZPoly> divide_exact(const ZPoly& a, const ZPoly& b);

struct GcdResult {
  ZPoly gcd;       // primitive, positive leading coefficient
  ZPoly cofactor_a;
  ZPoly cofactor_b;
};

// gcd of two primitive polynomials with positive leading coefficients,
// together with the exact cofactors. Multi-prime modular algorithm with
// trial-division acceptance, so the result is always exact.
GcdResult gcd_with_cofactors(const ZPoly& a, const ZPoly& b);

}  // namespace qeuler::detail
