#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "qeuler/big_rational.hpp"
#include "qeuler/zpoly.hpp"

namespace qeuler {

// Dense univariate polynomial in the indeterminate q over the rationals.
// Coefficients are indexed by degree; the zero polynomial has none.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<BigRational> coefficients);
  QPoly(long constant);  // NOLINT(google-explicit-constructor)
  QPoly(BigRational constant);  // NOLINT(google-explicit-constructor)

  // c * q^k
  static QPoly monomial(unsigned k, BigRational c = 1);
  static QPoly q() { return monomial(1); }

  const std::vector<BigRational>& coefficients() const { return coeffs_; }
  // Zero beyond the stored degree.
  BigRational coefficient(std::size_t k) const;
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const BigRational& leading() const;

  QPoly operator-() const;
  QPoly& operator+=(const QPoly& rhs);
  QPoly& operator-=(const QPoly& rhs);
  QPoly& operator*=(const QPoly& rhs);

  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(QPoly a, const QPoly& b) { return a *= b; }
  friend bool operator==(const QPoly& a, const QPoly& b) = default;

  QPoly pow(unsigned exponent) const;
  QPoly monic() const;

  // Euclidean division over Q[q]: returns (quotient, remainder).
  std::pair<QPoly, QPoly> divmod(const QPoly& divisor) const;
  bool divides(const QPoly& other) const;

  BigRational eval(const BigRational& at) const;
  // Exact evaluation at a Gaussian rational re + i*im.
  std::pair<BigRational, BigRational> eval(const BigRational& re, const BigRational& im) const;

  // "q^2 - 3/2*q + 1"; "0" for the zero polynomial.
  std::string to_string() const;
  std::string to_latex() const;

 private:
  void trim();

  std::vector<BigRational> coeffs_;
};

// Monic gcd over Q[q]; gcd(0, 0) = 0.
QPoly gcd(const QPoly& a, const QPoly& b);

namespace detail {

// p == scale * primitive, primitive with positive leading coefficient.
std::pair<BigRational, ZPoly> to_primitive(const QPoly& p);
QPoly to_qpoly(const ZPoly& p, const BigRational& scale = 1);

}  // namespace detail

}  // namespace qeuler
