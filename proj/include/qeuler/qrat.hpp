#pragma once

#include <complex>
#include <string>

#include <nlohmann/json.hpp>

#include "qeuler/big_rational.hpp"
#include "qeuler/qpoly.hpp"
#include "qeuler/zpoly.hpp"

namespace qeuler {

/**
 * Element of the rational function field Q(q), always in canonical form.
 *
 * The canonical form is num/den with gcd(num, den) = 1 over Q[q] and den
 * monic, so field equality is plain component-wise equality. Internally the
 * value is stored as scale * N / D with N and D primitive integer
 * polynomials with positive leading coefficients; that triple is unique
 * for each field element and keeps all gcd work in Z[q].
 *
 * Values are immutable once constructed and safe to share across threads.
 */
class QRat {
 public:
  QRat() = default;  // zero
  QRat(long constant);  // NOLINT(google-explicit-constructor)
  QRat(const BigRational& constant);  // NOLINT(google-explicit-constructor)
  QRat(const QPoly& poly);  // NOLINT(google-explicit-constructor)
  // Throws std::domain_error when den is the zero polynomial.
  QRat(const QPoly& num, const QPoly& den);

  static QRat q() { return QRat(QPoly::q()); }

  // Canonical numerator/denominator (den monic).
  QPoly num() const;
  QPoly den() const;

  bool is_zero() const { return scale_.is_zero(); }
  bool is_polynomial() const { return den_.size() == 1; }

  QRat operator-() const;
  friend QRat operator+(const QRat& a, const QRat& b);
  friend QRat operator-(const QRat& a, const QRat& b);
  friend QRat operator*(const QRat& a, const QRat& b);
  // Throws std::domain_error on division by zero.
  friend QRat operator/(const QRat& a, const QRat& b);
  QRat& operator+=(const QRat& rhs) { return *this = *this + rhs; }
  QRat& operator-=(const QRat& rhs) { return *this = *this - rhs; }
  QRat& operator*=(const QRat& rhs) { return *this = *this * rhs; }
  QRat& operator/=(const QRat& rhs) { return *this = *this / rhs; }

  friend bool operator==(const QRat& a, const QRat& b) = default;

  QRat inverse() const;
  QRat pow(unsigned exponent) const;

  // Throws PoleError if the reduced denominator vanishes at the point.
  BigRational eval(const BigRational& at) const;
  // Exact evaluation in Q(i) at the binary value of `at`, rounded once at the end.
  std::complex<double> eval(std::complex<double> at) const;

  // Human form: "(-q)/(q^2 + 1)", or just the numerator when den = 1.
  std::string to_string() const;
  std::string to_latex() const;
  // Machine form: {"num": ["c0", ...], "den": ["c0", ...]}.
  nlohmann::ordered_json to_json() const;
  static QRat from_json(const nlohmann::ordered_json& j);

 private:
  static QRat from_parts(BigRational scale, detail::ZPoly num, detail::ZPoly den);

  BigRational scale_{0};
  detail::ZPoly num_{};                     // primitive, lc > 0; empty iff zero
  detail::ZPoly den_{BigInteger(1)};        // primitive, lc > 0
};

}  // namespace qeuler
