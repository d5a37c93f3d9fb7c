#pragma once

#include <compare>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace qeuler {

using BigInteger = mpz_class;

/**
 * Exact rational number backed by GMP.
 *
 * Always held in lowest terms with a positive denominator; zero is 0/1.
 * None of the operations round.
 */
class BigRational {
 public:
  BigRational() = default;
  BigRational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  explicit BigRational(const BigInteger& value) : value_(value) {}
  BigRational(const BigInteger& num, const BigInteger& den);

  // Accepts "p", "-p", "p/q". Throws ParameterError on malformed input
  // or a zero denominator.
  static BigRational parse(std::string_view text);
  // Exact binary value of a finite double.
  static BigRational from_double(double value);

  BigInteger numerator() const { return value_.get_num(); }
  BigInteger denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  double to_double() const { return value_.get_d(); }
  // "p" for integers, "p/q" otherwise.
  std::string to_string() const;

  BigRational operator-() const;
  BigRational& operator+=(const BigRational& rhs);
  BigRational& operator-=(const BigRational& rhs);
  BigRational& operator*=(const BigRational& rhs);
  BigRational& operator/=(const BigRational& rhs);

  friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
  friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
  friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
  friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }

  friend bool operator==(const BigRational& a, const BigRational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  BigRational pow(unsigned long exponent) const;
  BigRational abs() const;

  const mpq_class& raw() const { return value_; }

 private:
  explicit BigRational(mpq_class value) : value_(std::move(value)) {}

  mpq_class value_;
};

}  // namespace qeuler
