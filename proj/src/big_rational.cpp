#include "qeuler/big_rational.hpp"

#include <cmath>

#include "qeuler/errors.hpp"

namespace qeuler {

namespace {

bool parse_integer(std::string_view text, BigInteger& out) {
  if (text.empty()) return false;
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) return false;
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') return false;
  }
  std::string digits(text[0] == '+' ? text.substr(1) : text);
  return out.set_str(digits, 10) == 0;
}

}  // namespace

BigRational::BigRational(const BigInteger& num, const BigInteger& den) {
  if (den == 0) throw std::domain_error("BigRational: zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

BigRational BigRational::parse(std::string_view text) {
  BigInteger num;
  BigInteger den = 1;
  auto slash = text.find('/');
  bool ok = slash == std::string_view::npos
                ? parse_integer(text, num)
                : parse_integer(text.substr(0, slash), num) &&
                      parse_integer(text.substr(slash + 1), den);
  if (!ok) throw ParameterError("malformed rational '" + std::string(text) + "'");
  if (den == 0) throw ParameterError("zero denominator in '" + std::string(text) + "'");
  return BigRational(num, den);
}

BigRational BigRational::from_double(double value) {
  if (!std::isfinite(value)) throw ParameterError("non-finite double has no rational value");
  return BigRational(mpq_class(value));
}

std::string BigRational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

BigRational BigRational::operator-() const { return BigRational(mpq_class(-value_)); }

BigRational& BigRational::operator+=(const BigRational& rhs) {
  value_ += rhs.value_;
  return *this;
}

BigRational& BigRational::operator-=(const BigRational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

BigRational& BigRational::operator*=(const BigRational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

BigRational& BigRational::operator/=(const BigRational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("BigRational: division by zero");
  value_ /= rhs.value_;
  return *this;
}

BigRational BigRational::pow(unsigned long exponent) const {
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), exponent);
  // Powers of coprime integers stay coprime.
  mpq_class r;
  r.get_num() = num;
  r.get_den() = den;
  return BigRational(std::move(r));
}

BigRational BigRational::abs() const { return BigRational(mpq_class(::abs(value_))); }

}  // namespace qeuler
