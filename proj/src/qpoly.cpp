#include "qeuler/qpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace qeuler {

namespace {

// Shared by the plain and LaTeX renderers; `term` formats |c| q^k.
template <typename TermFn>
std::string render_terms(const std::vector<BigRational>& coeffs, TermFn term) {
  if (coeffs.empty()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    const BigRational& c = coeffs[k];
    if (c.is_zero()) continue;
    if (first) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    out += term(c.abs(), static_cast<unsigned>(k));
    first = false;
  }
  return out;
}

}  // namespace

QPoly::QPoly(std::vector<BigRational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

QPoly::QPoly(long constant) : QPoly(BigRational(constant)) {}

QPoly::QPoly(BigRational constant) {
  if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
}

QPoly QPoly::monomial(unsigned k, BigRational c) {
  if (c.is_zero()) return {};
  std::vector<BigRational> coeffs(k + 1);
  coeffs[k] = std::move(c);
  return QPoly(std::move(coeffs));
}

void QPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

BigRational QPoly::coefficient(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : BigRational(0);
}

const BigRational& QPoly::leading() const {
  if (coeffs_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

QPoly QPoly::operator-() const {
  QPoly r(*this);
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

QPoly& QPoly::operator+=(const QPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator*=(const QPoly& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  auto [sa, za] = detail::to_primitive(*this);
  auto [sb, zb] = detail::to_primitive(rhs);
  *this = detail::to_qpoly(detail::mul(za, zb), sa * sb);
  return *this;
}

QPoly QPoly::pow(unsigned exponent) const {
  QPoly result(1);
  QPoly base(*this);
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

QPoly QPoly::monic() const {
  if (is_zero()) return {};
  QPoly r(*this);
  BigRational lead = r.coeffs_.back();
  for (auto& c : r.coeffs_) c /= lead;
  return r;
}

std::pair<QPoly, QPoly> QPoly::divmod(const QPoly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("QPoly: division by zero polynomial");
  std::vector<BigRational> rem = coeffs_;
  if (rem.size() < divisor.coeffs_.size()) return {QPoly(), *this};
  std::vector<BigRational> quot(rem.size() - divisor.coeffs_.size() + 1);
  const BigRational& lead = divisor.coeffs_.back();
  for (std::size_t k = quot.size(); k-- > 0;) {
    BigRational factor = rem[k + divisor.coeffs_.size() - 1] / lead;
    if (factor.is_zero()) continue;
    for (std::size_t i = 0; i < divisor.coeffs_.size(); ++i) {
      rem[k + i] -= factor * divisor.coeffs_[i];
    }
    quot[k] = std::move(factor);
  }
  return {QPoly(std::move(quot)), QPoly(std::move(rem))};
}

bool QPoly::divides(const QPoly& other) const { return other.divmod(*this).second.is_zero(); }

BigRational QPoly::eval(const BigRational& at) const {
  BigRational acc = 0;
  for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * at + coeffs_[k];
  return acc;
}

std::pair<BigRational, BigRational> QPoly::eval(const BigRational& re, const BigRational& im) const {
  BigRational acc_re = 0;
  BigRational acc_im = 0;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    BigRational next_re = acc_re * re - acc_im * im + coeffs_[k];
    acc_im = acc_re * im + acc_im * re;
    acc_re = std::move(next_re);
  }
  return {acc_re, acc_im};
}

std::string QPoly::to_string() const {
  return render_terms(coeffs_, [](const BigRational& c, unsigned k) {
    if (k == 0) return c.to_string();
    std::string power = k == 1 ? "q" : "q^" + std::to_string(k);
    return c == BigRational(1) ? power : c.to_string() + "*" + power;
  });
}

std::string QPoly::to_latex() const {
  return render_terms(coeffs_, [](const BigRational& c, unsigned k) {
    std::string coef = c.is_integer()
                           ? c.to_string()
                           : "\\frac{" + c.numerator().get_str() + "}{" + c.denominator().get_str() + "}";
    if (k == 0) return coef;
    std::string power = k == 1 ? "q" : "q^{" + std::to_string(k) + "}";
    return c == BigRational(1) ? power : coef + " " + power;
  });
}

QPoly gcd(const QPoly& a, const QPoly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  auto za = detail::to_primitive(a).second;
  auto zb = detail::to_primitive(b).second;
  return detail::to_qpoly(detail::gcd_with_cofactors(za, zb).gcd).monic();
}

namespace detail {

std::pair<BigRational, ZPoly> to_primitive(const QPoly& p) {
  const auto& coeffs = p.coefficients();
  if (coeffs.empty()) return {BigRational(0), {}};
  BigInteger common_den = 1;
  for (const auto& c : coeffs) {
    BigInteger d = c.denominator();
    mpz_lcm(common_den.get_mpz_t(), common_den.get_mpz_t(), d.get_mpz_t());
  }
  ZPoly z(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    z[i] = coeffs[i].numerator() * (common_den / coeffs[i].denominator());
  }
  BigInteger factor = make_primitive(z);
  return {BigRational(factor, common_den), std::move(z)};
}

QPoly to_qpoly(const ZPoly& p, const BigRational& scale) {
  std::vector<BigRational> coeffs;
  coeffs.reserve(p.size());
  for (const auto& c : p) coeffs.push_back(scale * BigRational(c));
  return QPoly(std::move(coeffs));
}

}  // namespace detail

}  // namespace qeuler
