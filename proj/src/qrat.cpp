#include "qeuler/qrat.hpp"

#include <stdexcept>

#include "qeuler/errors.hpp"

namespace qeuler {

using detail::ZPoly;

namespace {

const ZPoly& one() {
  static const ZPoly kOne{BigInteger(1)};
  return kOne;
}

bool is_one(const ZPoly& p) { return p.size() == 1 && p[0] == 1; }

// Exact gcd; skips the modular machinery when either side is 1.
detail::GcdResult coprime_split(const ZPoly& a, const ZPoly& b) {
  if (is_one(a) || is_one(b)) return {one(), a, b};
  return detail::gcd_with_cofactors(a, b);
}

nlohmann::ordered_json coefficients_json(const QPoly& p) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : p.coefficients()) arr.push_back(c.to_string());
  return arr;
}

QPoly coefficients_from_json(const nlohmann::ordered_json& arr) {
  if (!arr.is_array()) throw ParameterError("QRat JSON: coefficient list must be an array");
  std::vector<BigRational> coeffs;
  for (const auto& c : arr) {
    if (!c.is_string()) throw ParameterError("QRat JSON: coefficients must be strings");
    coeffs.push_back(BigRational::parse(c.get<std::string>()));
  }
  return QPoly(std::move(coeffs));
}

}  // namespace

QRat QRat::from_parts(BigRational scale, ZPoly num, ZPoly den) {
  QRat r;
  if (scale.is_zero() || num.empty()) return r;
  if (den.empty()) throw std::domain_error("QRat: zero denominator");
  BigInteger cn = detail::make_primitive(num);
  BigInteger cd = detail::make_primitive(den);
  r.scale_ = scale * BigRational(cn, cd);
  r.num_ = std::move(num);
  r.den_ = std::move(den);
  return r;
}

QRat::QRat(long constant) : QRat(BigRational(constant)) {}

QRat::QRat(const BigRational& constant) {
  if (!constant.is_zero()) {
    scale_ = constant;
    num_ = one();
  }
}

QRat::QRat(const QPoly& poly) {
  auto [s, z] = detail::to_primitive(poly);
  *this = from_parts(std::move(s), std::move(z), one());
}

QRat::QRat(const QPoly& num, const QPoly& den) {
  if (den.is_zero()) throw std::domain_error("QRat: zero denominator");
  auto [sn, zn] = detail::to_primitive(num);
  auto [sd, zd] = detail::to_primitive(den);
  if (zn.empty()) return;
  auto split = coprime_split(zn, zd);
  *this = from_parts(sn / sd, std::move(split.cofactor_a), std::move(split.cofactor_b));
}

QPoly QRat::num() const {
  return detail::to_qpoly(num_, scale_ / BigRational(den_.back()));
}

QPoly QRat::den() const { return detail::to_qpoly(den_, BigRational(1) / BigRational(den_.back())); }

QRat QRat::operator-() const {
  QRat r(*this);
  r.scale_ = -r.scale_;
  return r;
}

QRat operator+(const QRat& a, const QRat& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  // Henrici: with g = gcd(Da, Db), only g can share factors with the new numerator.
  const BigRational& sa = a.scale_;
  const BigRational& sb = b.scale_;
  auto split = coprime_split(a.den_, b.den_);
  BigInteger ka = sa.numerator() * sb.denominator();
  BigInteger kb = sb.numerator() * sa.denominator();
  ZPoly num = detail::add(detail::scale(detail::mul(a.num_, split.cofactor_b), ka),
                          detail::scale(detail::mul(b.num_, split.cofactor_a), kb));
  if (num.empty()) return QRat();
  BigRational scale(BigInteger(1), sa.denominator() * sb.denominator());
  ZPoly den = detail::mul(a.den_, split.cofactor_b);
  if (!is_one(split.gcd)) {
    BigInteger c = detail::make_primitive(num);
    scale *= BigRational(c);
    auto reduce = detail::gcd_with_cofactors(num, split.gcd);
    if (!is_one(reduce.gcd)) {
      num = std::move(reduce.cofactor_a);
      den = *detail::divide_exact(den, reduce.gcd);
    }
  }
  return QRat::from_parts(std::move(scale), std::move(num), std::move(den));
}

QRat operator-(const QRat& a, const QRat& b) { return a + (-b); }

QRat operator*(const QRat& a, const QRat& b) {
  if (a.is_zero() || b.is_zero()) return QRat();
  auto g1 = coprime_split(a.num_, b.den_);
  auto g2 = coprime_split(b.num_, a.den_);
  return QRat::from_parts(a.scale_ * b.scale_, detail::mul(g1.cofactor_a, g2.cofactor_a),
                          detail::mul(g2.cofactor_b, g1.cofactor_b));
}

QRat operator/(const QRat& a, const QRat& b) { return a * b.inverse(); }

QRat QRat::inverse() const {
  if (is_zero()) throw std::domain_error("QRat: division by zero");
  QRat r;
  r.scale_ = BigRational(1) / scale_;
  r.num_ = den_;
  r.den_ = num_;
  return r;
}

QRat QRat::pow(unsigned exponent) const {
  QRat result(1);
  QRat base(*this);
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

BigRational QRat::eval(const BigRational& at) const {
  if (is_zero()) return 0;
  BigRational d = detail::to_qpoly(den_).eval(at);
  if (d.is_zero()) throw PoleError("pole of " + to_string() + " at q = " + at.to_string());
  return scale_ * detail::to_qpoly(num_).eval(at) / d;
}

std::complex<double> QRat::eval(std::complex<double> at) const {
  if (is_zero()) return {0.0, 0.0};
  BigRational re = BigRational::from_double(at.real());
  BigRational im = BigRational::from_double(at.imag());
  auto [nr, ni] = detail::to_qpoly(num_).eval(re, im);
  auto [dr, di] = detail::to_qpoly(den_).eval(re, im);
  BigRational norm = dr * dr + di * di;
  if (norm.is_zero()) throw PoleError("pole of " + to_string() + " at a complex point");
  // (nr + i ni) / (dr + i di) = ((nr dr + ni di) + i (ni dr - nr di)) / |d|^2
  BigRational out_re = scale_ * (nr * dr + ni * di) / norm;
  BigRational out_im = scale_ * (ni * dr - nr * di) / norm;
  return {out_re.to_double(), out_im.to_double()};
}

std::string QRat::to_string() const {
  if (is_polynomial()) return num().to_string();
  return "(" + num().to_string() + ")/(" + den().to_string() + ")";
}

std::string QRat::to_latex() const {
  if (is_polynomial()) return num().to_latex();
  return "\\frac{" + num().to_latex() + "}{" + den().to_latex() + "}";
}

nlohmann::ordered_json QRat::to_json() const {
  return {{"num", coefficients_json(num())}, {"den", coefficients_json(den())}};
}

QRat QRat::from_json(const nlohmann::ordered_json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den")) {
    throw ParameterError("QRat JSON: expected an object with \"num\" and \"den\"");
  }
  QPoly den = coefficients_from_json(j.at("den"));
  if (den.is_zero()) throw ParameterError("QRat JSON: zero denominator");
  return QRat(coefficients_from_json(j.at("num")), den);
}

}  // namespace qeuler
