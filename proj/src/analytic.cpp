#include "qeuler/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qeuler/euler_q.hpp"

namespace qeuler::analytic {

namespace {

constexpr unsigned kMaxTerms = 10'000'000;

void check_unit_disk(Complex q) {
  if (!(std::abs(q) < 1.0)) {
    throw ParameterError("series needs |q| < 1, got |q| = " + std::to_string(std::abs(q)));
  }
}

Complex int_pow(Complex base, unsigned e) {
  Complex r = 1.0;
  while (e > 0) {
    if (e & 1U) r *= base;
    base *= base;
    e >>= 1U;
  }
  return r;
}

}  // namespace

double tail_bound(double q_abs, unsigned n, unsigned terms) {
  const double r = 1.0 - q_abs;
  return (1.0 + q_abs) * std::pow(1.0 / r, n) * std::pow(q_abs, terms + 1.0) / r;
}

unsigned minimal_terms(double q_abs, unsigned n, double tolerance) {
  if (q_abs == 0.0) return 0;
  // Closed-form guess from the logarithm, then settle on the exact minimum.
  const double r = 1.0 - q_abs;
  double guess = (std::log(tolerance) - std::log1p(q_abs) + (n + 1.0) * std::log(r)) /
                     std::log(q_abs) - 1.0;
  auto m = static_cast<unsigned>(std::clamp(std::ceil(guess), 0.0, double(kMaxTerms)));
  while (m > 0 && tail_bound(q_abs, n, m - 1) <= tolerance) --m;
  while (m < kMaxTerms && tail_bound(q_abs, n, m) > tolerance) ++m;
  return m;
}

SeriesConfig SeriesConfig::for_moment(Complex q, unsigned n, double tolerance) {
  check_unit_disk(q);
  return {q, minimal_terms(std::abs(q), n, tolerance), tolerance};
}

void SeriesConfig::validate(unsigned n) const {
  check_unit_disk(q);
  if (!(tolerance > 0.0)) throw ParameterError("tolerance must be positive");
  const double bound = tail_bound(std::abs(q), n, terms);
  if (bound > tolerance) {
    unsigned needed = minimal_terms(std::abs(q), n, tolerance);
    throw SeriesConfigError("tail bound " + std::to_string(bound) + " exceeds tolerance with M = " +
                                std::to_string(terms) + "; minimal sufficient M is " +
                                std::to_string(needed),
                            needed);
  }
}

SeriesValue euler_series(unsigned n, const SeriesConfig& cfg, unsigned x) {
  cfg.validate(n);
  const Complex q = cfg.q;
  // [x]_q by the shift law [k+1] = 1 + q [k].
  Complex bracket = 0.0;
  for (unsigned k = 0; k < x; ++k) bracket = 1.0 + q * bracket;
  Complex weight = 1.0;  // (-q)^m
  Complex sum = 0.0;
  for (unsigned m = 0; m <= cfg.terms; ++m) {
    sum += weight * int_pow(bracket, n);
    weight *= -q;
    bracket = 1.0 + q * bracket;
  }
  return {(1.0 + q) * sum, tail_bound(std::abs(q), n, cfg.terms), cfg.terms};
}

nlohmann::ordered_json GeneratingFunctionReport::to_json() const {
  return {{"q", {q.real(), q.imag()}}, {"n_max", n_max}, {"M", terms}, {"max_abs_dev", max_abs_dev}};
}

GeneratingFunctionReport generating_function_check(const SeriesConfig& cfg,
                                                   const std::vector<Complex>& t_points,
                                                   unsigned n_max) {
  check_unit_disk(cfg.q);
  const Complex q = cfg.q;
  const QEulerTable table = euler_q_recurrence(n_max);
  std::vector<Complex> coefficients;  // E_{n,q} / n! at the point q
  double factorial = 1.0;
  for (unsigned n = 0; n <= n_max; ++n) {
    if (n > 0) factorial *= n;
    coefficients.push_back(table.at(n).eval(q) / factorial);
  }

  GeneratingFunctionReport report{q, n_max, cfg.terms, t_points, {}, 0.0};
  for (const Complex& t : t_points) {
    Complex series = 0.0;
    Complex weight = 1.0;
    Complex bracket = 0.0;
    for (unsigned m = 0; m <= cfg.terms; ++m) {
      series += weight * std::exp(bracket * t);
      weight *= -q;
      bracket = 1.0 + q * bracket;
    }
    series *= 1.0 + q;

    Complex taylor = 0.0;
    for (unsigned n = n_max + 1; n-- > 0;) taylor = taylor * t + coefficients[n];

    double dev = std::abs(series - taylor);
    report.deviations.push_back(dev);
    report.max_abs_dev = std::max(report.max_abs_dev, dev);
  }
  return report;
}

}  // namespace qeuler::analytic
