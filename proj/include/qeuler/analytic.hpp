#pragma once

#include <complex>
#include <vector>

#include <nlohmann/json.hpp>

#include "qeuler/errors.hpp"

// Double-precision oracle for |q| < 1, where
//   E_{n,q}(x) = [2]_q sum_{m>=0} (-1)^m q^m [m + x]_q^n
// converges. Truncation is chosen from an explicit tail bound.
namespace qeuler::analytic {

using Complex = std::complex<double>;

// Raised when a fixed truncation cannot meet the requested tolerance.
class SeriesConfigError : public ParameterError {
 public:
  SeriesConfigError(const std::string& what, unsigned minimal_terms)
      : ParameterError(what), minimal_terms_(minimal_terms) {}
  unsigned minimal_terms() const { return minimal_terms_; }

 private:
  unsigned minimal_terms_;
};

// Bound on |sum_{m>M} (-1)^m q^m [m+x]_q^n| times |[2]_q|, using
// |[k]_q| <= 1/(1-|q|):  (1+|q|) (1-|q|)^-n |q|^(M+1) / (1-|q|).
double tail_bound(double q_abs, unsigned n, unsigned terms);

// Smallest M whose tail bound is <= tolerance.
unsigned minimal_terms(double q_abs, unsigned n, double tolerance);

struct SeriesConfig {
  Complex q;
  unsigned terms;    // M: the sum runs over m = 0..M
  double tolerance;

  // Picks M from the tail bound for moment n.
  static SeriesConfig for_moment(Complex q, unsigned n, double tolerance);
  // Throws ParameterError for |q| >= 1 or a nonpositive tolerance, and
  // SeriesConfigError when the tail bound for moment n exceeds the tolerance.
  void validate(unsigned n) const;
};

struct SeriesValue {
  Complex value;
  double tail_bound;
  unsigned terms;
};

// Truncated series for E_{n,q}(x); x = 0 gives E_{n,q}.
SeriesValue euler_series(unsigned n, const SeriesConfig& cfg, unsigned x = 0);

struct GeneratingFunctionReport {
  Complex q;
  unsigned n_max;
  unsigned terms;
  std::vector<Complex> t_points;
  std::vector<double> deviations;  // one per t
  double max_abs_dev;

  // {"q": [re, im], "n_max": ..., "M": ..., "max_abs_dev": ...}
  nlohmann::ordered_json to_json() const;
};

// Compares [2]_q sum_{m<=M} (-1)^m q^m exp([m]_q t) with the exact
// coefficients sum_{n<=n_max} E_{n,q} t^n / n! at each t. Only |q| < 1 is
// checked here; thresholding is left to the caller.
GeneratingFunctionReport generating_function_check(const SeriesConfig& cfg,
                                                   const std::vector<Complex>& t_points,
                                                   unsigned n_max);

}  // namespace qeuler::analytic
