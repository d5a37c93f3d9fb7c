#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qeuler/big_rational.hpp"

// Finite Riemann sums for the bosonic (mu_q) and fermionic (mu_{-q}) p-adic
// q-integrals, evaluated exactly at a rational q. Convergence is measured by
// the p-adic valuation of the deviation from an exact reference value; no
// truncated Z_p digit arithmetic is involved.
namespace qeuler::padic {

// p-adic valuation, possibly +infinity (the valuation of zero).
class Valuation {
 public:
  static Valuation infinity() { return Valuation(); }
  explicit Valuation(long value) : value_(value) {}

  bool is_infinite() const { return !value_.has_value(); }
  // Throws std::logic_error for infinity.
  long value() const { return value_.value(); }

  friend bool operator==(const Valuation&, const Valuation&) = default;
  friend std::strong_ordering operator<=>(const Valuation& a, const Valuation& b);

  std::string to_string() const { return is_infinite() ? "inf" : std::to_string(*value_); }

 private:
  Valuation() = default;
  std::optional<long> value_;
};

Valuation vp(const BigRational& x, unsigned long p);

bool is_odd_prime(unsigned long p);

enum class Measure { fermionic, bosonic };

std::string to_string(Measure m);

/**
 * An odd prime p, a rational q with v_p(q - 1) >= 1, and the deepest
 * refinement level N_max. For odd p that valuation condition is exactly
 * |q - 1|_p < p^(-1/(p-1)).
 */
class PrimeContext {
 public:
  // Throws ParameterError when p is not an odd prime, v_p(q - 1) < 1 or
  // n_max == 0.
  PrimeContext(unsigned long p, BigRational q, unsigned n_max);

  unsigned long p() const { return p_; }
  const BigRational& q() const { return q_; }
  unsigned n_max() const { return n_max_; }

 private:
  unsigned long p_;
  BigRational q_;
  unsigned n_max_;
};

// (1/[p^N]_q) sum_{0<=x<p^N} [x + shift]_q^moment q^x at q = ctx.q().
BigRational riemann_sum_mu_q(const PrimeContext& ctx, unsigned level, unsigned moment,
                             unsigned shift = 0);

// ([2]_q / 2) sum_{0<=x<p^N} (-1)^x q^x [x + shift]_q^moment at q = ctx.q().
BigRational riemann_sum_mu_minus_q(const PrimeContext& ctx, unsigned level, unsigned moment,
                                   unsigned shift = 0);

// Fermionic sum of the integrand q^(l x), through the decomposition
// q^(l x) = sum_j C(l,j) (q-1)^j [x]_q^j.
BigRational riemann_sum_mu_minus_q_exponential(const PrimeContext& ctx, unsigned level,
                                               unsigned l);

// Both measures at every level 1..ctx.n_max() in one pass over x.
std::vector<BigRational> riemann_sums(const PrimeContext& ctx, Measure measure, unsigned moment,
                                      unsigned shift);

struct PadicEstimate {
  unsigned level;
  BigRational sum_value;
  BigRational reference;
  Valuation gap;  // v_p(sum_value - reference); infinite when exact
};

struct Certificate {
  unsigned long p;
  BigRational q;
  unsigned moment;
  unsigned shift;
  Measure measure;
  std::vector<PadicEstimate> levels;
  bool pass;

  // {"p":5,"q":"6","moment":1,"shift":0,"measure":"fermionic",
  //  "levels":[{"N":1,"gap":1},...],"pass":true}; an exact level has "gap":"inf".
  nlohmann::ordered_json to_json() const;
};

// Gaps nondecreasing in the level and the last gap >= n_max - 1.
bool certificate_passes(const std::vector<PadicEstimate>& levels, unsigned n_max);

// Per-level estimates against an arbitrary sequence of values.
std::vector<PadicEstimate> estimate_levels(const std::vector<BigRational>& values,
                                           const BigRational& reference, unsigned long p);

// Certificate for the Riemann sums of [x + shift]_q^moment against `target`
// (the exact integral evaluated at q = ctx.q()). A failing certificate is
// reported through Certificate::pass, never by throwing.
Certificate convergence_certificate(const PrimeContext& ctx, unsigned moment, unsigned shift,
                                    const BigRational& target,
                                    Measure measure = Measure::fermionic);

}  // namespace qeuler::padic
