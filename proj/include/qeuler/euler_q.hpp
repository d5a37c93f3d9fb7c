#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "qeuler/big_rational.hpp"
#include "qeuler/qrat.hpp"

namespace qeuler {

enum class Construction { recurrence, closed_form };

/**
 * q-Euler numbers E_{0,q} .. E_{n_max,q} as elements of Q(q).
 *
 * Tables are built once, bottom up, and never grow: asking for an index
 * past n_max is an error, not an implicit extension.
 */
class QEulerTable {
 public:
  QEulerTable(std::vector<QRat> values, Construction construction)
      : values_(std::move(values)), construction_(construction) {}

  std::size_t size() const { return values_.size(); }
  unsigned n_max() const { return static_cast<unsigned>(values_.size()) - 1; }
  // Throws std::out_of_range past n_max.
  const QRat& at(std::size_t n) const { return values_.at(n); }
  const std::vector<QRat>& values() const { return values_; }
  Construction construction() const { return construction_; }

 private:
  std::vector<QRat> values_;
  Construction construction_;
};

/**
 * Polynomial in two formal symbols over Q(q): X stands for [x]_q and Q for
 * q^x. Symbolic q-Euler and Carlitz polynomials live here; substituting a
 * nonnegative integer x is purely algebraic.
 */
class QXPoly {
 public:
  using Exponents = std::pair<unsigned, unsigned>;  // (power of X, power of Q)

  QXPoly() = default;
  explicit QXPoly(const QRat& constant);

  static QXPoly term(unsigned x_power, unsigned q_power, const QRat& coefficient);

  const std::map<Exponents, QRat>& terms() const { return terms_; }
  QRat coefficient(unsigned x_power, unsigned q_power) const;
  bool is_zero() const { return terms_.empty(); }

  QXPoly& operator+=(const QXPoly& rhs);
  friend QXPoly operator+(QXPoly a, const QXPoly& b) { return a += b; }
  friend bool operator==(const QXPoly& a, const QXPoly& b) = default;

  // X -> [x]_q, Q -> q^x.
  QRat substitute(unsigned x) const;
  QRat substitute(const QRat& x_value, const QRat& q_value) const;

  // "X^2 + ((-q)/(q^2 + 1))*Q"
  std::string to_string() const;
  nlohmann::ordered_json to_json() const;

 private:
  std::map<Exponents, QRat> terms_;  // no zero coefficients
};

// Solves q(qE + 1)^n + E_n = [2]_q (n = 0) / 0 (n > 0) step by step.
QEulerTable euler_q_recurrence(unsigned n_max);

// [2]_q (1/(1-q))^n sum_l C(n,l) (-1)^l / (1 + q^(l+1)). Throws
// InvariantError if the (1-q)^n factor fails to cancel.
QRat euler_q_closed_form(unsigned n);
QEulerTable euler_q_closed_form_table(unsigned n_max);

// [2]_q / (1 + q^(l+1)), the fermionic moment of q^(l x).
QRat fermionic_moment_kernel(unsigned l);

// E_{n,q}(x) = sum_l C(n,l) Q^l X^(n-l) E_{l,q}. Requires n <= table.n_max().
QXPoly euler_q_polynomial(unsigned n, const QEulerTable& table);

// E_{n,q}(x) at an integer x >= 0 straight from the kernel sum
// [2]_q (1/(1-q))^n sum_l C(n,l) (-1)^l q^(l x) / (1 + q^(l+1)).
QRat euler_q_polynomial_closed_form(unsigned n, unsigned x);

// q -> 1 value of every entry. Throws InvariantError on a pole at q = 1.
std::vector<BigRational> euler_q_limit(const QEulerTable& table);

class CarlitzBernoulliTable {
 public:
  explicit CarlitzBernoulliTable(std::vector<QRat> values) : values_(std::move(values)) {}
  std::size_t size() const { return values_.size(); }
  const QRat& at(std::size_t k) const { return values_.at(k); }
  const std::vector<QRat>& values() const { return values_; }

 private:
  std::vector<QRat> values_;
};

// beta_0 = 1, q(q beta + 1)^k - beta_k = 1 (k = 1) / 0 (k > 1).
CarlitzBernoulliTable carlitz_beta(unsigned k_max);

// beta_{m,q}(x) = sum_l C(m,l) Q^l X^(m-l) beta_{l,q}.
QXPoly carlitz_beta_polynomial(unsigned m, const CarlitzBernoulliTable& table);

class CarlitzQEulerTable {
 public:
  CarlitzQEulerTable(BigRational u, std::vector<QRat> values)
      : u_(std::move(u)), values_(std::move(values)) {}
  const BigRational& u() const { return u_; }
  std::size_t size() const { return values_.size(); }
  const QRat& at(std::size_t k) const { return values_.at(k); }
  const std::vector<QRat>& values() const { return values_; }

 private:
  BigRational u_;
  std::vector<QRat> values_;
};

// H_0 = 1, (qH + 1)^k - u H_k = 0 for k >= 1. Throws std::domain_error if
// some divisor u - q^k is identically zero.
CarlitzQEulerTable carlitz_q_euler(const BigRational& u, unsigned k_max);

}  // namespace qeuler
