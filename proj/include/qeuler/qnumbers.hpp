#pragma once

#include <utility>
#include <vector>

#include "qeuler/big_rational.hpp"
#include "qeuler/qpoly.hpp"
#include "qeuler/qrat.hpp"

namespace qeuler {

// [n]_q = 1 + q + ... + q^(n-1); [0]_q = 0.
QPoly q_bracket(unsigned n);

// [n]_{-q} = 1 - q + q^2 - ... + (-1)^(n-1) q^(n-1).
QRat q_bracket_neg(unsigned n);

// ([n+1]_q, 1 + q [n]_q). The two sides of the bracket shift law, built
// independently so callers can compare them.
std::pair<QPoly, QPoly> bracket_shift(unsigned n);

// Exact C(n, k) from a memoized Pascal triangle. Safe to call concurrently.
const BigInteger& binomial(unsigned n, unsigned k);

// q^k as an element of Q(q).
QRat q_power(unsigned k);

// Euler numbers E_n = E_n(0), the coefficients of 2/(e^t + 1).
class ClassicalEulerTable {
 public:
  explicit ClassicalEulerTable(std::vector<BigRational> values) : values_(std::move(values)) {}

  std::size_t size() const { return values_.size(); }
  // Throws std::out_of_range past the last built index.
  const BigRational& at(std::size_t n) const { return values_.at(n); }
  const std::vector<BigRational>& values() const { return values_; }

 private:
  std::vector<BigRational> values_;
};

// Solves 2 E_n + sum_{l<n} C(n,l) E_l = 0 for n >= 1, E_0 = 1.
ClassicalEulerTable classical_euler(unsigned n_max);

}  // namespace qeuler
