#include "qeuler/qnumbers.hpp"

#include <deque>
#include <mutex>

namespace qeuler {

QPoly q_bracket(unsigned n) {
  return QPoly(std::vector<BigRational>(n, BigRational(1)));
}

QRat q_bracket_neg(unsigned n) {
  std::vector<BigRational> coeffs(n);
  for (unsigned k = 0; k < n; ++k) coeffs[k] = (k % 2 == 0) ? 1 : -1;
  return QRat(QPoly(std::move(coeffs)));
}

std::pair<QPoly, QPoly> bracket_shift(unsigned n) {
  return {q_bracket(n + 1), QPoly(1) + QPoly::q() * q_bracket(n)};
}

const BigInteger& binomial(unsigned n, unsigned k) {
  static std::mutex mutex;
  // deque keeps references to earlier rows valid while new rows are added.
  static std::deque<std::vector<BigInteger>> rows{{BigInteger(1)}};
  static const BigInteger kZero = 0;
  if (k > n) return kZero;
  std::lock_guard<std::mutex> lock(mutex);
  while (rows.size() <= n) {
    const auto& prev = rows.back();
    std::vector<BigInteger> row(prev.size() + 1);
    row.front() = 1;
    row.back() = 1;
    for (std::size_t i = 1; i + 1 < row.size(); ++i) row[i] = prev[i - 1] + prev[i];
    rows.push_back(std::move(row));
  }
  return rows[n][k];
}

QRat q_power(unsigned k) { return QRat(QPoly::monomial(k)); }

ClassicalEulerTable classical_euler(unsigned n_max) {
  std::vector<BigRational> values{BigRational(1)};
  for (unsigned n = 1; n <= n_max; ++n) {
    BigRational sum = 0;
    for (unsigned l = 0; l < n; ++l) sum += BigRational(binomial(n, l)) * values[l];
    values.push_back(-sum / BigRational(2));
  }
  return ClassicalEulerTable(std::move(values));
}

}  // namespace qeuler
