#include "qeuler/euler_q.hpp"

#include <stdexcept>

#include "qeuler/errors.hpp"
#include "qeuler/qnumbers.hpp"

namespace qeuler {

namespace {

QRat one_plus_q_power(unsigned k) { return QRat(QPoly(1) + QPoly::monomial(k)); }

// sum_l C(n,l) Q^l X^(n-l) c_l: the umbral expansion of (Q c + X)^n.
QXPoly umbral_polynomial(unsigned n, const std::vector<QRat>& values) {
  if (n >= values.size()) {
    throw std::out_of_range("table covers indices 0.." + std::to_string(values.size() - 1) +
                            ", requested " + std::to_string(n));
  }
  QXPoly result;
  for (unsigned l = 0; l <= n; ++l) {
    result += QXPoly::term(n - l, l, QRat(BigRational(binomial(n, l))) * values[l]);
  }
  return result;
}

// [2]_q (1/(1-q))^n sum_l C(n,l) (-1)^l q^(l x) / (1 + q^(l+1))
QRat kernel_sum(unsigned n, unsigned x) {
  QRat sum;
  for (unsigned l = 0; l <= n; ++l) {
    QRat term = QRat(BigRational(binomial(n, l))) * q_power(l * x) / one_plus_q_power(l + 1);
    sum += (l % 2 == 0) ? term : -term;
  }
  QRat value = sum * QRat(q_bracket(2)) / QRat(QPoly(1) - QPoly::q()).pow(n);
  if (value.den().eval(BigRational(1)).is_zero()) {
    throw InvariantError("(1-q)^" + std::to_string(n) + " did not cancel in the kernel sum");
  }
  return value;
}

}  // namespace

QXPoly::QXPoly(const QRat& constant) {
  if (!constant.is_zero()) terms_.emplace(Exponents{0, 0}, constant);
}

QXPoly QXPoly::term(unsigned x_power, unsigned q_power, const QRat& coefficient) {
  QXPoly p;
  if (!coefficient.is_zero()) p.terms_.emplace(Exponents{x_power, q_power}, coefficient);
  return p;
}

QRat QXPoly::coefficient(unsigned x_power, unsigned q_power) const {
  auto it = terms_.find({x_power, q_power});
  return it == terms_.end() ? QRat() : it->second;
}

QXPoly& QXPoly::operator+=(const QXPoly& rhs) {
  for (const auto& [key, c] : rhs.terms_) {
    auto [it, inserted] = terms_.emplace(key, c);
    if (inserted) continue;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
  return *this;
}

QRat QXPoly::substitute(unsigned x) const {
  return substitute(QRat(q_bracket(x)), q_power(x));
}

QRat QXPoly::substitute(const QRat& x_value, const QRat& q_value) const {
  QRat sum;
  for (const auto& [key, c] : terms_) {
    sum += c * x_value.pow(key.first) * q_value.pow(key.second);
  }
  return sum;
}

std::string QXPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  // Highest total degree first, X before Q within a degree.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [key, c] = *it;
    if (!out.empty()) out += " + ";
    std::string monomial;
    auto append = [&monomial](const char* sym, unsigned power) {
      if (power == 0) return;
      if (!monomial.empty()) monomial += "*";
      monomial += sym;
      if (power > 1) monomial += "^" + std::to_string(power);
    };
    append("X", key.first);
    append("Q", key.second);
    if (monomial.empty()) {
      out += "(" + c.to_string() + ")";
    } else if (c == QRat(1)) {
      out += monomial;
    } else {
      out += "(" + c.to_string() + ")*" + monomial;
    }
  }
  return out;
}

nlohmann::ordered_json QXPoly::to_json() const {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& [key, c] : terms_) {
    arr.push_back({{"x_power", key.first}, {"q_power", key.second}, {"coefficient", c.to_json()}});
  }
  return arr;
}

QEulerTable euler_q_recurrence(unsigned n_max) {
  // n = 0: q + E_0 = 1 + q.
  std::vector<QRat> values{QRat(1)};
  const QRat q = QRat::q();
  for (unsigned n = 1; n <= n_max; ++n) {
    QRat sum;
    for (unsigned l = 0; l < n; ++l) {
      sum += QRat(BigRational(binomial(n, l))) * q_power(l) * values[l];
    }
    // The l = n term contributes q^(n+1) E_n; 1 + q^(n+1) is never zero.
    values.push_back(-(q * sum) / one_plus_q_power(n + 1));
  }
  return QEulerTable(std::move(values), Construction::recurrence);
}

QRat euler_q_closed_form(unsigned n) { return kernel_sum(n, 0); }

QEulerTable euler_q_closed_form_table(unsigned n_max) {
  std::vector<QRat> values;
  values.reserve(n_max + 1);
  for (unsigned n = 0; n <= n_max; ++n) values.push_back(euler_q_closed_form(n));
  return QEulerTable(std::move(values), Construction::closed_form);
}

QRat fermionic_moment_kernel(unsigned l) { return QRat(q_bracket(2)) / one_plus_q_power(l + 1); }

QXPoly euler_q_polynomial(unsigned n, const QEulerTable& table) {
  return umbral_polynomial(n, table.values());
}

QRat euler_q_polynomial_closed_form(unsigned n, unsigned x) { return kernel_sum(n, x); }

std::vector<BigRational> euler_q_limit(const QEulerTable& table) {
  std::vector<BigRational> limits;
  limits.reserve(table.size());
  for (std::size_t n = 0; n < table.size(); ++n) {
    try {
      limits.push_back(table.at(n).eval(BigRational(1)));
    } catch (const PoleError&) {
      throw InvariantError("E_{" + std::to_string(n) + ",q} has a pole at q = 1");
    }
  }
  return limits;
}

CarlitzBernoulliTable carlitz_beta(unsigned k_max) {
  std::vector<QRat> values{QRat(1)};
  const QRat q = QRat::q();
  for (unsigned k = 1; k <= k_max; ++k) {
    QRat sum;
    for (unsigned l = 0; l < k; ++l) {
      sum += QRat(BigRational(binomial(k, l))) * q_power(l) * values[l];
    }
    // beta_k (q^(k+1) - 1) = [k = 1] - q * sum
    QRat rhs = (k == 1 ? QRat(1) : QRat()) - q * sum;
    values.push_back(rhs / (q_power(k + 1) - QRat(1)));
  }
  return CarlitzBernoulliTable(std::move(values));
}

QXPoly carlitz_beta_polynomial(unsigned m, const CarlitzBernoulliTable& table) {
  return umbral_polynomial(m, table.values());
}

CarlitzQEulerTable carlitz_q_euler(const BigRational& u, unsigned k_max) {
  std::vector<QRat> values{QRat(1)};
  for (unsigned k = 1; k <= k_max; ++k) {
    QRat divisor = QRat(u) - q_power(k);
    if (divisor.is_zero()) {
      throw std::domain_error("carlitz_q_euler: u - q^" + std::to_string(k) + " is zero");
    }
    QRat sum;
    for (unsigned l = 0; l < k; ++l) {
      sum += QRat(BigRational(binomial(k, l))) * q_power(l) * values[l];
    }
    values.push_back(sum / divisor);
  }
  return CarlitzQEulerTable(u, std::move(values));
}

}  // namespace qeuler
