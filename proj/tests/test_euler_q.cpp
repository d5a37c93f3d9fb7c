#include <doctest.h>

#include <complex>

#include "qeuler/errors.hpp"
#include "qeuler/euler_q.hpp"
#include "qeuler/qnumbers.hpp"

using namespace qeuler;

namespace {

QPoly poly(std::initializer_list<long> coeffs) {
  std::vector<BigRational> c;
  for (long v : coeffs) c.emplace_back(v);
  return QPoly(std::move(c));
}

QPoly one_plus_q_power(unsigned k) { return QPoly(1) + QPoly::monomial(k); }

const QEulerTable& recurrence_30() {
  static const QEulerTable table = euler_q_recurrence(30);
  return table;
}

}  // namespace

TEST_SUITE("qeuler") {

TEST_CASE("recurrence examples") {
  const auto& t = recurrence_30();
  CHECK(t.at(0) == QRat(1));
  CHECK(t.at(1) == QRat(-QPoly::q(), poly({1, 0, 1})));
  QRat e2(QPoly::q() * poly({-1, 0, 1}), one_plus_q_power(2) * one_plus_q_power(3));
  CHECK(t.at(2) == e2);
  CHECK(t.at(2).eval(BigRational(1)).is_zero());
  CHECK(t.n_max() == 30);
  CHECK_THROWS_AS(t.at(31), std::out_of_range);
}

TEST_CASE("closed form examples") {
  CHECK(euler_q_closed_form(0) == QRat(1));
  CHECK(euler_q_closed_form(1) == QRat(-QPoly::q(), poly({1, 0, 1})));
}

TEST_CASE("dual construction up to 30") {
  const auto& rec = recurrence_30();
  auto closed = euler_q_closed_form_table(30);
  CHECK(closed.construction() == Construction::closed_form);
  for (unsigned n = 0; n <= 30; ++n) {
    CAPTURE(n);
    CHECK(rec.at(n) == closed.at(n));
  }
}

TEST_CASE("reduced denominators divide the product of 1 + q^k") {
  const auto& rec = recurrence_30();
  QPoly product(1);
  for (unsigned n = 0; n <= 30; ++n) {
    if (n >= 1) product *= one_plus_q_power(n + 1);
    CAPTURE(n);
    CHECK(product.divmod(rec.at(n).den()).second.is_zero());
  }
}

TEST_CASE("q -> 1 limits match classical Euler numbers") {
  auto rec = euler_q_recurrence(12);
  auto limits = euler_q_limit(rec);
  auto classical = classical_euler(12);
  REQUIRE(limits.size() == 13);
  for (unsigned n = 0; n <= 12; ++n) CHECK(limits[n] == classical.at(n));
  CHECK(limits[1] == BigRational(-1, 2));

  QEulerTable bad({QRat(poly({1}), poly({-1, 1}))}, Construction::recurrence);
  CHECK_THROWS_AS(euler_q_limit(bad), InvariantError);
}

TEST_CASE("moment kernel against a truncated geometric series") {
  const std::complex<double> points[] = {{0.5, 0.0}, {-0.3, 0.0}, {0.4, 0.3}, {-0.2, -0.5}};
  for (unsigned l = 0; l <= 20; ++l) {
    QRat kernel = fermionic_moment_kernel(l);
    CHECK(kernel == QRat(q_bracket(2)) / QRat(one_plus_q_power(l + 1)));
    for (auto z : points) {
      std::complex<double> sum = 0.0, zl = std::pow(z, static_cast<int>(l + 1)), power = 1.0;
      for (int m = 0; m < 200; ++m) {
        sum += (m % 2 == 0 ? 1.0 : -1.0) * power;
        power *= zl;
      }
      CHECK(std::abs(kernel.eval(z) - (1.0 + z) * sum) <= 1e-12);
    }
  }
}

TEST_CASE("polynomial examples") {
  const auto& t = recurrence_30();
  CHECK(euler_q_polynomial(0, t) == QXPoly(QRat(1)));
  QXPoly p1 = euler_q_polynomial(1, t);
  CHECK(p1.coefficient(1, 0) == QRat(1));
  CHECK(p1.coefficient(0, 1) == t.at(1));
  CHECK(p1.terms().size() == 2);
  CHECK(p1.substitute(1) == QRat(poly({1}), poly({1, 0, 1})));
  CHECK(QRat::q() * p1.substitute(1) == -t.at(1));
  CHECK_THROWS_AS(euler_q_polynomial(31, t), std::out_of_range);
}

TEST_CASE("x = 0 substitution recovers the numbers") {
  const auto& t = recurrence_30();
  for (unsigned n = 0; n <= 20; ++n) {
    QXPoly p = euler_q_polynomial(n, t);
    CHECK(p.substitute(0) == t.at(n));
    CHECK(p.substitute(QRat(), QRat(1)) == t.at(n));
  }
}

TEST_CASE("polynomial substitution matches the direct kernel sum") {
  const auto& t = recurrence_30();
  for (unsigned n = 0; n <= 12; ++n) {
    QXPoly p = euler_q_polynomial(n, t);
    for (unsigned x = 0; x <= 6; ++x) {
      CAPTURE(n);
      CAPTURE(x);
      CHECK(p.substitute(x) == euler_q_polynomial_closed_form(n, x));
    }
  }
}

TEST_CASE("polynomial values obey the shift law from the integral") {
  // q E_{m,q}(x + 1) + E_{m,q}(x) = [2]_q [x]_q^m, from the fermionic
  // difference equation applied to [x + y]_q^m.
  const auto& t = recurrence_30();
  for (unsigned m = 0; m <= 8; ++m) {
    QXPoly p = euler_q_polynomial(m, t);
    for (unsigned x = 0; x <= 4; ++x) {
      QRat lhs = QRat::q() * p.substitute(x + 1) + p.substitute(x);
      QRat rhs = QRat(q_bracket(2)) * QRat(q_bracket(x)).pow(m);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("Carlitz q-Bernoulli numbers") {
  auto beta = carlitz_beta(6);
  CHECK(beta.at(0) == QRat(1));
  CHECK(beta.at(1) == QRat(poly({-1}), poly({1, 1})));
  CHECK(beta.at(1).eval(BigRational(1)) == BigRational(-1, 2));
  CHECK(beta.at(2).eval(BigRational(1)) == BigRational(1, 6));
  CHECK(beta.at(3).eval(BigRational(1)) == BigRational(0));
  CHECK(beta.at(4).eval(BigRational(1)) == BigRational(-1, 30));

  CHECK(carlitz_beta_polynomial(0, beta) == QXPoly(QRat(1)));
  for (unsigned m = 0; m <= 6; ++m) {
    CHECK(carlitz_beta_polynomial(m, beta).substitute(0) == beta.at(m));
  }
  CHECK(carlitz_beta_polynomial(1, beta).substitute(1) == QRat(poly({1}), poly({1, 1})));
}

TEST_CASE("Carlitz q-Euler numbers") {
  auto h = carlitz_q_euler(BigRational(2), 5);
  CHECK(h.at(0) == QRat(1));
  CHECK(h.at(1) == QRat(poly({1}), poly({2, -1})));
  CHECK(h.at(1).eval(BigRational(1)) == BigRational(1));
  CHECK(h.u() == BigRational(2));
  // (qH + 1)^k = u H_k, checked by evaluation at q = 3.
  for (unsigned k = 1; k <= 5; ++k) {
    QRat lhs;
    for (unsigned l = 0; l <= k; ++l) {
      lhs += QRat(BigRational(binomial(k, l))) * q_power(l) * h.at(l);
    }
    CHECK(lhs == QRat(BigRational(2)) * h.at(k));
  }
  // u = 1 is allowed: u - q^k is never identically zero for k >= 1.
  CHECK_NOTHROW(carlitz_q_euler(BigRational(1), 4));
}

TEST_CASE("QXPoly rendering") {
  const auto& t = recurrence_30();
  CHECK(euler_q_polynomial(1, t).to_string() == "X + ((-q)/(q^2 + 1))*Q");
  CHECK(QXPoly().to_string() == "0");
  auto j = euler_q_polynomial(1, t).to_json();
  REQUIRE(j.size() == 2);
  CHECK(j[0]["x_power"] == 0);
  CHECK(j[0]["q_power"] == 1);
}

}  // TEST_SUITE
