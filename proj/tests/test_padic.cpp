#include <doctest.h>

#include "qeuler/errors.hpp"
#include "qeuler/euler_q.hpp"
#include "qeuler/padic.hpp"
#include "qeuler/qnumbers.hpp"

using namespace qeuler;
using namespace qeuler::padic;

namespace {

BigRational bracket_at(unsigned long x, const BigRational& q) {
  BigRational sum(0), power(1);
  for (unsigned long i = 0; i < x; ++i) {
    sum += power;
    power *= q;
  }
  return sum;
}

// ([2]_q / 2) sum_{x < p^N} (-1)^x q^x [x + shift]_q^m, one term at a time.
BigRational brute_fermionic(unsigned long p, const BigRational& q, unsigned level, unsigned m,
                            unsigned shift) {
  unsigned long count = 1;
  for (unsigned i = 0; i < level; ++i) count *= p;
  BigRational sum(0);
  for (unsigned long x = 0; x < count; ++x) {
    BigRational term = q.pow(x) * bracket_at(x + shift, q).pow(m);
    sum += x % 2 == 0 ? term : -term;
  }
  return (BigRational(1) + q) / 2 * sum;
}

BigRational brute_bosonic(unsigned long p, const BigRational& q, unsigned level, unsigned m,
                          unsigned shift) {
  unsigned long count = 1;
  for (unsigned i = 0; i < level; ++i) count *= p;
  BigRational sum(0);
  for (unsigned long x = 0; x < count; ++x) sum += q.pow(x) * bracket_at(x + shift, q).pow(m);
  return sum / bracket_at(count, q);
}

BigInteger mod(const BigInteger& a, long p) {
  BigInteger r = a % p;
  if (r < 0) r += p;
  return r;
}

// Residue of a p-integral rational modulo p.
BigInteger residue(const BigRational& x, long p) {
  BigInteger d = mod(x.denominator(), p);
  BigInteger inv;
  mpz_invert(inv.get_mpz_t(), d.get_mpz_t(), BigInteger(p).get_mpz_t());
  return mod(x.numerator() * inv, p);
}

}  // namespace

TEST_SUITE("padic") {

TEST_CASE("valuations") {
  CHECK(vp(BigRational(50), 5) == Valuation(2));
  CHECK(vp(BigRational(1, 5), 5) == Valuation(-1));
  CHECK(vp(BigRational(0), 5).is_infinite());
  CHECK(vp(BigRational(7, 3), 5) == Valuation(0));
  CHECK(Valuation(3) < Valuation::infinity());
  CHECK(Valuation::infinity().to_string() == "inf");
  CHECK(is_odd_prime(3));
  CHECK(is_odd_prime(101));
  CHECK_FALSE(is_odd_prime(2));
  CHECK_FALSE(is_odd_prime(9));
  CHECK_FALSE(is_odd_prime(1));
}

TEST_CASE("prime context preconditions") {
  CHECK_NOTHROW(PrimeContext(5, BigRational(6), 4));
  CHECK_NOTHROW(PrimeContext(3, BigRational(10), 2));
  CHECK_THROWS_AS(PrimeContext(5, BigRational(7), 4), ParameterError);
  CHECK_THROWS_AS(PrimeContext(4, BigRational(5), 4), ParameterError);
  CHECK_THROWS_AS(PrimeContext(2, BigRational(3), 4), ParameterError);
  CHECK_THROWS_AS(PrimeContext(5, BigRational(6), 0), ParameterError);
  PrimeContext ctx(5, BigRational(6), 2);
  CHECK_THROWS_AS(riemann_sum_mu_q(ctx, 3, 1), ParameterError);
  CHECK_THROWS_AS(riemann_sum_mu_q(ctx, 0, 1), ParameterError);
}

TEST_CASE("bosonic sum examples") {
  PrimeContext ctx(3, BigRational(4), 3);
  for (unsigned n = 1; n <= 3; ++n) CHECK(riemann_sum_mu_q(ctx, n, 0) == BigRational(1));
  CHECK(riemann_sum_mu_q(ctx, 1, 2) == BigRational(404, 21));
  CHECK(brute_bosonic(3, BigRational(4), 1, 2, 0) == BigRational(404, 21));
  for (unsigned n = 1; n <= 3; ++n) {
    for (unsigned m = 0; m <= 3; ++m) {
      for (unsigned s = 0; s <= 2; ++s) {
        CHECK(riemann_sum_mu_q(ctx, n, m, s) == brute_bosonic(3, BigRational(4), n, m, s));
      }
    }
  }
}

TEST_CASE("fermionic sum examples") {
  PrimeContext ctx(5, BigRational(6), 3);
  BigRational s1 = riemann_sum_mu_minus_q(ctx, 1, 1);
  CHECK(s1 == BigRational(1143177));
  CHECK(s1 == BigRational(7, 2) * BigRational(0 - 6 + 252 - 9288 + 335664));
  BigRational e1 = euler_q_recurrence(1).at(1).eval(BigRational(6));
  CHECK(e1 == BigRational(-6, 37));
  CHECK(residue(s1, 5) == 2);
  CHECK(residue(e1, 5) == 2);

  for (unsigned n = 1; n <= 3; ++n) {
    for (unsigned m = 0; m <= 3; ++m) {
      for (unsigned s = 0; s <= 2; ++s) {
        CHECK(riemann_sum_mu_minus_q(ctx, n, m, s) ==
              brute_fermionic(5, BigRational(6), n, m, s));
      }
    }
  }
  // m = 0: ([2]_q/2)(1 + q^(p^N))/(1 + q).
  for (unsigned n = 1; n <= 3; ++n) {
    BigRational q(6);
    CHECK(riemann_sum_mu_minus_q(ctx, n, 0) ==
          (BigRational(1) + q.pow(n == 1 ? 5 : n == 2 ? 25 : 125)) / 2);
  }
}

TEST_CASE("all-level sums agree with single-level sums") {
  PrimeContext ctx(3, BigRational(4), 4);
  for (unsigned m = 0; m <= 3; ++m) {
    auto fer = riemann_sums(ctx, Measure::fermionic, m, 1);
    auto bos = riemann_sums(ctx, Measure::bosonic, m, 1);
    REQUIRE(fer.size() == 4);
    for (unsigned n = 1; n <= 4; ++n) {
      CHECK(fer[n - 1] == riemann_sum_mu_minus_q(ctx, n, m, 1));
      CHECK(bos[n - 1] == riemann_sum_mu_q(ctx, n, m, 1));
    }
  }
}

TEST_CASE("certificates") {
  PrimeContext ctx(5, BigRational(6), 4);
  auto table = euler_q_recurrence(3);
  BigRational target = table.at(1).eval(BigRational(6));
  Certificate cert = convergence_certificate(ctx, 1, 0, target);
  CHECK(cert.pass);
  REQUIRE(cert.levels.size() == 4);
  CHECK(cert.levels[0].gap >= Valuation(1));
  for (std::size_t i = 1; i < cert.levels.size(); ++i) {
    CHECK(cert.levels[i - 1].gap <= cert.levels[i].gap);
  }
  CHECK(cert.to_json()["levels"][0]["N"] == 1);
  CHECK(cert.to_json()["measure"] == "fermionic");

  // A wrong target never converges.
  Certificate wrong = convergence_certificate(ctx, 1, 0, target + BigRational(1));
  CHECK_FALSE(wrong.pass);

  // Bosonic m = 0 is exact at every level.
  PrimeContext ctx3(3, BigRational(4), 4);
  Certificate exact = convergence_certificate(ctx3, 0, 0, BigRational(1), Measure::bosonic);
  CHECK(exact.pass);
  for (const auto& l : exact.levels) CHECK(l.gap.is_infinite());
  CHECK(exact.to_json()["levels"][0]["gap"] == "inf");

  // Shifted target through polynomial substitution.
  BigRational shifted = euler_q_polynomial(1, table).substitute(2).eval(BigRational(6));
  CHECK(convergence_certificate(ctx, 1, 2, shifted).pass);
}

TEST_CASE("certificate rule") {
  auto level = [](unsigned n, std::optional<long> g) {
    return PadicEstimate{n, 0, 0, g ? Valuation(*g) : Valuation::infinity()};
  };
  CHECK(certificate_passes({level(1, 1), level(2, 2), level(3, 3), level(4, 4)}, 4));
  CHECK(certificate_passes({level(1, 1), level(2, 1), level(3, 3), level(4, 3)}, 4));
  CHECK_FALSE(certificate_passes({level(1, 2), level(2, 1), level(3, 3), level(4, 4)}, 4));
  CHECK_FALSE(certificate_passes({level(1, 0), level(2, 1), level(3, 2), level(4, 2)}, 4));
  CHECK(certificate_passes({level(1, 1), level(2, {}), level(3, {}), level(4, {})}, 4));
}

TEST_CASE("larger v_p(q - 1) converges at least as fast (recorded only)") {
  PrimeContext slow(3, BigRational(4), 3);
  PrimeContext fast(3, BigRational(10), 3);
  auto table = euler_q_recurrence(2);
  auto c4 = convergence_certificate(slow, 2, 0, table.at(2).eval(BigRational(4)));
  auto c10 = convergence_certificate(fast, 2, 0, table.at(2).eval(BigRational(10)));
  CHECK(c4.pass);
  CHECK(c10.pass);
  MESSAGE("q=4 final gap " << c4.levels.back().gap.to_string() << ", q=10 final gap "
                           << c10.levels.back().gap.to_string());
}

TEST_CASE("exponential integrand converges to the moment kernel") {
  for (auto [p, q] : {std::pair<unsigned long, long>{5, 6}, {3, 4}}) {
    PrimeContext ctx(p, BigRational(q), 4);
    for (unsigned l = 0; l <= 4; ++l) {
      BigRational target = fermionic_moment_kernel(l).eval(BigRational(q));
      std::vector<BigRational> sums;
      for (unsigned n = 1; n <= 4; ++n) {
        BigRational s = riemann_sum_mu_minus_q_exponential(ctx, n, l);
        // Direct form: ([2]_q/2) sum (-1)^x q^x q^(l x).
        unsigned long count = 1;
        for (unsigned i = 0; i < n; ++i) count *= p;
        if (count <= 125) {
          BigRational direct(0), qq(q);
          for (unsigned long x = 0; x < count; ++x) {
            BigRational term = qq.pow(x * (l + 1));
            direct += x % 2 == 0 ? term : -term;
          }
          CHECK(s == (BigRational(1) + qq) / 2 * direct);
        }
        sums.push_back(std::move(s));
      }
      CHECK(certificate_passes(estimate_levels(sums, target, p), 4));
    }
  }
}

TEST_CASE("shift identity at finite level") {
  // q S_N(f_1) + S_N(f) - [2]_q f(0) has valuation at least the level-N gap
  // of the certificate for S_N(f).
  for (auto [p, q] : {std::pair<unsigned long, long>{5, 6}, {3, 4}}) {
    PrimeContext ctx(p, BigRational(q), 4);
    BigRational qq(q);
    auto table = euler_q_recurrence(4);
    for (unsigned m = 0; m <= 4; ++m) {
      auto plain = riemann_sums(ctx, Measure::fermionic, m, 0);
      auto shifted = riemann_sums(ctx, Measure::fermionic, m, 1);
      BigRational f0 = m == 0 ? BigRational(1) : BigRational(0);
      Certificate cert = convergence_certificate(ctx, m, 0, table.at(m).eval(qq));
      for (unsigned n = 0; n < 4; ++n) {
        BigRational dev = qq * shifted[n] + plain[n] - (BigRational(1) + qq) * f0;
        CHECK(vp(dev, p) >= cert.levels[n].gap);
      }
    }
  }
}

}  // TEST_SUITE
