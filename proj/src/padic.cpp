#include "qeuler/padic.hpp"

#include "qeuler/errors.hpp"
#include "qeuler/qnumbers.hpp"

namespace qeuler::padic {

namespace {

long vp_integer(BigInteger n, unsigned long p) {
  long v = 0;
  while (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0) {
    mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
    ++v;
  }
  return v;
}

unsigned long ipow(unsigned long base, unsigned e) {
  unsigned long r = 1;
  while (e-- > 0) r *= base;
  return r;
}

// Prefix sums of w(x) [x + shift]^moment over x < p^N for N = 1..levels,
// where w(x) = q^x (bosonic) or (-q)^x (fermionic). Not yet normalized.
std::vector<BigRational> weighted_prefix_sums(const PrimeContext& ctx, Measure measure,
                                              unsigned moment, unsigned shift, unsigned levels) {
  const BigRational& q = ctx.q();
  const BigRational step = measure == Measure::fermionic ? -q : q;
  BigRational weight = 1;
  BigRational bracket = q_bracket(shift).eval(q);
  BigRational sum = 0;
  std::vector<BigRational> out;
  out.reserve(levels);
  unsigned long bound = ctx.p();
  for (unsigned long x = 0; out.size() < levels; ++x) {
    if (x == bound) {
      out.push_back(sum);
      bound *= ctx.p();
    }
    if (moment == 0) {
      sum += weight;
    } else if (!bracket.is_zero()) {
      sum += weight * bracket.pow(moment);
    }
    weight *= step;
    bracket = BigRational(1) + q * bracket;
  }
  return out;
}

void check_level(const PrimeContext& ctx, unsigned level) {
  if (level == 0 || level > ctx.n_max()) {
    throw ParameterError("level " + std::to_string(level) + " outside 1.." +
                         std::to_string(ctx.n_max()));
  }
}

// [n]_q at a rational point, including q = 1 where it is n.
BigRational bracket_value(unsigned long n, const BigRational& q) {
  if (q == BigRational(1)) return BigRational(static_cast<long>(n));
  return (q.pow(n) - BigRational(1)) / (q - BigRational(1));
}

}  // namespace

std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
  if (a.is_infinite() || b.is_infinite()) {
    if (a.is_infinite() && b.is_infinite()) return std::strong_ordering::equal;
    return a.is_infinite() ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return a.value() <=> b.value();
}

Valuation vp(const BigRational& x, unsigned long p) {
  if (x.is_zero()) return Valuation::infinity();
  return Valuation(vp_integer(x.numerator(), p) - vp_integer(x.denominator(), p));
}

bool is_odd_prime(unsigned long p) {
  if (p < 3 || p % 2 == 0) return false;
  for (unsigned long d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

std::string to_string(Measure m) { return m == Measure::fermionic ? "fermionic" : "bosonic"; }

PrimeContext::PrimeContext(unsigned long p, BigRational q, unsigned n_max)
    : p_(p), q_(std::move(q)), n_max_(n_max) {
  if (!is_odd_prime(p_)) throw ParameterError(std::to_string(p_) + " is not an odd prime");
  Valuation v = vp(q_ - BigRational(1), p_);
  if (v < Valuation(1)) {
    throw ParameterError("q = " + q_.to_string() + " needs v_" + std::to_string(p_) +
                         "(q - 1) >= 1, got " + v.to_string());
  }
  if (n_max_ == 0) throw ParameterError("refinement depth must be at least 1");
}

BigRational riemann_sum_mu_q(const PrimeContext& ctx, unsigned level, unsigned moment,
                             unsigned shift) {
  check_level(ctx, level);
  BigRational raw = weighted_prefix_sums(ctx, Measure::bosonic, moment, shift, level).back();
  return raw / bracket_value(ipow(ctx.p(), level), ctx.q());
}

BigRational riemann_sum_mu_minus_q(const PrimeContext& ctx, unsigned level, unsigned moment,
                                   unsigned shift) {
  check_level(ctx, level);
  BigRational raw = weighted_prefix_sums(ctx, Measure::fermionic, moment, shift, level).back();
  return (BigRational(1) + ctx.q()) / BigRational(2) * raw;
}

BigRational riemann_sum_mu_minus_q_exponential(const PrimeContext& ctx, unsigned level,
                                               unsigned l) {
  const BigRational q_minus_one = ctx.q() - BigRational(1);
  BigRational total = 0;
  for (unsigned j = 0; j <= l; ++j) {
    total += BigRational(binomial(l, j)) * q_minus_one.pow(j) *
             riemann_sum_mu_minus_q(ctx, level, j);
  }
  return total;
}

std::vector<BigRational> riemann_sums(const PrimeContext& ctx, Measure measure, unsigned moment,
                                      unsigned shift) {
  auto raw = weighted_prefix_sums(ctx, measure, moment, shift, ctx.n_max());
  const BigRational& q = ctx.q();
  const BigRational half_two = (BigRational(1) + q) / BigRational(2);
  unsigned long size = 1;
  for (unsigned n = 0; n < raw.size(); ++n) {
    size *= ctx.p();
    if (measure == Measure::fermionic) {
      raw[n] *= half_two;
    } else {
      raw[n] /= bracket_value(size, q);
    }
  }
  return raw;
}

nlohmann::ordered_json Certificate::to_json() const {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& e : levels) {
    nlohmann::ordered_json gap = e.gap.is_infinite() ? nlohmann::ordered_json("inf") : nlohmann::ordered_json(e.gap.value());
    arr.push_back({{"N", e.level}, {"gap", gap}});
  }
  return {{"p", p},           {"q", q.to_string()},
          {"moment", moment}, {"shift", shift},
          {"measure", padic::to_string(measure)},
          {"levels", arr},    {"pass", pass}};
}

bool certificate_passes(const std::vector<PadicEstimate>& levels, unsigned n_max) {
  if (levels.empty()) return false;
  for (std::size_t i = 1; i < levels.size(); ++i) {
    if (levels[i].gap < levels[i - 1].gap) return false;
  }
  const long required = static_cast<long>(n_max) - 1;
  return levels.back().gap >= Valuation(required);
}

std::vector<PadicEstimate> estimate_levels(const std::vector<BigRational>& values,
                                           const BigRational& reference, unsigned long p) {
  std::vector<PadicEstimate> out;
  out.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    out.push_back({static_cast<unsigned>(i + 1), values[i], reference, vp(values[i] - reference, p)});
  }
  return out;
}

Certificate convergence_certificate(const PrimeContext& ctx, unsigned moment, unsigned shift,
                                    const BigRational& target, Measure measure) {
  auto levels = estimate_levels(riemann_sums(ctx, measure, moment, shift), target, ctx.p());
  bool pass = certificate_passes(levels, ctx.n_max());
  return {ctx.p(), ctx.q(), moment, shift, measure, std::move(levels), pass};
}

}  // namespace qeuler::padic
