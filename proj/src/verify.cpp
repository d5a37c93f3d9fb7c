#include "qeuler/verify.hpp"

#include <algorithm>
#include <future>
#include <sstream>

#include "qeuler/errors.hpp"
#include "qeuler/euler_q.hpp"
#include "qeuler/qnumbers.hpp"

namespace qeuler::verify {

namespace {

IdentityReport exact_report(IdentityId id, std::vector<std::pair<std::string, long>> params,
                            QRat lhs, QRat rhs, std::string label = {}) {
  IdentityReport r{id, std::move(label), std::move(params), std::move(lhs), std::move(rhs),
                   std::nullopt, false};
  r.pass = *r.lhs == *r.rhs;
  return r;
}

// [2]_q sum_{l<n} s(l) q^l [l]_q^m, with s(l) = +1 or -1 per `negate`.
template <typename SignFn>
QRat bracket_power_sum(unsigned n, unsigned m, SignFn negate) {
  QPoly sum;
  for (unsigned l = 0; l < n; ++l) {
    QPoly term = QPoly::monomial(l) * q_bracket(l).pow(m);
    if (negate(l)) {
      sum -= term;
    } else {
      sum += term;
    }
  }
  return QRat(q_bracket(2) * sum);
}

// E_{m,q}(n) through the symbolic polynomial, and E_{m,q}, for m <= m_max.
class MomentTable {
 public:
  explicit MomentTable(unsigned m_max) : numbers_(euler_q_recurrence(m_max)) {
    for (unsigned m = 0; m <= m_max; ++m) polys_.push_back(euler_q_polynomial(m, numbers_));
  }
  const QRat& at_zero(unsigned m) const { return numbers_.at(m); }
  QRat at(unsigned m, unsigned x) const { return polys_.at(m).substitute(x); }

 private:
  QEulerTable numbers_;
  std::vector<QXPoly> polys_;
};

IdentityReport certificate_report(IdentityId id, std::vector<std::pair<std::string, long>> params,
                                  padic::Certificate cert) {
  IdentityReport r{id, {}, std::move(params), std::nullopt, std::nullopt, std::move(cert), false};
  r.pass = r.certificate->pass;
  return r;
}

template <typename Fn>
auto run_async(Fn fn) {
  return std::async(std::launch::async, std::move(fn));
}

}  // namespace

std::string to_string(IdentityId id) {
  switch (id) {
    case IdentityId::EQ9: return "EQ9";
    case IdentityId::EQ14: return "EQ14";
    case IdentityId::EQ16: return "EQ16";
    case IdentityId::EQ16_1: return "EQ16_1";
    case IdentityId::EQ19: return "EQ19";
    case IdentityId::EQ21: return "EQ21";
    case IdentityId::EQ6_PADIC: return "EQ6_PADIC";
    case IdentityId::EQ12_PADIC: return "EQ12_PADIC";
    case IdentityId::EQ13_PADIC: return "EQ13_PADIC";
  }
  return "?";
}

long IdentityReport::param(const std::string& name) const {
  for (const auto& [key, value] : params) {
    if (key == name) return value;
  }
  throw std::out_of_range("report has no parameter '" + name + "'");
}

nlohmann::ordered_json IdentityReport::to_json() const {
  nlohmann::ordered_json j;
  j["identity"] = to_string(id);
  if (!label.empty()) j["label"] = label;
  nlohmann::ordered_json p = nlohmann::ordered_json::object();
  for (const auto& [key, value] : params) p[key] = value;
  j["params"] = p;
  if (lhs) j["lhs"] = lhs->to_json();
  if (rhs) j["rhs"] = rhs->to_json();
  if (certificate) j["certificate"] = certificate->to_json();
  j["pass"] = pass;
  return j;
}

std::vector<IdentityReport> check_eq14(unsigned n_max) {
  std::vector<IdentityReport> out;
  for (unsigned n = 0; n <= n_max; ++n) {
    auto [shifted, rebuilt] = bracket_shift(n);
    out.push_back(exact_report(IdentityId::EQ14, {{"n", n}}, QRat(shifted), QRat(rebuilt)));
  }
  return out;
}

std::vector<IdentityReport> check_eq16(unsigned n_max) {
  const QEulerTable table = euler_q_closed_form_table(n_max);
  const QRat q = QRat::q();
  std::vector<IdentityReport> out;
  for (unsigned n = 0; n <= n_max; ++n) {
    QRat umbral;
    for (unsigned l = 0; l <= n; ++l) {
      umbral += QRat(BigRational(binomial(n, l))) * q_power(l) * table.at(l);
    }
    QRat lhs = q * umbral + table.at(n);
    QRat rhs = n == 0 ? QRat(q_bracket(2)) : QRat();
    out.push_back(exact_report(IdentityId::EQ16, {{"n", n}}, std::move(lhs), std::move(rhs)));
  }
  return out;
}

std::vector<IdentityReport> check_eq19(unsigned m_max, const std::vector<unsigned>& odd_n) {
  for (unsigned n : odd_n) {
    if (n % 2 == 0) throw ParameterError("EQ19 needs odd positive n, got " + std::to_string(n));
  }
  const MomentTable moments(m_max);
  std::vector<IdentityReport> out;
  for (unsigned n : odd_n) {
    for (unsigned m = 0; m <= m_max; ++m) {
      QRat lhs = bracket_power_sum(n, m, [](unsigned l) { return l % 2 == 1; });
      QRat rhs = q_power(n) * moments.at(m, n) + moments.at_zero(m);
      out.push_back(exact_report(IdentityId::EQ19, {{"n", n}, {"m", m}}, std::move(lhs),
                                 std::move(rhs)));
    }
  }
  return out;
}

std::vector<IdentityReport> check_eq21(unsigned m_max, const std::vector<unsigned>& even_n) {
  for (unsigned n : even_n) {
    if (n == 0 || n % 2 == 1) {
      throw ParameterError("EQ21 needs even positive n, got " + std::to_string(n));
    }
  }
  const MomentTable moments(m_max);
  std::vector<IdentityReport> out;
  for (unsigned n : even_n) {
    for (unsigned m = 0; m <= m_max; ++m) {
      QRat lhs = q_power(n) * moments.at(m, n) - moments.at_zero(m);
      // (-1)^(l-1): negative for even l.
      QRat rhs = bracket_power_sum(n, m, [](unsigned l) { return l % 2 == 0; });
      out.push_back(exact_report(IdentityId::EQ21, {{"n", n}, {"m", m}}, std::move(lhs),
                                 std::move(rhs)));
    }
  }
  return out;
}

std::vector<IdentityReport> check_eq16_1(const std::vector<unsigned>& n_list, unsigned m_max) {
  for (unsigned n : n_list) {
    if (n == 0) throw ParameterError("EQ16_1 needs n >= 1");
  }
  const MomentTable moments(m_max);
  std::vector<IdentityReport> out;
  for (unsigned n : n_list) {
    const bool odd = n % 2 == 1;
    for (unsigned m = 0; m <= m_max; ++m) {
      // (-1)^(n-1) I(f) and (-1)^(n-1-l) as written, without using the parity of n.
      QRat integral_term = (n - 1) % 2 == 0 ? moments.at_zero(m) : -moments.at_zero(m);
      QRat lhs = q_power(n) * moments.at(m, n) + integral_term;
      QRat rhs = bracket_power_sum(n, m, [n](unsigned l) { return (n - 1 - l) % 2 == 1; });
      out.push_back(exact_report(IdentityId::EQ16_1, {{"n", n}, {"m", m}}, std::move(lhs),
                                 std::move(rhs), odd ? "EQ18" : "EQ20"));
    }
  }
  return out;
}

bool reproduces(const IdentityReport& eq16_1, const IdentityReport& other) {
  if (eq16_1.id != IdentityId::EQ16_1 || !eq16_1.lhs || !other.lhs) return false;
  if (eq16_1.params != other.params || eq16_1.pass != other.pass) return false;
  const bool odd = eq16_1.param("n") % 2 == 1;
  if (odd) {
    return other.id == IdentityId::EQ19 && *eq16_1.lhs == *other.rhs && *eq16_1.rhs == *other.lhs;
  }
  return other.id == IdentityId::EQ21 && *eq16_1.lhs == *other.lhs && *eq16_1.rhs == *other.rhs;
}

std::vector<IdentityReport> check_eq9_padic(const padic::PrimeContext& ctx, unsigned m_max) {
  using padic::Measure;
  const BigRational& q = ctx.q();
  std::vector<IdentityReport> out;
  for (unsigned m = 0; m <= m_max; ++m) {
    auto shifted = padic::riemann_sums(ctx, Measure::fermionic, m, 1);
    auto plain = padic::riemann_sums(ctx, Measure::fermionic, m, 0);
    std::vector<BigRational> combined;
    for (std::size_t i = 0; i < plain.size(); ++i) combined.push_back(q * shifted[i] + plain[i]);
    // [2]_q f(0) with f(0) = [0]_q^m.
    BigRational reference = m == 0 ? BigRational(1) + q : BigRational(0);
    auto levels = padic::estimate_levels(combined, reference, ctx.p());
    bool pass = padic::certificate_passes(levels, ctx.n_max());
    padic::Certificate cert{ctx.p(), q, m, 0, Measure::fermionic, std::move(levels), pass};
    out.push_back(certificate_report(IdentityId::EQ9,
                                     {{"p", static_cast<long>(ctx.p())}, {"m", m}}, std::move(cert)));
  }
  return out;
}

std::vector<IdentityReport> check_eq6_padic(const padic::PrimeContext& ctx, unsigned m_max,
                                            unsigned x0_max) {
  const CarlitzBernoulliTable beta = carlitz_beta(m_max);
  std::vector<IdentityReport> out;
  for (unsigned m = 0; m <= m_max; ++m) {
    const QXPoly poly = carlitz_beta_polynomial(m, beta);
    for (unsigned x0 = 0; x0 <= x0_max; ++x0) {
      BigRational target = poly.substitute(x0).eval(ctx.q());
      auto cert = padic::convergence_certificate(ctx, m, x0, target, padic::Measure::bosonic);
      out.push_back(certificate_report(
          IdentityId::EQ6_PADIC, {{"p", static_cast<long>(ctx.p())}, {"m", m}, {"x0", x0}},
          std::move(cert)));
    }
  }
  return out;
}

std::vector<IdentityReport> check_eq12_13_padic(const padic::PrimeContext& ctx, unsigned m_max,
                                                unsigned x0_max) {
  const MomentTable moments(m_max);
  std::vector<IdentityReport> out;
  for (unsigned m = 0; m <= m_max; ++m) {
    for (unsigned x0 = 0; x0 <= x0_max; ++x0) {
      BigRational target = moments.at(m, x0).eval(ctx.q());
      auto cert = padic::convergence_certificate(ctx, m, x0, target, padic::Measure::fermionic);
      out.push_back(certificate_report(
          x0 == 0 ? IdentityId::EQ12_PADIC : IdentityId::EQ13_PADIC,
          {{"p", static_cast<long>(ctx.p())}, {"m", m}, {"x0", x0}}, std::move(cert)));
    }
  }
  return out;
}

std::vector<ParityComparisonRow> compare_eq19_eq21(unsigned m_max, unsigned odd_n_max) {
  std::vector<unsigned> odd;
  std::vector<unsigned> even;
  for (unsigned n = 1; n <= odd_n_max; n += 2) {
    odd.push_back(n);
    even.push_back(n + 1);
  }
  auto r19 = check_eq19(m_max, odd);
  auto r21 = check_eq21(m_max, even);
  std::vector<ParityComparisonRow> rows;
  for (std::size_t i = 0; i < r19.size(); ++i) {
    rows.push_back({static_cast<unsigned>(r19[i].param("m")), r19[i], r21[i]});
  }
  std::stable_sort(rows.begin(), rows.end(),
                   [](const auto& a, const auto& b) { return a.m < b.m; });
  return rows;
}

std::string render_comparison(const std::vector<ParityComparisonRow>& rows) {
  std::ostringstream os;
  for (const auto& row : rows) {
    os << "m=" << row.m << "  n=" << row.odd.param("n") << " EQ19 "
       << (row.odd.pass ? "pass" : "FAIL") << ": " << row.odd.lhs->to_string() << "  |  n="
       << row.even.param("n") << " EQ21 " << (row.even.pass ? "pass" : "FAIL") << ": "
       << row.even.lhs->to_string() << "\n";
  }
  return os.str();
}

SuiteSummary summarize(const std::vector<IdentityReport>& reports) {
  SuiteSummary s;
  s.total = reports.size();
  s.passed = static_cast<std::size_t>(
      std::count_if(reports.begin(), reports.end(), [](const auto& r) { return r.pass; }));
  return s;
}

nlohmann::ordered_json suite_json(const std::vector<IdentityReport>& reports) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) arr.push_back(r.to_json());
  SuiteSummary s = summarize(reports);
  return {{"reports", arr}, {"summary", {{"total", s.total}, {"passed", s.passed}}}};
}

std::vector<IdentityReport> run_all(const SuiteRanges& ranges) {
  using Batch = std::vector<IdentityReport>;
  std::vector<std::future<Batch>> jobs;
  jobs.push_back(run_async([&] { return check_eq14(ranges.eq14_n_max); }));
  jobs.push_back(run_async([&] { return check_eq16(ranges.eq16_n_max); }));
  jobs.push_back(run_async([&] { return check_eq19(ranges.m_max, ranges.eq19_n); }));
  jobs.push_back(run_async([&] { return check_eq21(ranges.m_max, ranges.eq21_n); }));
  jobs.push_back(run_async([&] { return check_eq16_1(ranges.eq16_1_n, ranges.m_max); }));
  for (const auto& [p, q] : ranges.padic_contexts) {
    jobs.push_back(run_async([&ranges, p = p, q = q] {
      padic::PrimeContext ctx(p, BigRational(q), ranges.padic_levels);
      Batch batch = check_eq12_13_padic(ctx, ranges.padic_fermionic_m_max, ranges.padic_x0_max);
      for (auto& r : check_eq6_padic(ctx, ranges.padic_bosonic_m_max, ranges.padic_x0_max)) {
        batch.push_back(std::move(r));
      }
      for (auto& r : check_eq9_padic(ctx, ranges.padic_fermionic_m_max)) batch.push_back(std::move(r));
      return batch;
    }));
  }
  Batch all;
  for (auto& job : jobs) {
    for (auto& r : job.get()) all.push_back(std::move(r));
  }
  return all;
}

}  // namespace qeuler::verify
