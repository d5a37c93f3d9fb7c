#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "qeuler/padic.hpp"
#include "qeuler/qrat.hpp"

namespace qeuler::verify {

enum class IdentityId {
  EQ9,         // q I(f_1) + I(f) = [2]_q f(0), finite-level Riemann sums
  EQ14,        // [n+1]_q = 1 + q [n]_q
  EQ16,        // q (q E + 1)^n + E_n = [2]_q | 0
  EQ16_1,      // shifted alternating sum, any n >= 1
  EQ19,        // odd n
  EQ21,        // even n
  EQ6_PADIC,   // bosonic sums -> beta_{m,q}(x)
  EQ12_PADIC,  // fermionic sums -> E_{m,q}
  EQ13_PADIC,  // fermionic sums -> E_{m,q}(x), x > 0
};

std::string to_string(IdentityId id);

struct IdentityReport {
  IdentityId id;
  // Specialization label for EQ16_1 reports: "EQ18" for odd n, "EQ20" for even n.
  std::string label;
  std::vector<std::pair<std::string, long>> params;
  std::optional<QRat> lhs;
  std::optional<QRat> rhs;
  std::optional<padic::Certificate> certificate;
  bool pass = false;

  long param(const std::string& name) const;
  nlohmann::ordered_json to_json() const;
};

// Exact checks. Each side is built along a different code path.
std::vector<IdentityReport> check_eq14(unsigned n_max);
// Uses the closed-form table, never the recurrence that defines E_{n,q}.
std::vector<IdentityReport> check_eq16(unsigned n_max);
// Throws ParameterError on an even or zero n.
std::vector<IdentityReport> check_eq19(unsigned m_max, const std::vector<unsigned>& odd_n);
// Throws ParameterError on an odd or zero n.
std::vector<IdentityReport> check_eq21(unsigned m_max, const std::vector<unsigned>& even_n);
// Throws ParameterError on n = 0.
std::vector<IdentityReport> check_eq16_1(const std::vector<unsigned>& n_list, unsigned m_max);

// True when an EQ16_1 report reproduces the matching EQ19 (odd n, sides
// swapped to follow the printed forms) or EQ21 (even n) report.
bool reproduces(const IdentityReport& eq16_1, const IdentityReport& other);

// p-adic checks, certified per padic::certificate_passes.
std::vector<IdentityReport> check_eq9_padic(const padic::PrimeContext& ctx, unsigned m_max);
std::vector<IdentityReport> check_eq6_padic(const padic::PrimeContext& ctx, unsigned m_max,
                                            unsigned x0_max);
// x0 = 0 yields EQ12_PADIC reports, x0 > 0 yields EQ13_PADIC.
std::vector<IdentityReport> check_eq12_13_padic(const padic::PrimeContext& ctx, unsigned m_max,
                                                unsigned x0_max);

// Same m, adjacent odd/even n, side by side. Nothing beyond the two
// individual checks is asserted.
struct ParityComparisonRow {
  unsigned m;
  IdentityReport odd;   // EQ19 at n
  IdentityReport even;  // EQ21 at n + 1
};
std::vector<ParityComparisonRow> compare_eq19_eq21(unsigned m_max, unsigned odd_n_max);
std::string render_comparison(const std::vector<ParityComparisonRow>& rows);

struct SuiteSummary {
  std::size_t total = 0;
  std::size_t passed = 0;
  bool all_passed() const { return total == passed; }
};

SuiteSummary summarize(const std::vector<IdentityReport>& reports);
// {"reports": [...], "summary": {"total": T, "passed": P}}
nlohmann::ordered_json suite_json(const std::vector<IdentityReport>& reports);

struct SuiteRanges {
  unsigned eq14_n_max = 50;
  unsigned eq16_n_max = 30;
  std::vector<unsigned> eq19_n{1, 3, 5, 7};
  std::vector<unsigned> eq21_n{2, 4, 6};
  std::vector<unsigned> eq16_1_n{1, 2, 3, 4, 5, 6, 7};
  unsigned m_max = 15;
  // p-adic part: (p, q) pairs at depth padic_levels.
  std::vector<std::pair<unsigned long, long>> padic_contexts{{5, 6}, {3, 4}};
  unsigned padic_levels = 4;
  unsigned padic_fermionic_m_max = 3;
  unsigned padic_bosonic_m_max = 2;
  unsigned padic_x0_max = 1;
};

// Every identity over the given ranges; the independent suites run
// concurrently and are concatenated in a fixed order.
std::vector<IdentityReport> run_all(const SuiteRanges& ranges = {});

}  // namespace qeuler::verify
