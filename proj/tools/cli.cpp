#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "qeuler/analytic.hpp"
#include "qeuler/errors.hpp"
#include "qeuler/euler_q.hpp"
#include "qeuler/padic.hpp"
#include "qeuler/table_export.hpp"
#include "qeuler/verify.hpp"

namespace qeuler::cli {

namespace {

using analytic::Complex;

double parse_double(const std::string& text) {
  double value = 0.0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) throw ParameterError("malformed number '" + text + "'");
  return value;
}

// "RE,IM"
Complex parse_complex(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos) throw ParameterError("expected RE,IM, got '" + text + "'");
  return {parse_double(text.substr(0, comma)), parse_double(text.substr(comma + 1))};
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct TableArgs {
  std::string kind;
  unsigned n_max = 0;
  std::string u;
  std::string format = "text";
  std::string out_path;
};

struct EvalArgs {
  unsigned n = 0;
  std::string q_exact;
  std::string q_complex;
  unsigned terms = 0;
  unsigned x = 0;
  double tolerance = 1e-9;
};

struct VerifyArgs {
  std::string suite;
  std::optional<unsigned> n_max;
  std::optional<unsigned> m_max;
  std::vector<unsigned> n_list;
  std::string format = "json";
};

struct PadicArgs {
  unsigned long p = 0;
  std::string q;
  unsigned levels = 4;
  unsigned moment = 0;
  unsigned shift = 0;
  std::string measure = "fermionic";
};

struct SeriesArgs {
  std::string q;
  unsigned n_max = 20;
  unsigned terms = 300;
  std::vector<std::string> t_points;
  double tolerance = 1e-8;
};

int cmd_table(const TableArgs& a, std::ostream& out) {
  TableKind kind = a.kind == "euler-q"  ? TableKind::euler_q
                   : a.kind == "beta-q" ? TableKind::beta_q
                                        : TableKind::carlitz_h;
  std::optional<BigRational> u;
  if (!a.u.empty()) u = BigRational::parse(a.u);
  if (kind == TableKind::carlitz_h && !u) throw ParameterError("--u is required for carlitz-h");
  SequenceTable table;
  try {
    table = make_table(kind, a.n_max, u);
  } catch (const std::domain_error& e) {
    throw ParameterError(e.what());
  }

  std::string rendered;
  if (a.format == "json") {
    rendered = table_json(table).dump(2) + "\n";
  } else if (a.format == "csv") {
    rendered = table_csv(table);
  } else if (a.format == "latex") {
    rendered = table_latex(table);
  } else {
    rendered = table_text(table);
  }

  if (a.out_path.empty()) {
    out << rendered;
  } else {
    std::ofstream file(a.out_path, std::ios::binary);
    if (!file) throw ParameterError("cannot open '" + a.out_path + "' for writing");
    file << rendered;
  }
  return kExitPass;
}

int cmd_eval(const EvalArgs& a, std::ostream& out) {
  if (!a.q_exact.empty()) {
    BigRational q = BigRational::parse(a.q_exact);
    QRat value = euler_q_polynomial(a.n, euler_q_recurrence(a.n)).substitute(a.x);
    try {
      out << value.eval(q).to_string() << "\n";
    } catch (const PoleError& e) {
      throw ParameterError(e.what());
    }
    return kExitPass;
  }
  Complex q = parse_complex(a.q_complex);
  analytic::SeriesConfig cfg = a.terms > 0 ? analytic::SeriesConfig{q, a.terms, a.tolerance}
                                           : analytic::SeriesConfig::for_moment(q, a.n, a.tolerance);
  auto v = analytic::euler_series(a.n, cfg, a.x);
  out << "re=" << format_double(v.value.real()) << " im=" << format_double(v.value.imag())
      << " tail_bound=" << format_double(v.tail_bound) << " M=" << v.terms << "\n";
  return kExitPass;
}

std::vector<unsigned> range_filtered(unsigned lo, unsigned hi, int parity) {
  std::vector<unsigned> v;
  for (unsigned n = lo; n <= hi; ++n) {
    if (parity < 0 || static_cast<int>(n % 2) == parity) v.push_back(n);
  }
  return v;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  verify::SuiteRanges ranges;
  const unsigned m_max = a.m_max.value_or(ranges.m_max);
  std::vector<verify::IdentityReport> reports;

  auto n_values = [&](const std::vector<unsigned>& defaults, int parity) {
    if (!a.n_list.empty()) return a.n_list;
    if (!a.n_max) return defaults;
    return range_filtered(1, *a.n_max, parity);
  };

  if (a.suite == "eq14") {
    reports = verify::check_eq14(a.n_max.value_or(ranges.eq14_n_max));
  } else if (a.suite == "eq16") {
    reports = verify::check_eq16(a.n_max.value_or(ranges.eq16_n_max));
  } else if (a.suite == "eq19") {
    reports = verify::check_eq19(m_max, n_values(ranges.eq19_n, 1));
  } else if (a.suite == "eq21") {
    reports = verify::check_eq21(m_max, n_values(ranges.eq21_n, 0));
  } else if (a.suite == "eq16-1") {
    reports = verify::check_eq16_1(n_values(ranges.eq16_1_n, -1), m_max);
  } else if (a.suite == "compare") {
    auto rows = verify::compare_eq19_eq21(m_max, a.n_max.value_or(7));
    out << verify::render_comparison(rows);
    bool ok = std::all_of(rows.begin(), rows.end(),
                          [](const auto& r) { return r.odd.pass && r.even.pass; });
    return ok ? kExitPass : kExitFailure;
  } else {
    if (a.n_max) ranges.eq16_n_max = *a.n_max;
    ranges.m_max = m_max;
    reports = verify::run_all(ranges);
  }

  if (a.format == "text") {
    for (const auto& r : reports) {
      out << verify::to_string(r.id);
      if (!r.label.empty()) out << " (" << r.label << ")";
      for (const auto& [k, v] : r.params) out << " " << k << "=" << v;
      out << " " << (r.pass ? "pass" : "FAIL") << "\n";
    }
    auto s = verify::summarize(reports);
    out << "passed " << s.passed << "/" << s.total << "\n";
  } else {
    out << verify::suite_json(reports).dump(2) << "\n";
  }
  return verify::summarize(reports).all_passed() ? kExitPass : kExitFailure;
}

int cmd_padic(const PadicArgs& a, std::ostream& out) {
  padic::PrimeContext ctx(a.p, BigRational::parse(a.q), a.levels);
  const bool bosonic = a.measure == "bosonic";
  QXPoly poly = bosonic ? carlitz_beta_polynomial(a.moment, carlitz_beta(a.moment))
                        : euler_q_polynomial(a.moment, euler_q_recurrence(a.moment));
  BigRational target = poly.substitute(a.shift).eval(ctx.q());
  auto cert = padic::convergence_certificate(
      ctx, a.moment, a.shift, target, bosonic ? padic::Measure::bosonic : padic::Measure::fermionic);
  out << cert.to_json().dump() << "\n";
  return cert.pass ? kExitPass : kExitFailure;
}

int cmd_series(const SeriesArgs& a, std::ostream& out) {
  Complex q = parse_complex(a.q);
  std::vector<Complex> ts;
  if (a.t_points.empty()) {
    ts = {{0.5, 0.0}, {-0.5, 0.0}, {0.0, 0.25}, {0.0, -0.25}};
  } else {
    for (const auto& t : a.t_points) ts.push_back(parse_complex(t));
  }
  analytic::SeriesConfig cfg{q, a.terms, a.tolerance};
  auto report = analytic::generating_function_check(cfg, ts, a.n_max);
  out << report.to_json().dump() << "\n";
  return report.max_abs_dev <= a.tolerance ? kExitPass : kExitFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact q-Euler numbers and polynomials: tables, evaluation, identity checks"};
  app.name("qeuler");
  app.require_subcommand(1);

  TableArgs table_args;
  auto* table = app.add_subcommand("table", "Tabulate E_{n,q}, Carlitz beta_{n,q} or H_n(u;q)");
  table->add_option("--kind", table_args.kind)
      ->required()
      ->check(CLI::IsMember({"euler-q", "beta-q", "carlitz-h"}));
  table->add_option("--n-max", table_args.n_max)->required();
  table->add_option("--u", table_args.u, "Carlitz parameter u as P/Q");
  table->add_option("--format", table_args.format)
      ->check(CLI::IsMember({"json", "csv", "latex", "text"}));
  table->add_option("--out", table_args.out_path);

  EvalArgs eval_args;
  auto* eval = app.add_subcommand("eval", "Evaluate E_{n,q}(x) at a point");
  eval->add_option("--n", eval_args.n)->required();
  auto* q_exact = eval->add_option("--q-exact", eval_args.q_exact, "exact q as P/Q");
  auto* q_complex = eval->add_option("--q-complex", eval_args.q_complex, "complex q as RE,IM");
  q_exact->excludes(q_complex);
  eval->add_option("--terms", eval_args.terms, "series truncation M")->needs(q_complex);
  eval->add_option("--tolerance", eval_args.tolerance)->needs(q_complex);
  eval->add_option("--x", eval_args.x);

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "Run exact identity suites");
  verify_cmd->add_option("--suite", verify_args.suite)
      ->required()
      ->check(CLI::IsMember({"eq14", "eq16", "eq19", "eq21", "eq16-1", "compare", "all"}));
  verify_cmd->add_option("--n-max", verify_args.n_max);
  verify_cmd->add_option("--m-max", verify_args.m_max);
  verify_cmd->add_option("--n", verify_args.n_list, "explicit n values")->delimiter(',');
  verify_cmd->add_option("--format", verify_args.format)->check(CLI::IsMember({"json", "text"}));

  PadicArgs padic_args;
  auto* padic_cmd = app.add_subcommand("padic", "p-adic convergence certificate");
  padic_cmd->add_option("--p", padic_args.p)->required();
  padic_cmd->add_option("--q", padic_args.q, "q as P/Q")->required();
  padic_cmd->add_option("--n-max-level", padic_args.levels);
  padic_cmd->add_option("--moment", padic_args.moment)->required();
  padic_cmd->add_option("--shift", padic_args.shift);
  padic_cmd->add_option("--measure", padic_args.measure)
      ->check(CLI::IsMember({"fermionic", "bosonic"}));

  SeriesArgs series_args;
  auto* series = app.add_subcommand("series", "Generating-function check for complex |q| < 1");
  series->add_option("--q", series_args.q, "q as RE,IM")->required();
  series->add_option("--n-max", series_args.n_max);
  series->add_option("--terms", series_args.terms);
  series->add_option("--t", series_args.t_points, "t points as RE,IM (repeatable)");
  series->add_option("--tolerance", series_args.tolerance);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "qeuler: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (table->parsed()) return cmd_table(table_args, out);
    if (eval->parsed()) {
      if (eval_args.q_exact.empty() && eval_args.q_complex.empty()) {
        throw ParameterError("one of --q-exact or --q-complex is required");
      }
      return cmd_eval(eval_args, out);
    }
    if (verify_cmd->parsed()) return cmd_verify(verify_args, out);
    if (padic_cmd->parsed()) return cmd_padic(padic_args, out);
    if (series->parsed()) return cmd_series(series_args, out);
  } catch (const analytic::SeriesConfigError& e) {
    err << "qeuler: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParameterError& e) {
    err << "qeuler: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvariantError& e) {
    err << "qeuler: internal invariant failed: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace qeuler::cli
