#include "qeuler/table_export.hpp"

#include <sstream>

#include "qeuler/errors.hpp"
#include "qeuler/euler_q.hpp"

namespace qeuler {

namespace {

std::string symbol(TableKind kind, std::size_t n) {
  const std::string idx = std::to_string(n);
  switch (kind) {
    case TableKind::euler_q: return "E_{" + idx + ",q}";
    case TableKind::beta_q: return "beta_{" + idx + ",q}";
    case TableKind::carlitz_h: return "H_{" + idx + "}(u;q)";
  }
  return idx;
}

std::string header_symbol_latex(TableKind kind) {
  switch (kind) {
    case TableKind::euler_q: return "E_{n,q}";
    case TableKind::beta_q: return "\\beta_{n,q}";
    case TableKind::carlitz_h: return "H_n(u;q)";
  }
  return "";
}

std::optional<BigRational> limit_at_one(const QRat& value) {
  try {
    return value.eval(BigRational(1));
  } catch (const PoleError&) {
    return std::nullopt;
  }
}

std::string rational_latex(const BigRational& r) {
  if (r.is_integer()) return r.to_string();
  std::string sign = r.sign() < 0 ? "-" : "";
  BigRational a = r.abs();
  return sign + "\\frac{" + a.numerator().get_str() + "}{" + a.denominator().get_str() + "}";
}

}  // namespace

std::string to_string(TableKind kind) {
  switch (kind) {
    case TableKind::euler_q: return "euler_q";
    case TableKind::beta_q: return "beta_q";
    case TableKind::carlitz_h: return "carlitz_h";
  }
  return "";
}

SequenceTable make_table(TableKind kind, unsigned n_max, const std::optional<BigRational>& u) {
  switch (kind) {
    case TableKind::euler_q:
      return {kind, euler_q_recurrence(n_max).values(), std::nullopt};
    case TableKind::beta_q:
      return {kind, carlitz_beta(n_max).values(), std::nullopt};
    case TableKind::carlitz_h:
      if (!u) throw ParameterError("carlitz_h tables need a value for u");
      return {kind, carlitz_q_euler(*u, n_max).values(), u};
  }
  throw ParameterError("unknown table kind");
}

nlohmann::ordered_json table_json(const SequenceTable& table) {
  auto values = nlohmann::ordered_json::array();
  for (const auto& v : table.values) values.push_back(v.to_json());
  nlohmann::ordered_json j = {{"kind", to_string(table.kind)},
                      {"n_max", table.values.size() - 1},
                      {"values", values}};
  if (table.u) j["u"] = table.u->to_string();
  return j;
}

std::string table_csv(const SequenceTable& table) {
  std::ostringstream os;
  os << "n,num,den,limit_q1\n";
  for (std::size_t n = 0; n < table.values.size(); ++n) {
    const QRat& v = table.values[n];
    auto limit = limit_at_one(v);
    os << n << "," << v.num().to_string() << "," << v.den().to_string() << ","
       << (limit ? limit->to_string() : "pole") << "\n";
  }
  return os.str();
}

std::string table_latex(const SequenceTable& table) {
  std::ostringstream os;
  os << "\\begin{tabular}{rll}\n";
  os << "$n$ & $" << header_symbol_latex(table.kind) << "$ & $q \\to 1$ \\\\\n";
  os << "\\hline\n";
  for (std::size_t n = 0; n < table.values.size(); ++n) {
    const QRat& v = table.values[n];
    auto limit = limit_at_one(v);
    os << n << " & $" << v.to_latex() << "$ & "
       << (limit ? "$" + rational_latex(*limit) + "$" : std::string("pole")) << " \\\\\n";
  }
  os << "\\end{tabular}\n";
  return os.str();
}

std::string table_text(const SequenceTable& table) {
  std::ostringstream os;
  if (table.u) os << "u = " << table.u->to_string() << "\n";
  for (std::size_t n = 0; n < table.values.size(); ++n) {
    os << symbol(table.kind, n) << " = " << table.values[n].to_string() << "\n";
  }
  return os.str();
}

}  // namespace qeuler
