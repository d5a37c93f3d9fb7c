#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qeuler/big_rational.hpp"
#include "qeuler/qrat.hpp"

namespace qeuler {

enum class TableKind { euler_q, beta_q, carlitz_h };

// "euler_q", "beta_q", "carlitz_h"
std::string to_string(TableKind kind);

struct SequenceTable {
  TableKind kind;
  std::vector<QRat> values;        // index n -> value
  std::optional<BigRational> u;    // carlitz_h only
};

// Builds the requested sequence up to n_max. carlitz_h requires u.
SequenceTable make_table(TableKind kind, unsigned n_max, const std::optional<BigRational>& u = {});

// {"kind": "euler_q", "n_max": N, "values": [<machine-form QRat>, ...]}, plus "u" for carlitz_h.
nlohmann::ordered_json table_json(const SequenceTable& table);
// Header "n,num,den,limit_q1"; polynomials in human form, "pole" when q = 1 is a pole.
std::string table_csv(const SequenceTable& table);
// Plain tabular environment: n, value, q -> 1 value.
std::string table_latex(const SequenceTable& table);
// One "E_{n,q} = ..." line per entry.
std::string table_text(const SequenceTable& table);

}  // namespace qeuler
