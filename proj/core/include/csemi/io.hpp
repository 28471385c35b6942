#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "csemi/explorer.hpp"
#include "csemi/semigroup.hpp"

namespace csemi {

// Textual interfaces: point-list parsing ("a1,a2;b1,b2", ASCII decimal),
// semigroup JSON, and the report emitters behind the CLI.

/// Parse "3,1;1,2" into points (rays, gaps, matrix rows all share the shape).
std::vector<LatticePoint> parse_point_list(const std::string& text);

/// Parse an order spec: "grlex" or a matrix "r11,r12;r21,r22" of dimension p.
MatrixOrder parse_order(const std::string& text, int dim);

/// {"rays":[...], "order":[...], "gaps":[...], "gens":[...], "genus":g,
///  "frobenius":[...]|null}; the sentinel Frobenius element maps to null.
nlohmann::ordered_json semigroup_to_json(const CSemigroup& s);

/// Decimal rendering of an exact ratio with `sig` significant digits,
/// round-half-up, trailing zeros trimmed ("7/2" -> "3.5").
std::string format_decimal(std::int64_t num, std::int64_t den, int sig = 6);

/// True when printed is the rounding of num/den at the printed precision
/// (printed like "2.86494"; ties accepted in both directions).
bool matches_printed_decimal(std::int64_t num, std::int64_t den, const std::string& printed);

/// CSV census with header genus,count,ratio,fib_ratio; ratio cells are empty
/// where undefined.
std::string genus_report_csv(const GenusReport& report);

nlohmann::ordered_json genus_report_json(const Cone& cone, const MatrixOrder& order,
                                         const GenusReport& report);

/// CSV walk log: seed,order,genus,removed,edim,sporadic,frobenius_number,holds;
/// the order cell holds the matrix in row-list form, quoted.
std::string branch_report_csv(const std::vector<BranchReport>& reports);

nlohmann::ordered_json branch_report_json(const Cone& cone,
                                          const std::vector<BranchReport>& reports);

} // namespace csemi
