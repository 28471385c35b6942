#include "csemi/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "csemi/errors.hpp"

namespace csemi {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : text) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    parts.push_back(cur);
    while (!parts.empty() && parts.back().empty()) parts.pop_back();
    return parts;
}

std::int64_t parse_int(const std::string& s) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw ParseError("not an integer: '" + s + "'");
    return v;
}

std::string points_to_list(const std::vector<LatticePoint>& pts) {
    std::string out;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i) out += ";";
        for (int j = 0; j < pts[i].dim(); ++j) {
            if (j) out += ",";
            out += std::to_string(pts[i][j]);
        }
    }
    return out;
}

nlohmann::json points_json(const std::vector<LatticePoint>& pts) {
    nlohmann::json arr = nlohmann::json::array();
    for (const LatticePoint& p : pts) arr.push_back(p.to_vector());
    return arr;
}

} // namespace

std::vector<LatticePoint> parse_point_list(const std::string& text) {
    std::vector<LatticePoint> points;
    for (const std::string& part : split(text, ';')) {
        if (part.empty()) throw ParseError("empty point in list: '" + text + "'");
        std::vector<std::int64_t> coords;
        for (const std::string& c : split(part, ',')) coords.push_back(parse_int(c));
        if (coords.empty()) throw ParseError("empty point in list: '" + text + "'");
        points.emplace_back(std::span<const std::int64_t>(coords));
    }
    if (points.empty()) throw ParseError("no points in list: '" + text + "'");
    return points;
}

MatrixOrder parse_order(const std::string& text, int dim) {
    if (text == "grlex") return MatrixOrder::grlex(dim);
    IntMatrix rows;
    for (const LatticePoint& p : parse_point_list(text)) rows.push_back(p.to_vector());
    MatrixOrder order = MatrixOrder::from_rows(rows);
    if (order.dim() != dim)
        throw DimensionMismatchError("order matrix dimension does not match the rays");
    return order;
}

nlohmann::ordered_json semigroup_to_json(const CSemigroup& s) {
    nlohmann::ordered_json j;
    j["rays"] = points_json(s.cone().rays());
    j["order"] = s.order().rows();
    j["gaps"] = points_json(s.gaps());
    j["gens"] = points_json(s.gens());
    j["genus"] = s.genus();
    LatticePoint fb = s.frobenius();
    if (fb.is_sentinel())
        j["frobenius"] = nullptr;
    else
        j["frobenius"] = fb.to_vector();
    return j;
}

std::string format_decimal(std::int64_t num, std::int64_t den, int sig) {
    if (den <= 0 || num < 0) throw BadParamsError("format_decimal expects a nonnegative ratio");
    if (num == 0) return "0";
    // Find the exponent E with num/den in [10^E, 10^{E+1}).
    int exp = 0;
    __int128 n = num, d = den;
    while (n >= d * 10) {
        d *= 10;
        ++exp;
    }
    while (n < d) {
        n *= 10;
        --exp;
    }
    int decimals = sig - 1 - exp;
    std::string digits;
    if (decimals >= 0) {
        // round-half-up of num * 10^decimals / den
        __int128 scaled = num;
        for (int i = 0; i < decimals; ++i) scaled *= 10;
        __int128 rounded = (scaled * 2 + den) / (2 * static_cast<__int128>(den));
        // Render with a decimal point `decimals` digits from the right.
        std::string raw;
        if (rounded == 0) raw = "0";
        while (rounded > 0) {
            raw += static_cast<char>('0' + static_cast<int>(rounded % 10));
            rounded /= 10;
        }
        while (static_cast<int>(raw.size()) <= decimals) raw += '0';
        std::reverse(raw.begin(), raw.end());
        if (decimals == 0) return raw;
        digits = raw.substr(0, raw.size() - static_cast<std::size_t>(decimals)) + "." +
                 raw.substr(raw.size() - static_cast<std::size_t>(decimals));
        // Trim trailing zeros and a dangling point.
        while (digits.back() == '0') digits.pop_back();
        if (digits.back() == '.') digits.pop_back();
        return digits;
    }
    // Value too large for the requested precision: round to a power of ten.
    __int128 unit = 1;
    for (int i = 0; i < -decimals; ++i) unit *= 10;
    __int128 rounded = (static_cast<__int128>(num) * 2 + static_cast<__int128>(den) * unit) /
                       (2 * static_cast<__int128>(den) * unit) * unit;
    std::string raw;
    while (rounded > 0) {
        raw += static_cast<char>('0' + static_cast<int>(rounded % 10));
        rounded /= 10;
    }
    std::reverse(raw.begin(), raw.end());
    return raw;
}

bool matches_printed_decimal(std::int64_t num, std::int64_t den, const std::string& printed) {
    // Parse printed = I or I.F into P / 10^k.
    std::size_t dotpos = printed.find('.');
    std::string digits = printed;
    int k = 0;
    if (dotpos != std::string::npos) {
        k = static_cast<int>(printed.size() - dotpos - 1);
        digits = printed.substr(0, dotpos) + printed.substr(dotpos + 1);
    }
    __int128 p = 0;
    for (char c : digits) {
        if (c < '0' || c > '9') throw ParseError("bad decimal: '" + printed + "'");
        p = p * 10 + (c - '0');
    }
    __int128 scale = 1;
    for (int i = 0; i < k; ++i) scale *= 10;
    // |num/den - p/scale| <= 1/(2*scale)
    __int128 lhs = static_cast<__int128>(num) * scale - p * static_cast<__int128>(den);
    if (lhs < 0) lhs = -lhs;
    return lhs * 2 <= static_cast<__int128>(den);
}

std::string genus_report_csv(const GenusReport& report) {
    std::ostringstream out;
    out << "genus,count,ratio,fib_ratio\n";
    const std::vector<std::uint64_t>& n = report.counts;
    for (std::size_t g = 0; g < n.size(); ++g) {
        out << g << "," << n[g] << ",";
        if (g >= 1 && n[g - 1] > 0)
            out << format_decimal(static_cast<std::int64_t>(n[g]),
                                  static_cast<std::int64_t>(n[g - 1]));
        out << ",";
        if (g >= 2 && n[g] > 0)
            out << format_decimal(static_cast<std::int64_t>(n[g - 1] + n[g - 2]),
                                  static_cast<std::int64_t>(n[g]));
        out << "\n";
    }
    return out.str();
}

nlohmann::ordered_json genus_report_json(const Cone& cone, const MatrixOrder& order,
                                         const GenusReport& report) {
    nlohmann::ordered_json j;
    j["rays"] = points_json(cone.rays());
    j["order"] = order.rows();
    j["partial"] = report.partial;
    j["expansions"] = report.expansions;
    nlohmann::ordered_json levels = nlohmann::ordered_json::array();
    const std::vector<std::uint64_t>& n = report.counts;
    for (std::size_t g = 0; g < n.size(); ++g) {
        nlohmann::ordered_json row;
        row["genus"] = g;
        row["count"] = n[g];
        row["min_edim"] = report.min_edim[g] == UINT64_MAX ? nlohmann::ordered_json(nullptr)
                                                           : nlohmann::ordered_json(report.min_edim[g]);
        if (g >= 1 && n[g - 1] > 0)
            row["ratio"] = format_decimal(static_cast<std::int64_t>(n[g]),
                                          static_cast<std::int64_t>(n[g - 1]));
        else
            row["ratio"] = nullptr;
        if (g >= 2 && n[g] > 0)
            row["fib_ratio"] = format_decimal(static_cast<std::int64_t>(n[g - 1] + n[g - 2]),
                                              static_cast<std::int64_t>(n[g]));
        else
            row["fib_ratio"] = nullptr;
        levels.push_back(row);
    }
    j["levels"] = levels;
    return j;
}

std::string branch_report_csv(const std::vector<BranchReport>& reports) {
    std::ostringstream out;
    out << "seed,order,genus,removed,edim,sporadic,frobenius_number,holds\n";
    for (const BranchReport& r : reports) {
        std::vector<LatticePoint> order_rows;
        for (const auto& row : r.order_rows)
            order_rows.emplace_back(std::span<const std::int64_t>(row));
        std::string order_text = points_to_list(order_rows);
        for (const BranchStep& step : r.steps) {
            out << r.seed << ",\"" << order_text << "\"," << step.genus << ",\""
                << step.removed.to_string() << "\"," << step.wilf.edim << ","
                << step.wilf.sporadic << "," << step.wilf.frobenius_number << ","
                << (step.wilf.holds ? "true" : "false") << "\n";
        }
    }
    return out.str();
}

nlohmann::ordered_json branch_report_json(const Cone& cone,
                                          const std::vector<BranchReport>& reports) {
    nlohmann::ordered_json j;
    j["rays"] = points_json(cone.rays());
    nlohmann::ordered_json runs = nlohmann::ordered_json::array();
    for (const BranchReport& r : reports) {
        nlohmann::ordered_json run;
        run["seed"] = r.seed;
        run["order"] = r.order_rows;
        run["restarts"] = r.restarts;
        run["truncated"] = r.truncated;
        nlohmann::ordered_json steps = nlohmann::ordered_json::array();
        for (const BranchStep& s : r.steps) {
            nlohmann::ordered_json step;
            step["genus"] = s.genus;
            step["removed"] = s.removed.to_vector();
            step["edim"] = s.wilf.edim;
            step["sporadic"] = s.wilf.sporadic;
            step["frobenius_number"] = s.wilf.frobenius_number;
            step["holds"] = s.wilf.holds;
            steps.push_back(step);
        }
        run["steps"] = steps;
        runs.push_back(run);
    }
    j["runs"] = runs;
    return j;
}

} // namespace csemi
