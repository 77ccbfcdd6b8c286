#include <sstream>

#include <fmt/format.h>

#include "checks.hpp"

namespace sencalc::cli::detail {

using senhom::DegreeHomology;
using senhom::HomologyReport;

std::string abbreviate(const Integer& a) {
    const std::string digits = a.get_str();
    const std::size_t sign = a < 0 ? 1 : 0;
    if (digits.size() - sign <= 60) return digits;
    return fmt::format("{}...{} ({} digits)", digits.substr(0, sign + 20), digits.substr(digits.size() - 20),
                       digits.size() - sign);
}

Json integer_json(const Integer& a) {
    if (a.fits_slong_p()) return Json(a.get_si());
    return Json(abbreviate(a));
}

Json integers_json(const std::vector<Integer>& values) {
    Json out = Json::array();
    for (const auto& v : values) out.push_back(integer_json(v));
    return out;
}

std::string tuple_string(const std::vector<Integer>& values) {
    std::vector<std::string> parts;
    for (const auto& v : values) parts.push_back(abbreviate(v));
    return fmt::format("({})", fmt::join(parts, ", "));
}

std::vector<Integer> parse_integers(const std::string& text) {
    std::vector<Integer> out;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        const auto first = item.find_first_not_of(' ');
        const auto last = item.find_last_not_of(' ');
        Integer value;
        if (first == std::string::npos || value.set_str(item.substr(first, last - first + 1), 10) != 0) {
            throw InvalidInput("not an integer list: " + text);
        }
        out.push_back(value);
    }
    return out;
}

DegreeHomology group(int degree, std::size_t free_rank, const std::vector<int>& exponents, long p) {
    return DegreeHomology{degree, free_rank, senhom::torsion_orders(p, exponents)};
}

int total_exponent(const DegreeHomology& h, long p) {
    int total = 0;
    for (const auto& t : h.torsion) total += exactalg::valuation(t, p);
    return total;
}

std::string describe(const DegreeHomology& h) { return senhom::describe(h, "Z_p"); }

void expect_group(Check& check, const HomologyReport& report, const DegreeHomology& expected) {
    const DegreeHomology& actual = report.at(expected.degree);
    check.expect(actual == expected,
                 fmt::format("H_{} = {}, expected {}", expected.degree, describe(actual), describe(expected)));
}

void expect_table(Check& check, const HomologyReport& report, const Targets& targets, const std::string& key) {
    const auto table = targets.lookup(key);
    if (!table) return;
    const int top = report.degrees.empty() ? -1 : report.degrees.back().degree;
    std::istringstream in(*table);
    std::string entry;
    std::vector<std::string> skipped;
    while (std::getline(in, entry, ';')) {
        const auto colon = entry.find(':');
        if (colon == std::string::npos) throw InvalidInput(fmt::format("target {}: entry `{}` lacks a degree", key, entry));
        int degree = 0;
        try {
            degree = std::stoi(entry.substr(0, colon));
        } catch (const std::exception&) {
            throw InvalidInput(fmt::format("target {}: bad degree in `{}`", key, entry));
        }
        std::string expected = entry.substr(colon + 1);
        expected.erase(0, expected.find_first_not_of(' '));
        expected.erase(expected.find_last_not_of(' ') + 1);
        if (degree > top) {
            skipped.push_back(std::to_string(degree));
            continue;
        }
        const std::string actual = describe(report.at(degree));
        check.expect(actual == expected, fmt::format("H_{} = {}, target {} says {}", degree, actual, key, expected));
    }
    check.payload["target"] = key;
    if (!skipped.empty()) {
        check.note = fmt::format("target degrees {} lie above the degree bound", fmt::join(skipped, ", "));
    }
}

void attach(Check& check, const HomologyReport& report, const std::string& field) {
    check.payload[field] = report.to_json();
    std::istringstream in(report.to_text());
    for (std::string line; std::getline(in, line);) check.lines.push_back(line);
}

}  // namespace sencalc::cli::detail
