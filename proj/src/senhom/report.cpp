#include "sencalc/senhom/report.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "sencalc/errors.hpp"

namespace sencalc::senhom {

namespace {

Json integer_json(const Integer& a) {
    if (a.fits_slong_p()) return Json(a.get_si());
    return Json(a.get_str());
}

}  // namespace

const DegreeHomology& HomologyReport::at(int degree) const {
    for (const auto& h : degrees) {
        if (h.degree == degree) return h;
    }
    throw InvalidInput(fmt::format("degree {} is outside the {} report", degree, builder));
}

bool HomologyReport::same_groups(const HomologyReport& other) const { return degrees == other.degrees; }

Json HomologyReport::to_json() const {
    Json out = Json::object();
    out["builder"] = builder;
    out["params"] = params;
    out["precision"] = precision;
    Json list = Json::array();
    for (const auto& h : degrees) {
        Json torsion = Json::array();
        for (const auto& t : h.torsion) torsion.push_back(integer_json(t));
        list.push_back(Json{{"degree", h.degree}, {"free_rank", h.free_rank}, {"torsion", torsion}});
    }
    out["degrees"] = list;
    if (!notes.empty()) out["notes"] = notes;
    return out;
}

std::string HomologyReport::to_text() const {
    std::string out = fmt::format("{} {}", builder, params.dump());
    if (precision > 0) out += fmt::format(" (mod p^{})", precision);
    out += '\n';
    const std::string free_symbol = precision > 0 ? "Z_p" : "Z";
    for (const auto& h : degrees) {
        if (h.is_zero()) continue;
        out += fmt::format("  H_{:<4} {}\n", h.degree, describe(h, free_symbol));
    }
    for (const auto& note : notes) out += "  note: " + note + '\n';
    return out;
}

std::vector<Integer> torsion_orders(long p, const std::vector<int>& exponents) {
    std::vector<Integer> out;
    for (int e : exponents) {
        if (e > 0) out.push_back(exactalg::prime_power(p, static_cast<unsigned long>(e)));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string describe(const DegreeHomology& h, const std::string& free_symbol) {
    if (h.is_zero()) return "0";
    std::vector<std::string> parts;
    if (h.free_rank == 1) parts.push_back(free_symbol);
    if (h.free_rank > 1) parts.push_back(fmt::format("{}^{}", free_symbol, h.free_rank));
    for (const auto& t : h.torsion) parts.push_back("Z/" + t.get_str());
    return fmt::format("{}", fmt::join(parts, " + "));
}

}  // namespace sencalc::senhom
