#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "sencalc/exactalg/scalar.hpp"

namespace sencalc::senhom {

using Json = nlohmann::ordered_json;

struct DegreeHomology {
    int degree = 0;
    std::size_t free_rank = 0;
    std::vector<Integer> torsion;  // cyclic summand orders, ascending

    bool is_zero() const { return free_rank == 0 && torsion.empty(); }
    friend bool operator==(const DegreeHomology&, const DegreeHomology&) = default;
};

struct HomologyReport {
    std::string builder;
    Json params = Json::object();
    int precision = 0;  // N for Z/p^N coefficients, 0 over Z
    std::vector<DegreeHomology> degrees;
    std::vector<std::string> notes;

    // Throws InvalidInput when the degree was not computed.
    const DegreeHomology& at(int degree) const;
    bool same_groups(const HomologyReport& other) const;

    Json to_json() const;
    std::string to_text() const;
};

// Summand orders p^{e_1}, p^{e_2}, ... sorted ascending, ones dropped.
std::vector<Integer> torsion_orders(long p, const std::vector<int>& exponents);
std::string describe(const DegreeHomology& h, const std::string& free_symbol);

}  // namespace sencalc::senhom
