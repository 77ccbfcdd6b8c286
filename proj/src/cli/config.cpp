#include "sencalc/cli/config.hpp"

#include <fmt/format.h>

#include "sencalc/errors.hpp"
#include "sencalc/exactalg/scalar.hpp"

namespace sencalc::cli {

void RunConfig::validate() const {
    if (!exactalg::is_prime(p)) throw InvalidInput(fmt::format("p = {} is not prime", p));
    const std::pair<const char*, int> bounds[] = {{"N", precision}, {"L", length},      {"D", degree_bound},
                                                  {"K", truncation}, {"M", monomials}, {"n-max", n_max}};
    for (const auto& [name, value] : bounds) {
        if (value < 1) throw InvalidInput(fmt::format("{} = {} must be at least 1", name, value));
    }
    if (level < 0) throw InvalidInput(fmt::format("n = {} must be non-negative", level));
    if (variant != "T1" && variant != "Jp") throw InvalidInput("variant must be T1 or Jp");
    if (kind != "additive" && kind != "multiplicative" && kind != "honda") {
        throw InvalidInput("kind must be additive, multiplicative or honda");
    }
}

Json RunConfig::to_json() const {
    Json out = Json::object();
    out["p"] = p;
    out["N"] = precision;
    out["L"] = length;
    out["D"] = degree_bound;
    out["K"] = truncation;
    out["n"] = level;
    out["m"] = integer;
    out["M"] = monomials;
    out["n_max"] = n_max;
    out["E"] = eisenstein;
    out["variant"] = variant;
    out["kind"] = kind;
    out["format"] = format == OutputFormat::json ? "json" : "text";
    out["config"] = config_path ? Json(*config_path) : Json(nullptr);
    out["targets"] = targets_path ? Json(*targets_path) : Json("embedded");
    return out;
}

}  // namespace sencalc::cli
