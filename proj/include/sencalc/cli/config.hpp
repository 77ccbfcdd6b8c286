#pragma once

#include <optional>
#include <string>

#include <json.hpp>

namespace sencalc::cli {

using Json = nlohmann::ordered_json;

enum class OutputFormat { text, json };

struct RunConfig {
    long p = 3;
    int precision = 12;     // N
    int length = 6;         // L
    int degree_bound = 40;  // D
    int truncation = 18;    // K
    int level = 2;          // n
    long integer = 3;       // m
    int monomials = 50;     // M
    int n_max = 20;
    std::string eisenstein;  // E, leading coefficient first
    std::string variant = "T1";
    std::string kind = "additive";
    OutputFormat format = OutputFormat::text;
    std::optional<std::string> config_path;
    std::optional<std::string> targets_path;

    // Throws InvalidInput on a non-prime p or a bound below 1.
    void validate() const;
    Json to_json() const;
};

}  // namespace sencalc::cli
