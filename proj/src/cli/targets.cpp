#include "sencalc/cli/targets.hpp"

#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "sencalc/errors.hpp"

namespace sencalc::cli {

namespace {

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

}  // namespace

Targets Targets::parse(std::string_view text) {
    Targets out;
    std::istringstream in{std::string(text)};
    std::string raw;
    for (int line_number = 1; std::getline(in, raw); ++line_number) {
        const std::string line = trim(std::string_view(raw).substr(0, raw.find('#')));
        if (line.empty()) continue;
        const auto eq = line.find(" = ");
        if (eq == std::string::npos) throw InvalidInput(fmt::format("targets line {}: expected `key = value`", line_number));
        std::string key = trim(std::string_view(line).substr(0, eq));
        std::string value = trim(std::string_view(line).substr(eq + 3));
        if (key.empty() || value.empty()) throw InvalidInput(fmt::format("targets line {}: empty key or value", line_number));
        if (!out.values_.emplace(key, value).second) {
            throw InvalidInput(fmt::format("targets line {}: duplicate key {}", line_number, key));
        }
    }
    return out;
}

Targets Targets::embedded() { return parse(embedded_targets_text()); }

Targets Targets::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot read targets file " + path);
    std::ostringstream text;
    text << in.rdbuf();
    return parse(text.str());
}

std::optional<std::string> Targets::lookup(const std::string& key) const {
    const auto it = values_.find(key);
    if (it == values_.end()) return std::nullopt;
    used_.insert(key);
    return it->second;
}

std::vector<std::string> Targets::keys() const {
    std::vector<std::string> out;
    for (const auto& [key, value] : values_) out.push_back(key);
    return out;
}

std::vector<std::string> Targets::unused() const {
    std::vector<std::string> out;
    for (const auto& [key, value] : values_) {
        if (!used_.count(key)) out.push_back(key);
    }
    return out;
}

}  // namespace sencalc::cli
