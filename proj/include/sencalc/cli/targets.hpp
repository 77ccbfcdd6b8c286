#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace sencalc::cli {

// Expected values keyed by check; records which keys were consulted.
class Targets {
  public:
    // Throws InvalidInput on a malformed or duplicated line.
    static Targets parse(std::string_view text);
    static Targets embedded();
    static Targets load(const std::string& path);

    std::optional<std::string> lookup(const std::string& key) const;
    std::vector<std::string> keys() const;
    std::vector<std::string> unused() const;

  private:
    std::map<std::string, std::string> values_;
    mutable std::set<std::string> used_;
};

// Text of data/targets.txt captured at build time.
std::string_view embedded_targets_text();

}  // namespace sencalc::cli
