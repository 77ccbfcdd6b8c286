#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sencalc/cli/config.hpp"

namespace sencalc::cli {

inline constexpr const char* tool_version = "0.1.0";

enum class Status { pass, fail, skipped };

std::string to_string(Status status);

struct Check {
    std::string name;
    Status status = Status::pass;
    Json payload = Json::object();
    std::optional<std::string> counterexample;  // set on failure
    std::optional<std::string> note;
    std::vector<std::string> lines;  // text rendering of the payload

    // Marks the check failed unless it already failed; the first counterexample wins.
    void fail(const std::string& counterexample);
    void expect(bool condition, const std::string& counterexample);
    bool failed() const { return status == Status::fail; }
};

struct ReportDocument {
    std::string command;
    Json config = Json::object();
    std::vector<Check> checks;

    std::size_t count(Status status) const;
    // 0 when nothing failed, 1 otherwise.
    int exit_code() const;
    Json to_json() const;
    std::string to_text() const;
};

}  // namespace sencalc::cli
