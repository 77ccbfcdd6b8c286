#include "sencalc/cli/document.hpp"

#include <algorithm>

#include <fmt/format.h>

namespace sencalc::cli {

std::string to_string(Status status) {
    switch (status) {
        case Status::pass:
            return "pass";
        case Status::fail:
            return "fail";
        case Status::skipped:
            return "skipped";
    }
    return "fail";
}

void Check::fail(const std::string& example) {
    if (status == Status::fail) return;
    status = Status::fail;
    counterexample = example;
}

void Check::expect(bool condition, const std::string& example) {
    if (!condition) fail(example);
}

std::size_t ReportDocument::count(Status status) const {
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [&](const Check& c) { return c.status == status; }));
}

int ReportDocument::exit_code() const { return count(Status::fail) == 0 ? 0 : 1; }

Json ReportDocument::to_json() const {
    Json out = Json::object();
    out["tool"] = "sencalc";
    out["version"] = tool_version;
    out["command"] = command;
    out["config"] = config;
    out["summary"] = Json{{"pass", count(Status::pass)}, {"fail", count(Status::fail)}, {"skipped", count(Status::skipped)}};
    Json list = Json::array();
    for (const auto& c : checks) {
        Json entry = Json::object();
        entry["name"] = c.name;
        entry["status"] = to_string(c.status);
        entry["payload"] = c.payload;
        if (c.counterexample) entry["counterexample"] = *c.counterexample;
        if (c.note) entry["note"] = *c.note;
        list.push_back(std::move(entry));
    }
    out["checks"] = std::move(list);
    return out;
}

std::string ReportDocument::to_text() const {
    std::string out = fmt::format("sencalc {} {}\n", tool_version, command);
    for (const auto& c : checks) {
        out += fmt::format("[{}] {}\n", to_string(c.status), c.name);
        for (const auto& line : c.lines) out += "    " + line + '\n';
        if (c.note) out += "    note: " + *c.note + '\n';
        if (c.counterexample) out += "    counterexample: " + *c.counterexample + '\n';
    }
    out += fmt::format("{} passed, {} failed, {} skipped\n", count(Status::pass), count(Status::fail),
                       count(Status::skipped));
    return out;
}

}  // namespace sencalc::cli
