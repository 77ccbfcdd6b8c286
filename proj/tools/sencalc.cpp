#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "sencalc/cli/commands.hpp"
#include "sencalc/errors.hpp"

namespace {

using namespace sencalc::cli;

struct Flags {
    std::optional<long> p;
    std::optional<int> precision;
    std::optional<int> length;
    std::optional<int> degree_bound;
    std::optional<int> truncation;
    std::optional<int> level;
    std::optional<long> integer;
    std::optional<int> monomials;
    std::optional<int> n_max;
    std::optional<std::string> eisenstein;
    std::optional<std::string> variant;
    std::optional<std::string> kind;
    bool json = false;
    bool text = false;
    std::string output;
    std::string targets;
};

template <class T>
void take(T& field, const std::optional<T>& flag) {
    if (flag) field = *flag;
}

RunConfig resolve(const Flags& flags, const CLI::App& app) {
    RunConfig config;
    take(config.p, flags.p);
    take(config.precision, flags.precision);
    take(config.length, flags.length);
    take(config.degree_bound, flags.degree_bound);
    take(config.truncation, flags.truncation);
    take(config.level, flags.level);
    take(config.integer, flags.integer);
    take(config.monomials, flags.monomials);
    take(config.n_max, flags.n_max);
    take(config.eisenstein, flags.eisenstein);
    take(config.variant, flags.variant);
    take(config.kind, flags.kind);
    if (flags.json) config.format = OutputFormat::json;
    if (const auto* option = app.get_option_no_throw("--config"); option && option->count() > 0) {
        config.config_path = option->as<std::string>();
    }
    if (!flags.targets.empty()) config.targets_path = flags.targets;
    return config;
}

void add_options(CLI::App& app, Flags& flags) {
    app.add_option("-p,--prime", flags.p, "Prime p (default 3)");
    app.add_option("-N,--precision", flags.precision, "p-adic precision N (default 12)");
    app.add_option("-L,--length", flags.length, "Witt vector length L (default 6)");
    app.add_option("-D,--degree", flags.degree_bound, "Degree bound D (default 40)");
    app.add_option("-K,--truncation", flags.truncation, "Series truncation K (default 18)");
    app.add_option("-n,--level", flags.level, "Height, level or number of components n (default 2)");
    app.add_option("-m,--integer", flags.integer, "Integer m: multiplier, monomial exponent or weight bound (default 3)");
    app.add_option("-M,--monomials", flags.monomials, "Monomial bound M (default 50)");
    app.add_option("--n-max", flags.n_max, "Largest n for the q-identity (default 20)");
    app.add_option("-E,--eisenstein", flags.eisenstein, "Eisenstein polynomial coefficients, leading first, e.g. \"1,0,-3\"");
    app.add_option("--variant", flags.variant, "Bokstedt variant T1 or Jp (default T1)");
    app.add_option("--kind", flags.kind, "Formal group law: additive, multiplicative or honda (default additive)");
    auto* json = app.add_flag("--json", flags.json, "Emit JSON");
    auto* text = app.add_flag("--text", flags.text, "Emit text (default)");
    json->excludes(text);
    app.add_option("-o,--output", flags.output, "Write the report to this file instead of stdout");
    app.add_option("--targets", flags.targets, "Read expected values from this file instead of the built-in table");
    app.set_config("--config", "", "Read `key = value` settings; command-line flags take precedence");
}

struct Command {
    std::string group;
    std::string name;
    CLI::App* app = nullptr;
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact checks for Witt vectors, formal group laws and Sen operator homology", "sencalc"};
    app.set_version_flag("--version", std::string("sencalc ") + tool_version);
    Flags flags;
    add_options(app, flags);
    app.require_subcommand(1);

    std::vector<Command> commands;
    const std::pair<const char*, const std::vector<std::string>*> groups[] = {
        {"witt", &witt_subchecks()}, {"fgl", &fgl_subchecks()}, {"sen", &sen_builders()}, {"cartier", &cartier_subchecks()}};
    for (const auto& [group, names] : groups) {
        auto* sub = app.add_subcommand(group, fmt::format("{} checks", group))->fallthrough()->require_subcommand(1);
        for (const auto& name : *names) commands.push_back({group, name, sub->add_subcommand(name)->fallthrough()});
    }
    auto* report = app.add_subcommand("report", "Run every check and compare against the expected values")->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        const RunConfig config = resolve(flags, app);
        const Targets targets = config.targets_path ? Targets::load(*config.targets_path) : Targets::embedded();
        ReportDocument document;
        if (report->parsed()) {
            document = cmd_report(config, targets);
        } else {
            for (const auto& c : commands) {
                if (!c.app->parsed()) continue;
                if (c.group == "witt") document = cmd_witt(config, c.name, targets);
                if (c.group == "fgl") document = cmd_fgl(config, c.name, targets);
                if (c.group == "sen") document = cmd_sen(config, c.name, targets);
                if (c.group == "cartier") document = cmd_cartier(config, c.name, targets);
            }
        }

        const std::string rendered =
            config.format == OutputFormat::json ? document.to_json().dump(2) + '\n' : document.to_text();
        if (flags.output.empty()) {
            std::cout << rendered;
        } else {
            std::ofstream file(flags.output, std::ios::binary);
            if (!file) {
                std::cerr << "sencalc: cannot write " << flags.output << '\n';
                return 2;
            }
            file << rendered;
        }
        return document.exit_code();
    } catch (const sencalc::InvalidInput& e) {
        std::cerr << "sencalc: " << e.what() << '\n';
        return 2;
    }
}
