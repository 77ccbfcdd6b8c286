#include "sencalc/cli/commands.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "checks.hpp"

namespace sencalc::cli {

using namespace detail;

namespace {

void require_known(const std::string& name, const std::vector<std::string>& known, const char* group) {
    if (std::find(known.begin(), known.end(), name) == known.end()) {
        throw InvalidInput(fmt::format("unknown {} subcommand {}", group, name));
    }
}

ReportDocument document(const RunConfig& config, std::string command) {
    config.validate();
    ReportDocument out;
    out.command = std::move(command);
    out.config = config.to_json();
    return out;
}

Check coverage_check(const Targets& targets) {
    Check check;
    check.name = "targets coverage";
    const auto keys = targets.keys();
    const auto unused = targets.unused();
    check.payload = Json{{"targets", keys.size()}, {"unused", unused}};
    check.lines.push_back(fmt::format("{} of {} targets checked", keys.size() - unused.size(), keys.size()));
    if (!unused.empty()) check.fail("no check consumes target " + unused.front());
    return check;
}

}  // namespace

const std::vector<std::string>& witt_subchecks() {
    static const std::vector<std::string> names{"gabber", "pn-vanishing", "solve-frobenius", "frobenius-of-p", "cartier", "dwork"};
    return names;
}

const std::vector<std::string>& fgl_subchecks() {
    static const std::vector<std::string> names{"nseries", "q-identity", "honda", "right-unit", "b4", "fderham"};
    return names;
}

const std::vector<std::string>& sen_builders() {
    static const std::vector<std::string> names{"bokstedt", "cmn", "perfectoid", "zpn", "omega2yn", "dvr"};
    return names;
}

const std::vector<std::string>& cartier_subchecks() {
    static const std::vector<std::string> names{"psi", "psi-tensor", "weyl", "delta"};
    return names;
}

ReportDocument cmd_witt(const RunConfig& config, const std::string& subcheck, const Targets& targets) {
    require_known(subcheck, witt_subchecks(), "witt");
    ReportDocument out = document(config, "witt " + subcheck);
    const long p = config.p;
    const int length = config.length;
    if (subcheck == "gabber") out.checks.push_back(gabber_check(p, length, targets));
    if (subcheck == "pn-vanishing") out.checks.push_back(pn_vanishing_check(p, length, config.level));
    if (subcheck == "solve-frobenius") out.checks.push_back(solve_frobenius_check(p, length, targets));
    if (subcheck == "frobenius-of-p") out.checks.push_back(frobenius_of_p_check(p, length));
    if (subcheck == "cartier") out.checks.push_back(cartier_character_check(p, 50));
    if (subcheck == "dwork") out.checks.push_back(dwork_check(config.degree_bound, 10));
    return out;
}

ReportDocument cmd_fgl(const RunConfig& config, const std::string& subcheck, const Targets& targets) {
    require_known(subcheck, fgl_subchecks(), "fgl");
    ReportDocument out = document(config, "fgl " + subcheck);
    if (subcheck == "nseries") {
        out.checks.push_back(nseries_check(config.kind, config.p, config.level, config.integer, config.degree_bound, targets));
    }
    if (subcheck == "q-identity") out.checks.push_back(q_identity_check(config.n_max));
    if (subcheck == "honda") out.checks.push_back(honda_check(config.p, config.level, config.degree_bound));
    if (subcheck == "right-unit") out.checks.push_back(right_unit_check(config.p, targets));
    if (subcheck == "b4") out.checks.push_back(b4_check(targets));
    if (subcheck == "fderham") {
        out.checks.push_back(fderham_check(config.kind, config.p, config.precision, config.truncation,
                                           static_cast<int>(config.integer)));
    }
    return out;
}

ReportDocument cmd_sen(const RunConfig& config, const std::string& builder, const Targets& targets) {
    require_known(builder, sen_builders(), "sen");
    ReportDocument out = document(config, "sen " + builder);
    const long p = config.p;
    const int bound = config.degree_bound;
    if (builder == "bokstedt") out.checks.push_back(bokstedt_check(p, config.variant, bound, targets));
    if (builder == "cmn") out.checks.push_back(cmn_check(p, config.level, bound, targets));
    if (builder == "perfectoid") out.checks.push_back(perfectoid_check(p, bound, targets));
    if (builder == "zpn") out.checks.push_back(zpn_check(p, config.level, bound, targets));
    if (builder == "omega2yn") out.checks.push_back(omega2yn_check(p, config.level, bound, targets));
    if (builder == "dvr") out.checks.push_back(dvr_check(p, config.precision, config.eisenstein, bound, targets));
    return out;
}

ReportDocument cmd_cartier(const RunConfig& config, const std::string& subcheck, const Targets& targets) {
    require_known(subcheck, cartier_subchecks(), "cartier");
    ReportDocument out = document(config, "cartier " + subcheck);
    const long p = config.p;
    if (subcheck == "psi") out.checks.push_back(psi_check(p, config.level, config.integer, targets));
    if (subcheck == "psi-tensor") out.checks.push_back(psi_tensor_check(p, config.level, 100));
    if (subcheck == "weyl") out.checks.push_back(weyl_check(p, config.level, config.monomials));
    if (subcheck == "delta") out.checks.push_back(delta_check(p, config.level, config.truncation, config.precision));
    return out;
}

ReportDocument cmd_report(const RunConfig& config, const Targets& targets) {
    ReportDocument out = document(config, "report");
    auto& checks = out.checks;
    const int length = config.length;

    for (long p : {2L, 3L, 5L}) checks.push_back(gabber_check(p, length, targets));
    for (long p : {2L, 3L, 5L}) checks.push_back(solve_frobenius_check(p, length, targets));
    for (long p : {2L, 3L}) checks.push_back(pn_vanishing_check(p, length, 4));
    for (long p : {2L, 3L, 5L}) checks.push_back(frobenius_of_p_check(p, length));
    for (long p : {2L, 3L}) checks.push_back(cartier_character_check(p, 50));
    checks.push_back(dwork_check(8, 10));

    checks.push_back(nseries_check("additive", 3, 1, 7, 12, targets));
    checks.push_back(q_identity_check(config.n_max));
    for (long p : {2L, 3L, 5L, 7L}) {
        for (int n = 1; exactalg::prime_power(p, static_cast<unsigned long>(n)) <= 64; ++n) {
            checks.push_back(honda_check(p, n, 64));
        }
    }
    checks.push_back(right_unit_check(2, targets));
    checks.push_back(right_unit_check(3, targets));
    checks.push_back(b4_check(targets));
    checks.push_back(fderham_check("multiplicative", 3, config.precision, config.truncation, 6));

    for (long p : {2L, 3L, 5L}) checks.push_back(bokstedt_check(p, "T1", static_cast<int>(2 * p * 20), targets));
    for (long p : {2L, 3L, 5L}) checks.push_back(bokstedt_check(p, "Jp", 41, targets));
    for (auto [p, n] : std::vector<std::pair<long, int>>{{2, 1}, {2, 2}, {3, 1}, {3, 2}}) {
        const long q = exactalg::prime_power(p, static_cast<unsigned long>(n)).get_si();
        checks.push_back(cmn_check(p, n, static_cast<int>(2 * 15 * q), targets));
    }
    for (long p : {2L, 3L, 5L}) checks.push_back(perfectoid_check(p, static_cast<int>(20 * p), targets));
    for (int n : {2, 3}) checks.push_back(zpn_check(3, n, 30, targets));
    for (int n : {2, 3}) checks.push_back(omega2yn_check(3, n, 30, targets));
    checks.push_back(zpn_level_independence_check(3, 30));
    checks.push_back(zpn_check(2, 2, 30, targets));
    for (const auto& [p, e] : std::vector<std::pair<long, std::string>>{{3, "1,-3"}, {3, "1,0,-3"}, {3, "1,0,0,-3"}, {2, "1,0,-2"}}) {
        checks.push_back(dvr_check(p, config.precision, e, 20, targets));
    }

    for (long p : {2L, 3L, 5L}) checks.push_back(psi_table_check(p, 5, 200));
    checks.push_back(psi_check(2, 3, 3, targets));
    checks.push_back(psi_check(2, 2, 0, targets));
    for (long p : {2L, 3L, 5L}) checks.push_back(psi_tensor_check(p, 5, 100));
    for (long p : {2L, 3L}) checks.push_back(weyl_check(p, 4, 50));
    checks.push_back(delta_check(3, 1, config.truncation, config.precision));

    checks.push_back(coverage_check(targets));
    return out;
}

}  // namespace sencalc::cli
