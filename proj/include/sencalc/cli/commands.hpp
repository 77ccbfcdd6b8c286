#pragma once

#include <string>
#include <vector>

#include "sencalc/cli/config.hpp"
#include "sencalc/cli/document.hpp"
#include "sencalc/cli/targets.hpp"

namespace sencalc::cli {

const std::vector<std::string>& witt_subchecks();
const std::vector<std::string>& fgl_subchecks();
const std::vector<std::string>& sen_builders();
const std::vector<std::string>& cartier_subchecks();

// Each command throws InvalidInput for parameters it cannot run with (a usage error).
ReportDocument cmd_witt(const RunConfig& config, const std::string& subcheck, const Targets& targets);
ReportDocument cmd_fgl(const RunConfig& config, const std::string& subcheck, const Targets& targets);
ReportDocument cmd_sen(const RunConfig& config, const std::string& builder, const Targets& targets);
ReportDocument cmd_cartier(const RunConfig& config, const std::string& subcheck, const Targets& targets);
// Every acceptance check plus a coverage check over the targets.
ReportDocument cmd_report(const RunConfig& config, const Targets& targets);

}  // namespace sencalc::cli
