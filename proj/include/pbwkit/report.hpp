#pragma once

#include "pbwkit/pbw_check.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace pbwkit {

enum class Command { Check, Jacobi, Complexity, Tor, Hilbert, Rees };

Command parse_command(const std::string& name);
const char* command_name(Command c);

// Every report has the keys verdict, c, certified, jacobi, dims, witness,
// timings, command and notes; entries a command does not compute are null.
nlohmann::json run_command(Command cmd, const Presentation& p, const PbwOptions& opts = {});
nlohmann::json check_json(const PbwReport& r, const Presentation& p);

// Renders the same numbers as the JSON, one table per line.
std::string render_text(const nlohmann::json& report);

// 0 PBW_CERTIFIED, 1 NOT_PBW, 2 PBW_UP_TO_DEGREE; 0 for commands without a verdict.
int report_exit_code(const nlohmann::json& report);

} // namespace pbwkit
