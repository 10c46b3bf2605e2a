#pragma once

#include <functional>

#include "CLI11.hpp"

namespace cli {

// Adds every subcommand to app. After parsing, `action` holds the selected
// command; it returns the process exit code.
void register_commands(CLI::App& app, std::function<int()>& action);

} // namespace cli
