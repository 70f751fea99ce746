#pragma once

#include <filesystem>
#include <string_view>

#include "hyperlag/optimizer.hpp"

namespace hyperlag {

// key=value lines; keys: restarts, max_iterations, step_tolerance, seed,
// minimality_threshold, threads. '#' comments and blank lines are ignored.
// Unset keys keep the value from base. Throws ParseError.
OptimizerConfig parse_optimizer_config(std::string_view text, OptimizerConfig base = {});
OptimizerConfig read_optimizer_config(const std::filesystem::path& path, OptimizerConfig base = {});

}  // namespace hyperlag
