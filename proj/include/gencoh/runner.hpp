#ifndef GENCOH_RUNNER_HPP
#define GENCOH_RUNNER_HPP

#include "gencoh/problem.hpp"

#include <string>
#include <vector>

namespace gencoh {

struct RunOptions {
    std::vector<std::string> theories = {"delbar", "del", "bc", "aeppli"};
    std::size_t pages = 2;
    std::size_t order = 2;
};

/// Executes check/cohomology/spectral/deform on a parsed problem and
/// returns the machine-readable result. Domain failures surface as
/// "error" objects inside the result, never as exceptions.
nlohmann::json run_command(const std::string& command, const ProblemFile& p, const RunOptions& opts);

/// True when the result (or any nested section) carries an error.
bool result_has_error(const nlohmann::json& result);

/// Human-readable rendering of a result; `color` adds ANSI styling.
std::string render_text(const nlohmann::json& result, bool color);

}  // namespace gencoh

#endif
