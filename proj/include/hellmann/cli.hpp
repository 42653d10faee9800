#pragma once

// Command-line front end: spectrum, wavefunction, phase, validate, approx-profile.

#include <iosfwd>
#include <string>
#include <vector>

namespace hellmann {

inline constexpr const char* version = "1.0.0";

enum ExitCode {
    exit_ok = 0,
    exit_usage = 2,
    exit_domain = 3,
    exit_numerical = 4,
    exit_io = 5,
};

/// args excludes the program name. Results go to `out` (or the --output
/// file); failures print one line `error: <kind>: <message>` to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace hellmann
