#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hellmann {

enum class ErrorKind {
    Domain,          // precondition on an argument
    Convention,      // variant / quantum-number / unit mismatch
    Pole,            // gamma or hypergeometric pole
    NonNormalizable, // bound state does not decay
    Evanescent,      // closed scattering channel
    NonConvergence,  // series cap, bisection cap, box growth cap
    BracketMiss,     // eigenvalue not inside the energy bracket
    FitResidual      // asymptotic fit did not match a sine
};

std::string_view to_string(ErrorKind kind);

/// True for the kinds that come from a numerical procedure rather than bad input.
bool is_numerical(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace hellmann
