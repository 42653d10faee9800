#pragma once

#include "hellmann/specfun.hpp"

#include <string>

namespace hellmann {

/// 12 significant digits, printf %g style.
std::string format_number(double x);

/// `re+imi` / `re-imi`, each part with 12 significant digits.
std::string format_complex(Complex z);

/// x rounded to 12 significant digits (what format_number prints, as a double).
double round_sig12(double x);

} // namespace hellmann
