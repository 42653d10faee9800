#include "hellmann/format.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace hellmann {

std::string format_number(double x)
{
    if (x == 0.0)
        x = 0.0; // drop the sign of -0
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::string format_complex(Complex z)
{
    std::string im = format_number(z.imag());
    if (im.front() != '-')
        im.insert(im.begin(), '+');
    return format_number(z.real()) + im + "i";
}

double round_sig12(double x)
{
    if (!std::isfinite(x))
        return x;
    return std::strtod(format_number(x).c_str(), nullptr);
}

} // namespace hellmann
