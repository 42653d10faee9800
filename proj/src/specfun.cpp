#include "hellmann/specfun.hpp"

#include "hellmann/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

namespace hellmann {

std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::Domain: return "domain";
    case ErrorKind::Convention: return "convention";
    case ErrorKind::Pole: return "pole";
    case ErrorKind::NonNormalizable: return "non-normalizable";
    case ErrorKind::Evanescent: return "evanescent";
    case ErrorKind::NonConvergence: return "non-convergence";
    case ErrorKind::BracketMiss: return "bracket-miss";
    case ErrorKind::FitResidual: return "fit-residual";
    }
    return "unknown";
}

bool is_numerical(ErrorKind kind)
{
    return kind == ErrorKind::NonConvergence || kind == ErrorKind::BracketMiss ||
           kind == ErrorKind::FitResidual;
}

namespace specfun {

namespace {

constexpr double pi = std::numbers::pi;

// B_{2k} / (2k (2k-1)), k = 1..8
constexpr std::array<double, 8> stirling_coeffs = {
    1.0 / 12.0,     -1.0 / 360.0,      1.0 / 1260.0, -1.0 / 1680.0,
    1.0 / 1188.0,   -691.0 / 360360.0, 1.0 / 156.0,  -3617.0 / 122400.0,
};

constexpr double stirling_min_re = 15.0;

Complex stirling(Complex z)
{
    const Complex inv = 1.0 / z;
    const Complex inv2 = inv * inv;
    Complex series = 0.0;
    Complex power = inv;
    for (double c : stirling_coeffs) {
        series += c * power;
        power *= inv2;
    }
    return (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * pi) + series;
}

[[noreturn]] void throw_pole(const char* where, Complex z)
{
    std::ostringstream msg;
    msg << where << ": pole at z=" << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i";
    throw Error(ErrorKind::Pole, msg.str());
}

Complex check_finite(Complex v, const char* where)
{
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw Error(ErrorKind::NonConvergence, std::string(where) + ": non-finite result");
    return v;
}

Complex series_2f1(const HyperTriple& p, Complex z)
{
    constexpr int max_terms = 100000;
    constexpr double rel_cut = 1e-16;
    Complex sum = 1.0;
    Complex term = 1.0;
    int small_run = 0;
    for (int k = 0; k < max_terms; ++k) {
        const double kd = k;
        const Complex denom = (p.c + kd) * (kd + 1.0);
        if (denom == 0.0)
            throw_pole("gauss_2f1", p.c);
        term *= (p.a + kd) * (p.b + kd) / denom * z;
        sum += term;
        if (std::abs(term) < rel_cut * std::abs(sum)) {
            if (++small_run == 3)
                return sum;
        } else {
            small_run = 0;
        }
    }
    throw Error(ErrorKind::NonConvergence, "gauss_2f1: series did not converge within 1e5 terms");
}

Complex finite_2f1(const HyperTriple& p, Complex z, unsigned n)
{
    Complex sum = 1.0;
    Complex term = 1.0;
    for (unsigned k = 0; k < n; ++k) {
        const double kd = k;
        const Complex denom = (p.c + kd) * (kd + 1.0);
        if (denom == 0.0)
            throw_pole("gauss_2f1", p.c);
        term *= (p.a + kd) * (p.b + kd) / denom * z;
        sum += term;
    }
    return sum;
}

bool is_integer(Complex x, double tol = 1e-12)
{
    return std::abs(x.imag()) <= tol && std::abs(x.real() - std::round(x.real())) <= tol;
}

Complex connection_2f1(const HyperTriple& p, double z)
{
    const Complex s = p.c - p.a - p.b;
    const double w = 1.0 - z;
    const Complex g1 = std::exp(log_gamma(p.c) + log_gamma(s)) * rgamma(p.c - p.a) * rgamma(p.c - p.b);
    const Complex g2 = std::exp(log_gamma(p.c) + log_gamma(-s)) * rgamma(p.a) * rgamma(p.b);
    const Complex f1 = series_2f1({p.a, p.b, 1.0 - s}, w);
    const Complex f2 = series_2f1({p.c - p.a, p.c - p.b, s + 1.0}, w);
    return g1 * f1 + std::pow(Complex(w), s) * g2 * f2;
}

} // namespace

std::optional<unsigned> nonpositive_integer(Complex x, double tol)
{
    if (std::abs(x.imag()) > tol * (1.0 + std::abs(x)))
        return std::nullopt;
    const double r = std::round(x.real());
    if (r > 0.0 || std::abs(x.real() - r) > tol * (1.0 + std::abs(r)))
        return std::nullopt;
    return static_cast<unsigned>(-r);
}

Complex log_gamma(Complex z)
{
    if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real()))
        throw_pole("log_gamma", z);

    if (z.real() < 0.0) {
        // reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
        return std::log(pi) - std::log(std::sin(pi * z)) - log_gamma(1.0 - z);
    }

    Complex shift = 0.0;
    while (z.real() < stirling_min_re) {
        shift += std::log(z);
        z += 1.0;
    }
    return check_finite(stirling(z) - shift, "log_gamma");
}

Complex gamma(Complex z)
{
    return std::exp(log_gamma(z));
}

Complex rgamma(Complex z)
{
    if (nonpositive_integer(z, 0.0))
        return 0.0;
    return std::exp(-log_gamma(z));
}

Complex pochhammer(Complex x, unsigned k)
{
    Complex p = 1.0;
    for (unsigned j = 0; j < k; ++j)
        p *= x + static_cast<double>(j);
    return p;
}

Complex gauss_2f1(const HyperTriple& p, Complex z)
{
    const auto na = nonpositive_integer(p.a);
    const auto nb = nonpositive_integer(p.b);
    if (na || nb) {
        const unsigned n = std::min(na.value_or(~0u), nb.value_or(~0u));
        return check_finite(finite_2f1(p, z, n), "gauss_2f1");
    }
    if (nonpositive_integer(p.c))
        throw_pole("gauss_2f1", p.c);
    if (z == 0.0)
        return 1.0;

    const double az = std::abs(z);
    if (az < 0.75)
        return check_finite(series_2f1(p, z), "gauss_2f1");
    if (z.imag() == 0.0 && z.real() >= 0.75 && z.real() < 1.0 && !is_integer(p.c - p.a - p.b))
        return check_finite(connection_2f1(p, z.real()), "gauss_2f1");
    if (az < 1.0)
        return check_finite(series_2f1(p, z), "gauss_2f1");
    throw Error(ErrorKind::NonConvergence,
                "gauss_2f1: |z| >= 1 with no terminating parameter or connection formula");
}

std::optional<Complex> terminating_2f1_near_one(unsigned n, Complex b, Complex c, Complex z)
{
    const Complex c_new = b - c - static_cast<double>(n) + 1.0;
    for (unsigned k = 0; k < n; ++k)
        if (c_new + static_cast<double>(k) == 0.0)
            return std::nullopt;
    const Complex cn = pochhammer(c, n);
    if (cn == 0.0)
        return std::nullopt;
    const Complex prefactor = pochhammer(c - b, n) / cn;
    const Complex sum = finite_2f1({-static_cast<double>(n), b, c_new}, 1.0 - z, n);
    return check_finite(prefactor * sum, "terminating_2f1_near_one");
}

Complex f3f2_unit(Complex nu, Complex alpha, Complex beta, Complex mu_plus_nu, Complex gamma)
{
    const auto na = nonpositive_integer(alpha);
    const auto nb = nonpositive_integer(beta);
    if (!na && !nb)
        throw Error(ErrorKind::Domain, "f3f2_unit: neither alpha nor beta is a nonpositive integer");
    const unsigned n = std::min(na.value_or(~0u), nb.value_or(~0u));

    Complex sum = 1.0;
    Complex term = 1.0;
    for (unsigned k = 0; k < n; ++k) {
        const double kd = k;
        const Complex denom = (mu_plus_nu + kd) * (gamma + kd) * (kd + 1.0);
        if (denom == 0.0)
            throw Error(ErrorKind::Pole, "f3f2_unit: lower parameter vanishes inside the sum");
        term *= (nu + kd) * (alpha + kd) * (beta + kd) / denom;
        sum += term;
    }
    return check_finite(sum, "f3f2_unit");
}

double beta(double x, double y)
{
    if (!(x > 0.0) || !(y > 0.0))
        throw Error(ErrorKind::Domain, "beta: arguments must be positive");
    return std::exp((log_gamma(x) + log_gamma(y) - log_gamma(x + y)).real());
}

} // namespace specfun
} // namespace hellmann
