#pragma once

// Potential instances, unit convention, variant transformations and the two
// closed-form approximations of 1/r^2 and 1/x.

#include "hellmann/specfun.hpp"

#include <optional>
#include <ostream>
#include <span>
#include <string_view>
#include <vector>

namespace hellmann {

/// V(r) = (-a + b exp(-lambda r)) / r together with the units m, hbar.
struct PotentialParams {
    double a = 0.0;      // Coulomb strength
    double b = 0.0;      // screened strength
    double lambda = 0.0; // screening rate
    double mass = 1.0;
    double hbar = 1.0;

    /// Throws Error{Domain} unless mass > 0, hbar > 0, lambda >= 0 and all fields finite.
    void validate() const;

    /// 2 m / hbar^2, the factor multiplying (E - V) in the radial equation.
    double coupling() const { return 2.0 * mass / (hbar * hbar); }
};

enum class Variant {
    RadialHermitian,
    CoulombLimit,
    PTSymmetric1D,
    NonHermitianPT,
    NonPTCase1,
    NonPTCase2,
};

enum class ApproxScheme {
    ExactCentrifugal,   // l(l+1)/r^2 and the exact potential
    PekerisCentrifugal, // lambda^2/(1-e^{-lambda r})^2 and 1/r -> lambda/(1-e^{-lambda r}) in V
    InverseXExp,        // exact l(l+1)/r^2, 1/r -> lambda/(1-e^{-lambda r}) in V
};

/// Short names used on the command line: radial, coulomb, pt1d, nhpt, nonpt1, nonpt2.
std::string_view to_string(Variant v);
std::optional<Variant> parse_variant(std::string_view name);

/// exact, pekeris, inverse-x
std::string_view to_string(ApproxScheme s);
std::optional<ApproxScheme> parse_scheme(std::string_view name);

/// True for the variants posed on the half line x > 0 with the 1D equation.
bool is_one_dimensional(Variant v);

double potential_radial(const PotentialParams& p, double r);

/// lambda^2 / (1 - e^{-lambda r})^2, the stand-in for 1/r^2.
double centrifugal_approx(double lambda, double r);

/// lambda / (1 - e^{-lambda x}), the stand-in for 1/x.
double inverse_x_approx(double lambda, double x);

/// Hellmann potential with 1/r replaced by inverse_x_approx.
double potential_approx(const PotentialParams& p, double r);

struct ProfileRow {
    double r;
    double exact;
    double approx;
    double rel_err; // (approx - exact) / exact
};

/// Tabulates 1/x against inverse_x_approx (InverseXExp) or 1/r^2 against
/// centrifugal_approx (PekerisCentrifugal) on an evenly spaced grid.
std::vector<ProfileRow> approx_profile(double lambda, double r_min, double r_max,
                                       std::size_t points, ApproxScheme scheme);

/// Header `r,exact,approx,rel_err`, 12 significant digits.
void write_profile_csv(std::ostream& os, std::span<const ProfileRow> rows);

struct ComplexCoefficients {
    Complex a;
    Complex b;
    Complex lambda;
};

/// Applies the parameter substitutions that define each variant:
/// NonHermitianPT: a->ia, b->ib, lambda->i lambda; NonPTCase1: lambda->i lambda;
/// NonPTCase2: a->ia, b->ib; identity otherwise.
ComplexCoefficients variant_map(const PotentialParams& p, Variant v);

/// -a/x + b e^{-lambda x}/x with complex coefficients, x != 0.
Complex potential_1d(const ComplexCoefficients& c, double x);

} // namespace hellmann
