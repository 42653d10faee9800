#pragma once

// Closed-form bound-state spectra for every variant, the hypergeometric wave
// functions and their normalization.

#include "hellmann/model.hpp"
#include "hellmann/specfun.hpp"

#include <string_view>

namespace hellmann {

struct QuantumNumbers {
    int n = 0;   // radial index
    int ell = 0; // angular momentum; 0 for the 1D variants
};

enum class Source { Analytic, Oracle };

enum class BoundStatus {
    Bound,           // quantization condition holds on a decaying branch
    AboveThreshold,  // Lambda1 is not real (E + b lambda > 0)
    NonNormalizable, // the terminating branch does not decay
    Formal,          // complex or sign-ambiguous spectrum returned as printed
};

std::string_view to_string(Source s);
std::string_view to_string(BoundStatus s);

struct SpectrumEntry {
    Complex energy;
    Variant variant = Variant::RadialHermitian;
    QuantumNumbers qn;
    Source source = Source::Analytic;
    BoundStatus status = BoundStatus::Bound;
};

/// Throws Error{Domain} for negative n or ell, Error{Convention} for ell > 0 on
/// a 1D variant, lambda != 0 for CoulombLimit or lambda == 0 for any other variant.
void check_state(const PotentialParams& p, Variant v, QuantumNumbers qn);

/// Analytic energy of the requested variant.
SpectrumEntry bound_energy(const PotentialParams& p, Variant v, QuantumNumbers qn);

/// Radial spectrum with (n+l)^2 in the bracket terms where the quantization
/// condition gives (n+1)^2. Kept for the Table-I comparison report.
double radial_energy_as_printed(const PotentialParams& p, QuantumNumbers qn);

struct ExponentPair {
    Complex lambda1;
    Complex lambda2;
    bool non_normalizable = false; // Re lambda1 <= 0 on the returned branch
};

/// Exponents of u^{lambda1} (1-u)^{lambda2}. Radial: principal lambda1 and the
/// regular root lambda2 = l+1. Coulomb: lambda1 is the decay constant
/// sqrt(-2mE)/hbar. 1D variants: principal roots of both squares; the sign
/// pair that terminates the series is picked by terminating_exponents.
ExponentPair exponent_pair(const PotentialParams& p, Variant v, Complex energy, int ell);

/// Lambda1 for the radial case, on the negative root so that
/// -n = lambda1 + lambda2 + Lambda1 can hold with lambda1 > 0.
Complex capital_lambda1(const PotentialParams& p, Complex energy);

/// 1D variants: the sign choice (+-lambda1, +-lambda2) closest to
/// 1 + lambda1 + lambda2 = -n. Other variants: same as exponent_pair.
ExponentPair terminating_exponents(const PotentialParams& p, Variant v, QuantumNumbers qn,
                                   Complex energy);

/// Zero (to rounding) iff energy satisfies the quantization condition.
/// Radial: n + lambda1 + lambda2 + Lambda1. 1D: n + 1 + lambda1 + lambda2 on
/// the terminating branch. Coulomb: the lambda -> 0 limit of the radial form.
Complex quantization_residual(const PotentialParams& p, Variant v, QuantumNumbers qn,
                              Complex energy);

enum class Measure {
    PaperU,    // int_0^1 |R(u)|^2 du
    PhysicalR, // int_0^inf |R(r)|^2 dr = int_0^1 |R(u)|^2 du / (lambda u)
};

enum class CoordinateKind {
    Physical, // r for the radial case, x for the 1D variants
    MappedU,  // the hypergeometric variable u in (0, 1)
};

struct WaveSolution {
    Complex energy;
    int n = 0;
    Complex lambda1;
    Complex lambda2;
    Complex capital_lambda1; // radial only
    specfun::HyperTriple hyper;
    Complex norm_constant = 1.0;
};

/// Exponents, hypergeometric triple and (radial only) normalization at the
/// analytic energy. 1D and Coulomb solutions carry norm_constant = 1.
WaveSolution wave_solution(const PotentialParams& p, Variant v, QuantumNumbers qn,
                           Measure measure = Measure::PaperU);

/// Maps r (radial, u = e^{-lambda r}) or x (1D, u = 1/(1 - e^{-lambda x}) with
/// the variant's lambda) to u. Throws Error{Domain} for r <= 0.
Complex map_coordinate(const PotentialParams& p, Variant v, double coordinate);

/// N u^{lambda1} (1-u)^{lambda2} 2F1(a', b'; c'; u) for an already built solution.
Complex evaluate_wave(const WaveSolution& ws, Complex u);

/// Wave function at one point. MappedU coordinates must lie in (0, 1).
/// normalized = true is only defined for RadialHermitian.
Complex wavefunction(const PotentialParams& p, Variant v, QuantumNumbers qn, double coordinate,
                     CoordinateKind kind = CoordinateKind::MappedU, bool normalized = true,
                     Measure measure = Measure::PaperU);

/// int |u^{lambda1}(1-u)^{lambda2} 2F1(-n, n+2lambda1+2lambda2; 1+2lambda1; u)|^2 w(u) du,
/// evaluated as a finite sum of Beta functions times terminating 3F2(...; 1).
/// lambda1 > 0, lambda2 > 0 real.
double norm_integral(double lambda1, double lambda2, unsigned n, Measure measure, double lambda);

/// Real positive N for RadialHermitian at the analytic energy.
/// Throws Error{NonNormalizable} if lambda1 <= 0.
double normalization_constant(const PotentialParams& p, QuantumNumbers qn,
                              Measure measure = Measure::PaperU);

} // namespace hellmann
