#pragma once

// Scattering states of the radial problem and phase shifts from the arguments
// of the gamma functions in the z -> 1 connection of 2F1.

#include "hellmann/model.hpp"
#include "hellmann/specfun.hpp"

#include <array>

namespace hellmann {

struct ScatterState {
    double energy = 0.0;
    int ell = 0;
    double epsilon = 0.0; // -E / lambda
    Complex kappa;        // sqrt((2m/lambda hbar^2)(a - eps) - l(l+1)), principal
    Complex capital_lambda2; // sqrt((2m/lambda hbar^2)(eps - b)), principal
    double mu = 1.0;      // regular branch l + 1
    std::array<Complex, 3> xi; // mu - i kappa + Lambda2, mu - i kappa - Lambda2, 2 mu
    bool evanescent = false;   // kappa^2 <= 0
    bool imaginary_lambda2 = false; // Lambda2^2 < 0, i.e. eps < b
};

/// Requires energy > 0 and lambda > 0 (Error{Domain}).
ScatterState scatter_state(const PotentialParams& p, double energy, int ell);

enum class WaveConvention {
    Outgoing, // nu = -i kappa
    Incoming, // nu = +i kappa; flips delta -> -delta mod pi
};

struct PhaseShiftResult {
    int ell = 0;
    double energy = 0.0;
    Complex kappa;
    Complex capital_lambda2;
    double delta_raw = 0.0; // pi(1+l)/2 + arg G(2ik) - arg G(mu+ik-L2) - arg G(mu+ik+L2)
    double delta = 0.0;     // delta_raw reduced into (-pi/2, pi/2]
    int branch = 0;         // delta_raw = delta + branch * pi
    std::array<double, 3> arg_gamma{}; // arg G(2ik), arg G(mu+ik-L2), arg G(mu+ik+L2)
    bool imaginary_lambda2 = false;
};

/// delta_l of the Pekeris-approximated radial equation. Throws
/// Error{Evanescent} when kappa^2 <= 0 and Error{Pole} on a gamma pole.
PhaseShiftResult phase_shift(const PotentialParams& p, double energy, int ell,
                             WaveConvention convention = WaveConvention::Outgoing);

/// 2 Gamma(2mu) |Gamma(2ik) / (Gamma(mu+ik-L2) Gamma(mu+ik+L2))|, the large-r
/// amplitude of the regular solution normalized as (lambda r)^{l+1} at r -> 0.
double asymptotic_amplitude(const PotentialParams& p, double energy, int ell);

/// Regular solution t^mu (1-t)^{-i kappa} 2F1(xi1, xi2; xi3; t), t = 1 - e^{-lambda r}.
Complex scattering_wave(const PotentialParams& p, double energy, int ell, double r);

/// x reduced into (-pi/2, pi/2].
double reduce_mod_pi(double x);

} // namespace hellmann
