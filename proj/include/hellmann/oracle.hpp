#pragma once

// Independent numerical ground truth: Numerov integration of the radial
// equation, node-counting bisection for bound states and a least-squares
// sine fit for phase shifts.

#include "hellmann/bound.hpp"
#include "hellmann/model.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace hellmann {

struct SolverConfig {
    double r_max = 0.0; // 0 = choose automatically
    double step = 0.0;  // 0 = choose automatically
    std::optional<std::pair<double, double>> energy_bracket;
    double tolerance = 1e-10; // bisection stop, energy units
    int node_target = -1;     // -1 = qn.n
    int max_iterations = 200;
};

/// Effective radial equation y'' = (w(r) - (2m/hbar^2) E) y for one scheme.
class RadialEquation {
public:
    RadialEquation(const PotentialParams& p, int ell, ApproxScheme scheme);

    /// centrifugal term + (2m/hbar^2) V(r)
    double w(double r) const;

    /// lim w(r) / (2m/hbar^2) as r -> infinity: the continuum threshold.
    double threshold() const;

    /// Small-r expansion w = L/r^2 + B/r + C + O(r).
    double series_b() const { return series_b_; }
    double series_c() const { return series_c_; }

    int ell() const { return ell_; }
    double coupling() const { return coupling_; }

private:
    PotentialParams p_;
    int ell_;
    ApproxScheme scheme_;
    double coupling_;
    double series_b_;
    double series_c_;
};

/// Regular solution on r_i = i*step, i = 0..floor(r_max/step), normalized as
/// r^{l+1} at the origin. Also reports the number of sign changes.
struct Trajectory {
    double step = 0.0;
    std::vector<double> y;
    int nodes = 0;
};

Trajectory integrate_regular(const RadialEquation& eq, double energy, double step, double r_max);

struct EigenResult {
    SpectrumEntry entry;
    double r_max = 0.0;
    double step = 0.0;
    int interior_nodes = 0;
};

/// Bound state with radial index qn.n (that many interior nodes).
/// Throws Error{BracketMiss} when the bracket does not contain the level,
/// Error{NonConvergence} if the box or bisection caps are exceeded.
EigenResult numerov_eigen_detail(const PotentialParams& p, QuantumNumbers qn, ApproxScheme scheme,
                                 const SolverConfig& cfg = {});

SpectrumEntry numerov_eigen(const PotentialParams& p, QuantumNumbers qn, ApproxScheme scheme,
                            const SolverConfig& cfg = {});

struct PhaseFit {
    double delta = 0.0;      // mod pi, in (-pi/2, pi/2]
    double amplitude = 0.0;  // of the r^{l+1}-normalized solution
    double residual = 0.0;   // rms misfit / rms fit
    double wavenumber = 0.0;
};

/// Integrates the regular solution outward and fits A sin(k r + phi) over the
/// last ten wavelengths; delta = phi + l pi/2 mod pi. Throws Error{FitResidual}
/// if the relative misfit exceeds 1e-2.
PhaseFit numeric_phase_fit(const PotentialParams& p, double energy, int ell, ApproxScheme scheme,
                           const SolverConfig& cfg = {});

double numeric_phase(const PotentialParams& p, double energy, int ell, ApproxScheme scheme,
                     const SolverConfig& cfg = {});

} // namespace hellmann
