#pragma once

// Special-function kernel: complex log-gamma, Pochhammer symbols, Gauss 2F1 and
// terminating 3F2 at unit argument. Everything here is a pure function.

#include <complex>
#include <optional>

namespace hellmann {

using Complex = std::complex<double>;

namespace specfun {

/// Parameter triple (a, b; c) of a Gauss hypergeometric function.
struct HyperTriple {
    Complex a;
    Complex b;
    Complex c;
};

/// Returns k if x == -k for a nonnegative integer k (within tol), else nullopt.
std::optional<unsigned> nonpositive_integer(Complex x, double tol = 1e-12);

/// log Gamma(z). For Re z >= 0 the imaginary part is the continuous branch
/// (the one that makes Im log_gamma a smooth function of z off the negative
/// real axis), so arg Gamma can be read off without 2pi jumps.
/// Throws Error{Pole} at z = 0, -1, -2, ...
Complex log_gamma(Complex z);

Complex gamma(Complex z);

/// 1/Gamma(z); zero at the poles of Gamma.
Complex rgamma(Complex z);

/// Rising factorial x(x+1)...(x+k-1), (x)_0 = 1.
Complex pochhammer(Complex x, unsigned k);

/// Gauss 2F1(a, b; c; z).
///  - a or b a nonpositive integer: exact finite sum, any z.
///  - |z| < 1: power series (cut off when three consecutive terms fall below
///    1e-16 of the partial sum, at most 1e5 terms).
///  - real z in [0.75, 1) with non-integer c-a-b: z -> 1-z connection formula.
/// Throws Error{Pole} if c is a pole the series reaches, Error{NonConvergence}
/// for |z| >= 1 without termination or when the term cap is hit.
Complex gauss_2f1(const HyperTriple& p, Complex z);

/// Terminating 2F1(-n, b; c; z) evaluated in powers of (1 - z):
///   (c-b)_n/(c)_n * 2F1(-n, b; b-c-n+1; 1-z).
/// Avoids the cancellation of the direct sum near z = 1 when b and c are large.
/// Returns nullopt if the transformed lower parameter hits a pole.
std::optional<Complex> terminating_2f1_near_one(unsigned n, Complex b, Complex c, Complex z);

/// 3F2(nu, alpha, beta; mu_plus_nu, gamma; 1) for alpha or beta a nonpositive
/// integer. Throws Error{Domain} if neither terminates the series and
/// Error{Pole} if a lower parameter vanishes within the summed range.
Complex f3f2_unit(Complex nu, Complex alpha, Complex beta, Complex mu_plus_nu, Complex gamma);

/// Euler beta function for positive real arguments.
double beta(double x, double y);

} // namespace specfun
} // namespace hellmann
