#include "hellmann/scatter.hpp"

#include "hellmann/errors.hpp"

#include <cmath>
#include <numbers>

namespace hellmann {

namespace {

constexpr double pi = std::numbers::pi;
const Complex I(0.0, 1.0);

void require_propagating(const ScatterState& st)
{
    if (st.evanescent)
        throw Error(ErrorKind::Evanescent, "closed channel: kappa^2 <= 0");
}

} // namespace

double reduce_mod_pi(double x)
{
    double r = x - pi * std::round(x / pi);
    if (r <= -pi / 2)
        r += pi;
    return r;
}

ScatterState scatter_state(const PotentialParams& p, double energy, int ell)
{
    p.validate();
    if (!(energy > 0.0))
        throw Error(ErrorKind::Domain, "scatter_state: energy must be positive");
    if (!(p.lambda > 0.0))
        throw Error(ErrorKind::Domain, "scatter_state: lambda must be positive");
    if (ell < 0)
        throw Error(ErrorKind::Domain, "scatter_state: ell must be nonnegative");

    ScatterState st;
    st.energy = energy;
    st.ell = ell;
    st.epsilon = -energy / p.lambda;
    const double scale = p.coupling() / p.lambda;
    const double kappa_sq = scale * (p.a - st.epsilon) - ell * (ell + 1.0);
    const double lambda2_sq = scale * (st.epsilon - p.b);
    st.kappa = std::sqrt(Complex(kappa_sq));
    st.capital_lambda2 = std::sqrt(Complex(lambda2_sq));
    st.mu = 1.0 + ell;
    st.xi = {st.mu - I * st.kappa + st.capital_lambda2, st.mu - I * st.kappa - st.capital_lambda2,
             2.0 * st.mu};
    st.evanescent = !(kappa_sq > 0.0);
    st.imaginary_lambda2 = lambda2_sq < 0.0;
    return st;
}

PhaseShiftResult phase_shift(const PotentialParams& p, double energy, int ell, WaveConvention convention)
{
    const ScatterState st = scatter_state(p, energy, ell);
    require_propagating(st);

    const Complex k = convention == WaveConvention::Outgoing ? st.kappa : -st.kappa;
    const Complex l2 = st.capital_lambda2;

    PhaseShiftResult res;
    res.ell = ell;
    res.energy = energy;
    res.kappa = st.kappa;
    res.capital_lambda2 = l2;
    res.imaginary_lambda2 = st.imaginary_lambda2;
    res.arg_gamma = {specfun::log_gamma(2.0 * I * k).imag(),
                     specfun::log_gamma(st.mu + I * k - l2).imag(),
                     specfun::log_gamma(st.mu + I * k + l2).imag()};
    res.delta_raw = pi / 2 * (1.0 + ell) + res.arg_gamma[0] - res.arg_gamma[1] - res.arg_gamma[2];
    res.delta = reduce_mod_pi(res.delta_raw);
    res.branch = static_cast<int>(std::lround((res.delta_raw - res.delta) / pi));
    return res;
}

double asymptotic_amplitude(const PotentialParams& p, double energy, int ell)
{
    const ScatterState st = scatter_state(p, energy, ell);
    require_propagating(st);
    const Complex k = st.kappa;
    const Complex log_ratio = specfun::log_gamma(2.0 * I * k) -
                              specfun::log_gamma(st.mu + I * k - st.capital_lambda2) -
                              specfun::log_gamma(st.mu + I * k + st.capital_lambda2);
    return 2.0 * std::exp(specfun::log_gamma(2.0 * st.mu).real() + log_ratio.real());
}

Complex scattering_wave(const PotentialParams& p, double energy, int ell, double r)
{
    if (!(r > 0.0))
        throw Error(ErrorKind::Domain, "scattering_wave: r must be positive");
    const ScatterState st = scatter_state(p, energy, ell);
    const double t = -std::expm1(-p.lambda * r);
    const Complex f = specfun::gauss_2f1({st.xi[0], st.xi[1], st.xi[2]}, t);
    return std::pow(t, st.mu) * std::exp(I * st.kappa * p.lambda * r) * f;
}

} // namespace hellmann
