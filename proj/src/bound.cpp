#include "hellmann/bound.hpp"

#include "hellmann/errors.hpp"

#include <array>
#include <cmath>
#include <string>

namespace hellmann {

namespace {

using specfun::HyperTriple;

const Complex I(0.0, 1.0);

double sq(double x) { return x * x; }

// Radial spectrum of the hypergeometric (Hulthen-type) problem, grouped like
// the published formula: X and Y are the l-dependent brackets.
double radial_energy(const PotentialParams& p, QuantumNumbers qn, bool as_printed)
{
    const double m = p.mass, h2 = p.hbar * p.hbar, a = p.a, b = p.b, lam = p.lambda;
    const double n = qn.n, l = qn.ell;
    const double q = as_printed ? sq(n + l) : sq(n + 1.0);
    const double x = 2.0 * l * l + q + l * (3.0 + 2.0 * n);
    const double y = l * (1.0 + 2.0 * n) + q;
    const double big_n = n + l + 1.0;
    const double bracket = 4.0 * m * m * (a * a + b * b) + 4.0 * m * h2 * lam * b * x +
                           lam * lam * h2 * h2 * y * y + 4.0 * a * m * (-2.0 * b * m + lam * h2 * y);
    return -bracket / (8.0 * m * h2 * sq(big_n));
}

double pt1d_energy(const PotentialParams& p, int n)
{
    const double big_a = 2.0 * p.mass / (p.lambda * p.hbar * p.hbar);
    const double k = sq(1.0 + n);
    const double a = p.a, b = p.b;
    return -p.lambda / (4.0 * big_a * k) *
           (a * a * big_a * big_a + 2.0 * a * big_a * (-big_a * b + k) + sq(big_a * b + k));
}

double nhpt_energy(const PotentialParams& p, int n)
{
    const double m = p.mass, h2 = p.hbar * p.hbar, a = p.a, b = p.b;
    const double k = sq(1.0 + n);
    return -1.0 / (8.0 * m * h2 * k) *
           (4.0 * m * m * a * a + 4.0 * m * a * (-2.0 * m * b + p.lambda * h2 * k) +
            sq(2.0 * m * b + p.lambda * h2 * k));
}

Complex nonpt1_energy(const PotentialParams& p, int n)
{
    const double m = p.mass, h2 = p.hbar * p.hbar, a = p.a, b = p.b;
    const double k = sq(1.0 + n);
    const Complex t = I * p.lambda * h2 * k;
    const Complex inner = 2.0 * m * b + t;
    return -1.0 / (8.0 * m * h2 * k) *
           (4.0 * m * m * a * a - 4.0 * m * a * (2.0 * m * b - t) + inner * inner);
}

Complex nonpt2_energy(const PotentialParams& p, int n)
{
    const double m = p.mass, h2 = p.hbar * p.hbar, a = p.a, b = p.b;
    const double k = sq(1.0 + n);
    const Complex t = I * p.lambda * h2 * k;
    const Complex inner = 2.0 * m * b - t;
    return 1.0 / (8.0 * m * h2 * k) *
           (4.0 * m * m * a * a - 4.0 * m * a * (2.0 * m * b + t) + inner * inner);
}

double coulomb_energy(const PotentialParams& p, QuantumNumbers qn)
{
    const double big_n = qn.n + qn.ell + 1.0;
    return -p.mass * sq(p.a - p.b) / (2.0 * p.hbar * p.hbar * sq(big_n));
}

// Squares of the two exponents of the 1D variants.
std::array<Complex, 2> exponent_squares_1d(const PotentialParams& p, Variant v, Complex e)
{
    const double big_a = 2.0 * p.mass / (p.lambda * p.hbar * p.hbar);
    const Complex eps = e / p.lambda;
    switch (v) {
    case Variant::PTSymmetric1D: return {-big_a * (p.b + eps), -big_a * (p.a + eps)};
    case Variant::NonHermitianPT: return {-big_a * (p.b - eps), -big_a * (p.a - eps)};
    case Variant::NonPTCase1: return {big_a * (I * p.b + eps), big_a * (I * p.a + eps)};
    case Variant::NonPTCase2: return {-big_a * (I * p.b + eps), -big_a * (I * p.a + eps)};
    default: throw Error(ErrorKind::Convention, "not a 1D variant");
    }
}

bool residual_vanishes(Complex residual, Complex scale)
{
    return std::abs(residual) <= 1e-8 * (1.0 + std::abs(scale));
}

unsigned as_index(int n) { return static_cast<unsigned>(n); }

// Finite 2F1(-n, b; c; u), switching to powers of (1-u) near u = 1.
Complex terminating_series(unsigned n, const HyperTriple& t, Complex u)
{
    if (u.real() > 0.5 && std::abs(u) < 1.0) {
        if (auto v = specfun::terminating_2f1_near_one(n, t.b, t.c, u))
            return *v;
    }
    return specfun::gauss_2f1({-static_cast<double>(n), t.b, t.c}, u);
}

} // namespace

std::string_view to_string(Source s)
{
    return s == Source::Analytic ? "analytic" : "oracle";
}

std::string_view to_string(BoundStatus s)
{
    switch (s) {
    case BoundStatus::Bound: return "bound";
    case BoundStatus::AboveThreshold: return "above-threshold";
    case BoundStatus::NonNormalizable: return "non-normalizable";
    case BoundStatus::Formal: return "formal";
    }
    return "?";
}

void check_state(const PotentialParams& p, Variant v, QuantumNumbers qn)
{
    p.validate();
    if (qn.n < 0 || qn.ell < 0)
        throw Error(ErrorKind::Domain, "quantum numbers must be nonnegative");
    if (is_one_dimensional(v) && qn.ell != 0)
        throw Error(ErrorKind::Convention,
                    std::string(to_string(v)) + " is one-dimensional and requires ell = 0");
    if (v == Variant::CoulombLimit && p.lambda != 0.0)
        throw Error(ErrorKind::Convention, "coulomb requires lambda = 0");
    if (v != Variant::CoulombLimit && !(p.lambda > 0.0))
        throw Error(ErrorKind::Convention, std::string(to_string(v)) + " requires lambda > 0");
}

double radial_energy_as_printed(const PotentialParams& p, QuantumNumbers qn)
{
    check_state(p, Variant::RadialHermitian, qn);
    return radial_energy(p, qn, true);
}

SpectrumEntry bound_energy(const PotentialParams& p, Variant v, QuantumNumbers qn)
{
    check_state(p, v, qn);
    SpectrumEntry entry;
    entry.variant = v;
    entry.qn = qn;
    entry.source = Source::Analytic;

    switch (v) {
    case Variant::RadialHermitian: entry.energy = radial_energy(p, qn, false); break;
    case Variant::CoulombLimit: entry.energy = coulomb_energy(p, qn); break;
    case Variant::PTSymmetric1D: entry.energy = pt1d_energy(p, qn.n); break;
    case Variant::NonHermitianPT: entry.energy = nhpt_energy(p, qn.n); break;
    case Variant::NonPTCase1: entry.energy = nonpt1_energy(p, qn.n); break;
    case Variant::NonPTCase2: entry.energy = nonpt2_energy(p, qn.n); break;
    }

    switch (v) {
    case Variant::RadialHermitian: {
        const double e = entry.energy.real();
        const auto ex = exponent_pair(p, v, e, qn.ell);
        const Complex res = quantization_residual(p, v, qn, e);
        if (e + p.b * p.lambda > 0.0)
            entry.status = BoundStatus::AboveThreshold;
        else if (ex.non_normalizable || !residual_vanishes(res, ex.lambda1))
            entry.status = BoundStatus::NonNormalizable;
        else
            entry.status = BoundStatus::Bound;
        break;
    }
    case Variant::CoulombLimit:
        entry.status = p.a - p.b > 0.0 ? BoundStatus::Bound : BoundStatus::NonNormalizable;
        break;
    case Variant::PTSymmetric1D: {
        const auto ex = terminating_exponents(p, v, qn, entry.energy);
        const Complex res = quantization_residual(p, v, qn, entry.energy);
        entry.status = residual_vanishes(res, ex.lambda1) && ex.lambda2.real() > 0.0
                           ? BoundStatus::Bound
                           : BoundStatus::NonNormalizable;
        break;
    }
    default: entry.status = BoundStatus::Formal; break;
    }
    return entry;
}

Complex capital_lambda1(const PotentialParams& p, Complex energy)
{
    const double s = p.coupling();
    return -std::sqrt(-(s / (p.lambda * p.lambda)) * (energy + p.b * p.lambda));
}

ExponentPair exponent_pair(const PotentialParams& p, Variant v, Complex energy, int ell)
{
    const double s = p.coupling();
    const double cent = static_cast<double>(ell) * (ell + 1.0);
    ExponentPair ex;
    switch (v) {
    case Variant::RadialHermitian:
        ex.lambda1 = std::sqrt(-(s / (p.lambda * p.lambda)) * (energy + p.a * p.lambda) + cent);
        ex.lambda2 = ell + 1.0;
        break;
    case Variant::CoulombLimit:
        ex.lambda1 = std::sqrt(-s * energy);
        ex.lambda2 = ell + 1.0;
        break;
    default: {
        const auto sq = exponent_squares_1d(p, v, energy);
        ex.lambda1 = std::sqrt(sq[0]);
        ex.lambda2 = std::sqrt(sq[1]);
        break;
    }
    }
    ex.non_normalizable = !(ex.lambda1.real() > 0.0);
    return ex;
}

ExponentPair terminating_exponents(const PotentialParams& p, Variant v, QuantumNumbers qn,
                                   Complex energy)
{
    ExponentPair ex = exponent_pair(p, v, energy, qn.ell);
    if (!is_one_dimensional(v))
        return ex;
    const double target = -(qn.n + 1.0);
    ExponentPair best = ex;
    double best_gap = INFINITY;
    for (double s1 : {1.0, -1.0}) {
        for (double s2 : {1.0, -1.0}) {
            const Complex l1 = s1 * ex.lambda1, l2 = s2 * ex.lambda2;
            const double gap = std::abs(l1 + l2 - target);
            if (gap < best_gap) {
                best_gap = gap;
                best.lambda1 = l1;
                best.lambda2 = l2;
            }
        }
    }
    best.non_normalizable = !(best.lambda2.real() > 0.0);
    return best;
}

Complex quantization_residual(const PotentialParams& p, Variant v, QuantumNumbers qn, Complex energy)
{
    check_state(p, v, qn);
    switch (v) {
    case Variant::RadialHermitian: {
        const auto ex = exponent_pair(p, v, energy, qn.ell);
        return static_cast<double>(qn.n) + ex.lambda1 + ex.lambda2 + capital_lambda1(p, energy);
    }
    case Variant::CoulombLimit: {
        const double s = p.coupling();
        return (qn.n + qn.ell + 1.0) - s * (p.a - p.b) / (2.0 * std::sqrt(-s * energy));
    }
    default: {
        const auto ex = terminating_exponents(p, v, qn, energy);
        return qn.n + 1.0 + ex.lambda1 + ex.lambda2;
    }
    }
}

WaveSolution wave_solution(const PotentialParams& p, Variant v, QuantumNumbers qn, Measure measure)
{
    const SpectrumEntry entry = bound_energy(p, v, qn);
    if (v == Variant::CoulombLimit)
        throw Error(ErrorKind::Domain, "coulomb has no hypergeometric u-representation (lambda = 0)");

    WaveSolution ws;
    ws.energy = entry.energy;
    ws.n = qn.n;
    const auto ex = terminating_exponents(p, v, qn, entry.energy);
    ws.lambda1 = ex.lambda1;
    ws.lambda2 = ex.lambda2;

    const double n = qn.n;
    if (v == Variant::RadialHermitian) {
        ws.capital_lambda1 = capital_lambda1(p, entry.energy);
        ws.hyper = {ws.lambda1 + ws.lambda2 + ws.capital_lambda1,
                    ws.lambda1 + ws.lambda2 - ws.capital_lambda1, 1.0 + 2.0 * ws.lambda1};
    } else {
        ws.hyper = {1.0 + ws.lambda1 + ws.lambda2, ws.lambda1 + ws.lambda2, 1.0 + 2.0 * ws.lambda1};
    }
    // At a quantized energy a' = -n up to rounding; store it exactly.
    if (residual_vanishes(ws.hyper.a + n, ws.lambda1))
        ws.hyper.a = -n;

    if (v == Variant::RadialHermitian && entry.status == BoundStatus::Bound)
        ws.norm_constant = normalization_constant(p, qn, measure);
    return ws;
}

Complex map_coordinate(const PotentialParams& p, Variant v, double coordinate)
{
    if (!(coordinate > 0.0))
        throw Error(ErrorKind::Domain, "coordinate must be positive");
    if (v == Variant::RadialHermitian)
        return std::exp(-p.lambda * coordinate);
    if (v == Variant::CoulombLimit)
        throw Error(ErrorKind::Domain, "coulomb has no u-mapping");
    const Complex lam = variant_map(p, v).lambda;
    return 1.0 / (1.0 - std::exp(-lam * coordinate));
}

Complex evaluate_wave(const WaveSolution& ws, Complex u)
{
    const auto n = specfun::nonpositive_integer(ws.hyper.a);
    const Complex f = n ? terminating_series(*n, ws.hyper, u) : specfun::gauss_2f1(ws.hyper, u);
    return ws.norm_constant * std::pow(u, ws.lambda1) * std::pow(1.0 - u, ws.lambda2) * f;
}

Complex wavefunction(const PotentialParams& p, Variant v, QuantumNumbers qn, double coordinate,
                     CoordinateKind kind, bool normalized, Measure measure)
{
    if (normalized && v != Variant::RadialHermitian)
        throw Error(ErrorKind::Convention, "normalized wave functions are defined for radial only");
    Complex u;
    if (kind == CoordinateKind::MappedU) {
        if (!(coordinate > 0.0 && coordinate < 1.0))
            throw Error(ErrorKind::Domain, "wavefunction: u must lie in (0, 1)");
        u = coordinate;
    } else {
        u = map_coordinate(p, v, coordinate);
    }
    WaveSolution ws = wave_solution(p, v, qn, measure);
    if (!normalized)
        ws.norm_constant = 1.0;
    return evaluate_wave(ws, u);
}

double norm_integral(double lambda1, double lambda2, unsigned n, Measure measure, double lambda)
{
    if (!(lambda1 > 0.0) || !(lambda2 > 0.0))
        throw Error(ErrorKind::NonNormalizable, "norm_integral: exponents must be positive");
    const double nd = n;
    const double p = 2.0 * lambda1 - (measure == Measure::PhysicalR ? 1.0 : 0.0);
    const double q = 2.0 * lambda2;
    const double big_a = nd + 2.0 * lambda1 + 2.0 * lambda2;
    const double c = 1.0 + 2.0 * lambda1;

    // Each term is (-n)_m (A)_m / ((c)_m m!) * B(.,.) * 3F2(.; 1), the m-th
    // coefficient of the polynomial times the integral of u^m against it.
    auto sum_terms = [&](double weight, double other, double lower) {
        double total = 0.0;
        double coeff = 1.0;
        for (unsigned m = 0; m <= n; ++m) {
            const double md = m;
            if (m > 0)
                coeff *= (-nd + md - 1.0) * (big_a + md - 1.0) / ((lower + md - 1.0) * md);
            const double b = specfun::beta(weight + md + 1.0, other + 1.0);
            const Complex f = specfun::f3f2_unit(weight + md + 1.0, -nd, big_a,
                                                 weight + other + md + 2.0, lower);
            total += coeff * b * f.real();
        }
        return total;
    };

    double integral;
    if (lambda1 > lambda2) {
        // expand in v = 1 - u: F(u) = P * 2F1(-n, A; A-c-n+1; v)
        const double c2 = big_a - c - nd + 1.0;
        const double pref = (specfun::pochhammer(c - big_a, n) / specfun::pochhammer(c, n)).real();
        integral = pref * pref * sum_terms(q, p, c2);
    } else {
        integral = sum_terms(p, q, c);
    }
    if (measure == Measure::PhysicalR)
        integral /= lambda;
    if (!(integral > 0.0) || !std::isfinite(integral))
        throw Error(ErrorKind::NonConvergence, "norm_integral: lost precision");
    return integral;
}

double normalization_constant(const PotentialParams& p, QuantumNumbers qn, Measure measure)
{
    check_state(p, Variant::RadialHermitian, qn);
    const double e = radial_energy(p, qn, false);
    const auto ex = exponent_pair(p, Variant::RadialHermitian, e, qn.ell);
    const Complex res = quantization_residual(p, Variant::RadialHermitian, qn, e);
    if (ex.non_normalizable || std::abs(ex.lambda1.imag()) > 0.0 || !residual_vanishes(res, ex.lambda1))
        throw Error(ErrorKind::NonNormalizable, "normalization_constant: no decaying bound state");
    const double integral =
        norm_integral(ex.lambda1.real(), ex.lambda2.real(), as_index(qn.n), measure, p.lambda);
    return 1.0 / std::sqrt(integral);
}

} // namespace hellmann
