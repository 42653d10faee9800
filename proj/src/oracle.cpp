#include "hellmann/oracle.hpp"

#include "hellmann/errors.hpp"
#include "hellmann/scatter.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace hellmann {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double rescale_limit = 1e150;
constexpr double max_box = 2e5;

double default_bound_step(double r_max)
{
    return std::min(0.005, r_max / 2e5);
}

std::vector<double> tabulate(const RadialEquation& eq, double step, std::size_t last)
{
    std::vector<double> w(last + 1, 0.0);
    for (std::size_t i = 1; i <= last; ++i)
        w[i] = eq.w(step * static_cast<double>(i));
    return w;
}

// Outward Numerov sweep over a tabulated w. Returns the sign-change count; if
// `out` is given it receives y_i (rescaled consistently when it grows large).
int sweep(const RadialEquation& eq, const std::vector<double>& w, double step, double energy,
          std::vector<double>* out)
{
    const std::size_t last = w.size() - 1;
    const double se = eq.coupling() * energy;
    const double l = eq.ell();
    const double c1 = eq.series_b() / (2.0 * (l + 1.0));
    const double c2 = (eq.series_b() * c1 + eq.series_c() - se) / (4.0 * l + 6.0);
    auto start = [&](double r) { return std::pow(r, l + 1.0) * (1.0 + r * (c1 + c2 * r)); };

    const double h12 = step * step / 12.0;
    double y_prev = start(step);
    double y_cur = start(2.0 * step);
    if (out) {
        out->assign(last + 1, 0.0);
        (*out)[1] = y_prev;
        if (last >= 2)
            (*out)[2] = y_cur;
    }
    int nodes = y_prev * y_cur < 0.0 ? 1 : 0;
    double g_prev = 1.0 - h12 * (w[1] - se);
    double g_cur = 1.0 - h12 * (w[2] - se);
    for (std::size_t i = 2; i < last; ++i) {
        const double g_next = 1.0 - h12 * (w[i + 1] - se);
        const double y_next = ((12.0 - 10.0 * g_cur) * y_cur - g_prev * y_prev) / g_next;
        if (y_next * y_cur < 0.0)
            ++nodes;
        y_prev = y_cur;
        y_cur = y_next;
        g_prev = g_cur;
        g_cur = g_next;
        if (out)
            (*out)[i + 1] = y_next;
        if (std::abs(y_cur) > rescale_limit) {
            y_prev /= rescale_limit;
            y_cur /= rescale_limit;
            if (out)
                for (std::size_t j = 0; j <= i + 1; ++j)
                    (*out)[j] /= rescale_limit;
        }
    }
    return nodes;
}

struct Box {
    double r_max;
    double step;
    std::vector<double> w;
};

Box make_box(const RadialEquation& eq, double r_max, double step)
{
    const auto last = static_cast<std::size_t>(std::floor(r_max / step));
    if (last < 1000)
        throw Error(ErrorKind::Domain, "solver grid needs r_max/step >= 1000");
    return {r_max, step, tabulate(eq, step, last)};
}

// Outermost classically allowed point at this energy.
double turning_point(const RadialEquation& eq, const Box& box, double energy)
{
    const double se = eq.coupling() * energy;
    for (std::size_t i = box.w.size() - 1; i >= 1; --i)
        if (box.w[i] - se < 0.0)
            return box.step * static_cast<double>(i);
    return 0.0;
}

} // namespace

RadialEquation::RadialEquation(const PotentialParams& p, int ell, ApproxScheme scheme)
    : p_(p), ell_(ell), scheme_(scheme), coupling_(p.coupling())
{
    p.validate();
    if (ell < 0)
        throw Error(ErrorKind::Domain, "ell must be nonnegative");
    if (scheme != ApproxScheme::ExactCentrifugal && !(p.lambda > 0.0))
        throw Error(ErrorKind::Domain, "approximated schemes need lambda > 0");
    const double cent = ell * (ell + 1.0);
    const double s = coupling_;
    switch (scheme) {
    case ApproxScheme::ExactCentrifugal:
        series_b_ = s * (p.b - p.a);
        series_c_ = -s * p.b * p.lambda;
        break;
    case ApproxScheme::PekerisCentrifugal:
        series_b_ = cent * p.lambda + s * (p.b - p.a);
        series_c_ = 5.0 * cent * p.lambda * p.lambda / 12.0 - s * (p.a + p.b) * p.lambda / 2.0;
        break;
    case ApproxScheme::InverseXExp:
        series_b_ = s * (p.b - p.a);
        series_c_ = -s * (p.a + p.b) * p.lambda / 2.0;
        break;
    }
}

double RadialEquation::w(double r) const
{
    const double cent = ell_ * (ell_ + 1.0);
    switch (scheme_) {
    case ApproxScheme::ExactCentrifugal: return cent / (r * r) + coupling_ * potential_radial(p_, r);
    case ApproxScheme::PekerisCentrifugal:
        return cent * centrifugal_approx(p_.lambda, r) + coupling_ * potential_approx(p_, r);
    case ApproxScheme::InverseXExp: return cent / (r * r) + coupling_ * potential_approx(p_, r);
    }
    return 0.0;
}

double RadialEquation::threshold() const
{
    switch (scheme_) {
    case ApproxScheme::ExactCentrifugal: return 0.0;
    case ApproxScheme::PekerisCentrifugal:
        return -p_.a * p_.lambda + ell_ * (ell_ + 1.0) * p_.lambda * p_.lambda / coupling_;
    case ApproxScheme::InverseXExp: return -p_.a * p_.lambda;
    }
    return 0.0;
}

Trajectory integrate_regular(const RadialEquation& eq, double energy, double step, double r_max)
{
    const Box box = make_box(eq, r_max, step);
    Trajectory t;
    t.step = step;
    t.nodes = sweep(eq, box.w, step, energy, &t.y);
    return t;
}

EigenResult numerov_eigen_detail(const PotentialParams& p, QuantumNumbers qn, ApproxScheme scheme,
                                 const SolverConfig& cfg)
{
    if (qn.n < 0 || qn.ell < 0)
        throw Error(ErrorKind::Domain, "quantum numbers must be nonnegative");
    if (!(cfg.tolerance > 0.0))
        throw Error(ErrorKind::Domain, "solver tolerance must be positive");
    const RadialEquation eq(p, qn.ell, scheme);
    const int target = cfg.node_target >= 0 ? cfg.node_target : qn.n;
    const bool auto_box = !(cfg.r_max > 0.0);
    const double s = eq.coupling();

    const double z = std::abs(p.a) + std::abs(p.b);
    const double e_floor = cfg.energy_bracket ? cfg.energy_bracket->first
                                              : -s * z * z / 4.0 - p.lambda * z - 1.0;
    const double e_ceiling = cfg.energy_bracket ? cfg.energy_bracket->second : eq.threshold();

    double r_max = auto_box ? 50.0 : cfg.r_max;
    std::optional<double> previous;
    for (int round = 0; round < 40; ++round) {
        const double step = cfg.step > 0.0 ? cfg.step : default_bound_step(r_max);
        const Box box = make_box(eq, r_max, step);
        auto above = [&](double e) { return sweep(eq, box.w, step, e, nullptr) > target; };

        if (!above(e_ceiling)) {
            if (auto_box && r_max < max_box) {
                r_max *= 2.0;
                continue;
            }
            throw Error(ErrorKind::BracketMiss, "no level with the requested node count below the bracket top");
        }
        double lo = e_floor;
        double hi = e_ceiling;
        if (previous) {
            // a larger box can only lower the level
            const double guess_lo = *previous - 0.05 * std::abs(*previous) - cfg.tolerance;
            if (guess_lo > lo && !above(guess_lo))
                lo = guess_lo;
            const double guess_hi = *previous + cfg.tolerance;
            if (guess_hi < hi && above(guess_hi))
                hi = guess_hi;
        }
        if (above(lo))
            throw Error(ErrorKind::BracketMiss, "bracket bottom already exceeds the requested node count");

        int iterations = 0;
        while (hi - lo > cfg.tolerance) {
            if (++iterations > cfg.max_iterations)
                throw Error(ErrorKind::NonConvergence, "bisection iteration cap exceeded");
            const double mid = 0.5 * (lo + hi);
            (above(mid) ? hi : lo) = mid;
        }
        const double energy = 0.5 * (lo + hi);

        bool settled = !auto_box;
        if (auto_box) {
            const double gap = eq.threshold() - energy;
            if (!(gap > 0.0))
                throw Error(ErrorKind::NonConvergence, "level is not below the continuum threshold");
            const double kappa = std::sqrt(s * gap);
            const double needed = turning_point(eq, box, energy) + 30.0 / kappa;
            if (needed > max_box)
                throw Error(ErrorKind::NonConvergence, "level too close to threshold for the box cap");
            settled = r_max >= needed;
            if (!settled)
                r_max = 1.05 * needed;
        }
        if (settled) {
            EigenResult res;
            res.entry.energy = energy;
            res.entry.variant = Variant::RadialHermitian;
            res.entry.qn = qn;
            res.entry.source = Source::Oracle;
            res.entry.status = BoundStatus::Bound;
            res.r_max = r_max;
            res.step = step;
            res.interior_nodes = sweep(eq, box.w, step, lo, nullptr);
            return res;
        }
        previous = energy;
    }
    throw Error(ErrorKind::NonConvergence, "box size did not settle");
}

SpectrumEntry numerov_eigen(const PotentialParams& p, QuantumNumbers qn, ApproxScheme scheme,
                            const SolverConfig& cfg)
{
    return numerov_eigen_detail(p, qn, scheme, cfg).entry;
}

PhaseFit numeric_phase_fit(const PotentialParams& p, double energy, int ell, ApproxScheme scheme,
                           const SolverConfig& cfg)
{
    if (!(energy > 0.0))
        throw Error(ErrorKind::Domain, "numeric_phase: energy must be positive");
    const RadialEquation eq(p, ell, scheme);
    const double s = eq.coupling();
    const double k_sq = s * (energy - eq.threshold());
    if (!(k_sq > 0.0))
        throw Error(ErrorKind::Evanescent, "numeric_phase: closed channel");
    const double k = std::sqrt(k_sq);
    const double wavelength = 2.0 * pi / k;

    const double r_max = cfg.r_max > 0.0 ? cfg.r_max
                                         : std::max(50.0, p.lambda > 0.0 ? 30.0 / p.lambda : 0.0);
    const double step = cfg.step > 0.0 ? cfg.step : std::min(0.005, wavelength / 200.0);
    const double window = 10.0 * wavelength;
    if (window > 0.5 * r_max)
        throw Error(ErrorKind::Domain, "numeric_phase: r_max too small for a ten-wavelength fit");

    const Trajectory t = integrate_regular(eq, energy, step, r_max);
    const std::size_t last = t.y.size() - 1;
    const auto first = static_cast<std::size_t>(std::ceil((r_max - window) / step));

    // least squares y ~ alpha sin(kr) + beta cos(kr)
    double ss = 0, sc = 0, cc = 0, ys = 0, yc = 0;
    for (std::size_t i = first; i <= last; ++i) {
        const double r = step * static_cast<double>(i);
        const double sn = std::sin(k * r), cs = std::cos(k * r);
        ss += sn * sn;
        sc += sn * cs;
        cc += cs * cs;
        ys += t.y[i] * sn;
        yc += t.y[i] * cs;
    }
    const double det = ss * cc - sc * sc;
    const double alpha = (ys * cc - yc * sc) / det;
    const double beta = (yc * ss - ys * sc) / det;

    double misfit = 0, norm = 0;
    for (std::size_t i = first; i <= last; ++i) {
        const double r = step * static_cast<double>(i);
        const double fit = alpha * std::sin(k * r) + beta * std::cos(k * r);
        misfit += (t.y[i] - fit) * (t.y[i] - fit);
        norm += fit * fit;
    }

    PhaseFit res;
    res.wavenumber = k;
    res.amplitude = std::hypot(alpha, beta);
    res.residual = std::sqrt(misfit / norm);
    if (!(res.residual <= 1e-2))
        throw Error(ErrorKind::FitResidual, "numeric_phase: asymptotic sine fit residual above 1e-2");
    res.delta = reduce_mod_pi(std::atan2(beta, alpha) + ell * pi / 2.0);
    return res;
}

double numeric_phase(const PotentialParams& p, double energy, int ell, ApproxScheme scheme,
                     const SolverConfig& cfg)
{
    return numeric_phase_fit(p, energy, ell, scheme, cfg).delta;
}

} // namespace hellmann
