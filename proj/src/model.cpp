#include "hellmann/model.hpp"

#include "hellmann/errors.hpp"
#include "hellmann/format.hpp"

#include <cmath>

namespace hellmann {

void PotentialParams::validate() const
{
    if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(lambda) || !std::isfinite(mass) ||
        !std::isfinite(hbar))
        throw Error(ErrorKind::Domain, "potential parameters must be finite");
    if (!(mass > 0.0))
        throw Error(ErrorKind::Domain, "mass must be positive");
    if (!(hbar > 0.0))
        throw Error(ErrorKind::Domain, "hbar must be positive");
    if (lambda < 0.0)
        throw Error(ErrorKind::Domain, "lambda must be nonnegative");
}

std::string_view to_string(Variant v)
{
    switch (v) {
    case Variant::RadialHermitian: return "radial";
    case Variant::CoulombLimit: return "coulomb";
    case Variant::PTSymmetric1D: return "pt1d";
    case Variant::NonHermitianPT: return "nhpt";
    case Variant::NonPTCase1: return "nonpt1";
    case Variant::NonPTCase2: return "nonpt2";
    }
    return "?";
}

std::optional<Variant> parse_variant(std::string_view name)
{
    for (Variant v : {Variant::RadialHermitian, Variant::CoulombLimit, Variant::PTSymmetric1D,
                      Variant::NonHermitianPT, Variant::NonPTCase1, Variant::NonPTCase2})
        if (to_string(v) == name)
            return v;
    return std::nullopt;
}

std::string_view to_string(ApproxScheme s)
{
    switch (s) {
    case ApproxScheme::ExactCentrifugal: return "exact";
    case ApproxScheme::PekerisCentrifugal: return "pekeris";
    case ApproxScheme::InverseXExp: return "inverse-x";
    }
    return "?";
}

std::optional<ApproxScheme> parse_scheme(std::string_view name)
{
    for (ApproxScheme s : {ApproxScheme::ExactCentrifugal, ApproxScheme::PekerisCentrifugal,
                           ApproxScheme::InverseXExp})
        if (to_string(s) == name)
            return s;
    return std::nullopt;
}

bool is_one_dimensional(Variant v)
{
    return v == Variant::PTSymmetric1D || v == Variant::NonHermitianPT || v == Variant::NonPTCase1 ||
           v == Variant::NonPTCase2;
}

double potential_radial(const PotentialParams& p, double r)
{
    if (!(r > 0.0))
        throw Error(ErrorKind::Domain, "potential_radial: r must be positive");
    return (-p.a + p.b * std::exp(-p.lambda * r)) / r;
}

double centrifugal_approx(double lambda, double r)
{
    if (!(r > 0.0))
        throw Error(ErrorKind::Domain, "centrifugal_approx: r must be positive");
    if (!(lambda > 0.0))
        throw Error(ErrorKind::Domain, "centrifugal_approx: lambda must be positive");
    const double d = -std::expm1(-lambda * r);
    return lambda * lambda / (d * d);
}

double inverse_x_approx(double lambda, double x)
{
    if (!(x > 0.0))
        throw Error(ErrorKind::Domain, "inverse_x_approx: x must be positive");
    if (!(lambda > 0.0))
        throw Error(ErrorKind::Domain, "inverse_x_approx: lambda must be positive");
    return lambda / -std::expm1(-lambda * x);
}

double potential_approx(const PotentialParams& p, double r)
{
    // (-a + b e^{-x}) lambda / (1 - e^{-x}) = -a lambda/(1-e^{-x}) + b lambda/(e^x - 1)
    const double x = p.lambda * r;
    return -p.a * inverse_x_approx(p.lambda, r) + p.b * p.lambda / std::expm1(x);
}

std::vector<ProfileRow> approx_profile(double lambda, double r_min, double r_max,
                                       std::size_t points, ApproxScheme scheme)
{
    if (!(r_min > 0.0) || !(r_max > r_min) || points < 2)
        throw Error(ErrorKind::Domain, "approx_profile: need 0 < r_min < r_max and points >= 2");
    if (scheme == ApproxScheme::ExactCentrifugal)
        throw Error(ErrorKind::Domain, "approx_profile: the exact scheme has nothing to compare");

    std::vector<ProfileRow> rows;
    rows.reserve(points);
    const double dr = (r_max - r_min) / static_cast<double>(points - 1);
    for (std::size_t i = 0; i < points; ++i) {
        const double r = i + 1 == points ? r_max : r_min + dr * static_cast<double>(i);
        ProfileRow row{r, 0.0, 0.0, 0.0};
        if (scheme == ApproxScheme::InverseXExp) {
            row.exact = 1.0 / r;
            row.approx = inverse_x_approx(lambda, r);
        } else {
            row.exact = 1.0 / (r * r);
            row.approx = centrifugal_approx(lambda, r);
        }
        row.rel_err = (row.approx - row.exact) / row.exact;
        rows.push_back(row);
    }
    return rows;
}

void write_profile_csv(std::ostream& os, std::span<const ProfileRow> rows)
{
    os << "r,exact,approx,rel_err\n";
    for (const auto& row : rows)
        os << format_number(row.r) << ',' << format_number(row.exact) << ','
           << format_number(row.approx) << ',' << format_number(row.rel_err) << '\n';
}

ComplexCoefficients variant_map(const PotentialParams& p, Variant v)
{
    const Complex i(0.0, 1.0);
    switch (v) {
    case Variant::NonHermitianPT: return {i * p.a, i * p.b, i * p.lambda};
    case Variant::NonPTCase1: return {p.a, p.b, i * p.lambda};
    case Variant::NonPTCase2: return {i * p.a, i * p.b, p.lambda};
    default: return {p.a, p.b, p.lambda};
    }
}

Complex potential_1d(const ComplexCoefficients& c, double x)
{
    if (x == 0.0)
        throw Error(ErrorKind::Domain, "potential_1d: x must be nonzero");
    return (-c.a + c.b * std::exp(-c.lambda * x)) / x;
}

} // namespace hellmann
