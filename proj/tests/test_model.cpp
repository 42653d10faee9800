#include <doctest.h>

#include "hellmann/errors.hpp"
#include "hellmann/model.hpp"

#include <cmath>
#include <limits>
#include <sstream>

using namespace hellmann;

namespace {

ErrorKind kind_of(auto&& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error thrown");
    return ErrorKind::Domain;
}

} // namespace

TEST_CASE("parameter validation")
{
    PotentialParams p{1.0, 0.5, 0.01};
    CHECK_NOTHROW(p.validate());
    CHECK(p.coupling() == 2.0);
    for (auto bad : {PotentialParams{1, 0.5, -0.1}, PotentialParams{1, 0.5, 0.1, 0.0},
                     PotentialParams{1, 0.5, 0.1, 1.0, -1.0},
                     PotentialParams{std::numeric_limits<double>::quiet_NaN(), 0, 0.1},
                     PotentialParams{1, std::numeric_limits<double>::infinity(), 0.1}})
        CHECK(kind_of([&] { bad.validate(); }) == ErrorKind::Domain);
    CHECK(PotentialParams{1, 0, 0, 2.0, 0.5}.coupling() == doctest::Approx(16.0));
}

TEST_CASE("potential values")
{
    const PotentialParams p{1.0, 0.5, 0.2};
    for (double r : {0.01, 0.5, 3.0, 40.0})
        CHECK(potential_radial(p, r) == doctest::Approx((-1.0 + 0.5 * std::exp(-0.2 * r)) / r).epsilon(1e-15));
    CHECK(kind_of([&] { potential_radial(p, 0.0); }) == ErrorKind::Domain);
    // the approximated potential keeps the exact Coulomb-like singular part
    for (double r : {1e-4, 1e-3})
        CHECK(std::abs(potential_approx(p, r) - potential_radial(p, r)) < 0.2);
    // and tends to -a lambda at large r
    CHECK(potential_approx(p, 400.0) == doctest::Approx(-0.2).epsilon(1e-12));
}

TEST_CASE("centrifugal approximation error stays between x and x(1 + x/2) below x = 0.1")
{
    for (double lambda : {0.001, 0.01, 0.1})
        for (double r = 0.01; lambda * r < 0.1; r *= 1.7) {
            const double x = lambda * r;
            const double err = centrifugal_approx(lambda, r) * r * r - 1.0;
            CHECK(err >= x * (1.0 - 1e-9));
            CHECK(err <= x * (1.0 + x / 2.0));
        }
    CHECK(kind_of([] { centrifugal_approx(0.0, 1.0); }) == ErrorKind::Domain);
}

TEST_CASE("inverse-x approximation error stays between x/2 and x/2 + x^2/12")
{
    for (double lambda : {0.01, 0.1, 1.0})
        for (double x = 1e-3; lambda * x < 0.5; x *= 1.5) {
            const double t = lambda * x;
            const double err = inverse_x_approx(lambda, x) * x - 1.0;
            CHECK(err >= t / 2.0 * (1.0 - 1e-9));
            CHECK(err <= t / 2.0 + t * t / 12.0 + 1e-15);
        }
    CHECK(kind_of([] { inverse_x_approx(0.1, -1.0); }) == ErrorKind::Domain);
}

TEST_CASE("approx_profile tabulates an even grid and is monotone")
{
    const auto rows = approx_profile(0.1, 0.5, 10.0, 20, ApproxScheme::InverseXExp);
    REQUIRE(rows.size() == 20);
    CHECK(rows.front().r == 0.5);
    CHECK(rows.back().r == doctest::Approx(10.0));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].exact == doctest::Approx(1.0 / rows[i].r));
        CHECK(rows[i].rel_err == doctest::Approx((rows[i].approx - rows[i].exact) / rows[i].exact));
        CHECK(rows[i].approx > rows[i].exact);
        if (i > 0)
            CHECK(rows[i].rel_err > rows[i - 1].rel_err);
    }
    const auto cent = approx_profile(0.1, 0.5, 10.0, 5, ApproxScheme::PekerisCentrifugal);
    CHECK(cent[2].exact == doctest::Approx(1.0 / (cent[2].r * cent[2].r)));

    CHECK(kind_of([] { approx_profile(0.1, 1.0, 1.0, 5, ApproxScheme::InverseXExp); }) == ErrorKind::Domain);
    CHECK(kind_of([] { approx_profile(0.1, 2.0, 1.0, 5, ApproxScheme::InverseXExp); }) == ErrorKind::Domain);
    CHECK(kind_of([] { approx_profile(0.1, 0.0, 1.0, 5, ApproxScheme::InverseXExp); }) == ErrorKind::Domain);
    CHECK(kind_of([] { approx_profile(0.1, 0.5, 1.0, 1, ApproxScheme::InverseXExp); }) == ErrorKind::Domain);
    CHECK(kind_of([] { approx_profile(0.1, 0.5, 1.0, 5, ApproxScheme::ExactCentrifugal); }) == ErrorKind::Domain);
}

TEST_CASE("profile CSV")
{
    std::ostringstream os;
    write_profile_csv(os, approx_profile(0.5, 1.0, 2.0, 2, ApproxScheme::InverseXExp));
    std::istringstream in(os.str());
    std::string header, first;
    std::getline(in, header);
    std::getline(in, first);
    CHECK(header == "r,exact,approx,rel_err");
    CHECK(first.rfind("1,1,", 0) == 0);
}

TEST_CASE("names round-trip")
{
    for (Variant v : {Variant::RadialHermitian, Variant::CoulombLimit, Variant::PTSymmetric1D,
                      Variant::NonHermitianPT, Variant::NonPTCase1, Variant::NonPTCase2})
        CHECK(parse_variant(to_string(v)) == v);
    for (ApproxScheme s : {ApproxScheme::ExactCentrifugal, ApproxScheme::PekerisCentrifugal, ApproxScheme::InverseXExp})
        CHECK(parse_scheme(to_string(s)) == s);
    CHECK_FALSE(parse_variant("hydrogen"));
    CHECK_FALSE(parse_scheme(""));
    CHECK(is_one_dimensional(Variant::PTSymmetric1D));
    CHECK_FALSE(is_one_dimensional(Variant::RadialHermitian));
    CHECK_FALSE(is_one_dimensional(Variant::CoulombLimit));
}

TEST_CASE("variant substitutions")
{
    const PotentialParams p{1.0, 0.5, 0.2};
    const Complex i(0, 1);
    auto same = [](const ComplexCoefficients& c, Complex a, Complex b, Complex l) {
        return c.a == a && c.b == b && c.lambda == l;
    };
    CHECK(same(variant_map(p, Variant::RadialHermitian), 1.0, 0.5, 0.2));
    CHECK(same(variant_map(p, Variant::PTSymmetric1D), 1.0, 0.5, 0.2));
    CHECK(same(variant_map(p, Variant::NonHermitianPT), i, 0.5 * i, 0.2 * i));
    CHECK(same(variant_map(p, Variant::NonPTCase1), 1.0, 0.5, 0.2 * i));
    CHECK(same(variant_map(p, Variant::NonPTCase2), i, 0.5 * i, 0.2));

    // PT symmetry of the non-Hermitian potential: V(-x)* = V(x)
    const auto c = variant_map(p, Variant::NonHermitianPT);
    for (double x : {0.3, 1.0, 4.0})
        CHECK(std::abs(std::conj(potential_1d(c, -x)) - potential_1d(c, x)) < 1e-14);
    CHECK(std::abs(potential_1d(variant_map(p, Variant::PTSymmetric1D), 2.0) - potential_radial(p, 2.0)) < 1e-15);
    CHECK(kind_of([&] { potential_1d(c, 0.0); }) == ErrorKind::Domain);
}
