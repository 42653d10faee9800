#include <doctest.h>

#include "hellmann/errors.hpp"
#include "hellmann/specfun.hpp"

#include <boost/math/special_functions/beta.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/special_functions/hypergeometric_pFq.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include <cmath>
#include <numbers>
#include <vector>

using namespace hellmann;
using namespace hellmann::specfun;

namespace {

constexpr double pi = std::numbers::pi;

double rel(Complex x, Complex ref)
{
    return std::abs(x - ref) / std::abs(ref);
}

struct BruteSum {
    Complex value;
    double magnitude; // sum of |terms|, the conditioning scale
};

// Finite 2F1(-n, b; c; z) as a plain term-by-term sum in arithmetic T.
template <class T>
BruteSum brute_terminating(unsigned n, Complex b, Complex c, Complex z)
{
    T term(1), sum(1);
    double magnitude = 1.0;
    const T bb(b.real(), b.imag()), cc(c.real(), c.imag()), zz(z.real(), z.imag());
    for (unsigned k = 0; k < n; ++k) {
        term *= (T(-static_cast<double>(n)) + T(k)) * (bb + T(k)) / ((cc + T(k)) * T(k + 1)) * zz;
        sum += term;
        magnitude += static_cast<double>(abs(term));
    }
    return {{static_cast<double>(sum.real()), static_cast<double>(sum.imag())}, magnitude};
}

using mp_complex = boost::multiprecision::cpp_complex_50;

const std::vector<Complex> gamma_points{{0.3, 0.0},  {1.7, 0.0},  {0.25, 0.5}, {2.5, -3.0},
                                        {-1.5, 0.7}, {-3.2, 0.1}, {0.5, 10.0}, {4.0, 25.0},
                                        {0.1, -0.2}, {7.3, 1.1},  {-0.5, 0.0}, {12.0, 0.0}};

} // namespace

TEST_CASE("log_gamma matches Boost lgamma on the positive axis")
{
    for (double x : {0.1, 0.5, 1.0, 2.5, 7.3, 14.9, 15.1, 30.0, 171.3}) {
        const Complex lg = log_gamma(x);
        CHECK(std::abs(lg.real() - boost::math::lgamma(x)) <= 1e-14 * std::max(1.0, std::abs(lg.real())));
        CHECK(lg.imag() == doctest::Approx(0.0));
    }
}

TEST_CASE("gamma at known complex points")
{
    const Complex gi(-0.15494982830181068512, -0.49801566811835604271);
    CHECK(rel(gamma(Complex(0, 1)), gi) < 1e-14);
    CHECK(rel(gamma(Complex(1, 1)), Complex(0, 1) * gi) < 1e-14);
    CHECK(rel(gamma(Complex(0.5)), std::sqrt(pi)) < 1e-14);
    CHECK(rel(gamma(Complex(-0.5)), -2.0 * std::sqrt(pi)) < 1e-14);
    for (double y : {0.3, 1.0, 2.0, 5.0}) {
        const double mod2 = pi / (y * std::sinh(pi * y));
        CHECK(std::abs(std::norm(gamma(Complex(0, y))) - mod2) / mod2 < 1e-13);
    }
}

TEST_CASE("gamma reflection and recurrence")
{
    for (Complex z : gamma_points) {
        if (nonpositive_integer(z) || nonpositive_integer(1.0 - z))
            continue;
        const Complex lhs = gamma(z) * gamma(1.0 - z);
        const Complex rhs = pi / std::sin(pi * z);
        CHECK(rel(lhs, rhs) < 1e-10);
        CHECK(rel(gamma(z + 1.0), z * gamma(z)) < 1e-12);
    }
}

TEST_CASE("log_gamma imaginary part is continuous along vertical lines")
{
    for (double x : {0.0, 0.5, 1.5, 4.0}) {
        double prev = log_gamma(Complex(x + 1e-3, 0.05)).imag();
        for (double t = 0.1; t <= 60.0; t += 0.05) {
            const double cur = log_gamma(Complex(x + 1e-3, t)).imag();
            CHECK(std::abs(cur - prev) < 0.5);
            prev = cur;
        }
    }
    // Stirling: Im lnG(1/2 + it) ~ t ln t - t for large t
    const double t = 200.0;
    const double approx = t * std::log(t) - t;
    CHECK(std::abs(log_gamma(Complex(0.5, t)).imag() - approx) < 1e-3);
}

TEST_CASE("poles")
{
    CHECK_THROWS_AS(log_gamma(0.0), Error);
    CHECK_THROWS_AS(gamma(Complex(-2.0)), Error);
    CHECK(std::abs(rgamma(Complex(-3.0))) == 0.0);
    CHECK(rel(rgamma(Complex(2.5, 1.0)) * gamma(Complex(2.5, 1.0)), 1.0) < 1e-14);
    try {
        log_gamma(-4.0);
        FAIL("expected a pole");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Pole);
    }
}

TEST_CASE("pochhammer")
{
    CHECK(pochhammer(Complex(3.7, 1.0), 0) == Complex(1.0));
    CHECK(std::abs(pochhammer(-3.0, 4)) == 0.0);
    CHECK(pochhammer(1.0, 5).real() == doctest::Approx(120.0).epsilon(1e-15));
    for (Complex x : {Complex(0.3, 0.2), Complex(2.5, -1.0), Complex(-2.5, 0.5)})
        for (unsigned k : {1u, 3u, 7u})
            CHECK(rel(pochhammer(x, k), gamma(x + double(k)) / gamma(x)) < 1e-12);
}

TEST_CASE("nonpositive_integer")
{
    CHECK(nonpositive_integer(0.0) == 0u);
    CHECK(nonpositive_integer(-3.0) == 3u);
    CHECK(nonpositive_integer(Complex(-3.0, 1e-14)) == 3u);
    CHECK_FALSE(nonpositive_integer(1.0));
    CHECK_FALSE(nonpositive_integer(-2.5));
    CHECK_FALSE(nonpositive_integer(Complex(-2.0, 1e-6)));
}

TEST_CASE("terminating 2F1 equals the 50-digit finite sum")
{
    const std::vector<Complex> bs{{0.5, 0.0}, {3.2, 1.0}, {-0.7, 2.0}, {12.0, 0.0}};
    const std::vector<Complex> cs{{1.5, 0.0}, {2.2, -0.5}, {7.0, 3.0}};
    const std::vector<Complex> zs{{0.3, 0.0}, {0.95, 0.0}, {-0.8, 0.2}, {0.4, 0.6}, {1.7, 0.0}};
    for (unsigned n : {0u, 1u, 2u, 4u, 7u})
        for (Complex b : bs)
            for (Complex c : cs)
                for (Complex z : zs) {
                    const Complex got = gauss_2f1({-double(n), b, c}, z);
                    const BruteSum plain = brute_terminating<Complex>(n, b, c, z);
                    CHECK(std::abs(got - plain.value) <= 1e-14 * std::max(1.0, std::abs(plain.value)));
                    const BruteSum exact = brute_terminating<mp_complex>(n, b, c, z);
                    CHECK(std::abs(got - exact.value) <= 1e-14 * exact.magnitude);
                }
}

TEST_CASE("2F1 elementary closed forms")
{
    for (Complex z : {Complex(0.3), Complex(-0.5), Complex(0.8), Complex(0.97), Complex(0.3, 0.4)}) {
        CHECK(rel(gauss_2f1({1.0, 1.0, 2.0}, z), -std::log(1.0 - z) / z) < 1e-13);
        CHECK(rel(gauss_2f1({Complex(0.7, 0.2), 2.5, 2.5}, z), std::pow(1.0 - z, -Complex(0.7, 0.2))) < 1e-13);
        const Complex w = std::sqrt(z);
        CHECK(rel(gauss_2f1({0.5, 1.0, 1.5}, z), std::atanh(w) / w) < 1e-13);
    }
    CHECK(gauss_2f1({2.0, 3.0, 4.0}, 0.0) == Complex(1.0));
}

TEST_CASE("2F1 agrees with Boost pFq near z = 1")
{
    for (double z : {0.5, 0.76, 0.9, 0.99})
        for (auto [a, b, c] : {std::array{0.3, 0.6, 1.7}, std::array{1.2, -0.4, 2.5}, std::array{0.5, 0.5, 2.3}}) {
            const double ref = boost::math::hypergeometric_pFq({a, b}, {c}, z);
            CHECK(std::abs(gauss_2f1({a, b, c}, z).real() - ref) <= 1e-12 * std::abs(ref));
        }
}

TEST_CASE("2F1 parameter-swap symmetry")
{
    const std::vector<Complex> as{{0.3, 0.0}, {1.5, 2.0}, {-2.0, 0.0}, {0.2, -0.7}};
    const std::vector<Complex> zs{{0.2, 0.0}, {0.8, 0.0}, {0.95, 0.0}, {-0.6, 0.3}, {0.1, 0.5}};
    for (Complex a : as)
        for (Complex b : as)
            for (Complex z : zs) {
                const HyperTriple p{a, b, Complex(2.7, 0.4)};
                const Complex f = gauss_2f1(p, z);
                const Complex g = gauss_2f1({b, a, p.c}, z);
                CHECK(std::abs(f - g) <= 1e-13 * std::max(1.0, std::abs(f)));
            }
}

TEST_CASE("2F1 errors")
{
    CHECK_THROWS_AS(gauss_2f1({0.5, 0.5, 1.5}, 1.5), Error);
    CHECK_THROWS_AS(gauss_2f1({0.5, 0.5, -2.0}, 0.3), Error);
    // terminating before the lower pole is reached is fine
    CHECK(rel(gauss_2f1({-1.0, 1.0, -3.0}, 0.5), 1.0 + 0.5 / 3.0) < 1e-15);
}

TEST_CASE("terminating 2F1 in powers of 1 - z")
{
    for (unsigned n : {0u, 1u, 3u, 5u})
        for (Complex b : {Complex(2.5), Complex(6.0, 1.0)})
            for (Complex c : {Complex(3.5), Complex(1.5, -0.5)})
                for (double z : {0.1, 0.6, 0.99}) {
                    const auto near = terminating_2f1_near_one(n, b, c, z);
                    REQUIRE(near);
                    const Complex ref = brute_terminating<mp_complex>(n, b, c, z).value;
                    CHECK(std::abs(*near - ref) <= 1e-12 * std::max(1.0, std::abs(ref)));
                }
}

TEST_CASE("terminating 3F2 at unit argument satisfies Saalschutz")
{
    for (unsigned n : {0u, 1u, 2u, 5u})
        for (double a : {0.5, 2.3})
            for (double b : {1.25, -0.4})
                for (double c : {3.1, 6.0}) {
                    const double d = 1.0 + a + b - c - n;
                    const Complex got = f3f2_unit(a, -double(n), b, c, d);
                    const Complex ref = pochhammer(c - a, n) * pochhammer(c - b, n) /
                                        (pochhammer(c, n) * pochhammer(c - a - b, n));
                    CHECK(std::abs(got - ref) <= 1e-12 * std::max(1.0, std::abs(ref)));
                }
    CHECK_THROWS_AS(f3f2_unit(0.5, 0.3, 0.2, 2.0, 3.0), Error);
}

TEST_CASE("beta")
{
    for (double x : {0.5, 1.0, 3.3, 40.0})
        for (double y : {0.25, 2.0, 11.5})
            CHECK(std::abs(beta(x, y) - boost::math::beta(x, y)) <= 1e-13 * boost::math::beta(x, y));
}
