#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ddcosmo/disk_harmonic.hpp"

using namespace ddcosmo;

namespace {

std::vector<Complex> sample_circle(const PeriodicRule& rule,
                                   const std::function<Complex(double)>& f) {
    std::vector<Complex> v(static_cast<size_t>(rule.node_count));
    for (int k = 0; k < rule.node_count; ++k) v[static_cast<size_t>(k)] = f(rule.node(k));
    return v;
}

TraceFunction random_trace(int bandwidth, const Disk& d, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    TraceFunction t = TraceFunction::zero(1, d, bandwidth);
    for (int l = -bandwidth; l <= bandwidth; ++l)
        t.coeff(l) = Complex(gauss(rng), gauss(rng)) / (1.0 + std::abs(l));
    return t;
}

} // namespace

TEST_CASE("fourier coefficients pick out single modes and constants") {
    const Disk d{Point(0.2, -0.4), 1.5};
    const PeriodicRule rule(64);
    {
        auto g = sample_circle(rule, [](double p) { return std::polar(1.0, 2.0 * p); });
        const TraceFunction t = fourier_coefficients(g, rule, 1, d, 4);
        for (int l = -4; l <= 4; ++l) {
            const Complex want = (l == 2) ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
            CHECK(std::abs(t.coeff(l) - want) < 1e-13);
        }
        CHECK(!t.alias_risk);
    }
    {
        auto g = sample_circle(rule, [](double) { return Complex{5.0, 0.0}; });
        const TraceFunction t = fourier_coefficients(g, rule, 1, d, 4);
        CHECK(std::abs(t.coeff(0) - Complex(5.0, 0.0)) < 1e-14);
        for (int l = 1; l <= 4; ++l) {
            CHECK(std::abs(t.coeff(l)) < 1e-14);
            CHECK(std::abs(t.coeff(-l)) < 1e-14);
        }
    }
}

TEST_CASE("coefficients of an arc indicator match the closed form") {
    const Disk d{Point(0.0, 0.0), 1.0};
    const double beta = 0.7, offset = 0.9;
    const PeriodicRule rule(16384); // trapezoid on a jump converges like 1/M
    auto g = sample_circle(rule, [&](double p) {
        const double dphi = std::remainder(p - offset, 2 * pi);
        return std::abs(dphi) < beta ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
    });
    const TraceFunction t = fourier_coefficients(g, rule, 1, d, 8);
    CHECK(std::abs(t.coeff(0) - Complex(beta / pi, 0.0)) < 1e-3);
    for (int l = 1; l <= 8; ++l) {
        const Complex want = std::polar(1.0, -l * offset) * (std::sin(l * beta) / (pi * l));
        CHECK(std::abs(t.coeff(l) - want) < 1e-3);
    }
}

TEST_CASE("alias risk flag trips when M <= 2L") {
    const Disk d{Point(0.0, 0.0), 1.0};
    const PeriodicRule rule(16);
    auto g = sample_circle(rule, [](double) { return Complex{1.0, 0.0}; });
    CHECK(fourier_coefficients(g, rule, 1, d, 8).alias_risk);
    CHECK(!fourier_coefficients(g, rule, 1, d, 7).alias_risk);
}

TEST_CASE("truncated extension: mean value, identity map, boundary synthesis") {
    const Disk d{Point(0.0, 0.0), 1.0};
    TraceFunction ones = TraceFunction::constant(1, d, 6, Complex{1.0, 0.0});
    CHECK(std::abs(truncated_extension(ones, Point(0.3, -0.2)) - Complex(1.0, 0.0)) < 1e-15);

    TraceFunction z = TraceFunction::zero(1, d, 3);
    z.coeff(1) = 1.0; // boundary data e^{i phi}; extension is x + i y
    const Point p{0.4, 0.1};
    CHECK(std::abs(truncated_extension(z, p) - Complex(0.4, 0.1)) < 1e-15);

    CHECK_THROWS_AS(truncated_extension(z, Point(1.2, 0.0)), OutsideDisk);

    const TraceFunction t = random_trace(12, d, 5);
    CHECK(std::abs(truncated_extension(t, d.boundary_point(0.83)) - t.boundary_value(0.83)) <
          1e-13);
}

TEST_CASE("poisson integral: constant data, mean value at center") {
    const Disk d{Point(1.0, 2.0), 2.0};
    const PeriodicRule rule(256);
    auto g = sample_circle(rule, [](double) { return Complex{1.0, 0.0}; });
    bool warn = false;
    CHECK(std::abs(poisson_integral(g, rule, d, Point(1.9, 2.6), &warn) - Complex(1.0, 0.0)) <
          1e-12);
    CHECK(!warn);

    auto h = sample_circle(rule, [](double p) { return std::polar(1.0, p) + Complex{0.25, 0.0}; });
    CHECK(std::abs(poisson_integral(h, rule, d, d.center) - Complex(0.25, 0.0)) < 1e-13);

    CHECK_THROWS_AS(poisson_integral(g, rule, d, Point(3.5, 2.0)), OutsideDisk);
    poisson_integral(g, rule, d, Point(2.95, 2.0), &warn);
    CHECK(warn); // within 10 node spacings of the boundary
}

TEST_CASE("oracle equivalence: poisson integral vs truncated extension") {
    const Disk d{Point(-0.3, 0.5), 1.3};
    const PeriodicRule rule(512);
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> param(0.0, 1.0);
    for (int trial = 0; trial < 8; ++trial) {
        TraceFunction t = random_trace(32, d, 100 + trial);
        t.disk = d;
        auto g = sample_circle(rule, [&](double p) { return t.boundary_value(p); });
        for (int pt = 0; pt < 12; ++pt) {
            const double rho = 0.9 * param(rng);
            const Point x = d.center + d.radius * rho * std::polar(1.0, 2 * pi * param(rng));
            const Complex via_kernel = poisson_integral(g, rule, d, x);
            const Complex via_poly = truncated_extension(t, x);
            CHECK(std::abs(via_kernel - via_poly) < 1e-9 * t.norm());
        }
    }

    // single mode: extension is rho^l e^{i l phi}
    TraceFunction mode = TraceFunction::zero(1, d, 5);
    mode.coeff(3) = 1.0;
    auto gm = sample_circle(rule, [&](double p) { return mode.boundary_value(p); });
    const Point x = d.center + d.radius * 0.6 * std::polar(1.0, 1.1);
    const Complex want = std::pow(0.6, 3) * std::polar(1.0, 3 * 1.1);
    CHECK(std::abs(poisson_integral(gm, rule, d, x) - want) < 1e-12);
    CHECK(std::abs(truncated_extension(mode, x) - want) < 1e-15);
}

TEST_CASE("Parseval: quadrature norm matches coefficient norm spectrally") {
    const Disk d{Point(0.0, 0.0), 0.8};
    TraceFunction t = random_trace(16, d, 42);
    t.disk = d;
    double prev_gap = 1e300;
    for (int m : {64, 128, 256}) {
        const PeriodicRule rule(m);
        auto g = sample_circle(rule, [&](double p) { return t.boundary_value(p); });
        double quad = 0.0;
        for (const Complex& v : g) quad += std::norm(v);
        quad *= rule.weight() * d.radius;
        const double gap = std::abs(quad - t.norm() * t.norm());
        CHECK(gap <= prev_gap + 1e-12);
        prev_gap = gap;
    }
    CHECK(prev_gap < 1e-12);
}

TEST_CASE("maximum principle sanity for real data") {
    const Disk d{Point(0.3, 0.3), 1.1};
    const PeriodicRule rule(512);
    auto g = sample_circle(rule, [](double p) {
        return Complex{std::cos(3 * p) + 0.5 * std::sin(p) - 0.2, 0.0};
    });
    double lo = 1e300, hi = -1e300;
    for (const Complex& v : g) {
        lo = std::min(lo, v.real());
        hi = std::max(hi, v.real());
    }
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> param(0.0, 1.0);
    for (int pt = 0; pt < 200; ++pt) {
        const Point x = d.center + d.radius * 0.95 * param(rng) * std::polar(1.0, 2 * pi * param(rng));
        const Complex u = poisson_integral(g, rule, d, x);
        CHECK(u.real() >= lo - 1e-10);
        CHECK(u.real() <= hi + 1e-10);
        CHECK(std::abs(u.imag()) < 1e-10);
    }
}

TEST_CASE("norm identity when both representations are present") {
    const Disk d{Point(0.0, 0.0), 2.2};
    const PeriodicRule rule(128);
    TraceFunction t = random_trace(10, d, 77);
    t.disk = d;
    auto g = sample_circle(rule, [&](double p) { return t.boundary_value(p); });
    const TraceFunction back = fourier_coefficients(g, rule, 1, d, 10);
    CHECK((back.coefficients - t.coefficients).norm() < 1e-12);
    // synthesis at the sample nodes agrees with the stored samples
    for (int k = 0; k < rule.node_count; ++k)
        CHECK(std::abs(back.boundary_value(rule.node(k)) - (*back.samples)[static_cast<size_t>(k)]) <
              1e-10);
    // product norm of a pair
    GlobalTrace pair{t, t};
    CHECK(pair.norm() == doctest::Approx(std::sqrt(2.0) * t.norm()).epsilon(1e-13));
}
