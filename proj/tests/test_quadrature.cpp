#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "ddcosmo/quadrature.hpp"

using namespace ddcosmo;

namespace {

std::vector<Complex> sample_circle(const PeriodicRule& rule,
                                   const std::function<Complex(double)>& f) {
    std::vector<Complex> v(static_cast<size_t>(rule.node_count));
    for (int k = 0; k < rule.node_count; ++k) v[static_cast<size_t>(k)] = f(rule.node(k));
    return v;
}

std::vector<Complex> sample_arc(const ArcRule& rule, const std::function<Complex(double)>& f) {
    std::vector<Complex> v(rule.size());
    for (size_t k = 0; k < rule.size(); ++k) v[k] = f(rule.nodes[k]);
    return v;
}

std::vector<Complex> sample_line(const LineRule& rule, const std::function<Complex(double)>& f) {
    std::vector<Complex> v(rule.size());
    for (size_t k = 0; k < rule.size(); ++k) v[k] = f(rule.nodes[k]);
    return v;
}

} // namespace

TEST_CASE("circle rule: circumference, orthogonality, cos^2") {
    const PeriodicRule rule(16);
    auto ones = sample_circle(rule, [](double) { return Complex{1.0, 0.0}; });
    CHECK(std::abs(integrate_circle(ones, rule, 2.0) - Complex(4 * pi, 0.0)) < 1e-13);

    auto mode3 = sample_circle(rule, [](double p) { return std::polar(1.0, 3.0 * p); });
    CHECK(std::abs(integrate_circle(mode3, rule, 1.0)) < 1e-14);

    // closed form: int cos^2 = pi on the unit circle
    const PeriodicRule rule8(8);
    auto cos2 = sample_circle(rule8, [](double p) { return Complex{std::cos(p) * std::cos(p), 0.0}; });
    CHECK(std::abs(integrate_circle(cos2, rule8, 1.0) - Complex(pi, 0.0)) < 1e-13);
}

TEST_CASE("circle rule reproduces Fourier orthogonality") {
    const int m = 32;
    const PeriodicRule rule(m);
    const double r = 1.7;
    for (int k = -5; k <= 5; ++k) {
        for (int l = -5; l <= 5; ++l) {
            auto f = sample_circle(rule, [&](double p) { return std::polar(1.0, (k - l) * p); });
            const Complex got = integrate_circle(f, rule, r);
            const Complex want = (k == l) ? Complex(2 * pi * r, 0.0) : Complex(0.0, 0.0);
            CHECK(std::abs(got - want) < 1e-13 * 2 * pi * r);
        }
    }
}

TEST_CASE("arc rule: arc length, antiderivative, Gauss exactness") {
    const double beta = 0.8, r = 1.3;
    const ArcRule rule({0.3, beta}, 8, 12);
    auto ones = sample_arc(rule, [](double) { return Complex{1.0, 0.0}; });
    CHECK(std::abs(integrate_arc(ones, rule, r) - Complex(2 * beta * r, 0.0)) < 1e-13);

    // int_0^pi sin = 2
    const ArcRule half({pi / 2, pi / 2}, 8, 12);
    auto sine = sample_arc(half, [](double p) { return Complex{std::sin(p), 0.0}; });
    CHECK(std::abs(integrate_arc(sine, half, 1.0) - Complex(2.0, 0.0)) < 1e-13);

    // monomial of degree 2q-1 on a single panel is integrated exactly
    const int q = 7;
    const ArcRule panel({0.5, 0.5}, 2, q); // two panels on [0, 1]
    const int degree = 2 * q - 1;
    auto mono = sample_arc(panel, [&](double p) { return Complex{std::pow(p, degree), 0.0}; });
    CHECK(std::abs(integrate_arc(mono, panel, 1.0) - Complex(1.0 / (degree + 1), 0.0)) < 1e-14);
}

TEST_CASE("line rule: kernel mass at theta = pi/2, odd symmetry, Gaussian") {
    const LineRule rule(40.0, 0.05);
    auto kernel = sample_line(rule, [](double t) {
        return Complex{std::sin(pi / 2) / (2 * pi * std::cosh(t)), 0.0};
    });
    CHECK(std::abs(integrate_line(kernel, rule) - Complex(0.5, 0.0)) < 1e-10);

    auto odd = sample_line(rule, [](double t) { return Complex{t * std::exp(-t * t / 9), 0.0}; });
    CHECK(std::abs(integrate_line(odd, rule)) == 0.0); // exact by node symmetry

    auto gaussian = sample_line(rule, [](double t) { return Complex{std::exp(-t * t), 0.0}; });
    CHECK(std::abs(integrate_line(gaussian, rule) - Complex(std::sqrt(pi), 0.0)) < 1e-12);
}

TEST_CASE("line rule weights sum to 2T and are symmetric") {
    const LineRule rule(40.0, 0.05);
    double sum = 0.0;
    for (double w : rule.weights) sum += w;
    CHECK(sum == doctest::Approx(80.0).epsilon(1e-12));
    const size_t n = rule.size();
    for (size_t k = 0; k < n; ++k) {
        CHECK(rule.nodes[k] == doctest::Approx(-rule.nodes[n - 1 - k]).epsilon(1e-14));
        CHECK(rule.weights[k] == doctest::Approx(rule.weights[n - 1 - k]).epsilon(1e-14));
    }
}

TEST_CASE("refinement never increases the error on a smooth battery") {
    // circle: e^{cos phi} has a known-free reference from a dense rule
    const auto f = [](double p) { return Complex{std::exp(std::cos(p)), 0.0}; };
    const PeriodicRule dense(4096);
    const Complex ref = integrate_circle(sample_circle(dense, f), dense, 1.0);
    double prev_err = 1e300;
    for (int m : {8, 16, 32, 64}) {
        const PeriodicRule rule(m);
        const double err = std::abs(integrate_circle(sample_circle(rule, f), rule, 1.0) - ref);
        CHECK(err <= prev_err + 1e-15);
        prev_err = err;
    }

    // arc: endpoint-singularity-free smooth integrand, doubling panels
    const auto g = [](double p) { return Complex{std::cos(3.0 * p) * std::exp(p), 0.0}; };
    const ArcRule fine({1.0, 1.0}, 32, 12);
    const Complex ref_arc = integrate_arc(sample_arc(fine, g), fine, 1.0);
    prev_err = 1e300;
    for (int panels : {2, 4, 8}) {
        const ArcRule rule({1.0, 1.0}, panels, 6);
        const double err = std::abs(integrate_arc(sample_arc(rule, g), rule, 1.0) - ref_arc);
        CHECK(err <= prev_err + 1e-15);
        prev_err = err;
    }

    // line: halving h on a decaying smooth function
    const auto h = [](double t) { return Complex{1.0 / std::cosh(t), 0.0}; };
    prev_err = 1e300;
    for (double spacing : {0.4, 0.2, 0.1}) {
        const LineRule rule(40.0, spacing);
        const double err = std::abs(integrate_line(sample_line(rule, h), rule) - Complex(pi, 0.0));
        CHECK(err <= prev_err + 1e-15);
        prev_err = err;
    }
}

TEST_CASE("profiles are resolvable by name and scale as expected") {
    CHECK(Profile::by_name("fast").name == "fast");
    CHECK(Profile::by_name("standard").circle_nodes(128) == 1024);
    CHECK(Profile::by_name("standard").circle_nodes(8) == 512);
    CHECK(Profile::by_name("paranoid").panels_per_arc > Profile::standard().panels_per_arc);
    CHECK_THROWS_AS(Profile::by_name("bogus"), ConfigError);
}

TEST_CASE("gauss nodes and weights match known 5-point values") {
    std::vector<double> x, w;
    gauss_legendre(5, x, w);
    CHECK(x[2] == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(x[4] == doctest::Approx(0.9061798459386640).epsilon(1e-14));
    CHECK(w[2] == doctest::Approx(0.5688888888888889).epsilon(1e-14));
    CHECK(w[4] == doctest::Approx(0.2369268850561891).epsilon(1e-14));
}
