#include "ddcosmo/strip.hpp"

#include <cmath>

#include "ddcosmo/errors.hpp"

namespace ddcosmo {

double poisson_kernel(double tau, double theta) {
    return std::sin(theta) / (2.0 * pi * (std::cosh(tau) - std::cos(theta)));
}

double poisson_kernel_tail(double s, double theta) {
    const double cot_half = 1.0 / std::tan(theta / 2.0);
    return (pi - theta) / (2.0 * pi) - std::atan(std::tanh(s / 2.0) * cot_half) / pi;
}

namespace {

double poisson_kernel_derivative(double tau, double theta) {
    const double den = std::cosh(tau) - std::cos(theta);
    return -std::sin(theta) * std::sinh(tau) / (2.0 * pi * den * den);
}

} // namespace

StripSample StripSample::from_function(double sigma, const LineRule& rule,
                                       const std::function<Complex(double)>& f,
                                       Complex tail_left, Complex tail_right) {
    StripSample s;
    s.sigma = sigma;
    s.rule = rule;
    s.values.resize(rule.size());
    for (size_t k = 0; k < rule.size(); ++k) s.values[k] = f(rule.nodes[k]);
    s.tail_left = tail_left;
    s.tail_right = tail_right;
    return s;
}

StripSample StripSample::constant(double sigma, const LineRule& rule, Complex value) {
    StripSample s;
    s.sigma = sigma;
    s.rule = rule;
    s.values.assign(rule.size(), value);
    s.tail_left = value;
    s.tail_right = value;
    return s;
}

namespace {

void ensure_same_rule(const StripSample& a, const StripSample& b) {
    if (!(a.rule == b.rule)) throw GridMismatch("strip samples live on different line rules");
}

} // namespace

StripSample convolve(const StripSample& g, double theta) {
    StripSample out;
    out.sigma = g.sigma + theta;
    out.rule = g.rule;
    out.values.assign(g.rule.size(), Complex{0.0, 0.0});
    const double mass = (pi - theta) / pi;
    out.tail_left = mass * g.tail_left;
    out.tail_right = mass * g.tail_right;

    const auto& nodes = g.rule.nodes;
    const auto& w = g.rule.weights;
    const double t = g.rule.truncation;
    const size_t n = g.rule.size();
    for (size_t k = 0; k < n; ++k) {
        const double tau = nodes[k];
        Complex acc{0.0, 0.0};
        for (size_t j = 0; j < n; ++j)
            acc += w[j] * poisson_kernel(tau - nodes[j], theta) * g.values[j];
        // Kernel arguments beyond the grid, where the source is taken to sit
        // at its tail limits: xi > tau + t (source at -inf) and xi < tau - t.
        // The h^2/12 terms are the Euler-Maclaurin seam corrections of the
        // trapezoid-plus-exact-tail splice.
        const double hh12 = g.rule.spacing * g.rule.spacing / 12.0;
        acc += g.tail_left * (poisson_kernel_tail(tau + t, theta) -
                              hh12 * poisson_kernel_derivative(tau + t, theta));
        acc += g.tail_right * (poisson_kernel_tail(t - tau, theta) +
                               hh12 * poisson_kernel_derivative(tau - t, theta));
        out.values[k] = acc;
    }
    return out;
}

double weighted_norm(const StripSample& g) {
    const double c = std::cos(g.sigma);
    double acc = 0.0;
    for (size_t k = 0; k < g.rule.size(); ++k)
        acc += g.rule.weights[k] * std::norm(g.values[k]) / (std::cosh(g.rule.nodes[k]) - c);
    return std::sqrt(acc);
}

Complex weighted_inner(const StripSample& u, const StripSample& v) {
    ensure_same_rule(u, v);
    if (u.sigma != v.sigma)
        throw GridMismatch("weighted inner product requires a common line height");
    const double c = std::cos(u.sigma);
    Complex acc{0.0, 0.0};
    for (size_t k = 0; k < u.rule.size(); ++k)
        acc += u.rule.weights[k] * std::conj(u.values[k]) * v.values[k] /
               (std::cosh(u.rule.nodes[k]) - c);
    return acc;
}

StripSample operator-(const StripSample& a, const StripSample& b) {
    ensure_same_rule(a, b);
    StripSample out = a;
    for (size_t k = 0; k < out.values.size(); ++k) out.values[k] -= b.values[k];
    out.tail_left -= b.tail_left;
    out.tail_right -= b.tail_right;
    return out;
}

StripSample operator*(Complex scale, const StripSample& a) {
    StripSample out = a;
    for (auto& v : out.values) v *= scale;
    out.tail_left *= scale;
    out.tail_right *= scale;
    return out;
}

StripSample weight_map(const StripSample& g, WeightDirection direction) {
    StripSample out = g;
    const double c = std::cos(g.sigma);
    for (size_t k = 0; k < g.rule.size(); ++k) {
        const double root = std::sqrt(std::cosh(g.rule.nodes[k]) - c);
        out.values[k] = direction == WeightDirection::forward ? g.values[k] / root
                                                              : g.values[k] * root;
    }
    // The weight diverges at infinity; mapped tails are only meaningful as 0.
    out.tail_left = Complex{0.0, 0.0};
    out.tail_right = Complex{0.0, 0.0};
    return out;
}

Complex symbol(Complex z, double theta) {
    const double a = pi - theta;
    if (std::abs(z) < 1e-4) {
        const Complex w = z * z;
        const Complex num = a + w * (a * a * a / 6.0 + w * (a * a * a * a * a / 120.0));
        const Complex den =
            pi + w * (pi * pi * pi / 6.0 + w * (pi * pi * pi * pi * pi / 120.0));
        return num / den;
    }
    return std::sinh(a * z) / std::sinh(pi * z);
}

Complex KernelSymbol::operator()(Complex z) const { return symbol(z, theta); }

HardySample HardySample::from_function(const LineRule& rule,
                                       const std::function<Complex(Complex)>& h) {
    HardySample s;
    s.rule = rule;
    s.upper.resize(rule.size());
    s.center.resize(rule.size());
    s.lower.resize(rule.size());
    for (size_t k = 0; k < rule.size(); ++k) {
        const double x = rule.nodes[k];
        s.upper[k] = h(Complex(x, 0.5));
        s.center[k] = h(Complex(x, 0.0));
        s.lower[k] = h(Complex(x, -0.5));
    }
    return s;
}

double hardy_norm(const HardySample& h, double sigma) {
    const double c = std::cos(sigma);
    double acc = 0.0;
    double scale = 0.0;
    for (size_t k = 0; k < h.rule.size(); ++k) {
        const double boundary = 0.5 * (std::norm(h.upper[k]) + std::norm(h.lower[k]));
        acc += h.rule.weights[k] * (boundary - c * std::norm(h.center[k]));
        scale += h.rule.weights[k] * (boundary + std::abs(c) * std::norm(h.center[k]));
    }
    acc /= 2.0 * pi;
    scale /= 2.0 * pi;
    if (acc < -1e-12 * std::max(scale, 1.0))
        throw NegativeNorm("three-line samples are not Hardy-consistent");
    return std::sqrt(std::max(acc, 0.0));
}

Complex hardy_inner(const HardySample& u, const HardySample& v, double sigma) {
    if (!(u.rule == v.rule)) throw GridMismatch("Hardy samples live on different line rules");
    const double c = std::cos(sigma);
    Complex acc{0.0, 0.0};
    for (size_t k = 0; k < u.rule.size(); ++k) {
        const Complex boundary = 0.5 * (std::conj(u.upper[k]) * v.upper[k] +
                                        std::conj(u.lower[k]) * v.lower[k]);
        acc += u.rule.weights[k] * (boundary - c * std::conj(u.center[k]) * v.center[k]);
    }
    return acc / (2.0 * pi);
}

} // namespace ddcosmo
