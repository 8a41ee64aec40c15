#pragma once

#include <functional>
#include <vector>

#include "ddcosmo/quadrature.hpp"

namespace ddcosmo {

/// Poisson kernel of the infinite strip, (1/2pi) sin(theta)/(cosh(tau)-cos(theta)).
double poisson_kernel(double tau, double theta);

/// Tail mass of the kernel, \int_s^inf P_theta. The antiderivative is
/// (1/pi) atan(tanh(tau/2) cot(theta/2)), total mass (pi-theta)/pi.
double poisson_kernel_tail(double s, double theta);

/// Values of a function of tau on a truncated line grid, labeled with the
/// height sigma of the line it lives on (membership in the weighted space).
/// tail_left/tail_right are the limits at -/+ infinity; convolutions use them
/// to account analytically for mass beyond the truncation.
struct StripSample {
    double sigma = 0.0; // in (0, 2*pi)
    LineRule rule{40.0, 0.05};
    std::vector<Complex> values;
    Complex tail_left{0.0, 0.0};
    Complex tail_right{0.0, 0.0};

    static StripSample from_function(double sigma, const LineRule& rule,
                                     const std::function<Complex(double)>& f,
                                     Complex tail_left = {0.0, 0.0},
                                     Complex tail_right = {0.0, 0.0});
    static StripSample constant(double sigma, const LineRule& rule, Complex value);
};

/// Convolution with the strip Poisson kernel: maps data on the line at sigma
/// to data on the line at sigma + theta. Direct O(N^2) quadrature.
StripSample convolve(const StripSample& g, double theta);

/// Norm of the weighted space on the line at g.sigma:
/// sqrt( \int |g|^2 / (cosh(tau) - cos(sigma)) dtau ).
double weighted_norm(const StripSample& g);

/// Weighted inner product <u, v> (first argument conjugated) on the line at
/// u.sigma. Throws GridMismatch when the rules or heights differ.
Complex weighted_inner(const StripSample& u, const StripSample& v);

StripSample operator-(const StripSample& a, const StripSample& b);
StripSample operator*(Complex scale, const StripSample& a);

enum class WeightDirection { forward, inverse };

/// Pointwise multiply (forward) or divide (inverse) by
/// sqrt(cosh(tau) - cos(sigma)); forward maps the weighted space
/// isometrically into plain L2(R).
StripSample weight_map(const StripSample& g, WeightDirection direction);

struct KernelSymbol {
    double theta; // in (0, pi)
    Complex operator()(Complex z) const;
};

/// Fourier symbol of the Poisson kernel, sinh((pi-theta) z)/sinh(pi z),
/// defined on the closed dual strip |Im z| <= 1/2. The removable singularity
/// at 0 (value (pi-theta)/pi) is evaluated by the degree-5 Taylor quotient
/// for |z| < 1e-4, where the naive quotient loses ~8 digits.
Complex symbol(Complex z, double theta);

/// Holomorphic function represented by its values on the three lines
/// Im z = 1/2, 0, -1/2 over a common grid of real parts.
struct HardySample {
    LineRule rule{40.0, 0.05};
    std::vector<Complex> upper;  // h(x + i/2)
    std::vector<Complex> center; // h(x)
    std::vector<Complex> lower;  // h(x - i/2)

    static HardySample from_function(const LineRule& rule,
                                     const std::function<Complex(Complex)>& h);
};

/// The sigma-dependent norm on the Hardy space of the dual strip:
/// sqrt( (1/2pi) \int (|h_{1/2}|^2 + |h_{-1/2}|^2)/2 - cos(sigma) |h_0|^2 dx ).
/// Throws NegativeNorm when the integral comes out negative, which cannot
/// happen for consistent samples of a genuine Hardy-class function.
double hardy_norm(const HardySample& h, double sigma);

/// Inner product associated with hardy_norm, first argument conjugated.
Complex hardy_inner(const HardySample& u, const HardySample& v, double sigma);

} // namespace ddcosmo
