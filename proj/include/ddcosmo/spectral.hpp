#pragma once

#include <array>

#include "ddcosmo/dtd.hpp"

namespace ddcosmo {

/// Closed-form reference quantities for a two-disk geometry: the spectral
/// radius and rate, the numerical-radius envelope f with its ingredients
/// g, alpha, h, and the bound intervals for the operator-norm statements.
struct TheoryReport {
    double theta = 0.0;
    double sigma1 = 0.0, sigma2 = 0.0;
    double beta1 = 0.0, beta2 = 0.0;
    double rho = 0.0;  // spectral radius of the composed map, (1-cos theta)/2
    double rate = 0.0; // spectral radius of the coupled operator, sin(theta/2)
    double f_theta = 0.0;
    double g_theta = 0.0;
    double alpha_theta = 0.0;
    double h_theta = 0.0;
    double gamma2_norm_sq_upper = 1.0;                 // ||gamma_2||^2 <= this
    std::array<double, 2> interior_window{};           // squared-norm window
    std::array<double, 2> exterior_window{};           // squared-norm window
    std::array<double, 2> numerical_radius_window{};   // [(1+sin(t/2))/2, f]
};

/// The numerical-radius envelope f(theta) and its ingredient functions.
/// All require theta in (0, pi - 1e-9); alpha is 0/0 at pi itself.
double alpha_function(double theta);
double g_function(double theta);
double h_function(double theta);
double f_function(double theta);

TheoryReport theory(const TwoDiskGeometry& geom);

struct SpectrumEstimate {
    std::vector<Complex> eigenvalues;
    double spectral_radius = 0.0;
    double numerical_radius = 0.0;
    double top_singular_value = 0.0;
    int bandwidth = 0;
};

/// Eigenvalues by a dense QR-type solver, numerical radius by maximizing
/// the top eigenvalue of the Hermitian part of e^{i*phi}M over a 721-point
/// phi grid followed by golden-section refinement, top singular value by
/// power iteration on M^*M (tol 1e-12, at most 10^4 iterations).
SpectrumEstimate spectrum(const Matrix& m, int bandwidth = 0);

/// Same estimates; uses the off-diagonal block structure of kind B to reduce
/// each rotated-Hermitian-part eigenproblem to a singular value.
SpectrumEstimate spectrum(const BlockOperator& op);

double top_singular_value(const Matrix& m, double tol = 1e-12, int max_iters = 10000);
double numerical_radius(const Matrix& m);
/// Numerical radius of offdiag(g1, g2) via max_psi sigma_max(e^{i psi} g1 + g2^*)/2.
double numerical_radius_offdiag(const Matrix& g1, const Matrix& g2);
/// Largest eigenvalue of the Hermitian part (M + M^*)/2.
double hermitian_part_max(const Matrix& m);

struct Eigenpair {
    Complex lambda;
    ArcFunction eigenfunction; // supported on Gamma_1^int
    double residual;           // ||gamma_1 gamma_2 f - lambda f|| / ||f||
    bool near_boundary_z0;     // |Im z0| > 0.45: residual degrades
};

/// Explicit eigenpair of the composed map gamma_1 gamma_2 for z0 in the open
/// dual strip: lambda = conj(symbol(z0, pi-theta)^2), eigenfunction
/// tau -> e^{i conj(z0) tau} on the line of Gamma_1^int pushed to the arc.
/// The residual is measured in the weighted line norm after applying the
/// operator twice by numerical convolution on the line grid, which checks
/// the eigen-relation by quadrature independently of the closed form.
Eigenpair eigenpair(const TwoDiskGeometry& geom, Complex z0, const Profile& profile);

/// Image {conj(symbol(z, pi-theta)^2)} of a (2*nx+1) x (2*ny+1) grid of the
/// closed dual strip with |Re z| <= xmax; the spectrum of the composed map
/// is the closure of this set as the grid refines.
std::vector<Complex> spectrum_image(double theta, int nx, int ny, double xmax);

} // namespace ddcosmo
