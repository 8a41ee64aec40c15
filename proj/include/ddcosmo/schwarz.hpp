#pragma once

#include <functional>
#include <optional>
#include <random>

#include "ddcosmo/dtd.hpp"

namespace ddcosmo {

/// Boundary data callable: value of g on disk j (1-based) at boundary angle
/// phi. Only ever evaluated on the exterior arcs.
using BoundaryData = std::function<Complex(int, double)>;

struct ProblemSpec {
    std::vector<Disk> disks;
    BoundaryData boundary_data;
    int bandwidth = 32;
    int max_iters = 500;
    double tol = 1e-12; // on the successive-difference product norm
};

struct SchwarzState {
    int iteration = 0;
    std::vector<TraceFunction> traces;
    std::vector<double> error_history; // filled by convergence studies
};

/// Workspace for the two-disk problem: arc rules, the affine coefficient
/// part P_L g, and the projection weights reused by every sweep. For N = 2
/// the composite local data is projected arc by arc, so each sweep equals
/// one application of u -> P_L g + P_L B P_L u up to roundoff.
class TwoDiskSchwarz {
public:
    TwoDiskSchwarz(const ProblemSpec& spec, const Profile& profile);

    const TwoDiskGeometry& geometry() const { return geom_; }
    int bandwidth() const { return bandwidth_; }

    SchwarzState initial_state() const; // zero traces
    SchwarzState state_from(GlobalTrace u) const;
    SchwarzState random_state(std::uint64_t seed) const;

    void sweep(SchwarzState& state) const;

    /// Coefficients of g_j restricted to the exterior arc (the affine part).
    const TraceFunction& projected_data(int j) const { return data_[static_cast<size_t>(j - 1)]; }

    GlobalTrace current(const SchwarzState& state) const {
        return {state.traces[0], state.traces[1]};
    }

private:
    TwoDiskGeometry geom_;
    int bandwidth_;
    std::array<TraceFunction, 2> data_;
    std::array<ArcRule, 2> int_rules_;       // interior arc rule of disk j
    std::array<std::vector<Point>, 2> int_points_;
    std::array<Matrix, 2> project_int_;      // arc values -> coefficients
};

/// Direct solve of the discrete system A_L u = P_L g (two disks) by pivoted
/// LU. Throws SolveFailure if the residual exceeds 1e-10 * ||g||.
GlobalTrace solve_direct(const ProblemSpec& spec, const Profile& profile);

struct ConvergenceRow {
    int n;
    double error;
    double ratio; // error_n / error_{n-1}; NaN for n = 0
};

struct ConvergenceStudy {
    std::vector<ConvergenceRow> rows;
    double asymptotic_rate = 0.0; // geometric mean of the last 5 valid ratios
    bool stagnated = false;       // errors fell below 1e-13 (machine floor)
};

/// Runs n_iters sweeps from `start`, recording ||u^(n) - reference||_H.
ConvergenceStudy convergence_study(const TwoDiskSchwarz& solver, const GlobalTrace& reference,
                                   SchwarzState start, int n_iters);

/// Continuous-operator error iteration in strip coordinates: the coupled
/// trace operator is applied by line-grid convolutions, so no bandwidth
/// truncation enters. State components live on the four lines of the two
/// disks (lower/upper per disk).
class StripIteration {
public:
    struct State {
        StripSample d1_low, d1_up; // disk 1: Gamma_1^ext, Gamma_1^int
        StripSample d2_low, d2_up; // disk 2: Gamma_2^int, Gamma_2^ext
    };

    StripIteration(const TwoDiskGeometry& geom, const LineRule& rule)
        : sigma1_(geom.sigma1), theta_(geom.theta), rule_(rule) {}

    State zero() const;
    /// Eigen-state (f, gamma_2 f / sqrt(lambda)) for f(tau) = e^{i conj(z0) tau}.
    State eigen_state(Complex z0) const;
    /// Smooth decaying random state: random combinations of Gaussian bumps.
    State random_state(std::uint64_t seed) const;

    State apply_coupling(const State& s) const; // one application of B
    double norm(const State& s) const;          // product-space norm

    ConvergenceStudy study(State start, int n_iters) const;

private:
    double sigma1_, theta_;
    LineRule rule_;
};

/// Partition-of-unity value at a point covered by >= 1 disk other than the
/// one whose boundary it sits on: weights (dist to each covering boundary)_+
/// normalized to sum one. Throws NoCoveringDisk.
Complex glue_partition_of_unity(const std::vector<TraceFunction>& traces, Point p);

/// General N-disk sweep (block Jacobi): composes local data on the periodic
/// rule nodes, gluing previous local solutions by the partition of unity on
/// interior nodes. Demo-grade quadrature for N > 2 (the composite data has
/// jumps at the arc ends).
void sweep_general(const ProblemSpec& spec, const Profile& profile, SchwarzState& state);

SchwarzState initial_state_general(const ProblemSpec& spec);

} // namespace ddcosmo
