#include "ddcosmo/schwarz.hpp"

#include <cmath>
#include <limits>

#include <Eigen/Dense>

#include "ddcosmo/errors.hpp"

namespace ddcosmo {

namespace {

/// Coefficients of a callable restricted to one arc (zero elsewhere).
TraceFunction project_arc_data(const std::function<Complex(double)>& f, const ArcRule& rule,
                               int disk_index, const Disk& disk, int bandwidth) {
    ArcFunction values;
    values.disk_index = disk_index;
    values.disk = disk;
    values.rule = rule;
    values.values.resize(rule.size());
    for (size_t q = 0; q < rule.size(); ++q) values.values[q] = f(rule.nodes[q]);
    return arc_fourier_coefficients(values, bandwidth);
}

} // namespace

TwoDiskSchwarz::TwoDiskSchwarz(const ProblemSpec& spec, const Profile& profile)
    : geom_(intersect(spec.disks.at(0), spec.disks.at(1))),
      bandwidth_(spec.bandwidth),
      int_rules_{ArcRule(geom_.arcs(1).interior, profile.panels_per_arc, profile.gauss_order),
                 ArcRule(geom_.arcs(2).interior, profile.panels_per_arc, profile.gauss_order)} {
    for (int j = 1; j <= 2; ++j) {
        const size_t idx = static_cast<size_t>(j - 1);
        const Disk& d = geom_.disk(j);
        const ArcRule ext_rule(geom_.arcs(j).exterior, profile.panels_per_arc,
                               profile.gauss_order);
        data_[idx] = project_arc_data(
            [&](double phi) { return spec.boundary_data(j, phi); }, ext_rule, j, d,
            bandwidth_);

        int_points_[idx].resize(int_rules_[idx].size());
        for (size_t q = 0; q < int_rules_[idx].size(); ++q)
            int_points_[idx][q] = d.boundary_point(int_rules_[idx].nodes[q]);

        // (1/2pi) * w_q * e^{-i*l*phi_q}: maps interior-arc values to the
        // coefficients of their zero extension.
        const int k = 2 * bandwidth_ + 1;
        Matrix p(k, static_cast<Eigen::Index>(int_rules_[idx].size()));
        for (size_t q = 0; q < int_rules_[idx].size(); ++q) {
            const Complex e = std::polar(1.0, -int_rules_[idx].nodes[q]);
            const double wq = int_rules_[idx].weights[q] / (2.0 * pi);
            Complex ep{1.0, 0.0};
            p(bandwidth_, static_cast<Eigen::Index>(q)) = wq;
            for (int l = 1; l <= bandwidth_; ++l) {
                ep *= e;
                p(bandwidth_ + l, static_cast<Eigen::Index>(q)) = wq * ep;
                p(bandwidth_ - l, static_cast<Eigen::Index>(q)) = wq * std::conj(ep);
            }
        }
        project_int_[idx] = std::move(p);
    }
}

SchwarzState TwoDiskSchwarz::initial_state() const {
    SchwarzState s;
    s.traces = {TraceFunction::zero(1, geom_.disk(1), bandwidth_),
                TraceFunction::zero(2, geom_.disk(2), bandwidth_)};
    return s;
}

SchwarzState TwoDiskSchwarz::state_from(GlobalTrace u) const {
    SchwarzState s;
    s.traces = {std::move(u.u1), std::move(u.u2)};
    return s;
}

SchwarzState TwoDiskSchwarz::random_state(std::uint64_t seed) const {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    SchwarzState s = initial_state();
    for (auto& t : s.traces)
        for (Eigen::Index i = 0; i < t.coefficients.size(); ++i)
            t.coefficients(i) = Complex(gauss(rng), gauss(rng));
    return s;
}

void TwoDiskSchwarz::sweep(SchwarzState& state) const {
    std::array<TraceFunction, 2> next;
    for (int j = 1; j <= 2; ++j) {
        const size_t idx = static_cast<size_t>(j - 1);
        const TraceFunction& other = state.traces[static_cast<size_t>(2 - j)];
        Vector vals(static_cast<Eigen::Index>(int_points_[idx].size()));
        for (size_t q = 0; q < int_points_[idx].size(); ++q)
            vals(static_cast<Eigen::Index>(q)) = truncated_extension(other, int_points_[idx][q]);

        TraceFunction t = data_[idx]; // exterior-arc part of the composite
        t.coefficients += project_int_[idx] * vals;
        next[idx] = std::move(t);
    }
    state.traces[0] = std::move(next[0]);
    state.traces[1] = std::move(next[1]);
    state.iteration += 1;
}

GlobalTrace solve_direct(const ProblemSpec& spec, const Profile& profile) {
    if (spec.disks.size() != 2)
        throw SolveFailure("direct solve is only available for two disks");
    const TwoDiskSchwarz ws(spec, profile);
    const TwoDiskGeometry& geom = ws.geometry();
    const int l = spec.bandwidth;
    const int k = 2 * l + 1;

    const BlockOperator a = assemble_block(geom, l, BlockOperator::Kind::A, profile);
    const Matrix a_mat = a.assembled();

    // Orthonormal coordinates: c_hat = sqrt(2 pi r_j) c.
    Vector rhs(2 * k);
    const double s1 = std::sqrt(2.0 * pi * geom.disk(1).radius);
    const double s2 = std::sqrt(2.0 * pi * geom.disk(2).radius);
    rhs.head(k) = s1 * ws.projected_data(1).coefficients;
    rhs.tail(k) = s2 * ws.projected_data(2).coefficients;

    const Eigen::PartialPivLU<Matrix> lu(a_mat);
    const Vector u = lu.solve(rhs);
    const double residual = (a_mat * u - rhs).norm();
    if (residual > 1e-10 * std::max(rhs.norm(), 1e-300))
        throw SolveFailure("direct solve residual " + std::to_string(residual));

    GlobalTrace out{TraceFunction::zero(1, geom.disk(1), l),
                    TraceFunction::zero(2, geom.disk(2), l)};
    out.u1.coefficients = u.head(k) / s1;
    out.u2.coefficients = u.tail(k) / s2;
    return out;
}

namespace {

void finalize_study(ConvergenceStudy& study) {
    std::vector<double> ratios;
    for (const auto& row : study.rows) {
        if (row.n == 0 || !(row.ratio > 0.0)) continue;
        const double prev = study.rows[static_cast<size_t>(row.n - 1)].error;
        if (prev < 1e-13 || row.error < 1e-13) {
            study.stagnated = true;
            break;
        }
        ratios.push_back(row.ratio);
    }
    const size_t take = std::min<size_t>(5, ratios.size());
    if (take == 0) return;
    double log_acc = 0.0;
    for (size_t i = ratios.size() - take; i < ratios.size(); ++i)
        log_acc += std::log(ratios[i]);
    study.asymptotic_rate = std::exp(log_acc / static_cast<double>(take));
}

} // namespace

ConvergenceStudy convergence_study(const TwoDiskSchwarz& solver, const GlobalTrace& reference,
                                   SchwarzState start, int n_iters) {
    ConvergenceStudy study;
    auto error_of = [&](const SchwarzState& s) {
        GlobalTrace diff = solver.current(s);
        diff.u1.coefficients -= reference.u1.coefficients;
        diff.u2.coefficients -= reference.u2.coefficients;
        return diff.norm();
    };
    double prev = error_of(start);
    study.rows.push_back({0, prev, std::numeric_limits<double>::quiet_NaN()});
    for (int n = 1; n <= n_iters; ++n) {
        solver.sweep(start);
        const double err = error_of(start);
        study.rows.push_back({n, err, prev > 0.0 ? err / prev : 0.0});
        prev = err;
    }
    finalize_study(study);
    return study;
}

StripIteration::State StripIteration::zero() const {
    StripSample z;
    z.rule = rule_;
    z.values.assign(rule_.size(), Complex{0.0, 0.0});
    State s{z, z, z, z};
    s.d1_low.sigma = sigma1_;
    s.d1_up.sigma = sigma1_ + pi;
    s.d2_low.sigma = sigma1_ + theta_;
    s.d2_up.sigma = sigma1_ + theta_ + pi;
    return s;
}

StripIteration::State StripIteration::eigen_state(Complex z0) const {
    const Complex w = std::conj(z0);
    State s = zero();
    s.d1_up = StripSample::from_function(
        s.d1_up.sigma, rule_,
        [w](double tau) { return std::exp(Complex(0.0, 1.0) * w * tau); });
    // lambda = conj(symbol^2); the matching root is conj(symbol).
    const Complex sqrt_lambda = std::conj(symbol(z0, pi - theta_));
    StripSample g2f = convolve(s.d1_up, pi - theta_);
    s.d2_low = (1.0 / sqrt_lambda) * g2f;
    s.d2_low.sigma = sigma1_ + theta_;
    return s;
}

StripIteration::State StripIteration::random_state(std::uint64_t seed) const {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> center(-4.0, 4.0);
    State s = zero();
    for (StripSample* comp : {&s.d1_low, &s.d1_up, &s.d2_low, &s.d2_up}) {
        std::vector<std::array<double, 3>> bumps;
        for (int b = 0; b < 6; ++b) bumps.push_back({gauss(rng), gauss(rng), center(rng)});
        for (size_t q = 0; q < rule_.size(); ++q) {
            const double tau = rule_.nodes[q];
            Complex v{0.0, 0.0};
            for (const auto& bump : bumps)
                v += Complex(bump[0], bump[1]) * std::exp(-0.5 * std::pow(tau - bump[2], 2));
            comp->values[q] = v;
        }
    }
    return s;
}

StripIteration::State StripIteration::apply_coupling(const State& s) const {
    State out = zero();
    // gamma_1 of disk 2's pair lands on the upper line of disk 1.
    {
        StripSample a = convolve(s.d2_low, pi - theta_);
        StripSample b = convolve(s.d2_up, theta_);
        a.sigma = b.sigma = sigma1_ + pi;
        out.d1_up = a;
        for (size_t q = 0; q < rule_.size(); ++q) out.d1_up.values[q] += b.values[q];
        out.d1_up.tail_left += b.tail_left;
        out.d1_up.tail_right += b.tail_right;
    }
    // gamma_2 of disk 1's pair lands on the lower line of disk 2.
    {
        StripSample a = convolve(s.d1_low, theta_);
        StripSample b = convolve(s.d1_up, pi - theta_);
        a.sigma = b.sigma = sigma1_ + theta_;
        out.d2_low = a;
        for (size_t q = 0; q < rule_.size(); ++q) out.d2_low.values[q] += b.values[q];
        out.d2_low.tail_left += b.tail_left;
        out.d2_low.tail_right += b.tail_right;
    }
    return out;
}

double StripIteration::norm(const State& s) const {
    const double n1 = weighted_norm(s.d1_low), n2 = weighted_norm(s.d1_up);
    const double n3 = weighted_norm(s.d2_low), n4 = weighted_norm(s.d2_up);
    return std::sqrt(n1 * n1 + n2 * n2 + n3 * n3 + n4 * n4);
}

ConvergenceStudy StripIteration::study(State start, int n_iters) const {
    ConvergenceStudy out;
    double prev = norm(start);
    out.rows.push_back({0, prev, std::numeric_limits<double>::quiet_NaN()});
    for (int n = 1; n <= n_iters; ++n) {
        start = apply_coupling(start);
        const double err = norm(start);
        out.rows.push_back({n, err, prev > 0.0 ? err / prev : 0.0});
        prev = err;
    }
    finalize_study(out);
    return out;
}

Complex glue_partition_of_unity(const std::vector<TraceFunction>& traces, Point p) {
    double total = 0.0;
    Complex acc{0.0, 0.0};
    for (const TraceFunction& t : traces) {
        const double w = t.disk.boundary_distance(p);
        if (w <= 0.0) continue;
        acc += w * truncated_extension(t, p);
        total += w;
    }
    if (total <= 0.0) throw NoCoveringDisk("point lies in no disk's interior");
    return acc / total;
}

SchwarzState initial_state_general(const ProblemSpec& spec) {
    SchwarzState s;
    for (size_t j = 0; j < spec.disks.size(); ++j)
        s.traces.push_back(TraceFunction::zero(static_cast<int>(j + 1), spec.disks[j],
                                               spec.bandwidth));
    return s;
}

void sweep_general(const ProblemSpec& spec, const Profile& profile, SchwarzState& state) {
    const int n_disks = static_cast<int>(spec.disks.size());
    const PeriodicRule rule(profile.circle_nodes(spec.bandwidth));
    std::vector<TraceFunction> next;
    next.reserve(static_cast<size_t>(n_disks));
    for (int j = 1; j <= n_disks; ++j) {
        const Disk& d = spec.disks[static_cast<size_t>(j - 1)];
        std::vector<Complex> composite(static_cast<size_t>(rule.node_count));
        for (int q = 0; q < rule.node_count; ++q) {
            const double phi = rule.node(q);
            const Point p = d.boundary_point(phi);
            bool covered = false;
            for (int i = 1; i <= n_disks && !covered; ++i)
                covered = i != j && spec.disks[static_cast<size_t>(i - 1)].contains(p);
            if (!covered) {
                composite[static_cast<size_t>(q)] = spec.boundary_data(j, phi);
            } else {
                std::vector<TraceFunction> others;
                for (int i = 1; i <= n_disks; ++i)
                    if (i != j) others.push_back(state.traces[static_cast<size_t>(i - 1)]);
                composite[static_cast<size_t>(q)] = glue_partition_of_unity(others, p);
            }
        }
        next.push_back(fourier_coefficients(composite, rule, j, d, spec.bandwidth));
    }
    state.traces = std::move(next);
    state.iteration += 1;
}

} // namespace ddcosmo
