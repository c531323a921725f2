#pragma once

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <vector>

#include "ksc/feedback_law.hpp"
#include "ksc/kernels.hpp"

namespace ksc {

// Uniform 1-D node layout shared by both axes of the state grid.
struct GridGeometry {
    double lo = -1.0;
    double hi = 1.0;
    int n = 101; // nodes per axis

    double h() const { return (hi - lo) / (n - 1); }
    double coord(int i) const { return lo + i * h(); }
    int nearest(double x) const {
        const double c = std::clamp(x, lo, hi);
        const int i = static_cast<int>(std::floor((c - lo) / h() + 0.5));
        return std::clamp(i, 0, n - 1);
    }
    bool operator==(const GridGeometry& o) const {
        return lo == o.lo && hi == o.hi && n == o.n;
    }

    void validate() const {
        if (!(n >= 2)) throw ConfigError("hjb.n_nodes", "must be >= 2");
        if (!(lo < hi)) throw ConfigError("omega.min", "requires omega.min < omega.max");
        if (!std::isfinite(lo) || !std::isfinite(hi))
            throw ConfigError("omega.min", "bounds must be finite");
    }
};

// Value-function samples on the n x n grid over Omega^2, row-major in x then y.
struct ValueGrid {
    GridGeometry geom;
    std::vector<double> values;

    static ValueGrid zeros(GridGeometry g) {
        g.validate();
        ValueGrid v;
        v.geom = g;
        v.values.assign(static_cast<std::size_t>(g.n) * g.n, 0.0);
        return v;
    }
    double& at(int ix, int iy) { return values[static_cast<std::size_t>(ix) * geom.n + iy]; }
    double at(int ix, int iy) const { return values[static_cast<std::size_t>(ix) * geom.n + iy]; }

    // Bilinear interpolation; (x, y) are clamped into the domain first.
    double interpolate(double x, double y) const;
};

// Optimal control pairs on the same grid. Immutable once built; lookups are
// nearest-node so that an exactly-zero control region stays exactly zero.
struct FeedbackTable {
    GridGeometry geom;
    std::vector<ControlPair> controls;

    const ControlPair& at(int ix, int iy) const {
        return controls[static_cast<std::size_t>(ix) * geom.n + iy];
    }
    ControlPair& at(int ix, int iy) {
        return controls[static_cast<std::size_t>(ix) * geom.n + iy];
    }
    ControlPair lookup(double x, double y) const {
        return at(geom.nearest(x), geom.nearest(y));
    }
};

struct HjbParams {
    double dt = 0.1;       // semi-Lagrangian step
    double lambda = 0.05;  // discount rate; beta = e^{-lambda*dt} < 1
    double gamma_bar = 0.3;
    Penalty penalty = Penalty::L1;
    double target = 0.0;
    int n_controls = 21;   // per component, odd so 0 is a grid point
    double tol = 1e-6;
    int max_policy_iters = 100;
    int max_eval_iters = 10000;

    double beta() const { return std::exp(-lambda * dt); }

    void validate() const {
        if (!(dt > 0)) throw ConfigError("hjb.dt", "must be > 0");
        if (!(lambda > 0)) throw ConfigError("lambda", "must be > 0");
        if (!(gamma_bar >= 0)) throw ConfigError("gamma_bar", "must be >= 0");
        if (n_controls < 1 || n_controls % 2 == 0)
            throw ConfigError("hjb.n_controls", "must be odd and >= 1");
        if (!(tol > 0)) throw ConfigError("hjb.tol", "must be > 0");
        if (max_policy_iters < 1) throw ConfigError("hjb.max_policy_iters", "must be >= 1");
        if (max_eval_iters < 1) throw ConfigError("hjb.max_eval_iters", "must be >= 1");
    }
};

// Control grid over the box: symmetric around 0 with 0 stored exactly.
std::vector<double> control_grid(const ControlBox& box, int n_controls);

// Stage cost hook for tests that need a non-model cost (e.g. constant).
using StageCost = std::function<double(double x, double y, double u_i, double u_j)>;

struct BellmanResult {
    ValueGrid value;
    FeedbackTable policy;
};

// One synchronous Bellman sweep: at every node minimize
//   beta * V(successor) + dt * cost
// over the discretized control box, successors clamped into Omega^2.
// Ties within 1e-12 of the minimum resolve to the smallest |u_i|+|u_j|,
// then lexicographically. OpenMP-parallel over nodes; bit-identical to
// bellman_update_serial.
BellmanResult bellman_update(const ValueGrid& grid, const InteractionKernel& kernel,
                             const HjbParams& params, const ControlBox& box);
BellmanResult bellman_update_serial(const ValueGrid& grid, const InteractionKernel& kernel,
                                    const HjbParams& params, const ControlBox& box);

// Same sweep with an arbitrary stage cost (slower; for tests).
BellmanResult bellman_update(const ValueGrid& grid, const InteractionKernel& kernel,
                             const HjbParams& params, const ControlBox& box,
                             const StageCost& cost);

struct PolicyIterationResult {
    ValueGrid value;
    FeedbackTable policy;
    int policy_iterations = 0;
    int eval_sweeps = 0;
    double residual = 0.0; // sup-norm Bellman residual of the returned value
};

// Howard policy iteration: alternate fixed-policy evaluation sweeps and one
// greedy improvement sweep until the policy is stable or the value moves by
// less than tol in sup norm. Throws NonConvergence past max_policy_iters.
PolicyIterationResult solve_policy_iteration(const ValueGrid& initial,
                                             const InteractionKernel& kernel,
                                             const HjbParams& params,
                                             const ControlBox& box);
PolicyIterationResult solve_policy_iteration(const ValueGrid& initial,
                                             const InteractionKernel& kernel,
                                             const HjbParams& params,
                                             const ControlBox& box,
                                             const StageCost& cost);

ControlPair feedback_lookup(const FeedbackTable& table, double x, double y);

// sup-norm of V - BellmanOperator(V)
double bellman_residual(const ValueGrid& grid, const InteractionKernel& kernel,
                        const HjbParams& params, const ControlBox& box);

// CSV schema: header "x,y,u_i,u_j,value", one row per node, row-major in x
// then y, >= 15 significant digits.
void write_feedback_csv(const FeedbackTable& table, const ValueGrid& value,
                        const std::filesystem::path& path);
struct FeedbackFile {
    FeedbackTable table;
    ValueGrid value;
};
FeedbackFile read_feedback_csv(const std::filesystem::path& path);

} // namespace ksc
