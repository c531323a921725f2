#pragma once

#include <algorithm>
#include <cmath>

#include "ksc/errors.hpp"
#include "ksc/kernels.hpp"

namespace ksc {

enum class Penalty { L1, L2 };

// Admissible control set U = [lo, hi]. Must contain 0 so that "no action"
// is always admissible.
struct ControlBox {
    double lo = -1.0;
    double hi = 1.0;

    void validate() const {
        if (!(lo < hi)) throw ConfigError("u.min", "requires u.min < u.max");
        if (!(lo <= 0.0 && 0.0 <= hi))
            throw ConfigError("u.min", "the zero control must be admissible");
    }
};

// Parameters of the one-step (instantaneous) controllers.
// gamma_bar is the published threshold; the raw penalty weight is derived
// as gamma = gamma_bar * beta * dt^2 wherever an explicit weight is needed.
struct InstantaneousParams {
    double gamma_bar = 0.3;
    double beta = 1.0;   // discrete discount e^{-lambda*dt}
    double dt = 0.1;
    double target = 0.0;
    Penalty penalty = Penalty::L1;

    double gamma() const { return gamma_bar * beta * dt * dt; }

    void validate() const {
        if (!(gamma_bar >= 0)) throw ConfigError("gamma_bar", "must be >= 0");
        if (!(beta > 0 && beta <= 1)) throw ConfigError("beta", "must be in (0, 1]");
        if (!(dt > 0)) throw ConfigError("dt", "must be > 0");
    }
};

// Shrink v toward zero by `threshold`; exactly zero on |v| <= threshold.
inline double soft_threshold(double v, double threshold) {
    if (v > threshold) return v - threshold;
    if (v < -threshold) return v + threshold;
    return 0.0;
}

inline double project_box(double u, const ControlBox& box) {
    return std::clamp(u, box.lo, box.hi);
}

struct ControlPair {
    double u_i = 0.0;
    double u_j = 0.0;
};

// Closed-form minimizer of the one-step cost for the two-agent model.
// The unconstrained per-agent rate is the control that would land the agent
// exactly on the target after one step of the binary dynamics:
//   rate_i = (target - x_i - (dt/2) P(x_i,x_j)(x_j - x_i)) / dt.
// L1 penalties soft-threshold that rate; L2 penalties shrink it by
// 1/(1 + 2*gamma_bar). Both are then projected onto the admissible box.
inline ControlPair instantaneous_control(double x_i, double x_j,
                                         const InteractionKernel& kernel,
                                         const InstantaneousParams& p,
                                         const ControlBox& box) {
    const double rate_i =
        (p.target - x_i - 0.5 * p.dt * eval_kernel(kernel, x_i, x_j) * (x_j - x_i)) / p.dt;
    const double rate_j =
        (p.target - x_j - 0.5 * p.dt * eval_kernel(kernel, x_j, x_i) * (x_i - x_j)) / p.dt;
    ControlPair out;
    if (p.penalty == Penalty::L1) {
        out.u_i = project_box(soft_threshold(rate_i, p.gamma_bar), box);
        out.u_j = project_box(soft_threshold(rate_j, p.gamma_bar), box);
    } else {
        const double shrink = 1.0 / (1.0 + 2.0 * p.gamma_bar);
        out.u_i = project_box(rate_i * shrink, box);
        out.u_j = project_box(rate_j * shrink, box);
    }
    return out;
}

// Per-step running cost of the two-agent system.
inline double running_cost(double x_i, double x_j, double u_i, double u_j,
                           const InstantaneousParams& p) {
    const double di = p.target - x_i;
    const double dj = p.target - x_j;
    const double state = 0.5 * (di * di + dj * dj);
    const double g = p.gamma();
    if (p.penalty == Penalty::L1) return state + g * (std::fabs(u_i) + std::fabs(u_j));
    return state + g * (u_i * u_i + u_j * u_j);
}

} // namespace ksc
