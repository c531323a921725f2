#pragma once

#include <algorithm>
#include <cmath>

#include "ksc/errors.hpp"

namespace ksc {

enum class KernelType { BoundedConfidence, AttractionRepulsion, Constant, Zero };

// Pairwise interaction strength P(x,y). All variants are radial, P(x,y) = P(y,x).
struct InteractionKernel {
    KernelType type = KernelType::Zero;

    // BoundedConfidence: 1 inside the confidence radius, linear ramp of
    // half-width `smoothing` across |x-y| = delta, 0 outside.
    double delta = 0.4;
    double smoothing = 0.02;

    // AttractionRepulsion: (sigma+r)^attract_exp - (sigma+r)^repel_exp.
    // Negative near contact (repulsion), positive at range; not clipped.
    double attract_exp = 1.0;
    double repel_exp = -1.0;
    double sigma = 1e-4;

    static InteractionKernel bounded_confidence(double delta, double smoothing = 0.02) {
        InteractionKernel k;
        k.type = KernelType::BoundedConfidence;
        k.delta = delta;
        k.smoothing = smoothing;
        k.validate();
        return k;
    }
    static InteractionKernel attraction_repulsion(double a = 1.0, double b = -1.0,
                                                  double sigma = 1e-4) {
        InteractionKernel k;
        k.type = KernelType::AttractionRepulsion;
        k.attract_exp = a;
        k.repel_exp = b;
        k.sigma = sigma;
        k.validate();
        return k;
    }
    static InteractionKernel constant() {
        InteractionKernel k;
        k.type = KernelType::Constant;
        return k;
    }
    static InteractionKernel zero() { return InteractionKernel{}; }

    void validate() const {
        if (type == KernelType::BoundedConfidence) {
            if (!(delta > 0)) throw ConfigError("kernel.delta", "must be > 0");
            if (!(smoothing >= 0)) throw ConfigError("kernel.smoothing", "must be >= 0");
        } else if (type == KernelType::AttractionRepulsion) {
            if (!(sigma > 0)) throw ConfigError("kernel.sigma", "must be > 0");
        }
    }
};

namespace detail {
// x^p with fast paths for the exponents the models actually use.
inline double pow_fast(double x, double p) {
    if (p == 1.0) return x;
    if (p == -1.0) return 1.0 / x;
    if (p == 0.0) return 1.0;
    if (p == 2.0) return x * x;
    return std::pow(x, p);
}
} // namespace detail

inline double eval_kernel(const InteractionKernel& k, double x, double y) {
    const double r = std::fabs(x - y);
    switch (k.type) {
        case KernelType::BoundedConfidence: {
            if (k.smoothing == 0.0) return r <= k.delta ? 1.0 : 0.0;
            const double w = (k.delta + k.smoothing - r) / (2.0 * k.smoothing);
            return std::clamp(w, 0.0, 1.0);
        }
        case KernelType::AttractionRepulsion: {
            const double base = k.sigma + r;
            return detail::pow_fast(base, k.attract_exp) -
                   detail::pow_fast(base, k.repel_exp);
        }
        case KernelType::Constant: return 1.0;
        case KernelType::Zero: return 0.0;
    }
    return 0.0;
}

} // namespace ksc
