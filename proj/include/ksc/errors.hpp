#pragma once

#include <stdexcept>
#include <string>

namespace ksc {

// Invalid or inconsistent configuration. Carries the offending field name.
struct ConfigError : std::runtime_error {
    std::string field;
    ConfigError(std::string field_, const std::string& reason)
        : std::runtime_error("invalid config: " + field_ + ": " + reason),
          field(std::move(field_)) {}
};

// Iterative solver exceeded its iteration budget.
struct NonConvergence : std::runtime_error {
    double last_residual;
    int iterations;
    NonConvergence(const std::string& what, double residual, int iters)
        : std::runtime_error(what + " (residual " + std::to_string(residual) +
                             " after " + std::to_string(iters) + " iterations)"),
          last_residual(residual), iterations(iters) {}
};

struct IoError : std::runtime_error {
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

// Two histograms / grids with different binning cannot be combined.
struct GeometryMismatch : std::runtime_error {
    explicit GeometryMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct EmptyEnsemble : std::runtime_error {
    EmptyEnsemble() : std::runtime_error("empty ensemble") {}
};

struct MissingArtifacts : std::runtime_error {
    explicit MissingArtifacts(const std::string& what) : std::runtime_error(what) {}
};

} // namespace ksc
