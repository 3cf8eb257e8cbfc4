#pragma once

// Oracle equivalence runs: random velocity pairs pushed through the menhir
// calculus and through explicit Lorentz matrices, compared componentwise.

#include <Eigen/Dense>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "menhir/space.hpp"

namespace menhir {

enum class Tier { Normal, Stress };

const char* to_string(Tier tier) noexcept;

/// 1e-9 for the normal tier, 1e-6 for the stress tier.
double default_tolerance(Tier tier) noexcept;

/// Uniform direction; norm uniform in [0, 0.95] (normal) or [0.95, 1 - 1e-6] (stress).
Eigen::VectorXd sample_velocity(std::mt19937_64& rng, std::size_t n, Tier tier);

struct TrialFailure {
    std::size_t trial = 0;
    std::uint64_t seed = 0;
    std::vector<double> v;
    std::vector<double> w;
    double velocity_error = 0.0;
    double rotation_error = 0.0;
};

struct RunReport {
    std::string space;
    Tier tier = Tier::Normal;
    std::uint64_t seed = 0;
    std::size_t trials = 0;
    double tolerance = 0.0;
    double max_velocity_error = 0.0;
    double max_rotation_error = 0.0;
    std::vector<TrialFailure> failures;

    bool ok() const noexcept { return failures.empty(); }
};

/// Deviation of one pair: composite velocity and frame rotation, menhir route
/// against polar_decompose(boost(v) * boost(w)).
struct TrialErrors {
    double velocity = 0.0;
    double rotation = 0.0;
};

TrialErrors oracle_trial(const Space& space, const Eigen::VectorXd& v, const Eigen::VectorXd& w);

/// Trial k draws from mt19937_64(seed ^ k), so the report does not depend on
/// `threads` (0 = hardware concurrency).
RunReport verify_oracle(const Space& space, std::size_t trials, std::uint64_t seed, Tier tier,
                        double tolerance, unsigned threads = 0);

}  // namespace menhir
