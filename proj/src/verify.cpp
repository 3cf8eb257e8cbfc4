#include "menhir/verify.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "menhir/calculus.hpp"
#include "menhir/error.hpp"
#include "menhir/oracle.hpp"

namespace menhir {

const char* to_string(Tier tier) noexcept { return tier == Tier::Normal ? "normal" : "stress"; }

double default_tolerance(Tier tier) noexcept { return tier == Tier::Normal ? 1e-9 : 1e-6; }

Eigen::VectorXd sample_velocity(std::mt19937_64& rng, std::size_t n, Tier tier) {
    std::normal_distribution<double> gauss;
    Eigen::VectorXd dir(static_cast<Eigen::Index>(n));
    do {
        for (Eigen::Index i = 0; i < dir.size(); ++i) dir(i) = gauss(rng);
    } while (dir.norm() < 1e-12);
    dir /= dir.norm();
    const double lo = tier == Tier::Normal ? 0.0 : 0.95;
    const double hi = tier == Tier::Normal ? 0.95 : 1.0 - 1e-6;
    std::uniform_real_distribution<double> speed(lo, hi);
    return speed(rng) * dir;
}

TrialErrors oracle_trial(const Space& space, const Eigen::VectorXd& v, const Eigen::VectorXd& w) {
    const std::size_t n = space.dimension();
    const auto view = [](const Eigen::VectorXd& x) {
        return std::span<const double>(x.data(), static_cast<std::size_t>(x.size()));
    };
    const auto composed = compose_velocities(Velocity(space.embed(view(v))), Velocity(space.embed(view(w))));
    const auto velocity = space.extract(composed.velocity.value());
    const auto rotation = composed.rotation.frame_rotation(space);

    const PolarDecomposition polar = polar_decompose(boost_matrix(v) * boost_matrix(w));
    const Eigen::MatrixXd r = polar.rotation.spatial_block();

    TrialErrors err;
    for (std::size_t i = 0; i < n; ++i) {
        err.velocity = std::max(err.velocity, std::abs(velocity[i] - polar.velocity(static_cast<Eigen::Index>(i))));
        for (std::size_t j = 0; j < n; ++j) {
            err.rotation = std::max(err.rotation, std::abs(rotation[i * n + j] -
                                                           r(static_cast<Eigen::Index>(i),
                                                             static_cast<Eigen::Index>(j))));
        }
    }
    return err;
}

RunReport verify_oracle(const Space& space, std::size_t trials, std::uint64_t seed, Tier tier,
                        double tolerance, unsigned threads) {
    if (trials == 0) throw Error(ErrorCode::Domain, "verify needs at least one trial");
    RunReport report;
    report.space = space.name();
    report.tier = tier;
    report.seed = seed;
    report.trials = trials;
    report.tolerance = tolerance;

    struct Outcome {
        Eigen::VectorXd v, w;
        TrialErrors err;
    };
    std::vector<Outcome> outcomes(trials);
    auto run_range = [&](std::size_t begin, std::size_t stride) {
        for (std::size_t k = begin; k < trials; k += stride) {
            std::mt19937_64 rng(seed ^ static_cast<std::uint64_t>(k));
            Outcome& o = outcomes[k];
            o.v = sample_velocity(rng, space.dimension(), tier);
            o.w = sample_velocity(rng, space.dimension(), tier);
            try {
                o.err = oracle_trial(space, o.v, o.w);
            } catch (const std::exception&) {
                o.err = {INFINITY, INFINITY};
            }
        }
    };

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, trials));
    if (threads <= 1) {
        run_range(0, 1);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(run_range, t, threads);
    }

    for (std::size_t k = 0; k < trials; ++k) {
        const Outcome& o = outcomes[k];
        report.max_velocity_error = std::max(report.max_velocity_error, o.err.velocity);
        report.max_rotation_error = std::max(report.max_rotation_error, o.err.rotation);
        if (!(o.err.velocity <= tolerance && o.err.rotation <= tolerance)) {
            report.failures.push_back({k, seed ^ static_cast<std::uint64_t>(k),
                                       std::vector<double>(o.v.data(), o.v.data() + o.v.size()),
                                       std::vector<double>(o.w.data(), o.w.data() + o.w.size()),
                                       o.err.velocity, o.err.rotation});
        }
    }
    return report;
}

}  // namespace menhir
