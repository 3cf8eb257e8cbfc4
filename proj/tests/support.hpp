#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <random>
#include <vector>

#include "menhir/algebra.hpp"
#include "menhir/calculus.hpp"
#include "menhir/space.hpp"

namespace testing_support {

using namespace menhir;

inline std::mt19937_64& rng() {
    static std::mt19937_64 g(20240917);
    return g;
}

inline double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng()); }

inline std::vector<double> coords(std::size_t n, double lo = -1.0, double hi = 1.0) {
    std::vector<double> v(n);
    for (auto& x : v) x = uniform(lo, hi);
    return v;
}

/// Random vector with uniform direction and norm uniform in [0, r].
inline std::vector<double> ball_point(std::size_t n, double r) {
    std::normal_distribution<double> gauss;
    std::vector<double> v(n);
    double s = 0.0;
    do {
        s = 0.0;
        for (auto& x : v) {
            x = gauss(rng());
            s += x * x;
        }
    } while (s < 1e-20);
    const double scale = uniform(0.0, r) / std::sqrt(s);
    for (auto& x : v) x *= scale;
    return v;
}

inline std::vector<double> sphere_point(std::size_t n) {
    auto v = ball_point(n, 1.0);
    double s = 0.0;
    for (double x : v) s += x * x;
    for (auto& x : v) x /= std::sqrt(s);
    return v;
}

inline Eigen::VectorXd to_eigen(const std::vector<double>& v) {
    return Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
}

inline DivisionScalar random_scalar(DivisionKind kind) {
    switch (kind) {
        case DivisionKind::Real: return DivisionScalar::real(uniform(-2, 2));
        case DivisionKind::Complex: return DivisionScalar::complex(uniform(-2, 2), uniform(-2, 2));
        default: return DivisionScalar::quaternion(uniform(-2, 2), uniform(-2, 2), uniform(-2, 2), uniform(-2, 2));
    }
}

inline Multivector random_multivector(std::size_t n) { return Multivector(n, coords(std::size_t{1} << n)); }

inline Menhir random_menhir(const Space& space, double r = 0.95) {
    return Menhir(space.embed(ball_point(space.dimension(), r)));
}

inline Velocity random_velocity(const Space& space, double r = 0.95) {
    return Velocity(space.embed(ball_point(space.dimension(), r)));
}

inline std::vector<Space> all_spaces() {
    return {Space::real(),         Space::complex(),      Space::im_quaternion(), Space::quaternion(),
            Space::clifford(2),    Space::clifford(3),    Space::clifford(4),     Space::clifford(5)};
}

}  // namespace testing_support
