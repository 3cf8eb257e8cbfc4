// Acceptance run: one [PASS]/[FAIL] line per criterion. Exit status is the
// number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "menhir/calculus.hpp"
#include "menhir/error.hpp"
#include "menhir/golden.hpp"
#include "menhir/oracle.hpp"
#include "menhir/reversions.hpp"
#include "menhir/verify.hpp"

using namespace menhir;

namespace {

constexpr double tol_exact = 1e-12;
constexpr double tol_oracle = 1e-9;
constexpr double tol_stress = 1e-6;
constexpr double tol_golden_argmax = 1e-6;
constexpr double tol_golden_ratio = 1e-9;
constexpr double min_witness_gap = 1e-3;
constexpr double max_example_ms = 1.0;
constexpr double max_oracle_seconds = 10.0;

int failures = 0;

void report(int id, const char* title, bool ok, const std::string& detail) {
    std::printf("[%s] AC%d %s: %s\n", ok ? "PASS" : "FAIL", id, title, detail.c_str());
    if (!ok) ++failures;
}

std::string sci(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

using Clock = std::chrono::steady_clock;
double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::mt19937_64 rng(20260101);

std::vector<double> ball(std::size_t n, double r) {
    std::normal_distribution<double> g;
    std::vector<double> v(n);
    double s = 0;
    do {
        s = 0;
        for (auto& x : v) {
            x = g(rng);
            s += x * x;
        }
    } while (s < 1e-20);
    const double k = std::uniform_real_distribution<double>(0, r)(rng) / std::sqrt(s);
    for (auto& x : v) x *= k;
    return v;
}

std::vector<double> sphere(std::size_t n) {
    auto v = ball(n, 1.0);
    double s = 0;
    for (double x : v) s += x * x;
    for (auto& x : v) x /= std::sqrt(s);
    return v;
}

Eigen::VectorXd eig(const std::vector<double>& v) {
    return Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
}

std::vector<Space> spaces() {
    return {Space::real(),      Space::complex(),   Space::im_quaternion(), Space::quaternion(),
            Space::clifford(2), Space::clifford(3), Space::clifford(4),     Space::clifford(5)};
}

Element C(double re, double im) { return DivisionScalar::complex(re, im); }

void worked_example() {
    const Velocity v(C(0.8, 0)), w(C(0, 0.6));
    VelocityComposition c = compose_velocities(v, w);
    const auto t0 = Clock::now();
    constexpr int reps = 1000;
    for (int k = 0; k < reps; ++k) c = compose_velocities(v, w);
    const double ms = seconds_since(t0) * 1e3 / reps;

    const Menhir ev = menhir_of(v), ew = menhir_of(w);
    const double angle = c.rotation.angle(Space::complex());
    const double speed_exact = std::sqrt(481.0) / 25;
    Eigen::VectorXd a(2), b(2);
    a << 0.8, 0;
    b << 0, 0.6;
    const auto polar = polar_decompose(boost_matrix(a) * boost_matrix(b));
    const Eigen::MatrixXd r = polar.rotation.spatial_block();
    const double err = std::max({max_abs_diff(ev.value(), C(0.5, 0)), max_abs_diff(ew.value(), C(0, 1.0 / 3)),
                                 max_abs_diff(c.menhir.value(), C(20.0 / 37, 9.0 / 37)),
                                 max_abs_diff(c.velocity.value(), C(0.8, 9.0 / 25)),
                                 max_abs_diff(*c.rotation.rho(), C(35.0 / 37, 12.0 / 37)),
                                 std::abs(angle - std::acos(35.0 / 37)), std::abs(c.velocity.speed() - speed_exact)});
    const double oracle_err = std::max({std::abs(polar.velocity.norm() - speed_exact),
                                        std::abs(polar.velocity(0) - 0.8), std::abs(polar.velocity(1) - 9.0 / 25),
                                        std::abs(r(0, 0) - 35.0 / 37), std::abs(std::atan2(r(0, 1), r(0, 0)) - angle)});
    const double misprint_gap = std::abs(c.velocity.speed() - 4 * std::sqrt(34.0) / 25);
    report(1, "worked example", err <= tol_exact && oracle_err <= tol_exact && ms < max_example_ms && misprint_gap > 0.05,
           "max error " + sci(err) + ", oracle " + sci(oracle_err) + ", speed sqrt(481)/25 = " +
               std::to_string(c.velocity.speed()) + " (4 sqrt(34)/25 is off by " + sci(misprint_gap) + "), " +
               sci(ms) + " ms per composition");
}

void oracle_equivalence() {
    const auto t0 = Clock::now();
    bool ok = true;
    double worst_normal = 0, worst_stress = 0;
    std::size_t failed = 0;
    for (const auto& space : spaces()) {
        const auto normal = verify_oracle(space, 1000, 42, Tier::Normal, tol_oracle);
        const auto stress = verify_oracle(space, 1000, 43, Tier::Stress, tol_stress);
        worst_normal = std::max({worst_normal, normal.max_velocity_error, normal.max_rotation_error});
        worst_stress = std::max({worst_stress, stress.max_velocity_error, stress.max_rotation_error});
        failed += normal.failures.size() + stress.failures.size();
        ok = ok && normal.ok() && stress.ok();
    }
    const double s = seconds_since(t0);
    report(2, "oracle equivalence", ok && s < max_oracle_seconds,
           "8 spaces x 1000 pairs per tier, normal max " + sci(worst_normal) + ", stress max " + sci(worst_stress) +
               ", " + std::to_string(failed) + " failures, " + sci(s) + " s");
}

void master_equation() {
    double worst = 0;
    for (const auto& space : spaces()) {
        for (int t = 0; t < 1000; ++t) {
            const Menhir a(space.embed(ball(space.dimension(), 0.95)));
            const Menhir b(space.embed(ball(space.dimension(), 0.95)));
            const MoebiusMatrix product = MoebiusMatrix::boost(b) * MoebiusMatrix::boost(a);
            worst = std::max(worst, product.max_abs_diff(master_decompose(a, b).product()));
        }
    }
    report(3, "master equation", worst <= tol_exact, "8 spaces x 1000 pairs, max entry error " + sci(worst));
}

void aberration() {
    double worst = 0;
    for (const auto& space : {Space::complex(), Space::im_quaternion(), Space::quaternion(), Space::clifford(5)}) {
        for (int t = 0; t < 1000; ++t) {
            const auto v = ball(space.dimension(), 0.95);
            const auto a = sphere(space.dimension());
            const Menhir e = menhir_of(Velocity(space.embed(v)));
            const Eigen::VectorXd moebius = eig(space.extract(moebius_apply(MoebiusMatrix::boost(e), space.embed(a))));
            const Eigen::VectorXd oracle = aberrate_ray(boost_matrix(eig(v)), eig(a));
            const Eigen::VectorXd word = boost_star_shift(eig(a), eig(v));
            worst = std::max({worst, (moebius - oracle).cwiseAbs().maxCoeff(), (word - oracle).cwiseAbs().maxCoeff(),
                              (word - moebius).cwiseAbs().maxCoeff()});
        }
    }
    double fixed = 0;
    for (int t = 0; t < 1000; ++t) {
        const auto v = ball(3, 0.95);
        const Eigen::VectorXd vv = eig(v), hat = vv / vv.norm();
        Eigen::VectorXd side = eig(sphere(3));
        side -= side.dot(hat) * hat;
        side /= side.norm();
        const auto boost = boost_matrix(vv);
        fixed = std::max({fixed, (aberrate_ray(boost, hat) - hat).norm(), (aberrate_ray(boost, -hat) + hat).norm(),
                          std::abs(aberrate_ray(boost, side).dot(hat) - vv.norm()),
                          std::abs(boost_star_shift(side, vv).dot(hat) - vv.norm()),
                          std::abs(axis_projection_shift(0.0, vv.norm()) - vv.norm()),
                          std::abs(axis_projection_shift(1.0, vv.norm()) - 1.0),
                          std::abs(axis_projection_shift(-1.0, vv.norm()) + 1.0)});
    }
    report(4, "aberration", worst <= tol_oracle && fixed <= tol_exact,
           "n = 2, 3, 4, 5 x 1000 samples, three-way max " + sci(worst) + ", axis/side anchors max " + sci(fixed));
}

void golden() {
    const GoldenScan scan = golden_scan(1000);
    const double target = 1.0 / std::sqrt(std::numbers::phi);
    const double arg_err = std::abs(scan.argmax - target);
    const double ratio_err = std::abs(scan.ratio - std::numbers::phi);
    const bool ends = scan.grid.front().gap == 0.0 && scan.grid.back().gap == 0.0;
    report(5, "golden ratio", arg_err <= tol_golden_argmax && ratio_err <= tol_golden_ratio && ends,
           "argmax " + std::to_string(scan.argmax) + " (error " + sci(arg_err) + "), v/e error " + sci(ratio_err) +
               ", endpoint gaps zero: " + (ends ? "yes" : "no"));
}

void loop_vs_group() {
    const Menhir a(C(0.5, 0)), b(C(0, 0.5)), c(C(-0.5, 0.25));
    const double gap = max_abs_diff(compose_menhirs(compose_menhirs(a, b), c).value(),
                                    compose_menhirs(a, compose_menhirs(b, c)).value());
    const auto ma = MoebiusMatrix::boost(a), mb = MoebiusMatrix::boost(b), mc = MoebiusMatrix::boost(c);
    const double assoc = ((mc * mb) * ma).max_abs_diff(mc * (mb * ma));
    report(6, "loop vs group", gap >= min_witness_gap && assoc <= tol_exact,
           "witness (1/2, i/2, -1/2+i/4): bracketings differ by " + sci(gap) + ", matrix products by " + sci(assoc));
}

Eigen::VectorXd planar(double x, double y) {
    Eigen::VectorXd p(2);
    p << x, y;
    return p;
}

void constructions() {
    double menhir_err = 0, angle_err = 0;
    for (int t = 0; t < 1000; ++t) {
        const auto e = eig(ball(2, 0.9)), f = eig(ball(2, 0.9));
        const Menhir me(C(e(0), e(1))), mf(C(f(0), f(1)));
        const auto z = compose_menhirs(me, mf).value().division();
        menhir_err = std::max(menhir_err, (construct_composite_menhir(e, f).menhir - planar(z[0], z[1])).norm());
        angle_err = std::max(angle_err,
                             std::abs(construct_rotation(e, f).angle - thomas_rotation(me, mf).angle(Space::complex())));
    }
    double butterfly = 0;
    int quads = 0;
    while (quads < 100) {
        const auto base = eig(ball(2, 0.5)), dir = eig(sphere(2));
        std::uniform_real_distribution<double> u(-0.4, 0.4);
        const ReversionPoint p(Eigen::VectorXd(base + u(rng) * dir)), q(Eigen::VectorXd(base + u(rng) * dir)),
            s(Eigen::VectorXd(base + u(rng) * dir));
        try {
            const ReversionPoint r = find_conjugate_point(p, q, s);
            butterfly = std::max(butterfly, butterfly_scan(p, q, r, s, 100, static_cast<std::uint64_t>(quads)).max_residual);
            ++quads;
        } catch (const Error&) {
        }
    }
    report(7, "geometric constructions", menhir_err <= tol_oracle && angle_err <= tol_oracle && butterfly <= tol_oracle,
           "1000 planar pairs: composite menhir " + sci(menhir_err) + ", rotation angle " + sci(angle_err) +
               "; butterfly 100 x 100 max residual " + sci(butterfly));
}

void one_dimensional() {
    double poincare = 0;
    std::uniform_real_distribution<double> u(-0.99, 0.99);
    for (int t = 0; t < 10000; ++t) {
        const double v = u(rng), w = u(rng);
        const Element lhs =
            compose_menhirs(menhir_of(Velocity(DivisionScalar::real(v))), menhir_of(Velocity(DivisionScalar::real(w))))
                .value();
        const Element rhs = menhir_of(Velocity(DivisionScalar::real((v + w) / (1 + v * w)))).value();
        poincare = std::max(poincare, max_abs_diff(lhs, rhs));
    }
    double square = 0;
    for (const auto& space : spaces()) {
        for (int t = 0; t < 1000; ++t) {
            const Menhir e(space.embed(ball(space.dimension(), 0.95)));
            square = std::max(square, max_abs_diff(velocity_of(e).value(), compose_menhirs(e, e).value()));
        }
    }
    report(8, "1D isomorphism and square law", poincare <= tol_exact && square <= tol_exact,
           "10000 real pairs max " + sci(poincare) + ", square law over 8 spaces max " + sci(square));
}

}  // namespace

int main() {
    worked_example();
    oracle_equivalence();
    master_equation();
    aberration();
    golden();
    loop_vs_group();
    constructions();
    one_dimensional();
    std::printf("%d of 8 criteria failed\n", failures);
    return failures;
}
