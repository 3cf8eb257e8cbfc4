#include "menhir/calculus.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

#include "menhir/error.hpp"

namespace menhir {

namespace {

void check_subluminal(double norm, const char* what, double bound = 1.0) {
    if (!(norm < bound)) {
        throw Error(ErrorCode::Superluminal, std::string(what) + " norm " + std::to_string(norm) +
                                                 " is not below 1");
    }
}

void check_vector_like(const Element& e, const char* what) {
    if (e.is_clifford()) {
        const double stray = e.clifford().off_grade_magnitude({1});
        if (stray > 1e-9 * (1.0 + e.norm())) {
            throw Error(ErrorCode::Domain, std::string(what) + " must be a Clifford vector");
        }
    }
}

// Drops round-off outside grade one so Clifford menhirs stay vectors.
Element vector_projection(const Element& e) {
    if (!e.is_clifford()) return e;
    const auto& m = e.clifford();
    return Multivector::vector(m.vector_part());
}

}  // namespace

Velocity::Velocity(Element value) : value_(std::move(value)) {
    check_vector_like(value_, "velocity");
    check_subluminal(value_.norm(), "velocity");
}

Menhir::Menhir(Element value) : value_(std::move(value)) {
    check_vector_like(value_, "menhir");
    check_subluminal(value_.norm(), "menhir");
}

// ---------------------------------------------------------------------------

MoebiusMatrix MoebiusMatrix::boost(const Menhir& e) {
    const Element& x = e.value();
    return {x.unit(), x, conjugate(x), x.unit()};
}

MoebiusMatrix MoebiusMatrix::rotation(const Element& alpha, const Element& beta) {
    return {alpha, alpha.zero(), beta.zero(), beta};
}

MoebiusMatrix MoebiusMatrix::operator*(const MoebiusMatrix& m) const {
    return {a * m.a + b * m.c, a * m.b + b * m.d, c * m.a + d * m.c, c * m.b + d * m.d};
}

Element MoebiusMatrix::apply(const Element& z) const { return right_divide(a * z + b, c * z + d); }

double MoebiusMatrix::max_abs_diff(const MoebiusMatrix& m) const {
    return std::max({menhir::max_abs_diff(a, m.a), menhir::max_abs_diff(b, m.b),
                     menhir::max_abs_diff(c, m.c), menhir::max_abs_diff(d, m.d)});
}

// ---------------------------------------------------------------------------

Element RotationDescriptor::apply(const Element& z) const { return left * z * inverse(right); }

std::optional<Element> RotationDescriptor::rho() const {
    if (left.is_clifford()) return std::nullopt;
    const auto kind = left.division().kind();
    if (kind == DivisionKind::Quaternion) return std::nullopt;
    return right_divide(left, right);
}

std::vector<double> RotationDescriptor::sphere_matrix(const Space& space) const {
    const std::size_t n = space.dimension();
    std::vector<double> q(n * n, 0.0);
    std::vector<double> basis(n, 0.0);
    for (std::size_t col = 0; col < n; ++col) {
        std::fill(basis.begin(), basis.end(), 0.0);
        basis[col] = 1.0;
        const auto image = space.extract(apply(space.embed(basis)));
        for (std::size_t row = 0; row < n; ++row) q[row * n + col] = image[row];
    }
    return q;
}

std::vector<double> RotationDescriptor::frame_rotation(const Space& space) const {
    const std::size_t n = space.dimension();
    auto q = sphere_matrix(space);
    std::vector<double> t(n * n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) t[c * n + r] = q[r * n + c];
    return t;
}

double RotationDescriptor::angle(const Space& space) const {
    const std::size_t n = space.dimension();
    if (n == 1) return 0.0;
    const auto q = sphere_matrix(space);
    if (n == 2) return std::atan2(q[2], q[0]);
    Eigen::MatrixXd m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = q[r * n + c];
    Eigen::EigenSolver<Eigen::MatrixXd> solver(m, false);
    double best = 0.0;
    for (const auto& lambda : solver.eigenvalues()) best = std::max(best, std::abs(std::arg(lambda)));
    return best;
}

// ---------------------------------------------------------------------------

Menhir menhir_of(const Velocity& v) {
    const double s = v.speed();
    check_subluminal(s, "velocity", superluminal_guard);
    // 1 - s^2 factored to keep precision close to the light cone.
    const double root = std::sqrt((1.0 - s) * (1.0 + s));
    return Menhir(v.value() * (1.0 / (1.0 + root)));
}

Velocity velocity_of(const Menhir& e) {
    return Velocity(vector_projection(e.value() * (2.0 / (1.0 + e.value().norm_sq()))));
}

Menhir compose_menhirs(const Menhir& e1, const Menhir& e2) {
    const Element& x = e1.value();
    const Element& y = e2.value();
    if (!x.same_algebra(y)) throw Error(ErrorCode::TagMismatch, "menhirs from different algebras");
    return Menhir(vector_projection(right_divide(x + y, x.unit() + conjugate(x) * y)));
}

RotationDescriptor thomas_rotation(const Menhir& e1, const Menhir& e2) {
    const Element& x = e1.value();
    const Element& y = e2.value();
    if (!x.same_algebra(y)) throw Error(ErrorCode::TagMismatch, "menhirs from different algebras");
    return {x.unit() + y * conjugate(x), x.unit() + conjugate(y) * x};
}

DecomposedTransform master_decompose(const Menhir& e1, const Menhir& e2) {
    return {thomas_rotation(e1, e2).matrix(), MoebiusMatrix::boost(compose_menhirs(e1, e2))};
}

DecomposedTransform split_diagonal(const MoebiusMatrix& m) {
    const Element ai = inverse(m.a);
    const Element di = inverse(m.d);
    return {MoebiusMatrix::rotation(m.a, m.d), {m.a.unit(), ai * m.b, di * m.c, m.d.unit()}};
}

VelocityComposition compose_velocities(const Velocity& v, const Velocity& w) {
    const Menhir ev = menhir_of(v);
    const Menhir ew = menhir_of(w);
    const Menhir composite = compose_menhirs(ev, ew);
    return {velocity_of(composite), composite, thomas_rotation(ev, ew)};
}

Element moebius_apply(const MoebiusMatrix& m, const Element& z) {
    if (std::abs(z.norm() - 1.0) > sphere_tolerance) {
        throw Error(ErrorCode::Domain, "point is not on the unit sphere (|z| = " +
                                           std::to_string(z.norm()) + ")");
    }
    return m.apply(z);
}

AxisAngle rotation_axis_angle(const Menhir& e1, const Menhir& e2) {
    auto require_imaginary = [](const Element& e) {
        if (e.is_clifford() || e.division().kind() != DivisionKind::Quaternion ||
            std::abs(e.division()[0]) > 1e-12) {
            throw Error(ErrorCode::Domain, "axis/angle needs purely imaginary quaternion menhirs");
        }
    };
    require_imaginary(e1.value());
    require_imaginary(e2.value());

    const DivisionScalar prod = (e2.value() * e1.value()).division();
    const DivisionScalar q = DivisionScalar::quaternion(1.0, 0, 0, 0) - prod;
    AxisAngle out;
    const double im = std::sqrt(prod[1] * prod[1] + prod[2] * prod[2] + prod[3] * prod[3]);
    // 2 arccos(Re q / |q|), evaluated through atan2 for small-angle accuracy.
    out.angle = 2.0 * std::atan2(im, q[0]);
    if (im > 1e-15) {
        out.axis = {prod[1] / im, prod[2] / im, prod[3] / im};
        out.axis_defined = true;
    } else {
        out.angle = 0.0;
    }
    return out;
}

double menhir_magnitude(double speed) {
    if (speed < 0.0 || speed > 1.0) throw Error(ErrorCode::Domain, "speed outside [0, 1]");
    return speed / (1.0 + std::sqrt((1.0 - speed) * (1.0 + speed)));
}

double velocity_magnitude(double menhir_norm) {
    if (menhir_norm < 0.0 || menhir_norm > 1.0) throw Error(ErrorCode::Domain, "norm outside [0, 1]");
    return 2.0 * menhir_norm / (1.0 + menhir_norm * menhir_norm);
}

}  // namespace menhir
