#include "menhir/oracle.hpp"

#include <cmath>
#include <string>

#include "menhir/calculus.hpp"
#include "menhir/error.hpp"

namespace menhir {

Eigen::VectorXd MinkowskiVector::stacked() const {
    Eigen::VectorXd v(x.size() + 1);
    v(0) = t;
    v.tail(x.size()) = x;
    return v;
}

MinkowskiVector MinkowskiVector::from_stacked(const Eigen::VectorXd& v) {
    return {v(0), v.tail(v.size() - 1)};
}

Eigen::MatrixXd minkowski_metric(std::size_t n) {
    Eigen::MatrixXd g = -Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(n + 1),
                                                   static_cast<Eigen::Index>(n + 1));
    g(0, 0) = 1.0;
    return g;
}

LorentzMatrix::LorentzMatrix(Eigen::MatrixXd m, double tolerance) : m_(std::move(m)) {
    if (m_.rows() != m_.cols() || m_.rows() < 2) {
        throw Error(ErrorCode::UnsupportedDimension, "Lorentz matrix must be square, size >= 2");
    }
    const double scale = std::max(1.0, m_.cwiseAbs().maxCoeff());
    if (metric_defect() > tolerance * scale * scale) {
        throw Error(ErrorCode::Domain, "matrix does not preserve the Minkowski form");
    }
    if (m_(0, 0) < 1.0 - tolerance * scale) {
        throw Error(ErrorCode::Domain, "matrix is not orthochronous");
    }
    if (m_.determinant() <= 0.0) throw Error(ErrorCode::Domain, "matrix is not proper");
}

LorentzMatrix LorentzMatrix::identity(std::size_t n) {
    return {Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(n + 1),
                                      static_cast<Eigen::Index>(n + 1)),
            Unchecked{}};
}

LorentzMatrix LorentzMatrix::spatial_rotation(const Eigen::MatrixXd& q) {
    Eigen::MatrixXd m = Eigen::MatrixXd::Identity(q.rows() + 1, q.cols() + 1);
    m.bottomRightCorner(q.rows(), q.cols()) = q;
    return LorentzMatrix(std::move(m));
}

Eigen::MatrixXd LorentzMatrix::spatial_block() const {
    return m_.bottomRightCorner(m_.rows() - 1, m_.cols() - 1);
}

double LorentzMatrix::metric_defect() const {
    const Eigen::MatrixXd g = minkowski_metric(space_dimension());
    return (m_.transpose() * g * m_ - g).cwiseAbs().maxCoeff();
}

LorentzMatrix LorentzMatrix::inverse() const {
    const Eigen::MatrixXd g = minkowski_metric(space_dimension());
    return {g * m_.transpose() * g, Unchecked{}};
}

LorentzMatrix LorentzMatrix::operator*(const LorentzMatrix& other) const {
    if (other.m_.rows() != m_.rows()) {
        throw Error(ErrorCode::UnsupportedDimension, "Lorentz matrices of different size");
    }
    return {m_ * other.m_, Unchecked{}};
}

MinkowskiVector LorentzMatrix::operator*(const MinkowskiVector& v) const {
    return MinkowskiVector::from_stacked(m_ * v.stacked());
}

LorentzMatrix boost_matrix(const Eigen::VectorXd& v) {
    const auto n = static_cast<std::size_t>(v.size());
    if (n == 0) throw Error(ErrorCode::UnsupportedDimension, "empty velocity");
    const double s = v.norm();
    if (!(s < superluminal_guard)) {
        throw Error(ErrorCode::Superluminal, "boost speed " + std::to_string(s) + " is not below 1");
    }
    LorentzMatrix l = LorentzMatrix::identity(n);
    if (s == 0.0) return l;
    const double gamma = 1.0 / std::sqrt((1.0 - s) * (1.0 + s));
    // (gamma - 1) / s^2 without cancellation for small s.
    const double k = gamma * gamma / (gamma + 1.0);
    Eigen::MatrixXd m = Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(n + 1),
                                                  static_cast<Eigen::Index>(n + 1));
    m(0, 0) = gamma;
    m.block(1, 0, v.size(), 1) = gamma * v;
    m.block(0, 1, 1, v.size()) = gamma * v.transpose();
    m.bottomRightCorner(v.size(), v.size()) += k * v * v.transpose();
    return LorentzMatrix(std::move(m));
}

PolarDecomposition polar_decompose(const LorentzMatrix& l) {
    const Eigen::MatrixXd& m = l.matrix();
    const double gamma = m(0, 0);
    if (gamma < 1.0 - 1e-10) throw Error(ErrorCode::Domain, "matrix is not orthochronous");
    const Eigen::Index n = m.rows() - 1;
    const Eigen::VectorXd p = m.block(1, 0, n, 1);  // gamma * u
    const Eigen::VectorXd u = p / gamma;

    // With L = B(u) R the spatial block obeys L_ss = (I + p p^T / (gamma (gamma + 1))) R_ss,
    // whose inverse is I - p p^T / (gamma (gamma + 1)). Using it directly avoids the
    // O(gamma^2) cancellation of B(u)^-1 L near the light cone.
    const Eigen::MatrixXd lss = m.bottomRightCorner(n, n);
    const Eigen::MatrixXd rss = lss - p * (p.transpose() * lss) / (gamma * (gamma + 1.0));

    Eigen::MatrixXd r = Eigen::MatrixXd::Identity(n + 1, n + 1);
    r.bottomRightCorner(n, n) = rss;
    return {LorentzMatrix(std::move(r), 1e-8), u};
}

Eigen::VectorXd aberrate_ray(const LorentzMatrix& l, const Eigen::VectorXd& a) {
    if (a.size() != static_cast<Eigen::Index>(l.space_dimension())) {
        throw Error(ErrorCode::UnsupportedDimension, "star and boost dimensions differ");
    }
    if (std::abs(a.norm() - 1.0) > sphere_tolerance) {
        throw Error(ErrorCode::Domain, "star direction is not a unit vector");
    }
    const MinkowskiVector ray{-1.0, a};
    const MinkowskiVector image = l.inverse() * ray;
    Eigen::VectorXd out = image.x / (-image.t);
    return out / out.norm();
}

double axis_projection_shift(double x, double v) {
    if (std::abs(x) > 1.0 || !(std::abs(v) < 1.0)) {
        throw Error(ErrorCode::Domain, "axis projection needs |x| <= 1 and |v| < 1");
    }
    return (x + v) / (1.0 + v * x);
}

}  // namespace menhir
