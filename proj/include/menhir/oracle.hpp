#pragma once

// Independent ground truth in Minkowski space R^{1,n} with signature (+, -, ..., -):
// explicit boost matrices, their products, the polar split into boost x
// rotation, and aberration of the celestial sphere through null rays. Nothing
// here depends on the menhir calculus.

#include <Eigen/Dense>
#include <cstddef>

namespace menhir {

struct MinkowskiVector {
    double t = 0.0;
    Eigen::VectorXd x;

    double norm_sq() const { return t * t - x.squaredNorm(); }
    Eigen::VectorXd stacked() const;
    static MinkowskiVector from_stacked(const Eigen::VectorXd& v);
};

/// G = diag(1, -1, ..., -1) of size 1 + n.
Eigen::MatrixXd minkowski_metric(std::size_t n);

/// Element of the proper orthochronous Lorentz group SO_0(1, n).
class LorentzMatrix {
public:
    /// Validates L^T G L = G (relative to the scale of L), det L > 0 and L00 >= 1.
    explicit LorentzMatrix(Eigen::MatrixXd m, double tolerance = 1e-10);

    static LorentzMatrix identity(std::size_t n);
    /// Embeds an orthogonal n x n block with det +1.
    static LorentzMatrix spatial_rotation(const Eigen::MatrixXd& q);

    const Eigen::MatrixXd& matrix() const noexcept { return m_; }
    std::size_t space_dimension() const noexcept { return static_cast<std::size_t>(m_.rows()) - 1; }
    Eigen::MatrixXd spatial_block() const;

    /// max |L^T G L - G|.
    double metric_defect() const;

    /// Exact inverse G L^T G.
    LorentzMatrix inverse() const;
    LorentzMatrix operator*(const LorentzMatrix& other) const;
    MinkowskiVector operator*(const MinkowskiVector& v) const;

private:
    struct Unchecked {};
    LorentzMatrix(Eigen::MatrixXd m, Unchecked) : m_(std::move(m)) {}

    Eigen::MatrixXd m_;
};

/// Standard boost: B e0 = (gamma, gamma v); fixes the complement of span{e0, v}.
LorentzMatrix boost_matrix(const Eigen::VectorXd& v);

/// L = boost_matrix(velocity) * rotation with rotation fixing e0.
struct PolarDecomposition {
    LorentzMatrix rotation;
    Eigen::VectorXd velocity;
};

PolarDecomposition polar_decompose(const LorentzMatrix& l);

/// Observed direction of a star seen at `a` after the lab undergoes L: the null
/// ray (-1, a) is mapped by L^-1 and rescaled to time component -1.
/// aberrate_ray(L1 * L2, a) == aberrate_ray(L2, aberrate_ray(L1, a)).
Eigen::VectorXd aberrate_ray(const LorentzMatrix& l, const Eigen::VectorXd& a);

/// x' = (x + v) / (1 + v x), the projection of a star on the boost axis.
double axis_projection_shift(double x, double v);

}  // namespace menhir
