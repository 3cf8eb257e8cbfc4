#pragma once

// Algebraic menhir calculus: the menhir map between velocities and menhirs,
// the loop operation on menhirs, Thomas rotations, and the factorisation of a
// product of two boost-type Moebius matrices into rotation x boost.
//
// Order convention: compose_menhirs(e1, e2) means the boost e1 is applied
// FIRST and e2 second. In matrix form that is M(e2) * M(e1).

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "menhir/algebra.hpp"
#include "menhir/space.hpp"

namespace menhir {

/// Input norms at or above this bound are rejected as superluminal. Values
/// produced by the calculus only need to stay strictly inside the ball.
inline constexpr double superluminal_guard = 1.0 - 1e-12;

/// Tolerance on |z| = 1 for points handed to moebius_apply.
inline constexpr double sphere_tolerance = 1e-9;

class Velocity {
public:
    explicit Velocity(Element value);
    const Element& value() const noexcept { return value_; }
    double speed() const noexcept { return value_.norm(); }

private:
    Element value_;
};

class Menhir {
public:
    explicit Menhir(Element value);
    const Element& value() const noexcept { return value_; }
    double norm() const noexcept { return value_.norm(); }

private:
    Element value_;
};

/// 2x2 matrix [[a, b], [c, d]] over one algebra acting on the sphere by right
/// fractions, z -> (a z + b)(c z + d)^-1.
struct MoebiusMatrix {
    Element a, b, c, d;

    /// M(e) = [[1, e], [conj(e), 1]]; over Cliff this is [[1, f], [-f, 1]].
    static MoebiusMatrix boost(const Menhir& e);
    /// R(alpha, beta) = diag(alpha, beta), acting as z -> alpha z beta^-1.
    static MoebiusMatrix rotation(const Element& alpha, const Element& beta);

    MoebiusMatrix operator*(const MoebiusMatrix& m) const;
    Element apply(const Element& z) const;

    double max_abs_diff(const MoebiusMatrix& m) const;
};

/// Rotational part of a composition, algebra dependent: a unit complex number
/// (left = alpha, right = conj(alpha)), a quaternion sandwich pair, or a
/// Clifford even element b acting as z -> b z b^-1. The sphere action is
/// always z -> left * z * right^-1.
struct RotationDescriptor {
    Element left;
    Element right;

    Element apply(const Element& z) const;
    MoebiusMatrix matrix() const { return MoebiusMatrix::rotation(left, right); }

    /// rho = left / right for the commutative algebras (R and C).
    std::optional<Element> rho() const;

    /// Row-major n x n matrix of the action on the cromlech of `space`.
    std::vector<double> sphere_matrix(const Space& space) const;
    /// The rotation block of the Lorentz polar decomposition B(u) R of the
    /// same composition: the transpose of sphere_matrix.
    std::vector<double> frame_rotation(const Space& space) const;
    /// Signed sphere-action angle in the plane (n = 2); otherwise the largest
    /// principal angle in [0, pi]. Zero for n = 1.
    double angle(const Space& space) const;
};

struct DecomposedTransform {
    MoebiusMatrix rotation;  ///< diagonal R(alpha, beta)
    MoebiusMatrix boost;     ///< boost form M(e1 [+] e2)

    MoebiusMatrix product() const { return rotation * boost; }
};

struct VelocityComposition {
    Velocity velocity;
    Menhir menhir;
    RotationDescriptor rotation;
};

struct AxisAngle {
    std::array<double, 3> axis{};  ///< unit vector, zero when undefined
    double angle = 0.0;            ///< radians, in [0, pi)
    bool axis_defined = false;
};

Menhir menhir_of(const Velocity& v);
Velocity velocity_of(const Menhir& e);

/// e1 [+] e2 = (e1 + e2)(1 + conj(e1) e2)^-1.
Menhir compose_menhirs(const Menhir& e1, const Menhir& e2);

/// left = 1 + e2 conj(e1), right = 1 + conj(e2) e1.
RotationDescriptor thomas_rotation(const Menhir& e1, const Menhir& e2);

/// M(e2) M(e1) = R(1 + e2 conj(e1), 1 + conj(e2) e1) M(e1 [+] e2).
DecomposedTransform master_decompose(const Menhir& e1, const Menhir& e2);

/// Splits any matrix with invertible diagonal as diag(a, d) * [[1, a^-1 b], [d^-1 c, 1]].
/// This is the scalar-extraction rule made explicit: rows are left-divided by
/// their diagonal entries.
DecomposedTransform split_diagonal(const MoebiusMatrix& m);

/// v first, then w.
VelocityComposition compose_velocities(const Velocity& v, const Velocity& w);

/// Moebius action on a unit sphere point; throws Domain for |z| != 1.
Element moebius_apply(const MoebiusMatrix& m, const Element& z);

/// Thomas rotation for menhirs in Im H: axis = Im(e2 e1)/|Im(e2 e1)|,
/// angle = 2 arccos(Re(1 - e2 e1)/|1 - e2 e1|). This is the rotation block R
/// of the Lorentz polar decomposition B(u) R (right-hand rule).
AxisAngle rotation_axis_angle(const Menhir& e1, const Menhir& e2);

/// |e| as a function of |v| on the closed interval [0, 1].
double menhir_magnitude(double speed);
/// |v| as a function of |e| on [0, 1].
double velocity_magnitude(double menhir_norm);

}  // namespace menhir
