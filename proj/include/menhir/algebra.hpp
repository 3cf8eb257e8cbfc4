#pragma once

// Scalars of the three associative division algebras and the universal
// Clifford algebra of Euclidean R^n, with the conventions used throughout the
// menhir calculus:
//   * conjugation is an antiautomorphism that fixes scalars and negates vectors,
//   * vectors square to minus their Euclidean norm squared,
//   * fractions are right fractions, p / q = p * q^-1.

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <variant>
#include <vector>

namespace menhir {

enum class DivisionKind : std::uint8_t { Real, Complex, Quaternion };

const char* to_string(DivisionKind kind) noexcept;

/// Element of R, C or H stored as its four Hamilton coefficients (1, i, j, k).
/// Real elements keep i, j, k at zero and complex elements keep j, k at zero;
/// every operation preserves that shape because R < C < H are subalgebras.
class DivisionScalar {
public:
    DivisionScalar() = default;
    DivisionScalar(DivisionKind kind, std::array<double, 4> coeffs);

    static DivisionScalar real(double a);
    static DivisionScalar complex(double re, double im);
    static DivisionScalar quaternion(double a, double b, double c, double d);

    DivisionKind kind() const noexcept { return kind_; }
    const std::array<double, 4>& coeffs() const noexcept { return c_; }
    double operator[](std::size_t i) const { return c_[i]; }

    /// Number of real coefficients that the kind uses (1, 2 or 4).
    std::size_t width() const noexcept;

    double norm_sq() const noexcept;
    DivisionScalar conjugate() const noexcept;
    DivisionScalar inverse() const;

    DivisionScalar operator+(const DivisionScalar& q) const;
    DivisionScalar operator-(const DivisionScalar& q) const;
    DivisionScalar operator-() const noexcept;
    DivisionScalar operator*(const DivisionScalar& q) const;
    DivisionScalar operator*(double s) const noexcept;

private:
    void require_same_kind(const DivisionScalar& q) const;

    DivisionKind kind_ = DivisionKind::Real;
    std::array<double, 4> c_{};
};

/// Dense multivector of Cliff(R^n): coefficient k belongs to the basis blade
/// whose bitmask is k (bit i set <=> e_{i+1} is a factor, in increasing order).
class Multivector {
public:
    static constexpr std::size_t max_dimension = 12;

    Multivector() : Multivector(1) {}
    explicit Multivector(std::size_t dimension);
    Multivector(std::size_t dimension, std::vector<double> coeffs);

    static Multivector scalar(std::size_t dimension, double s);
    static Multivector vector(std::span<const double> components);
    static Multivector blade(std::size_t dimension, std::uint32_t mask, double coeff = 1.0);

    std::size_t dimension() const noexcept { return dim_; }
    std::size_t size() const noexcept { return c_.size(); }
    const std::vector<double>& coeffs() const noexcept { return c_; }
    double operator[](std::size_t mask) const { return c_[mask]; }
    double& operator[](std::size_t mask) { return c_[mask]; }

    double norm_sq() const noexcept;
    Multivector conjugate() const;
    /// Defined when x * conjugate(x) is a nonzero scalar; throws otherwise.
    Multivector inverse() const;

    /// Largest absolute coefficient outside the listed grades.
    double off_grade_magnitude(std::initializer_list<unsigned> grades) const noexcept;
    std::vector<double> vector_part() const;

    Multivector operator+(const Multivector& m) const;
    Multivector operator-(const Multivector& m) const;
    Multivector operator-() const;
    Multivector operator*(const Multivector& m) const;
    Multivector operator*(double s) const;

private:
    void require_same_dimension(const Multivector& m) const;

    std::size_t dim_;
    std::vector<double> c_;
};

/// Sign picked up when reordering blade(a)*blade(b) into canonical order,
/// including the Euclidean metric factor e_i e_i = -1.
int blade_product_sign(std::uint32_t a, std::uint32_t b) noexcept;

/// Tagged union over the two representations; all higher modules work with
/// this type only.
class Element {
public:
    Element() = default;
    Element(DivisionScalar q) : v_(std::move(q)) {}  // NOLINT(google-explicit-constructor)
    Element(Multivector m) : v_(std::move(m)) {}     // NOLINT(google-explicit-constructor)

    bool is_clifford() const noexcept { return std::holds_alternative<Multivector>(v_); }
    const DivisionScalar& division() const { return std::get<DivisionScalar>(v_); }
    const Multivector& clifford() const { return std::get<Multivector>(v_); }

    /// The multiplicative unit (or a scalar multiple of it) in the same algebra as *this.
    Element unit(double s = 1.0) const;
    Element zero() const { return unit(0.0); }

    double scalar_part() const noexcept;
    double norm_sq() const noexcept;
    double norm() const noexcept;

    bool same_algebra(const Element& e) const noexcept;

    /// Flat coefficient view: 1/2/4 Hamilton coefficients or 2^n blades.
    std::vector<double> coefficients() const;

    Element operator+(const Element& e) const;
    Element operator-(const Element& e) const;
    Element operator-() const;
    Element operator*(const Element& e) const;
    Element operator*(double s) const;
    friend Element operator*(double s, const Element& e) { return e * s; }

private:
    std::variant<DivisionScalar, Multivector> v_;
};

Element multiply(const Element& p, const Element& q);
Element conjugate(const Element& q);
Element inverse(const Element& q);
/// p / q = p * q^-1.
Element right_divide(const Element& p, const Element& q);

enum class EmbedTarget : std::uint8_t { Real, Complex, Quaternion, Clifford };

/// Grade-one image of a real n-vector: x (R), x + y i (C), b i + c j + d k (Im H),
/// or sum x_k e_k in Cliff(R^clifford_dim). For Clifford, clifford_dim == 0 means
/// "use v.size()".
Element vector_embed(std::span<const double> v, EmbedTarget target, std::size_t clifford_dim = 0);

/// Maximum absolute coefficient difference; incompatible algebras compare as +inf.
double max_abs_diff(const Element& a, const Element& b);

}  // namespace menhir
