#include "menhir/algebra.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <string>

#include "menhir/error.hpp"

namespace menhir {

const char* to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::TagMismatch: return "tag-mismatch";
        case ErrorCode::SingularElement: return "singular-element";
        case ErrorCode::UnsupportedDimension: return "unsupported-dimension";
        case ErrorCode::Superluminal: return "superluminal-input";
        case ErrorCode::Domain: return "domain";
        case ErrorCode::Parse: return "parse";
        case ErrorCode::ConstructionFailure: return "construction-failure";
        case ErrorCode::ConstructionDegenerate: return "construction-degenerate";
        case ErrorCode::Io: return "io";
    }
    return "unknown";
}

const char* to_string(DivisionKind kind) noexcept {
    switch (kind) {
        case DivisionKind::Real: return "real";
        case DivisionKind::Complex: return "complex";
        case DivisionKind::Quaternion: return "quaternion";
    }
    return "unknown";
}

// ---------------------------------------------------------------------------
// DivisionScalar

DivisionScalar::DivisionScalar(DivisionKind kind, std::array<double, 4> coeffs)
    : kind_(kind), c_(coeffs) {
    for (std::size_t i = width(); i < 4; ++i) {
        if (c_[i] != 0.0) {
            throw Error(ErrorCode::UnsupportedDimension,
                        std::string("coefficient outside the span of ") + to_string(kind));
        }
    }
}

DivisionScalar DivisionScalar::real(double a) { return {DivisionKind::Real, {a, 0, 0, 0}}; }

DivisionScalar DivisionScalar::complex(double re, double im) {
    return {DivisionKind::Complex, {re, im, 0, 0}};
}

DivisionScalar DivisionScalar::quaternion(double a, double b, double c, double d) {
    return {DivisionKind::Quaternion, {a, b, c, d}};
}

std::size_t DivisionScalar::width() const noexcept {
    switch (kind_) {
        case DivisionKind::Real: return 1;
        case DivisionKind::Complex: return 2;
        case DivisionKind::Quaternion: return 4;
    }
    return 4;
}

double DivisionScalar::norm_sq() const noexcept {
    return c_[0] * c_[0] + c_[1] * c_[1] + c_[2] * c_[2] + c_[3] * c_[3];
}

DivisionScalar DivisionScalar::conjugate() const noexcept {
    DivisionScalar r = *this;
    r.c_[1] = -c_[1];
    r.c_[2] = -c_[2];
    r.c_[3] = -c_[3];
    return r;
}

DivisionScalar DivisionScalar::inverse() const {
    const double n = norm_sq();
    if (n == 0.0) throw Error(ErrorCode::SingularElement, "inverse of zero");
    return conjugate() * (1.0 / n);
}

void DivisionScalar::require_same_kind(const DivisionScalar& q) const {
    if (kind_ != q.kind_) {
        throw Error(ErrorCode::TagMismatch, std::string("cannot combine ") + to_string(kind_) +
                                                " with " + to_string(q.kind_));
    }
}

DivisionScalar DivisionScalar::operator+(const DivisionScalar& q) const {
    require_same_kind(q);
    DivisionScalar r = *this;
    for (std::size_t i = 0; i < 4; ++i) r.c_[i] += q.c_[i];
    return r;
}

DivisionScalar DivisionScalar::operator-(const DivisionScalar& q) const {
    require_same_kind(q);
    DivisionScalar r = *this;
    for (std::size_t i = 0; i < 4; ++i) r.c_[i] -= q.c_[i];
    return r;
}

DivisionScalar DivisionScalar::operator-() const noexcept {
    DivisionScalar r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

DivisionScalar DivisionScalar::operator*(const DivisionScalar& q) const {
    require_same_kind(q);
    const auto& [a1, b1, c1, d1] = c_;
    const auto& [a2, b2, c2, d2] = q.c_;
    DivisionScalar r;
    r.kind_ = kind_;
    // Hamilton: ij = k, jk = i, ki = j.
    r.c_ = {a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2};
    return r;
}

DivisionScalar DivisionScalar::operator*(double s) const noexcept {
    DivisionScalar r = *this;
    for (auto& x : r.c_) x *= s;
    return r;
}

// ---------------------------------------------------------------------------
// Multivector

namespace {

std::size_t checked_blade_count(std::size_t dimension) {
    if (dimension == 0 || dimension > Multivector::max_dimension) {
        throw Error(ErrorCode::UnsupportedDimension,
                    "Clifford dimension must be in [1, " +
                        std::to_string(Multivector::max_dimension) + "], got " +
                        std::to_string(dimension));
    }
    return std::size_t{1} << dimension;
}

}  // namespace

int blade_product_sign(std::uint32_t a, std::uint32_t b) noexcept {
    // Count transpositions needed to move every factor of b left past the
    // higher-indexed factors of a.
    unsigned swaps = 0;
    for (std::uint32_t rest = a >> 1; rest != 0; rest >>= 1) {
        swaps += static_cast<unsigned>(std::popcount(rest & b));
    }
    swaps += static_cast<unsigned>(std::popcount(a & b));  // e_i e_i = -1
    return (swaps & 1u) ? -1 : 1;
}

Multivector::Multivector(std::size_t dimension)
    : dim_(dimension), c_(checked_blade_count(dimension), 0.0) {}

Multivector::Multivector(std::size_t dimension, std::vector<double> coeffs)
    : dim_(dimension), c_(std::move(coeffs)) {
    if (c_.size() != checked_blade_count(dimension)) {
        throw Error(ErrorCode::UnsupportedDimension,
                    "expected " + std::to_string(checked_blade_count(dimension)) +
                        " blade coefficients, got " + std::to_string(c_.size()));
    }
}

Multivector Multivector::scalar(std::size_t dimension, double s) {
    Multivector m(dimension);
    m.c_[0] = s;
    return m;
}

Multivector Multivector::vector(std::span<const double> components) {
    Multivector m(components.size());
    for (std::size_t i = 0; i < components.size(); ++i) m.c_[std::size_t{1} << i] = components[i];
    return m;
}

Multivector Multivector::blade(std::size_t dimension, std::uint32_t mask, double coeff) {
    Multivector m(dimension);
    if (mask >= m.c_.size()) throw Error(ErrorCode::UnsupportedDimension, "blade outside algebra");
    m.c_[mask] = coeff;
    return m;
}

double Multivector::norm_sq() const noexcept {
    double s = 0.0;
    for (double x : c_) s += x * x;
    return s;
}

Multivector Multivector::conjugate() const {
    Multivector r = *this;
    for (std::size_t mask = 0; mask < c_.size(); ++mask) {
        const auto k = static_cast<unsigned>(std::popcount(mask));
        // (-1)^{k(k+1)/2}
        if (((k * (k + 1) / 2) & 1u) != 0) r.c_[mask] = -r.c_[mask];
    }
    return r;
}

Multivector Multivector::inverse() const {
    const Multivector conj = conjugate();
    const Multivector prod = (*this) * conj;
    const double s = prod.c_[0];
    double rest = 0.0;
    for (std::size_t i = 1; i < prod.c_.size(); ++i) rest = std::max(rest, std::abs(prod.c_[i]));
    if (s == 0.0 || !(rest <= 1e-12 * std::abs(s))) {
        throw Error(ErrorCode::SingularElement,
                    "multivector is not rationalisable (x x* is not a nonzero scalar)");
    }
    return conj * (1.0 / s);
}

double Multivector::off_grade_magnitude(std::initializer_list<unsigned> grades) const noexcept {
    double m = 0.0;
    for (std::size_t mask = 0; mask < c_.size(); ++mask) {
        const auto k = static_cast<unsigned>(std::popcount(mask));
        if (std::find(grades.begin(), grades.end(), k) == grades.end()) {
            m = std::max(m, std::abs(c_[mask]));
        }
    }
    return m;
}

std::vector<double> Multivector::vector_part() const {
    std::vector<double> v(dim_);
    for (std::size_t i = 0; i < dim_; ++i) v[i] = c_[std::size_t{1} << i];
    return v;
}

void Multivector::require_same_dimension(const Multivector& m) const {
    if (dim_ != m.dim_) {
        throw Error(ErrorCode::TagMismatch, "Clifford dimensions differ: " + std::to_string(dim_) +
                                                " vs " + std::to_string(m.dim_));
    }
}

Multivector Multivector::operator+(const Multivector& m) const {
    require_same_dimension(m);
    Multivector r = *this;
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] += m.c_[i];
    return r;
}

Multivector Multivector::operator-(const Multivector& m) const {
    require_same_dimension(m);
    Multivector r = *this;
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] -= m.c_[i];
    return r;
}

Multivector Multivector::operator-() const {
    Multivector r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Multivector Multivector::operator*(const Multivector& m) const {
    require_same_dimension(m);
    Multivector r(dim_);
    const std::size_t n = c_.size();
    for (std::size_t a = 0; a < n; ++a) {
        if (c_[a] == 0.0) continue;
        for (std::size_t b = 0; b < n; ++b) {
            if (m.c_[b] == 0.0) continue;
            const int sign = blade_product_sign(static_cast<std::uint32_t>(a),
                                                static_cast<std::uint32_t>(b));
            r.c_[a ^ b] += sign * c_[a] * m.c_[b];
        }
    }
    return r;
}

Multivector Multivector::operator*(double s) const {
    Multivector r = *this;
    for (auto& x : r.c_) x *= s;
    return r;
}

// ---------------------------------------------------------------------------
// Element

Element Element::unit(double s) const {
    if (is_clifford()) return Multivector::scalar(clifford().dimension(), s);
    return DivisionScalar(division().kind(), {s, 0, 0, 0});
}

double Element::scalar_part() const noexcept {
    return is_clifford() ? clifford()[0] : division()[0];
}

double Element::norm_sq() const noexcept {
    return is_clifford() ? clifford().norm_sq() : division().norm_sq();
}

double Element::norm() const noexcept { return std::sqrt(norm_sq()); }

bool Element::same_algebra(const Element& e) const noexcept {
    if (is_clifford() != e.is_clifford()) return false;
    if (is_clifford()) return clifford().dimension() == e.clifford().dimension();
    return division().kind() == e.division().kind();
}

std::vector<double> Element::coefficients() const {
    if (is_clifford()) return clifford().coeffs();
    const auto& c = division().coeffs();
    return {c.begin(), c.begin() + static_cast<std::ptrdiff_t>(division().width())};
}

namespace {

[[noreturn]] void throw_mixed() {
    throw Error(ErrorCode::TagMismatch, "cannot combine a division scalar with a multivector");
}

template <class Op>
Element combine(const Element& a, const Element& b, Op op) {
    if (a.is_clifford() != b.is_clifford()) throw_mixed();
    if (a.is_clifford()) return op(a.clifford(), b.clifford());
    return op(a.division(), b.division());
}

}  // namespace

Element Element::operator+(const Element& e) const {
    return combine(*this, e, [](const auto& x, const auto& y) { return Element(x + y); });
}

Element Element::operator-(const Element& e) const {
    return combine(*this, e, [](const auto& x, const auto& y) { return Element(x - y); });
}

Element Element::operator-() const {
    return is_clifford() ? Element(-clifford()) : Element(-division());
}

Element Element::operator*(const Element& e) const {
    return combine(*this, e, [](const auto& x, const auto& y) { return Element(x * y); });
}

Element Element::operator*(double s) const {
    return is_clifford() ? Element(clifford() * s) : Element(division() * s);
}

Element multiply(const Element& p, const Element& q) { return p * q; }

Element conjugate(const Element& q) {
    return q.is_clifford() ? Element(q.clifford().conjugate()) : Element(q.division().conjugate());
}

Element inverse(const Element& q) {
    return q.is_clifford() ? Element(q.clifford().inverse()) : Element(q.division().inverse());
}

Element right_divide(const Element& p, const Element& q) { return p * inverse(q); }

Element vector_embed(std::span<const double> v, EmbedTarget target, std::size_t clifford_dim) {
    auto overflow = [&](std::size_t limit) {
        if (v.size() > limit) {
            throw Error(ErrorCode::UnsupportedDimension,
                        "vector of dimension " + std::to_string(v.size()) +
                            " does not fit (limit " + std::to_string(limit) + ")");
        }
    };
    auto at = [&](std::size_t i) { return i < v.size() ? v[i] : 0.0; };
    switch (target) {
        case EmbedTarget::Real:
            overflow(1);
            return DivisionScalar::real(at(0));
        case EmbedTarget::Complex:
            overflow(2);
            return DivisionScalar::complex(at(0), at(1));
        case EmbedTarget::Quaternion:
            overflow(3);
            return DivisionScalar::quaternion(0.0, at(0), at(1), at(2));
        case EmbedTarget::Clifford: {
            const std::size_t n = clifford_dim == 0 ? v.size() : clifford_dim;
            overflow(n);
            Multivector m(n);
            for (std::size_t i = 0; i < v.size(); ++i) m[std::size_t{1} << i] = v[i];
            return m;
        }
    }
    throw Error(ErrorCode::UnsupportedDimension, "unknown embedding target");
}

double max_abs_diff(const Element& a, const Element& b) {
    if (!a.same_algebra(b)) return std::numeric_limits<double>::infinity();
    const auto x = a.coefficients();
    const auto y = b.coefficients();
    double m = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) m = std::max(m, std::abs(x[i] - y[i]));
    return m;
}

}  // namespace menhir
