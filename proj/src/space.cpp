#include "menhir/space.hpp"

#include <algorithm>
#include <cmath>

#include "menhir/error.hpp"

namespace menhir {

Space::Space(Model model, std::size_t clifford_dim) : model_(model) {
    switch (model) {
        case Model::Real: dim_ = 1; break;
        case Model::Complex: dim_ = 2; break;
        case Model::ImQuaternion: dim_ = 3; break;
        case Model::Quaternion: dim_ = 4; break;
        case Model::Clifford:
            if (clifford_dim == 0 || clifford_dim > Multivector::max_dimension) {
                throw Error(ErrorCode::UnsupportedDimension,
                            "Clifford model needs a dimension in [1, " +
                                std::to_string(Multivector::max_dimension) + "]");
            }
            dim_ = clifford_dim;
            break;
    }
}

std::optional<Model> Space::parse_model(std::string_view name) {
    if (name == "real") return Model::Real;
    if (name == "complex") return Model::Complex;
    if (name == "imquaternion") return Model::ImQuaternion;
    if (name == "quaternion") return Model::Quaternion;
    if (name == "clifford") return Model::Clifford;
    return std::nullopt;
}

std::string Space::name() const {
    switch (model_) {
        case Model::Real: return "real";
        case Model::Complex: return "complex";
        case Model::ImQuaternion: return "imquaternion";
        case Model::Quaternion: return "quaternion";
        case Model::Clifford: return "clifford" + std::to_string(dim_);
    }
    return "unknown";
}

Element Space::embed(std::span<const double> v) const {
    if (v.size() != dim_) {
        throw Error(ErrorCode::UnsupportedDimension,
                    name() + " expects vectors of dimension " + std::to_string(dim_) + ", got " +
                        std::to_string(v.size()));
    }
    switch (model_) {
        case Model::Real: return vector_embed(v, EmbedTarget::Real);
        case Model::Complex: return vector_embed(v, EmbedTarget::Complex);
        case Model::ImQuaternion: return vector_embed(v, EmbedTarget::Quaternion);
        case Model::Quaternion: return DivisionScalar::quaternion(v[0], v[1], v[2], v[3]);
        case Model::Clifford: return vector_embed(v, EmbedTarget::Clifford, dim_);
    }
    throw Error(ErrorCode::UnsupportedDimension, "unknown model");
}

std::vector<double> Space::extract(const Element& e) const {
    if (!contains(e)) throw Error(ErrorCode::TagMismatch, "element is not in " + name());
    switch (model_) {
        case Model::Real: return {e.division()[0]};
        case Model::Complex: return {e.division()[0], e.division()[1]};
        case Model::ImQuaternion: return {e.division()[1], e.division()[2], e.division()[3]};
        case Model::Quaternion: {
            const auto& c = e.division().coeffs();
            return {c.begin(), c.end()};
        }
        case Model::Clifford: return e.clifford().vector_part();
    }
    return {};
}

double Space::off_space_magnitude(const Element& e) const {
    switch (model_) {
        case Model::Real:
        case Model::Complex:
        case Model::Quaternion: return 0.0;
        case Model::ImQuaternion: return std::abs(e.division()[0]);
        case Model::Clifford: return e.clifford().off_grade_magnitude({1});
    }
    return 0.0;
}

bool Space::contains(const Element& e) const noexcept {
    switch (model_) {
        case Model::Real: return !e.is_clifford() && e.division().kind() == DivisionKind::Real;
        case Model::Complex: return !e.is_clifford() && e.division().kind() == DivisionKind::Complex;
        case Model::ImQuaternion:
        case Model::Quaternion:
            return !e.is_clifford() && e.division().kind() == DivisionKind::Quaternion;
        case Model::Clifford: return e.is_clifford() && e.clifford().dimension() == dim_;
    }
    return false;
}

Element Space::one() const {
    switch (model_) {
        case Model::Real: return DivisionScalar::real(1.0);
        case Model::Complex: return DivisionScalar::complex(1.0, 0.0);
        case Model::ImQuaternion:
        case Model::Quaternion: return DivisionScalar::quaternion(1.0, 0, 0, 0);
        case Model::Clifford: return Multivector::scalar(dim_, 1.0);
    }
    return {};
}

}  // namespace menhir
