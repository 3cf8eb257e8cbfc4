#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "menhir/algebra.hpp"

namespace menhir {

/// How physical velocity vectors of R^n are carried by an algebra.
enum class Model {
    Real,          ///< n = 1, R
    Complex,       ///< n = 2, C
    ImQuaternion,  ///< n = 3, Im H
    Quaternion,    ///< n = 4, all of H
    Clifford,      ///< any n, grade-one part of Cliff(R^n)
};

/// A model together with its spatial dimension. Converts between R^n and
/// algebra elements; every rotation/velocity comparison goes through here.
class Space {
public:
    Space(Model model, std::size_t clifford_dim = 0);

    static Space real() { return Space(Model::Real); }
    static Space complex() { return Space(Model::Complex); }
    static Space im_quaternion() { return Space(Model::ImQuaternion); }
    static Space quaternion() { return Space(Model::Quaternion); }
    static Space clifford(std::size_t n) { return Space(Model::Clifford, n); }

    /// Parses "real", "complex", "imquaternion", "quaternion", "clifford".
    static std::optional<Model> parse_model(std::string_view name);

    Model model() const noexcept { return model_; }
    std::size_t dimension() const noexcept { return dim_; }
    std::string name() const;

    Element embed(std::span<const double> v) const;
    /// Inverse of embed; components outside the vector part are dropped.
    std::vector<double> extract(const Element& e) const;
    /// Largest coefficient of e outside the image of embed.
    double off_space_magnitude(const Element& e) const;

    bool contains(const Element& e) const noexcept;
    Element one() const;

private:
    Model model_;
    std::size_t dim_;
};

}  // namespace menhir
