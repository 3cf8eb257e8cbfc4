#pragma once

// Text form of algebra elements.
//
//   element  := sum | list
//   sum      := [sign] term { sign term }
//   term     := number ['/' number] [unit] ['/' number]
//             | unit ['/' number]
//   unit     := 'i' | 'j' | 'k'
//   list     := '[' sum { ',' sum } ']'      (each sum real)
//
// Whitespace is ignored. Examples: "4/5", "3i/5", "4/5+9/25i", "0.5i-0.25k",
// "[0.1, -0.2, 0.3]". A Clifford list of length n is a vector of Cliff(R^n);
// a list of length 2^n is the dense blade array.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "menhir/algebra.hpp"
#include "menhir/space.hpp"

namespace menhir {

/// Throws Error(Parse) on malformed text or on a value outside `space`.
Element parse_element(std::string_view text, const Space& space);

/// Number of entries of a bracketed list, if `text` is one.
std::optional<std::size_t> list_length(std::string_view text);

/// Exact-looking values print as integers or p/q (q <= 10000); others as %.17g.
std::string format_number(double x);

/// Inverse of parse_element up to round-off: "a+bi+cj+dk" with zero terms
/// dropped, or a bracketed list (vector list when the element is grade one).
std::string format_element(const Element& e);

}  // namespace menhir
