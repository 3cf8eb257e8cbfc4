#include "menhir/notation.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <vector>

#include "menhir/error.hpp"

namespace menhir {

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) {
        for (char c : text)
            if (c != ' ' && c != '\t' && c != '\n' && c != '\r') s_.push_back(c);
    }

    bool done() const { return pos_ >= s_.size(); }
    char peek() const { return done() ? '\0' : s_[pos_]; }
    bool accept(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw Error(ErrorCode::Parse, what + " at offset " + std::to_string(pos_) + " in '" + s_ + "'");
    }

    // Coefficients on 1, i, j, k.
    std::array<double, 4> sum() {
        std::array<double, 4> acc{};
        bool first = true;
        for (;;) {
            double sign = 1.0;
            if (accept('+')) {
            } else if (accept('-')) {
                sign = -1.0;
            } else if (!first) {
                break;
            }
            const auto [unit, value] = term();
            acc[unit] += sign * value;
            first = false;
            if (peek() != '+' && peek() != '-') break;
        }
        return acc;
    }

    std::vector<std::array<double, 4>> list() {
        if (!accept('[')) fail("expected '['");
        std::vector<std::array<double, 4>> out;
        if (accept(']')) return out;
        do {
            out.push_back(sum());
        } while (accept(','));
        if (!accept(']')) fail("expected ']'");
        return out;
    }

private:
    static std::size_t unit_index(char c) {
        switch (c) {
            case 'i': return 1;
            case 'j': return 2;
            case 'k': return 3;
            default: return 0;
        }
    }

    double number() {
        const char* begin = s_.data() + pos_;
        const char* end = s_.data() + s_.size();
        double value = 0.0;
        const auto res = std::from_chars(begin, end, value);
        if (res.ec != std::errc() || res.ptr == begin) fail("expected a number");
        pos_ += static_cast<std::size_t>(res.ptr - begin);
        return value;
    }

    double denominator() {
        const double d = number();
        if (d == 0.0) fail("division by zero");
        return d;
    }

    std::pair<std::size_t, double> term() {
        double value = 1.0;
        std::size_t unit = 0;
        if (unit_index(peek()) != 0) {
            unit = unit_index(peek());
            ++pos_;
        } else {
            value = number();
            if (accept('/')) value /= denominator();
            if (unit_index(peek()) != 0) {
                unit = unit_index(peek());
                ++pos_;
            }
        }
        if (unit != 0 && accept('/')) value /= denominator();
        return {unit, value};
    }

    std::string s_;
    std::size_t pos_ = 0;
};

double real_only(const std::array<double, 4>& c, const Parser& p) {
    if (c[1] != 0.0 || c[2] != 0.0 || c[3] != 0.0) p.fail("list entries must be real");
    return c[0];
}

}  // namespace

std::optional<std::size_t> list_length(std::string_view text) {
    Parser p(text);
    if (p.peek() != '[') return std::nullopt;
    return p.list().size();
}

Element parse_element(std::string_view text, const Space& space) {
    Parser p(text);
    if (p.done()) p.fail("empty element");
    if (space.model() == Model::Clifford) {
        const auto entries = p.list();
        if (!p.done()) p.fail("trailing characters");
        std::vector<double> values;
        for (const auto& c : entries) values.push_back(real_only(c, p));
        const std::size_t n = space.dimension();
        if (values.size() == n) return Multivector::vector(values);
        if (values.size() == (std::size_t{1} << n)) return Multivector(n, std::move(values));
        p.fail("list length " + std::to_string(values.size()) + " fits neither n = " + std::to_string(n) +
               " nor 2^n");
    }
    if (p.peek() == '[') p.fail("lists are only accepted for Clifford elements");
    const auto c = p.sum();
    if (!p.done()) p.fail("unexpected character");
    switch (space.model()) {
        case Model::Real:
            if (c[1] != 0.0 || c[2] != 0.0 || c[3] != 0.0) p.fail("real value expected");
            return DivisionScalar::real(c[0]);
        case Model::Complex:
            if (c[2] != 0.0 || c[3] != 0.0) p.fail("complex value expected");
            return DivisionScalar::complex(c[0], c[1]);
        case Model::ImQuaternion:
            if (c[0] != 0.0) p.fail("purely imaginary quaternion expected");
            return DivisionScalar::quaternion(0.0, c[1], c[2], c[3]);
        case Model::Quaternion:
        default:
            return DivisionScalar::quaternion(c[0], c[1], c[2], c[3]);
    }
}

std::string format_number(double x) {
    if (x == 0.0) return "0";
    if (std::isfinite(x) && std::abs(x) < 1e9) {
        // Continued fraction convergents of |x|.
        const double ax = std::abs(x);
        double h0 = 1, h1 = std::floor(ax), k0 = 0, k1 = 1;
        double frac = ax - std::floor(ax);
        for (int it = 0; it < 40; ++it) {
            if (std::abs(ax - h1 / k1) <= 1e-13 * std::max(1.0, ax)) {
                const long long num = static_cast<long long>(h1);
                const long long den = static_cast<long long>(k1);
                const std::string sign = x < 0 ? "-" : "";
                if (den == 1) return sign + std::to_string(num);
                return sign + std::to_string(num) + "/" + std::to_string(den);
            }
            if (frac < 1e-300) break;
            const double r = 1.0 / frac;
            const double a = std::floor(r);
            frac = r - a;
            const double h2 = a * h1 + h0;
            const double k2 = a * k1 + k0;
            if (k2 > 10000) break;
            h0 = h1;
            h1 = h2;
            k0 = k1;
            k1 = k2;
        }
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string format_element(const Element& e) {
    if (e.is_clifford()) {
        const Multivector& m = e.clifford();
        const bool vector = m.off_grade_magnitude({1}) == 0.0;
        const std::vector<double> values = vector ? m.vector_part() : m.coeffs();
        std::string out = "[";
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (i) out += ",";
            out += format_number(values[i]);
        }
        return out + "]";
    }
    static constexpr std::array<const char*, 4> units{"", "i", "j", "k"};
    const DivisionScalar& q = e.division();
    std::string out;
    for (std::size_t u = 0; u < q.width(); ++u) {
        const double c = q[u];
        if (c == 0.0) continue;
        std::string mag = format_number(std::abs(c));
        if (u != 0 && mag == "1") mag.clear();
        if (c < 0) {
            out += "-";
        } else if (!out.empty()) {
            out += "+";
        }
        out += mag + units[u];
    }
    return out.empty() ? "0" : out;
}

}  // namespace menhir
