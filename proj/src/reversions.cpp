#include "menhir/reversions.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <string>

#include "menhir/algebra.hpp"
#include "menhir/calculus.hpp"
#include "menhir/error.hpp"

namespace menhir {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

void require_planar(const Point& p, const char* what) {
    if (p.size() != 2) throw Error(ErrorCode::UnsupportedDimension, std::string(what) + " is planar only");
}

Point on_circle(double theta) {
    Point p(2);
    p << std::cos(theta), std::sin(theta);
    return p;
}

double signed_angle(const Point& from, const Point& to) {
    return std::atan2(from(0) * to(1) - from(1) * to(0), from.dot(to));
}

Point rotate(const Point& p, double angle) {
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    Point out(2);
    out << c * p(0) - s * p(1), s * p(0) + c * p(1);
    return out;
}

// Roots of a continuous-modulo-2pi angle function on the circle: grid scan for
// sign changes away from the +-pi wrap, then bisection to round-off.
std::vector<double> circle_roots(const std::function<double(double)>& h, std::size_t grid = 1440) {
    std::vector<double> roots;
    double t0 = 0.0;
    double h0 = h(t0);
    for (std::size_t k = 1; k <= grid; ++k) {
        const double t1 = two_pi * static_cast<double>(k) / static_cast<double>(grid);
        const double h1 = h(t1);
        if (h0 == 0.0) {
            roots.push_back(t0);
        } else if (h0 * h1 < 0.0 && std::abs(h0) < 1.5 && std::abs(h1) < 1.5) {
            double lo = t0, hi = t1, hlo = h0;
            for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
                const double mid = 0.5 * (lo + hi);
                const double hm = h(mid);
                if (hm == 0.0) {
                    lo = hi = mid;
                    break;
                }
                if ((hm < 0.0) == (hlo < 0.0)) {
                    lo = mid;
                    hlo = hm;
                } else {
                    hi = mid;
                }
            }
            roots.push_back(0.5 * (lo + hi));
        }
        t0 = t1;
        h0 = h1;
    }
    return roots;
}

// Intersection of the lines p + s (q - p) and r + t (u - r), least squares in
// the ambient space; returns the sine of the crossing angle through `sine`.
Point intersect_lines(const Point& p, const Point& q, const Point& r, const Point& u, double& sine) {
    const Point d1 = q - p;
    const Point d2 = u - r;
    const double n1 = d1.norm();
    const double n2 = d2.norm();
    const double cos = d1.dot(d2) / (n1 * n2);
    sine = std::sqrt(std::max(0.0, 1.0 - cos * cos));
    Eigen::MatrixXd m(p.size(), 2);
    m.col(0) = d1;
    m.col(1) = -d2;
    const Eigen::Vector2d st = m.colPivHouseholderQr().solve(r - p);
    return p + st(0) * d1;
}

double distance_to_line(const Point& x, const Point& origin, const Point& unit_dir) {
    const Point rel = x - origin;
    return (rel - rel.dot(unit_dir) * unit_dir).norm();
}

Point menhir_point(const Point& v) {
    const double s = v.norm();
    if (!(s < superluminal_guard)) {
        throw Error(ErrorCode::Superluminal, "velocity norm " + std::to_string(s) + " is not below 1");
    }
    return v / (1.0 + std::sqrt((1.0 - s) * (1.0 + s)));
}

}  // namespace

ReversionPoint::ReversionPoint(Point p) : p_(std::move(p)) {
    if (p_.size() == 0) throw Error(ErrorCode::UnsupportedDimension, "empty point");
    if (!(p_.norm() < 1.0)) throw Error(ErrorCode::Domain, "reversion point must lie inside the unit ball");
}

ReversionPoint ReversionPoint::origin(std::size_t n) {
    return ReversionPoint(Point::Zero(static_cast<Eigen::Index>(n)));
}

Point revert(const Point& a, const ReversionPoint& p) {
    if (a.size() != p.position().size()) {
        throw Error(ErrorCode::UnsupportedDimension, "sphere point and reversion point differ in dimension");
    }
    if (std::abs(a.norm() - 1.0) > sphere_tolerance) {
        throw Error(ErrorCode::Domain, "point is not on the unit sphere");
    }
    // |a + t d|^2 = 1 has roots t = 0 and t = -2 a.d / |d|^2; d != 0 for interior p.
    const Point d = p.position() - a;
    const double t = -2.0 * a.dot(d) / d.squaredNorm();
    Point out = a + t * d;
    return out / out.norm();
}

Point apply_word(const Point& a, const ReversionWord& word) {
    Point x = a;
    for (const auto& p : word) x = revert(x, p);
    return x;
}

Point boost_star_shift(const Point& a, const Point& velocity) {
    const Point e = menhir_point(velocity);
    return apply_word(a, {ReversionPoint::origin(static_cast<std::size_t>(a.size())), ReversionPoint(e)});
}

ButterflyReport butterfly_scan(const ReversionPoint& p, const ReversionPoint& q, const ReversionPoint& r,
                               const ReversionPoint& s, std::size_t samples, std::uint64_t seed,
                               double tolerance) {
    const std::vector<Point> pts{p.position(), q.position(), r.position(), s.position()};
    const auto n = pts[0].size();
    for (const auto& x : pts) {
        if (x.size() != n) throw Error(ErrorCode::UnsupportedDimension, "points differ in dimension");
    }
    // Line through the farthest pair.
    Point base = pts[0];
    Point dir = Point::Zero(n);
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            if ((pts[j] - pts[i]).norm() > dir.norm()) {
                base = pts[i];
                dir = pts[j] - pts[i];
            }
    if (dir.norm() < 1e-14) {
        dir = Point::Unit(n, 0);
    } else {
        dir /= dir.norm();
    }
    for (const auto& x : pts) {
        if (distance_to_line(x, base, dir) > 1e-10) {
            throw Error(ErrorCode::Domain, "butterfly points are not collinear");
        }
    }
    // Sphere points of the line: base + t dir with |.| = 1.
    const double bd = base.dot(dir);
    const double disc = std::sqrt(bd * bd - base.squaredNorm() + 1.0);
    const Point end1 = base + (-bd + disc) * dir;
    const Point end2 = base + (-bd - disc) * dir;

    const ReversionWord word{p, q, r, s};
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss;
    ButterflyReport report;
    report.min_residual = INFINITY;
    std::size_t attempts = 0;
    while (report.samples_used < samples && attempts < 100 * samples + 100) {
        ++attempts;
        Point a(n);
        for (Eigen::Index i = 0; i < n; ++i) a(i) = gauss(rng);
        a /= a.norm();
        if ((a - end1).norm() < 1e-6 || (a - end2).norm() < 1e-6) continue;
        const double res = (apply_word(a, word) - a).norm();
        report.max_residual = std::max(report.max_residual, res);
        report.min_residual = std::min(report.min_residual, res);
        ++report.samples_used;
    }
    report.holds_everywhere = report.samples_used > 0 && report.max_residual <= tolerance;
    report.holds_somewhere = report.samples_used > 0 && report.min_residual <= tolerance;
    return report;
}

bool butterfly_check(const ReversionPoint& p, const ReversionPoint& q, const ReversionPoint& r,
                     const ReversionPoint& s, std::size_t samples) {
    return butterfly_scan(p, q, r, s, samples).holds_everywhere;
}

ReversionPoint find_conjugate_point(const ReversionPoint& a, const ReversionPoint& b,
                                    const ReversionPoint& a_new) {
    const Point& pa = a.position();
    const Point& pb = b.position();
    const Point& pn = a_new.position();
    const auto n = pa.size();
    if (pb.size() != n || pn.size() != n) {
        throw Error(ErrorCode::UnsupportedDimension, "points differ in dimension");
    }
    const Point span = pb - pa;
    if (span.norm() < 1e-14) return a_new;  // A a a = A, so b' = a_new
    const Point dir = span / span.norm();
    if (distance_to_line(pn, pa, dir) > 1e-10) {
        throw Error(ErrorCode::Domain, "new point is not on line(a, b)");
    }
    if ((pn - pa).norm() < 1e-15) return b;

    // A unit vector orthogonal to the line; with dir it spans a plane containing
    // every point of the construction.
    Point perp = Point::Zero(n);
    for (Eigen::Index i = 0; i < n && perp.norm() < 0.5; ++i) {
        perp = Point::Unit(n, i) - Point::Unit(n, i).dot(dir) * dir;
    }
    if (n == 1) throw Error(ErrorCode::UnsupportedDimension, "conjugate point needs n >= 2");
    perp /= perp.norm();

    const ReversionWord ab{a, b};
    auto sphere_point = [&](double theta) -> Point { return std::cos(theta) * dir + std::sin(theta) * perp; };

    // Solve from the best conditioned of a few probes: b' lies on line(A a_new, A a b).
    Point best;
    double best_sine = -1.0;
    for (double theta : {1.1, 1.9, 2.6, 0.5, 4.0}) {
        const Point probe = sphere_point(theta);
        const Point c = revert(probe, a_new);
        const Point x = apply_word(probe, ab);
        if ((x - c).norm() < 1e-9) continue;
        double sine = 0.0;
        const Point candidate = intersect_lines(c, x, pa, pb, sine);
        if (sine > best_sine) {
            best_sine = sine;
            best = candidate;
        }
    }
    if (best_sine < 1e-9 || !(best.norm() < 1.0)) {
        throw Error(ErrorCode::ConstructionFailure, "conjugate point is not interior to the ball");
    }
    const ReversionPoint result(best);
    const ReversionWord conj{a_new, result};
    for (int k = 0; k < 8; ++k) {
        const Point probe = sphere_point(0.3 + 0.77 * k);
        if ((apply_word(probe, ab) - apply_word(probe, conj)).norm() > 1e-9) {
            throw Error(ErrorCode::ConstructionFailure, "conjugate point fails the porism check");
        }
    }
    return result;
}

ReversionWord two_boost_word(const Point& e, const Point& f) {
    return {ReversionPoint(-e), ReversionPoint(f)};
}

std::vector<Point> planar_fixed_points(const ReversionWord& word) {
    for (const auto& p : word) require_planar(p.position(), "fixed point search");
    auto h = [&](double theta) {
        const Point a = on_circle(theta);
        return signed_angle(a, apply_word(a, word));
    };
    std::vector<Point> out;
    for (double t : circle_roots(h)) {
        Point p = on_circle(t);
        if (!out.empty() && (out.back() - p).norm() < 1e-9) continue;
        out.push_back(std::move(p));
    }
    if (out.size() > 1 && (out.front() - out.back()).norm() < 1e-9) out.pop_back();
    return out;
}

RotationConstruction construct_rotation(const Point& e, const Point& f) {
    require_planar(e, "rotation construction");
    require_planar(f, "rotation construction");
    const ReversionWord word = two_boost_word(e, f);
    // The boost part of the word commutes with the antipodal map exactly on its
    // axis, and the rotation part commutes with it everywhere.
    auto h = [&](double theta) {
        const Point a = on_circle(theta);
        return signed_angle(apply_word(a, word), -apply_word(-a, word));
    };
    const auto roots = circle_roots(h);
    Point a = on_circle(0.0);
    if (!roots.empty()) {
        a = on_circle(roots.front());
    } else {
        double worst = 0.0;
        for (int k = 0; k < 64; ++k) worst = std::max(worst, std::abs(h(two_pi * k / 64.0)));
        if (worst > 1e-9) throw Error(ErrorCode::ConstructionFailure, "no boost axis found for the word");
    }
    RotationConstruction out{a, apply_word(a, word), 0.0, {}};
    out.angle = signed_angle(out.a, out.b);
    if (std::abs(out.angle) < 1e-15) {
        out.angle = 0.0;
        out.b = out.a;
    }
    out.trace.point("o", Point::Zero(2));
    out.trace.point("e", e);
    out.trace.point("f", f);
    out.trace.point("A", out.a);
    out.trace.point("B", out.b);
    out.trace.segment("oA", Point::Zero(2), out.a);
    out.trace.segment("oB", Point::Zero(2), out.b);
    return out;
}

CompositeConstruction construct_composite_menhir(const Point& e, const Point& f, ChordPairing pairing) {
    require_planar(e, "composite construction");
    require_planar(f, "composite construction");
    const RotationConstruction rot = construct_rotation(e, f);
    // A perpendicular to the boost axis gives the best conditioned chords.
    const Point a = rotate(rot.a, std::numbers::pi / 2.0);
    const Point b = rotate(a, rot.angle);
    const Point a2 = -a;
    const Point b2 = -b;
    const ReversionWord tail{ReversionPoint(f), ReversionPoint::origin(2), ReversionPoint(e)};
    const Point p1 = apply_word(b, tail);
    const Point p2 = apply_word(b2, tail);
    const Point& second_anchor = pairing == ChordPairing::Narrative ? a2 : a;

    CompositeConstruction out;
    out.trace.point("o", Point::Zero(2));
    out.trace.point("e", e);
    out.trace.point("f", f);
    out.trace.point("A", a);
    out.trace.point("B", b);
    out.trace.point("A'", a2);
    out.trace.point("B'", b2);
    out.trace.point("Bfoe", p1);
    out.trace.point("B'foe", p2);
    out.trace.segment("alpha", p1, a);
    out.trace.segment("beta", p2, second_anchor);

    double sine = 0.0;
    Point m = intersect_lines(p1, a, p2, second_anchor, sine);
    if (sine < 1e-9) {
        const Element x = vector_embed(std::span<const double>(e.data(), 2), EmbedTarget::Complex);
        const Element y = vector_embed(std::span<const double>(f.data(), 2), EmbedTarget::Complex);
        const auto z = compose_menhirs(Menhir(x), Menhir(y)).value().division();
        m = Point(2);
        m << z[0], z[1];
        out.degenerate = true;
    } else if (!(m.norm() < 1.0)) {
        throw Error(ErrorCode::ConstructionFailure, "chords meet outside the disc");
    }
    out.menhir = m;
    out.trace.point("e+f", m);
    return out;
}

}  // namespace menhir
