#pragma once

// Geometric wing of the calculus: reversions of the unit sphere K through
// interior points of the ball D, words of reversions, and the straightedge
// constructions of star shifts, the Thomas rotation angle and the composite
// menhir. Words act on the right, so A p q means "revert through p, then q".

#include <Eigen/Dense>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace menhir {

using Point = Eigen::VectorXd;

class ReversionPoint {
public:
    /// Throws Domain unless |p| < 1.
    explicit ReversionPoint(Point p);
    static ReversionPoint origin(std::size_t n);

    const Point& position() const noexcept { return p_; }
    std::size_t dimension() const noexcept { return static_cast<std::size_t>(p_.size()); }

private:
    Point p_;
};

using ReversionWord = std::vector<ReversionPoint>;

/// Second intersection of line(a, p) with the sphere. Throws Domain if |a| != 1.
Point revert(const Point& a, const ReversionPoint& p);

/// Left fold of revert over the word.
Point apply_word(const Point& a, const ReversionWord& word);

/// A -> A o e with e the menhir of v: where a star at a appears after the boost.
Point boost_star_shift(const Point& a, const Point& velocity);

struct ButterflyReport {
    std::size_t samples_used = 0;
    double max_residual = 0.0;
    double min_residual = 0.0;
    bool holds_everywhere = false;  ///< A p q r s = A at every sample
    bool holds_somewhere = false;   ///< ... at one sample at least
    /// The porism: holding at one point forces holding at all of them.
    bool consistent() const noexcept { return holds_everywhere || !holds_somewhere; }
};

/// Samples A over the sphere (off the line of the points, whose two sphere
/// intersections every even word fixes) and measures |A p q r s - A|.
/// Throws Domain unless p, q, r, s are collinear to 1e-10.
ButterflyReport butterfly_scan(const ReversionPoint& p, const ReversionPoint& q,
                               const ReversionPoint& r, const ReversionPoint& s,
                               std::size_t samples, std::uint64_t seed = 1,
                               double tolerance = 1e-9);

/// True iff A p q r s = A at every sampled A.
bool butterfly_check(const ReversionPoint& p, const ReversionPoint& q, const ReversionPoint& r,
                     const ReversionPoint& s, std::size_t samples);

/// b' on line(a, b) with A a b = A a_new b' for all A. Throws Domain if a_new
/// is off the line and ConstructionFailure if b' would leave D.
ReversionPoint find_conjugate_point(const ReversionPoint& a, const ReversionPoint& b,
                                    const ReversionPoint& a_new);

/// (-e, f), equivalent to the word (o, e, o, f) of the boost e followed by f.
ReversionWord two_boost_word(const Point& e, const Point& f);

/// Points of the unit circle fixed by a planar word, sorted by angle in [0, 2 pi).
std::vector<Point> planar_fixed_points(const ReversionWord& word);

/// Labeled points and segments of a construction, in the order they are built.
struct ConstructionTrace {
    struct LabeledPoint {
        std::string label;
        Point at;
    };
    struct Segment {
        std::string label;
        Point from;
        Point to;
    };
    std::vector<LabeledPoint> points;
    std::vector<Segment> segments;

    void point(std::string label, const Point& at) { points.push_back({std::move(label), at}); }
    void segment(std::string label, const Point& from, const Point& to) {
        segments.push_back({std::move(label), from, to});
    }
};

struct RotationConstruction {
    Point a;       ///< on the composite boost axis, so the boost part fixes it
    Point b;       ///< image of a under the two-boost word = its rotation
    double angle;  ///< signed central angle from a to b
    ConstructionTrace trace;
};

/// Planar only. For collinear menhirs the angle is 0 and a = b.
RotationConstruction construct_rotation(const Point& e, const Point& f);

enum class ChordPairing {
    Narrative,  ///< (B f o e, A) meets (B' f o e, A')
    Printed,    ///< (B f o e, A) meets (B' f o e, A)
};

struct CompositeConstruction {
    Point menhir;
    bool degenerate = false;  ///< chords (nearly) parallel; menhir is the algebraic value
    ConstructionTrace trace;
};

/// Straightedge construction of e [+] f in the disc. Throws ConstructionFailure
/// when the chord intersection falls outside D.
CompositeConstruction construct_composite_menhir(const Point& e, const Point& f,
                                                 ChordPairing pairing = ChordPairing::Narrative);

}  // namespace menhir
