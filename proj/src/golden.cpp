#include "menhir/golden.hpp"

#include <cmath>
#include <numbers>

#include "menhir/calculus.hpp"
#include "menhir/error.hpp"

namespace menhir {

namespace {

double gap(double v) { return v - menhir_magnitude(v); }

double gap_slope(double v) {
    const double s = std::sqrt((1.0 - v) * (1.0 + v));
    return 1.0 - 1.0 / (s * (1.0 + s));
}

}  // namespace

double golden_argmax() {
    const double inv_phi = 1.0 / std::numbers::phi;
    double lo = 0.0, hi = 1.0;
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = gap(x1), f2 = gap(x2);
    while (hi - lo > 1e-6) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = gap(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = gap(x1);
        }
    }
    // The gap is flat to ~1e-12 over the bracket; its slope is not.
    lo -= 1e-6;
    hi += 1e-6;
    for (int it = 0; it < 200 && hi - lo > 0.0; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (gap_slope(mid) > 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

GoldenScan golden_scan(std::size_t steps) {
    if (steps < 100) throw Error(ErrorCode::Domain, "golden scan needs at least 100 steps");
    GoldenScan out;
    out.grid.reserve(steps + 1);
    for (std::size_t k = 0; k <= steps; ++k) {
        const double v = static_cast<double>(k) / static_cast<double>(steps);
        const double e = menhir_magnitude(v);
        out.grid.push_back({v, e, v - e});
    }
    out.argmax = golden_argmax();
    out.menhir_at_argmax = menhir_magnitude(out.argmax);
    out.max_gap = out.argmax - out.menhir_at_argmax;
    out.ratio = out.argmax / out.menhir_at_argmax;
    return out;
}

}  // namespace menhir
