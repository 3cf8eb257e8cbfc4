#pragma once

#include <cstddef>
#include <vector>

namespace menhir {

struct GoldenSample {
    double v;
    double e;
    double gap;  ///< v - e
};

struct GoldenScan {
    std::vector<GoldenSample> grid;  ///< v = k / steps, k = 0..steps
    double argmax = 0.0;             ///< refined maximiser of v - e(v)
    double menhir_at_argmax = 0.0;
    double max_gap = 0.0;
    double ratio = 0.0;  ///< v / e at the maximiser
};

/// Uniform scan of the gap between a speed and its menhir, then a refined
/// maximum. Throws Domain for steps < 100.
GoldenScan golden_scan(std::size_t steps);

/// Maximiser of v - e(v) on (0, 1): golden-section search to bracket it, then
/// bisection on the derivative 1 - 1/(s (1 + s)), s = sqrt(1 - v^2).
double golden_argmax();

}  // namespace menhir
