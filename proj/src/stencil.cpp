#include "dstream/stencil.hpp"

#include <algorithm>
#include <cmath>

namespace dstream {

ShapeCoefficients shape_coefficients(Vec2 p0, Vec2 p1, Vec2 p2,
                                     double f0, double f1, double f2) {
    const double den = p0.x * (p2.y - p1.y) + p1.x * (p0.y - p2.y) +
                       p2.x * (p1.y - p0.y);
    if (den == 0.0) throw DegenerateTriangle();
    ShapeCoefficients c;
    c.c0 = (f0 * (p2.x * p1.y - p1.x * p2.y) +
            f1 * (p0.x * p2.y - p2.x * p0.y) +
            f2 * (p1.x * p0.y - p0.x * p1.y)) / den;
    c.c1 = (f0 * (p2.y - p1.y) + f1 * (p0.y - p2.y) + f2 * (p1.y - p0.y)) / den;
    c.c2 = -(f0 * (p2.x - p1.x) + f1 * (p0.x - p2.x) + f2 * (p1.x - p0.x)) / den;
    return c;
}

StencilWeights stencil_weights(Vec2 p0, Vec2 p1, Vec2 p2, Vec2 vavg,
                               bool limited) {
    StencilWeights w;
    w.limited = limited;
    w.a1 = vavg.x * (p0.y - p2.y) - vavg.y * (p0.x - p2.x);
    w.a2 = vavg.y * (p0.x - p1.x) - vavg.x * (p0.y - p1.y);
    if (limited) {
        w.a1 = std::max(0.0, w.a1);
        w.a2 = std::max(0.0, w.a2);
    }
    return w;
}

std::optional<int> select_sector(std::span<const SectorSample> samples) {
    int best = -1;
    double best_cos = 2.0;
    for (size_t k = 0; k < samples.size(); ++k) {
        const SectorSample& s = samples[k];
        if (!s.available || is_zero(s.vavg)) continue;
        const double c =
            dot(s.vavg, s.median) / (norm(s.vavg) * norm(s.median));
        if (c < best_cos) {
            best_cos = c;
            best = static_cast<int>(k);
        }
    }
    if (best < 0) return std::nullopt;
    return best;
}

} // namespace dstream
