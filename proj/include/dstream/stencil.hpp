#ifndef DSTREAM_STENCIL_HPP
#define DSTREAM_STENCIL_HPP

#include "dstream/geometry.hpp"

#include <optional>
#include <span>
#include <stdexcept>

namespace dstream {

/// Plane c0 + c1 x + c2 y through three non-collinear nodes.
struct ShapeCoefficients {
    double c0 = 0.0, c1 = 0.0, c2 = 0.0;
    double eval(Vec2 p) const { return c0 + c1 * p.x + c2 * p.y; }
};

struct DegenerateTriangle : std::runtime_error {
    DegenerateTriangle()
        : std::runtime_error("shape_coefficients: collinear points") {}
};

/// Interpolating plane through (p0,f0), (p1,f1), (p2,f2).
/// Throws DegenerateTriangle when the points are collinear.
ShapeCoefficients shape_coefficients(Vec2 p0, Vec2 p1, Vec2 p2,
                                     double f0, double f1, double f2);

/// Sector-average velocity: central node weighted twice, the two upwind
/// points once each.
inline Vec2 average_velocity(Vec2 v0, Vec2 v1, Vec2 v2) {
    return {(2.0 * v0.x + v1.x + v2.x) / 4.0,
            (2.0 * v0.y + v1.y + v2.y) / 4.0};
}

/// Nodal-update weights for the triangle (p0, p1, p2) under average
/// velocity V. a1 weights the value at p1, a2 the value at p2;
/// a0 = a1 + a2. With (p1, p2) counterclockwise-ordered and -V strictly
/// inside the cone spanned by p1-p0 and p2-p0, both raw weights are
/// positive. The limited form clamps each weight at zero.
struct StencilWeights {
    double a1 = 0.0, a2 = 0.0;
    bool limited = false;
    double a0() const { return a1 + a2; }
};

StencilWeights stencil_weights(Vec2 p0, Vec2 p1, Vec2 p2, Vec2 vavg,
                               bool limited);

/// One candidate sector as seen from a node: its median vector (from the
/// node toward the midpoint of the two stencil points) and its own average
/// velocity. Unavailable sectors (stencil data out of reach) are skipped.
struct SectorSample {
    Vec2 median;
    Vec2 vavg;
    bool available = true;
};

/// Picks the available sector whose average velocity is most anti-parallel
/// to its median (maximum angle, i.e. minimum cosine). Ties resolve to the
/// first sector in counterclockwise enumeration. Returns std::nullopt when
/// every available sector has zero average velocity (stagnant node).
std::optional<int> select_sector(std::span<const SectorSample> samples);

} // namespace dstream

#endif
