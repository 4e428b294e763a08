#include "dstream/fan.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace dstream {

SectorFan build_fan(int range) {
    if (range < 1 || range > kMaxRange) {
        throw std::invalid_argument("build_fan: range must be in [1, " +
                                    std::to_string(kMaxRange) + "], got " +
                                    std::to_string(range));
    }

    // Range 1: king moves in counterclockwise order starting at angle 0.
    std::vector<Direction> dirs = {{1, 0},  {1, 1},   {0, 1},  {-1, 1},
                                   {-1, 0}, {-1, -1}, {0, -1}, {1, -1}};

    // Each refinement bisects every sector with the mediant of its bounds.
    // Mediants of angularly adjacent pairs are strictly between them, so the
    // counterclockwise ordering is preserved without sorting.
    for (int r = 2; r <= range; ++r) {
        std::vector<Direction> refined;
        refined.reserve(dirs.size() * 2);
        for (size_t k = 0; k < dirs.size(); ++k) {
            const Direction a = dirs[k];
            const Direction b = dirs[(k + 1) % dirs.size()];
            refined.push_back(a);
            refined.push_back({a.di + b.di, a.dj + b.dj});
        }
        dirs = std::move(refined);
    }

    SectorFan fan;
    fan.range = range;
    fan.sectors.reserve(dirs.size());
    for (size_t k = 0; k < dirs.size(); ++k) {
        const Direction a = dirs[k];
        const Direction b = dirs[(k + 1) % dirs.size()];
        Sector s;
        s.n1 = a;
        s.n2 = b;
        s.median = {0.5 * (a.di + b.di), 0.5 * (a.dj + b.dj)};
        fan.sectors.push_back(s);
    }
    return fan;
}

const SectorFan& fan_for_range(int range) {
    static const std::array<SectorFan, kMaxRange> fans = [] {
        std::array<SectorFan, kMaxRange> f;
        for (int r = 1; r <= kMaxRange; ++r) f[r - 1] = build_fan(r);
        return f;
    }();
    if (range < 1 || range > kMaxRange) {
        throw std::invalid_argument("fan_for_range: range outside [1, 5]");
    }
    return fans[range - 1];
}

bool in_cone(const Sector& s, Vec2 w) {
    const Vec2 a = s.n1.vec();
    const Vec2 b = s.n2.vec();
    const double ca = cross(a, w);
    // Sectors are narrower than 180 degrees, so cross signs are decisive;
    // the dot check separates parallel from anti-parallel on the lower bound.
    const bool from_a = ca > 0.0 || (ca == 0.0 && dot(a, w) > 0.0);
    return from_a && cross(w, b) > 0.0;
}

} // namespace dstream
