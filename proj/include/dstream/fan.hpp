#ifndef DSTREAM_FAN_HPP
#define DSTREAM_FAN_HPP

#include "dstream/geometry.hpp"

#include <vector>

namespace dstream {

/// Integer lattice offset from the central node.
struct Direction {
    int di = 0;
    int dj = 0;
    Vec2 vec() const { return {static_cast<double>(di), static_cast<double>(dj)}; }
};

inline bool operator==(Direction a, Direction b) {
    return a.di == b.di && a.dj == b.dj;
}

/// One triangle of the fan. n1 and n2 are the two bounding upwind offsets,
/// n1 counterclockwise-first; median is the midpoint of the two offsets.
struct Sector {
    Direction n1, n2;
    Vec2 median;
};

/// The full 360-degree fan of sectors for a given range. Consecutive sectors
/// share exactly one bounding direction; sector k covers the angular cone
/// [angle(n1), angle(n2)) so a direction lying on a shared bound belongs to
/// the counterclockwise-later sector.
struct SectorFan {
    int range = 0;
    std::vector<Sector> sectors;
};

constexpr int kMaxRange = 5;

/// Builds the fan for 1 <= range <= 5. Range 1 is the 8 king-move offsets;
/// each increment inserts the mediant (di1+di2, dj1+dj2) of every adjacent
/// pair, doubling the sector count: 8, 16, 32, 64, 128.
/// Throws std::invalid_argument for range outside [1, 5].
SectorFan build_fan(int range);

/// Shared immutable fans, built once per process.
const SectorFan& fan_for_range(int range);

/// True when w lies in the sector's cone [angle(n1), angle(n2)).
bool in_cone(const Sector& s, Vec2 w);

} // namespace dstream

#endif
