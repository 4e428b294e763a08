#include "dstream/grid.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace dstream {

Grid Grid::make(int nx, int ny, double x_min, double x_max,
                double y_min, double y_max) {
    if (nx < 2 || ny < 2) {
        throw std::invalid_argument("Grid: node counts must be at least 2");
    }
    if (!(x_min < x_max) || !(y_min < y_max)) {
        throw std::invalid_argument("Grid: bounds must be well ordered");
    }
    Grid g;
    g.nx = nx;
    g.ny = ny;
    g.x_min = x_min;
    g.x_max = x_max;
    g.y_min = y_min;
    g.y_max = y_max;
    g.dx = (x_max - x_min) / (nx - 1);
    g.dy = (y_max - y_min) / (ny - 1);
    if (std::abs(g.dx - g.dy) > 1e-12 * std::max(g.dx, g.dy)) {
        throw std::invalid_argument(
            "Grid: spacing must be square, got dx=" + std::to_string(g.dx) +
            " dy=" + std::to_string(g.dy));
    }
    return g;
}

int Grid::index_of_x(double px) const {
    return static_cast<int>(std::lround((px - x_min) / dx));
}

int Grid::index_of_y(double py) const {
    return static_cast<int>(std::lround((py - y_min) / dy));
}

void BoundaryCondition::set_dirichlet(int i, int j, double v) {
    const int k = grid.index(i, j);
    if (kind[k] != NodeKind::Free) return;
    kind[k] = NodeKind::Dirichlet;
    value[k] = v;
}

void BoundaryCondition::set_zero_gradient(int i, int j, int src_i, int src_j) {
    const int k = grid.index(i, j);
    if (kind[k] != NodeKind::Free) return;
    if (!grid.contains(src_i, src_j)) {
        throw std::invalid_argument(
            "BoundaryCondition: zero-gradient source outside grid");
    }
    kind[k] = NodeKind::ZeroGradient;
    zg_source[k] = grid.index(src_i, src_j);
}

double BoundaryCondition::dirichlet_max() const {
    double m = -std::numeric_limits<double>::infinity();
    for (size_t k = 0; k < kind.size(); ++k) {
        if (kind[k] == NodeKind::Dirichlet) m = std::max(m, value[k]);
    }
    return m;
}

double BoundaryCondition::dirichlet_min() const {
    double m = std::numeric_limits<double>::infinity();
    for (size_t k = 0; k < kind.size(); ++k) {
        if (kind[k] == NodeKind::Dirichlet) m = std::min(m, value[k]);
    }
    return m;
}

void apply_boundary(ScalarField& field, const BoundaryCondition& bc) {
    for (size_t k = 0; k < bc.kind.size(); ++k) {
        if (bc.kind[k] == NodeKind::Dirichlet) {
            field.values[k] = bc.value[k];
        }
    }
    // Zero-gradient copies read interior values after Dirichlet writes.
    for (size_t k = 0; k < bc.kind.size(); ++k) {
        if (bc.kind[k] == NodeKind::ZeroGradient) {
            field.values[k] = field.values[bc.zg_source[k]];
        }
    }
}

} // namespace dstream
