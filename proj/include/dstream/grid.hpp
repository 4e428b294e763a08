#ifndef DSTREAM_GRID_HPP
#define DSTREAM_GRID_HPP

#include "dstream/geometry.hpp"

#include <cstdint>
#include <vector>

namespace dstream {

/// Uniform Cartesian node lattice with equal spacing in x and y.
/// Nodes are indexed (i, j) with i along x and j along y; flat storage is
/// row-major by j then i.
struct Grid {
    int nx = 0;
    int ny = 0;
    double x_min = 0.0, x_max = 0.0;
    double y_min = 0.0, y_max = 0.0;
    double dx = 0.0, dy = 0.0;

    // Throws std::invalid_argument for counts < 2, ill-ordered bounds, or
    // non-square spacing (dx != dy beyond rounding).
    static Grid make(int nx, int ny, double x_min, double x_max,
                     double y_min, double y_max);

    int num_nodes() const { return nx * ny; }
    int index(int i, int j) const { return j * nx + i; }
    bool contains(int i, int j) const {
        return i >= 0 && i < nx && j >= 0 && j < ny;
    }
    double x(int i) const { return x_min + i * dx; }
    double y(int j) const { return y_min + j * dy; }
    Vec2 node(int i, int j) const { return {x(i), y(j)}; }
    bool on_perimeter(int i, int j) const {
        return i == 0 || j == 0 || i == nx - 1 || j == ny - 1;
    }

    // Nearest node to a point (exact inverse of node() for lattice points).
    int index_of_x(double px) const;
    int index_of_y(double py) const;
};

struct ScalarField {
    Grid grid;
    std::vector<double> values;

    explicit ScalarField(const Grid& g, double fill = 0.0)
        : grid(g), values(static_cast<size_t>(g.num_nodes()), fill) {}

    double& at(int i, int j) { return values[grid.index(i, j)]; }
    double at(int i, int j) const { return values[grid.index(i, j)]; }
};

struct VelocityField {
    Grid grid;
    std::vector<double> u, v;

    explicit VelocityField(const Grid& g)
        : grid(g),
          u(static_cast<size_t>(g.num_nodes()), 0.0),
          v(static_cast<size_t>(g.num_nodes()), 0.0) {}

    Vec2 at(int i, int j) const {
        const int k = grid.index(i, j);
        return {u[k], v[k]};
    }
};

enum class NodeKind : std::uint8_t {
    Free,         // solved by the scheme (interior and computed outflow edges)
    Dirichlet,    // fixed boundary value
    ZeroGradient, // copies the adjacent interior node
};

/// Per-node boundary classification. Free is the default; Dirichlet nodes
/// carry a value, ZeroGradient nodes carry the flat index of their interior
/// source node.
struct BoundaryCondition {
    Grid grid;
    std::vector<NodeKind> kind;
    std::vector<double> value;     // meaningful for Dirichlet nodes
    std::vector<int> zg_source;    // meaningful for ZeroGradient nodes

    explicit BoundaryCondition(const Grid& g)
        : grid(g),
          kind(static_cast<size_t>(g.num_nodes()), NodeKind::Free),
          value(static_cast<size_t>(g.num_nodes()), 0.0),
          zg_source(static_cast<size_t>(g.num_nodes()), -1) {}

    // First setting of a node wins; later edges skip already-classified
    // nodes so corner values follow the problem's edge listing order.
    void set_dirichlet(int i, int j, double v);
    void set_zero_gradient(int i, int j, int src_i, int src_j);

    NodeKind kind_at(int i, int j) const { return kind[grid.index(i, j)]; }

    double dirichlet_max() const;
    double dirichlet_min() const;
};

/// Writes Dirichlet values and refreshes ZeroGradient copies in place.
void apply_boundary(ScalarField& field, const BoundaryCondition& bc);

} // namespace dstream

#endif
