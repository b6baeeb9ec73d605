#pragma once

#include <vector>

#include "polycover/types.hpp"

namespace polycover {

/// World-space images of the unit (u, v, w) steps for a strategy.
struct LatticeBasis {
    Point3 u;
    Point3 v;
    Point3 w;
};

LatticeBasis lattice_basis(StrategyKind kind, double sensing_radius);

/// World position of lattice node `c` for a lattice seeded at `seed`.
///
///   cube: seed + (u, v, w) * 2R/sqrt3
///   hexagonal prism: (u*R*sqrt(3/2), (u + 2v)*R/sqrt2, 2Rw/sqrt3)
///   rhombic dodecahedron: ((2u + w)*R/sqrt2, (2v + w)*R/sqrt2, w*R)
///   truncated octahedron: ((2u + w), (2v + w), w) * 2R/sqrt5
Point3 place(StrategyKind kind, LatticeCoord c, Point3 seed, double sensing_radius);

/// Distance between two lattice nodes from the oblique-coordinate metric,
/// without going through world coordinates.
double lattice_distance(StrategyKind kind, LatticeCoord a, LatticeCoord b, double sensing_radius);

/// Continuous (u, v, w) coordinates of a world point: the inverse of `place`.
Point3 fractional_coords(StrategyKind kind, Point3 p, Point3 seed, double sensing_radius);

/// Lattice node nearest to `p`. Equidistant candidates resolve to the
/// lexicographically smallest (u, v, w).
LatticeCoord nearest_cell(StrategyKind kind, Point3 p, Point3 seed, double sensing_radius);

/// Lattice offsets of the face-adjacent Voronoi neighbours of a node, sorted
/// by length then lexicographically. Derived from the lattice itself: an
/// offset is face-adjacent iff it and its negation are the only shortest
/// vectors of its class modulo twice the lattice.
std::vector<LatticeCoord> face_neighbor_offsets(StrategyKind kind);

struct Node {
    LatticeCoord coord;
    Point3 position;

    friend bool operator==(const Node&, const Node&) = default;
};

struct Placement {
    StrategyKind kind = StrategyKind::TruncatedOctahedron;
    double sensing_radius = 1.0;
    Point3 seed{};
    /// Sorted by (u, v, w).
    std::vector<Node> nodes;

    std::vector<Point3> positions() const;
};

struct EnumerateOptions {
    /// Grow the region by R on every face so the closed box is fully covered.
    bool boundary_expansion = true;
};

/// Every lattice node lying inside `region` (grown by R unless disabled).
Placement enumerate_region(StrategyKind kind, const Region& region, Point3 seed, double sensing_radius,
                           EnumerateOptions options = {});

/// All nodes with lo <= (u, v, w) <= hi componentwise.
Placement enumerate_block(StrategyKind kind, LatticeCoord lo, LatticeCoord hi, Point3 seed,
                          double sensing_radius);

}  // namespace polycover
