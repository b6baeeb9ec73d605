#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "polycover/types.hpp"

namespace polycover {

/// Closed-form geometry of a cell scaled so that its circumradius equals the
/// sensing radius.
///
/// `edge_length` is the polyhedron edge, except for the rhombic dodecahedron
/// where it is the side of the generating cube (which is also its
/// circumradius). `height` is only meaningful for the hexagonal prism and is
/// zero otherwise.
struct CellGeometry {
    StrategyKind kind;
    double edge_length;
    double height;
    double circumradius;
    double volume;
    double surface_area;
};

CellGeometry cell_geometry(StrategyKind kind, double sensing_radius);

/// Cell volume over circumsphere volume.
double volumetric_quotient(StrategyKind kind);

/// How many times more nodes `kind_a` needs than `kind_b` for the same volume.
double node_count_ratio(StrategyKind kind_a, StrategyKind kind_b);

/// 36*pi*V^2 / S^3.
double isoperimetric_quotient(StrategyKind kind);

/// Area of a regular hexagon over the area of its circumcircle.
double hexagon_quotient_2d();

/// Volumetric quotient of a hexagonal prism whose height is
/// `height_over_side` times the hexagon side. Peaks at sqrt(2).
double hex_prism_quotient(double height_over_side);

/// Convex polyhedral mesh. Faces are vertex-index rings wound
/// counter-clockwise when viewed from outside.
struct CellMesh {
    std::vector<Point3> vertices;
    std::vector<std::vector<std::size_t>> faces;

    Point3 centroid() const;
    double signed_volume() const;
    double surface_area() const;
    CellMesh translated(Point3 offset) const;
};

/// Cell mesh centred at `center`, oriented to tile with the placement lattice
/// of the same strategy.
CellMesh cell_mesh(StrategyKind kind, double sensing_radius, Point3 center);

/// Builds the convex hull faces of a small point set (at most a few dozen
/// vertices). Vertex order is preserved; faces come out in a deterministic
/// order.
CellMesh convex_mesh_from_vertices(std::vector<Point3> vertices);

/// Wavefront OBJ: `v`/`f` records, 1-based indices, 9 significant digits.
void write_obj(std::ostream& out, const CellMesh& mesh);

/// Several meshes in one OBJ file, each under its own `o <prefix><i>` group.
void write_obj(std::ostream& out, std::span<const CellMesh> meshes,
               const std::string& object_prefix = "cell_");

}  // namespace polycover
