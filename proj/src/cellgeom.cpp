#include "polycover/cellgeom.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>

namespace polycover {

namespace {

constexpr double kPi = std::numbers::pi;
const double kSqrt2 = std::sqrt(2.0);
const double kSqrt3 = std::sqrt(3.0);
const double kSqrt5 = std::sqrt(5.0);

std::string format_g9(double value) {
    char buf[32];
    // avoid "-0" so exports are stable under sign noise
    if (value == 0.0) value = 0.0;
    std::snprintf(buf, sizeof buf, "%.9g", value);
    return buf;
}

}  // namespace

CellGeometry cell_geometry(StrategyKind kind, double sensing_radius) {
    require_positive_length(sensing_radius, "sensing radius");
    const double r = sensing_radius;
    switch (kind) {
        case StrategyKind::Cube: {
            const double a = 2.0 * r / kSqrt3;
            return {kind, a, 0.0, r, a * a * a, 6.0 * a * a};
        }
        case StrategyKind::HexagonalPrism: {
            const double a = r * std::sqrt(2.0 / 3.0);
            const double h = a * kSqrt2;
            const double volume = 1.5 * kSqrt3 * a * a * h;
            const double area = 6.0 * a * h + 3.0 * kSqrt3 * a * a;
            return {kind, a, h, r, volume, area};
        }
        case StrategyKind::RhombicDodecahedron: {
            const double a = r;
            return {kind, a, 0.0, r, 2.0 * a * a * a, 6.0 * kSqrt2 * a * a};
        }
        case StrategyKind::TruncatedOctahedron: {
            const double a = 2.0 * r / std::sqrt(10.0);
            const double volume = 8.0 * kSqrt2 * a * a * a;
            const double area = (6.0 + 12.0 * kSqrt3) * a * a;
            return {kind, a, 0.0, r, volume, area};
        }
    }
    throw std::logic_error("unknown StrategyKind");
}

double volumetric_quotient(StrategyKind kind) {
    switch (kind) {
        case StrategyKind::Cube: return 2.0 / (kSqrt3 * kPi);
        case StrategyKind::HexagonalPrism:
        case StrategyKind::RhombicDodecahedron: return 3.0 / (2.0 * kPi);
        case StrategyKind::TruncatedOctahedron: return 24.0 / (5.0 * kSqrt5 * kPi);
    }
    throw std::logic_error("unknown StrategyKind");
}

double node_count_ratio(StrategyKind kind_a, StrategyKind kind_b) {
    if (kind_a == kind_b) return 1.0;
    return volumetric_quotient(kind_b) / volumetric_quotient(kind_a);
}

double isoperimetric_quotient(StrategyKind kind) {
    const CellGeometry g = cell_geometry(kind, 1.0);
    return 36.0 * kPi * g.volume * g.volume / (g.surface_area * g.surface_area * g.surface_area);
}

double hexagon_quotient_2d() { return 3.0 * kSqrt3 / (2.0 * kPi); }

double hex_prism_quotient(double height_over_side) {
    const double t = height_over_side;
    const double circumradius = std::sqrt(1.0 + t * t / 4.0);
    return 1.5 * kSqrt3 * t / (4.0 / 3.0 * kPi * circumradius * circumradius * circumradius);
}

Point3 CellMesh::centroid() const {
    Point3 sum{};
    for (const Point3& p : vertices) sum = sum + p;
    return (1.0 / static_cast<double>(vertices.size())) * sum;
}

double CellMesh::signed_volume() const {
    // fan-triangulate each face and sum tetrahedra against the origin
    double six_v = 0.0;
    for (const auto& face : faces) {
        const Point3 a = vertices[face[0]];
        for (std::size_t i = 1; i + 1 < face.size(); ++i) {
            six_v += dot(a, cross(vertices[face[i]], vertices[face[i + 1]]));
        }
    }
    return six_v / 6.0;
}

double CellMesh::surface_area() const {
    double twice = 0.0;
    for (const auto& face : faces) {
        const Point3 a = vertices[face[0]];
        for (std::size_t i = 1; i + 1 < face.size(); ++i) {
            twice += norm(cross(vertices[face[i]] - a, vertices[face[i + 1]] - a));
        }
    }
    return twice / 2.0;
}

CellMesh CellMesh::translated(Point3 offset) const {
    CellMesh out = *this;
    for (Point3& p : out.vertices) p = p + offset;
    return out;
}

CellMesh convex_mesh_from_vertices(std::vector<Point3> vertices) {
    const std::size_t n = vertices.size();
    if (n < 4) throw std::domain_error("a convex mesh needs at least four vertices");

    Point3 center{};
    double scale = 0.0;
    for (const Point3& p : vertices) center = center + p;
    center = (1.0 / static_cast<double>(n)) * center;
    for (const Point3& p : vertices) scale = std::max(scale, distance(p, center));
    const double tol = 1e-9 * scale;

    struct Plane {
        Point3 normal;
        double offset;
    };
    std::vector<Plane> planes;
    CellMesh mesh;

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t k = j + 1; k < n; ++k) {
                Point3 normal = cross(vertices[j] - vertices[i], vertices[k] - vertices[i]);
                const double len = norm(normal);
                if (len <= tol * scale) continue;
                normal = (1.0 / len) * normal;
                double offset = dot(normal, vertices[i]);
                if (offset < dot(normal, center)) {
                    normal = -1.0 * normal;
                    offset = -offset;
                }
                const bool supporting = std::all_of(vertices.begin(), vertices.end(), [&](Point3 p) {
                    return dot(normal, p) <= offset + tol;
                });
                if (!supporting) continue;
                const bool seen = std::any_of(planes.begin(), planes.end(), [&](const Plane& pl) {
                    return dot(pl.normal, normal) > 1.0 - 1e-12 && std::abs(pl.offset - offset) <= tol;
                });
                if (seen) continue;
                planes.push_back({normal, offset});

                std::vector<std::size_t> ring;
                for (std::size_t m = 0; m < n; ++m) {
                    if (std::abs(dot(normal, vertices[m]) - offset) <= tol) ring.push_back(m);
                }
                // order counter-clockwise about the outward normal, starting at the lowest index
                Point3 face_center{};
                for (std::size_t m : ring) face_center = face_center + vertices[m];
                face_center = (1.0 / static_cast<double>(ring.size())) * face_center;
                const Point3 e1 = (1.0 / norm(vertices[ring[0]] - face_center)) * (vertices[ring[0]] - face_center);
                const Point3 e2 = cross(normal, e1);
                auto angle = [&](std::size_t m) {
                    const Point3 d = vertices[m] - face_center;
                    const double t = std::atan2(dot(d, e2), dot(d, e1));
                    return t < -1e-12 ? t + 2.0 * std::numbers::pi : std::max(t, 0.0);
                };
                std::sort(ring.begin(), ring.end(),
                          [&](std::size_t a, std::size_t b) { return angle(a) < angle(b); });
                mesh.faces.push_back(std::move(ring));
            }
        }
    }
    mesh.vertices = std::move(vertices);
    return mesh;
}

CellMesh cell_mesh(StrategyKind kind, double sensing_radius, Point3 center) {
    require_positive_length(sensing_radius, "sensing radius");
    const double r = sensing_radius;
    std::vector<Point3> v;

    switch (kind) {
        case StrategyKind::Cube: {
            const double h = r / kSqrt3;
            for (int sx : {-1, 1})
                for (int sy : {-1, 1})
                    for (int sz : {-1, 1}) v.push_back({sx * h, sy * h, sz * h});
            break;
        }
        case StrategyKind::HexagonalPrism: {
            // hexagon corners point along +x so that faces bisect the
            // in-plane lattice vectors at 30, 90, 150 degrees
            const double a = r * std::sqrt(2.0 / 3.0);
            const double half_h = a / kSqrt2;
            for (double z : {-half_h, half_h}) {
                for (int k = 0; k < 6; ++k) {
                    const double t = k * kPi / 3.0;
                    v.push_back({a * std::cos(t), a * std::sin(t), z});
                }
            }
            break;
        }
        case StrategyKind::RhombicDodecahedron: {
            // FCC cell rotated 45 degrees about z, matching the placement lattice
            const double c = r / kSqrt2;
            v.push_back({0.0, 0.0, -r});
            v.push_back({0.0, 0.0, r});
            for (int sx : {-1, 1})
                for (int sy : {-1, 1}) v.push_back({sx * c, sy * c, 0.0});
            for (int sz : {-1, 1}) {
                v.push_back({-c, 0.0, sz * r / 2.0});
                v.push_back({c, 0.0, sz * r / 2.0});
                v.push_back({0.0, -c, sz * r / 2.0});
                v.push_back({0.0, c, sz * r / 2.0});
            }
            break;
        }
        case StrategyKind::TruncatedOctahedron: {
            // all permutations of (0, +-r/sqrt5, +-2r/sqrt5)
            const double p = r / kSqrt5;
            const double q = 2.0 * r / kSqrt5;
            for (int s1 : {-1, 1}) {
                for (int s2 : {-1, 1}) {
                    v.push_back({0.0, s1 * p, s2 * q});
                    v.push_back({0.0, s1 * q, s2 * p});
                    v.push_back({s1 * p, 0.0, s2 * q});
                    v.push_back({s1 * q, 0.0, s2 * p});
                    v.push_back({s1 * p, s2 * q, 0.0});
                    v.push_back({s1 * q, s2 * p, 0.0});
                }
            }
            break;
        }
    }
    return convex_mesh_from_vertices(std::move(v)).translated(center);
}

void write_obj(std::ostream& out, const CellMesh& mesh) {
    for (const Point3& p : mesh.vertices) {
        out << "v " << format_g9(p.x) << ' ' << format_g9(p.y) << ' ' << format_g9(p.z) << '\n';
    }
    for (const auto& face : mesh.faces) {
        out << 'f';
        for (std::size_t idx : face) out << ' ' << idx + 1;
        out << '\n';
    }
}

void write_obj(std::ostream& out, std::span<const CellMesh> meshes, const std::string& object_prefix) {
    std::size_t base = 1;
    for (std::size_t i = 0; i < meshes.size(); ++i) {
        const CellMesh& mesh = meshes[i];
        out << "o " << object_prefix << i << '\n';
        for (const Point3& p : mesh.vertices) {
            out << "v " << format_g9(p.x) << ' ' << format_g9(p.y) << ' ' << format_g9(p.z) << '\n';
        }
        for (const auto& face : mesh.faces) {
            out << 'f';
            for (std::size_t idx : face) out << ' ' << idx + base;
            out << '\n';
        }
        base += mesh.vertices.size();
    }
}

}  // namespace polycover
