#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <set>

#include "polycover/cellgeom.hpp"
#include "polycover/lattice.hpp"
#include "test_support.hpp"

using namespace polycover;

namespace {

const double kSqrt2 = std::sqrt(2.0);
const double kSqrt3 = std::sqrt(3.0);
const double kSqrt5 = std::sqrt(5.0);

// Brute-force nearest lattice node over a fixed coordinate box.
LatticeCoord brute_nearest(StrategyKind kind, Point3 p, Point3 seed, double r, int reach) {
    LatticeCoord best{};
    double best_d2 = std::numeric_limits<double>::infinity();
    for (int u = -reach; u <= reach; ++u)
        for (int v = -reach; v <= reach; ++v)
            for (int w = -reach; w <= reach; ++w) {
                const LatticeCoord c{u, v, w};
                const double d2 = distance_squared(place(kind, c, seed, r), p);
                if (d2 < best_d2) {
                    best_d2 = d2;
                    best = c;
                }
            }
    return best;
}

}  // namespace

TEST_SUITE("lattice") {

TEST_CASE("place examples") {
    const Point3 origin{};
    const Point3 to = place(StrategyKind::TruncatedOctahedron, {1, 0, 0}, origin, 1.0);
    CHECK(rel_close(to.x, 4.0 / kSqrt5, 1e-15));
    CHECK(std::abs(to.x - 1.78885) < 1e-5);
    CHECK(to.y == 0.0);
    CHECK(to.z == 0.0);

    const Point3 seed{7, -2, 3};
    for (StrategyKind k : kAllStrategies) {
        for (double r : {0.5, 1.0, 5.0}) CHECK(place(k, {0, 0, 0}, seed, r) == seed);
    }

    const Point3 hp = place(StrategyKind::HexagonalPrism, {1, 0, 0}, origin, 1.0);
    CHECK(std::abs(hp.x - 1.224745) < 1e-6);
    CHECK(std::abs(hp.y - 0.707107) < 1e-6);
    CHECK(hp.z == 0.0);

    const Point3 rd = place(StrategyKind::RhombicDodecahedron, {0, 0, 1}, origin, 1.0);
    CHECK(std::abs(rd.x - 0.707107) < 1e-6);
    CHECK(std::abs(rd.y - 0.707107) < 1e-6);
    CHECK(rd.z == 1.0);

    CHECK_THROWS_AS(place(StrategyKind::Cube, {}, origin, 0.0), std::domain_error);
    CHECK_THROWS_AS(lattice_distance(StrategyKind::Cube, {}, {1, 0, 0}, -1.0), std::domain_error);
}

TEST_CASE("lattice_distance examples") {
    CHECK(rel_close(lattice_distance(StrategyKind::Cube, {0, 0, 0}, {1, 0, 0}, 1.0), 2.0 / kSqrt3, 1e-15));
    CHECK(rel_close(lattice_distance(StrategyKind::TruncatedOctahedron, {0, 0, 0}, {0, 0, 1}, 1.0),
                    2.0 * kSqrt3 / kSqrt5, 1e-15));
    CHECK(std::abs(lattice_distance(StrategyKind::TruncatedOctahedron, {0, 0, 0}, {0, 0, 1}, 1.0) - 1.54919) < 1e-5);
    // (1,1,1) in the FCC frame maps to (3/sqrt2, 3/sqrt2, 1), length sqrt(10)
    const Point3 img = place(StrategyKind::RhombicDodecahedron, {1, 1, 1}, {}, 1.0);
    CHECK(rel_close(norm(img), std::sqrt(10.0), 1e-14));
    CHECK(rel_close(lattice_distance(StrategyKind::RhombicDodecahedron, {0, 0, 0}, {1, 1, 1}, 1.0), std::sqrt(10.0), 1e-14));
}

TEST_CASE("metric formulas agree with world-space distances on [-5,5]^3") {
    for (StrategyKind k : kAllStrategies) {
        CAPTURE(short_name(k));
        int mismatches = 0;
        for (int u = -5; u <= 5; ++u)
            for (int v = -5; v <= 5; ++v)
                for (int w = -5; w <= 5; ++w) {
                    const LatticeCoord a{0, 0, 0};
                    const LatticeCoord b{u, v, w};
                    const double via_metric = lattice_distance(k, a, b, 2.5);
                    const double via_world = distance(place(k, a, {1, 2, 3}, 2.5), place(k, b, {1, 2, 3}, 2.5));
                    if (!(u == 0 && v == 0 && w == 0) && !rel_close(via_metric, via_world, 1e-9)) ++mismatches;
                }
        CHECK(mismatches == 0);
    }
}

TEST_CASE("translation equivariance") {
    std::mt19937_64 gen(3);
    std::uniform_real_distribution<double> coord(-1000.0, 1000.0);
    std::uniform_int_distribution<int> idx(-20, 20);
    for (int trial = 0; trial < 2000; ++trial) {
        const Point3 seed{coord(gen), coord(gen), coord(gen)};
        const Point3 t{coord(gen), coord(gen), coord(gen)};
        const LatticeCoord c{idx(gen), idx(gen), idx(gen)};
        for (StrategyKind k : kAllStrategies) {
            const Point3 a = place(k, c, seed + t, 3.0);
            const Point3 b = place(k, c, seed, 3.0) + t;
            CHECK(distance(a, b) <= 1e-12 * (norm(a) + norm(b)));
        }
    }
}

TEST_CASE("distinct coordinates map to distinct points") {
    const double axis_w[] = {2.0 / kSqrt3, 2.0 / kSqrt3, kSqrt2, 2.0 * kSqrt3 / kSqrt5};
    for (std::size_t i = 0; i < kAllStrategies.size(); ++i) {
        const StrategyKind k = kAllStrategies[i];
        std::vector<Point3> pts;
        for (int u = -3; u <= 3; ++u)
            for (int v = -3; v <= 3; ++v)
                for (int w = -3; w <= 3; ++w) pts.push_back(place(k, {u, v, w}, {}, 1.0));
        double min_d = std::numeric_limits<double>::infinity();
        for (std::size_t a = 0; a < pts.size(); ++a)
            for (std::size_t b = a + 1; b < pts.size(); ++b) min_d = std::min(min_d, distance(pts[a], pts[b]));
        CAPTURE(short_name(k));
        CHECK(min_d >= axis_w[i] * (1.0 - 1e-9));
    }
}

TEST_CASE("nearest_cell inverts place on [-10,10]^3") {
    const Point3 seed{0.25, -4.0, 9.5};
    for (StrategyKind k : kAllStrategies) {
        int wrong = 0;
        for (int u = -10; u <= 10; ++u)
            for (int v = -10; v <= 10; ++v)
                for (int w = -10; w <= 10; ++w) {
                    const LatticeCoord c{u, v, w};
                    if (nearest_cell(k, place(k, c, seed, 1.7), seed, 1.7) != c) ++wrong;
                }
        CAPTURE(short_name(k));
        CHECK(wrong == 0);
    }
}

TEST_CASE("nearest_cell examples") {
    const LatticeCoord origin{};
    CHECK(nearest_cell(StrategyKind::TruncatedOctahedron, {0.4, 0, 0}, {}, 1.0) == origin);
    CHECK(brute_nearest(StrategyKind::TruncatedOctahedron, {0.4, 0, 0}, {}, 1.0, 3) == origin);

    const double step = 2.0 / kSqrt3;
    const Point3 just_past{step / 2.0 + 1e-9, 0, 0};
    CHECK(nearest_cell(StrategyKind::Cube, just_past, {}, 1.0) == LatticeCoord{1, 0, 0});
    CHECK(brute_nearest(StrategyKind::Cube, just_past, {}, 1.0, 3) == LatticeCoord{1, 0, 0});

    // exact midpoint: lexicographic tie-break picks (0,0,0) over (1,0,0)
    CHECK(nearest_cell(StrategyKind::Cube, {0.5, 0, 0}, {}, std::sqrt(3.0) / 2.0) == origin);

    CHECK_THROWS_AS(nearest_cell(StrategyKind::Cube, {std::nan(""), 0, 0}, {}, 1.0), std::domain_error);
    CHECK_THROWS_AS(nearest_cell(StrategyKind::Cube, {0, std::numeric_limits<double>::infinity(), 0}, {}, 1.0),
                    std::domain_error);
    CHECK_THROWS_AS(nearest_cell(StrategyKind::Cube, {0, 0, 0}, {}, 0.0), std::domain_error);
}

TEST_CASE("nearest_cell matches brute force on random points") {
    std::mt19937_64 gen(2024);
    std::uniform_real_distribution<double> coord(-1.5, 1.5);
    for (StrategyKind k : kAllStrategies) {
        int wrong = 0;
        for (int trial = 0; trial < 1500; ++trial) {
            const Point3 p{coord(gen), coord(gen), coord(gen)};
            if (nearest_cell(k, p, {}, 1.0) != brute_nearest(k, p, {}, 1.0, 3)) ++wrong;
        }
        CAPTURE(short_name(k));
        CHECK(wrong == 0);
    }
}

TEST_CASE("face neighbour offsets") {
    CHECK(face_neighbor_offsets(StrategyKind::Cube).size() == 6);
    CHECK(face_neighbor_offsets(StrategyKind::HexagonalPrism).size() == 8);
    CHECK(face_neighbor_offsets(StrategyKind::RhombicDodecahedron).size() == 12);
    CHECK(face_neighbor_offsets(StrategyKind::TruncatedOctahedron).size() == 14);
    for (StrategyKind k : kAllStrategies) {
        const auto offsets = face_neighbor_offsets(k);
        for (const LatticeCoord& c : offsets) {
            const LatticeCoord neg{-c.u, -c.v, -c.w};
            CHECK(std::find(offsets.begin(), offsets.end(), neg) != offsets.end());
        }
    }
}

TEST_CASE("cell mesh faces lie on the bisector planes of the face neighbours") {
    // the exported cell is the Voronoi cell of the placement lattice
    for (StrategyKind k : kAllStrategies) {
        CAPTURE(short_name(k));
        const CellMesh mesh = cell_mesh(k, 1.0, {});
        const auto offsets = face_neighbor_offsets(k);
        CHECK(mesh.faces.size() == offsets.size());
        for (const LatticeCoord& off : offsets) {
            const Point3 d = place(k, off, {}, 1.0);
            const double plane = dot(d, d) / 2.0;
            int on_plane = 0;
            for (const Point3& p : mesh.vertices) {
                CHECK(dot(p, d) <= plane + 1e-9);
                if (std::abs(dot(p, d) - plane) < 1e-9) ++on_plane;
            }
            CHECK(on_plane >= 4);
        }
    }
}

TEST_CASE("enumerate_region reproduces the 101^3 pseudo-code block") {
    const double r = 1.0;
    const double s = 2.0 * r / kSqrt3;
    const Region box({-50 * s, -50 * s, -50 * s}, {50 * s, 50 * s, 50 * s});
    const Placement p = enumerate_region(StrategyKind::Cube, box, {}, r, {.boundary_expansion = false});
    REQUIRE(p.nodes.size() == 101u * 101u * 101u);
    std::size_t i = 0;
    for (int u = -50; u <= 50; ++u)
        for (int v = -50; v <= 50; ++v)
            for (int w = -50; w <= 50; ++w) {
                const Node& n = p.nodes[i++];
                const Point3 expect{u * s, v * s, w * s};
                if (!(n.coord == LatticeCoord{u, v, w}) || distance(n.position, expect) > 1e-12) {
                    FAIL("node " << i << " differs");
                }
            }
}

TEST_CASE("enumerate_region placement invariants") {
    const Region box = Region::centered({1, 2, 3}, {20, 20, 20});
    for (StrategyKind k : kAllStrategies) {
        CAPTURE(short_name(k));
        const Placement p = enumerate_region(k, box, {1, 2, 3}, 5.0);
        CHECK(p.kind == k);
        CHECK(p.sensing_radius == 5.0);
        CHECK(std::is_sorted(p.nodes.begin(), p.nodes.end(),
                             [](const Node& a, const Node& b) { return a.coord < b.coord; }));
        std::set<LatticeCoord> unique;
        for (const Node& n : p.nodes) {
            unique.insert(n.coord);
            CHECK(n.position == place(k, n.coord, p.seed, 5.0));
            CHECK(box.expanded(5.0).contains(n.position, 1e-9 * 30.0));
        }
        CHECK(unique.size() == p.nodes.size());
    }
}

TEST_CASE("tiny region holds only the seed node") {
    for (StrategyKind k : kAllStrategies) {
        const Region tiny = Region::centered({3, 3, 3}, {0.1, 0.1, 0.1});
        const Placement p = enumerate_region(k, tiny, {3, 3, 3}, 5.0, {.boundary_expansion = false});
        REQUIRE(p.nodes.size() == 1);
        CHECK(p.nodes[0].coord == LatticeCoord{});
        const Placement grown = enumerate_region(k, tiny, {3, 3, 3}, 5.0);
        CHECK(std::any_of(grown.nodes.begin(), grown.nodes.end(),
                          [](const Node& n) { return n.coord == LatticeCoord{}; }));
    }
    // cube lattice: nearest neighbour at 2R/sqrt3 > R + 0.05, so still one node
    const Placement cube = enumerate_region(StrategyKind::Cube, Region::centered({}, {0.1, 0.1, 0.1}), {}, 5.0);
    CHECK(cube.nodes.size() == 1);
}

TEST_CASE("20^3 truncated octahedron count matches a brute-force scan") {
    const Region box = Region::centered({}, {20, 20, 20});
    const Region grown = box.expanded(5.0);
    const Placement p = enumerate_region(StrategyKind::TruncatedOctahedron, box, {}, 5.0);
    std::size_t brute = 0;
    for (int u = -20; u <= 20; ++u)
        for (int v = -20; v <= 20; ++v)
            for (int w = -20; w <= 20; ++w) {
                if (grown.contains(place(StrategyKind::TruncatedOctahedron, {u, v, w}, {}, 5.0), 1e-9 * 30.0)) ++brute;
            }
    CHECK(p.nodes.size() == brute);
    // interior density estimate for the unexpanded box
    const double interior = box.volume() / cell_geometry(StrategyKind::TruncatedOctahedron, 5.0).volume;
    CHECK(std::abs(interior - 8000.0 / 357.77) < 0.05);
    const double grown_estimate = grown.volume() / cell_geometry(StrategyKind::TruncatedOctahedron, 5.0).volume;
    CHECK(static_cast<double>(p.nodes.size()) > interior);
    CHECK(std::abs(static_cast<double>(p.nodes.size()) - grown_estimate) / grown_estimate < 0.35);
}

TEST_CASE("node density over a 40R cube") {
    const double r = 1.0;
    const Region box = Region::centered({}, {40 * r, 40 * r, 40 * r});
    for (StrategyKind k : kAllStrategies) {
        CAPTURE(short_name(k));
        const double cell = cell_geometry(k, r).volume;
        const Placement grown = enumerate_region(k, box, {}, r);
        const double density = static_cast<double>(grown.nodes.size()) * cell / box.expanded(r).volume();
        CHECK(density >= 0.97);
        CHECK(density <= 1.06);
        const Placement inner = enumerate_region(k, box, {}, r, {.boundary_expansion = false});
        const double inner_density = static_cast<double>(inner.nodes.size()) * cell / box.volume();
        CHECK(inner_density >= 0.97);
        CHECK(inner_density <= 1.06);
    }
}

TEST_CASE("enumerate errors") {
    CHECK_THROWS_AS(Region({0, 0, 0}, {1, 0, 1}), std::domain_error);
    CHECK_THROWS_AS(Region({0, 0, 0}, {-1, 1, 1}), std::domain_error);
    CHECK_THROWS_AS(enumerate_region(StrategyKind::Cube, Region({0, 0, 0}, {1, 1, 1}), {}, 0.0), std::domain_error);
    CHECK_THROWS_AS(enumerate_region(StrategyKind::Cube, Region({0, 0, 0}, {1e6, 1e6, 1e6}), {}, 1e-3),
                    std::domain_error);
    CHECK_THROWS_AS(enumerate_block(StrategyKind::Cube, {1, 0, 0}, {0, 0, 0}, {}, 1.0), std::domain_error);
}

TEST_CASE("enumerate_block") {
    const Placement p = enumerate_block(StrategyKind::TruncatedOctahedron, {0, 0, 0}, {4, 4, 4}, {}, 1.0);
    CHECK(p.nodes.size() == 125);
    CHECK(p.nodes.front().coord == LatticeCoord{0, 0, 0});
    CHECK(p.nodes.back().coord == LatticeCoord{4, 4, 4});
}

}  // TEST_SUITE
