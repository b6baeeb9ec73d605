#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "polycover/lattice.hpp"
#include "polycover/types.hpp"

namespace polycover {

/// A group of lattice neighbours sharing one distance (in units of R).
struct NeighborClass {
    std::string axis_label;  // "u", "v", "w" or "mixed"
    double distance;
    int multiplicity;
};

/// Link length needed along each lattice axis, and the largest of the three.
/// Transmitting at `max_of_min * R` reaches every axis neighbour in one hop.
struct TransmissionTable {
    std::array<NeighborClass, 3> axes;
    double max_of_min;
};

TransmissionTable min_transmission_range(StrategyKind kind);

/// Distance classes of the face-adjacent Voronoi neighbours, shortest first.
std::vector<NeighborClass> voronoi_neighbor_classes(StrategyKind kind);

struct Edge {
    std::size_t a;  // a < b
    std::size_t b;
    double distance;

    friend bool operator==(const Edge&, const Edge&) = default;
};

struct CommGraph {
    std::size_t node_count = 0;
    double r_tx = 0.0;
    /// Sorted by (a, b).
    std::vector<Edge> edges;
};

/// Links every node pair within r_tx * (1 + 1e-9).
CommGraph build_graph(const Placement& placement, double r_tx);

/// Number of connected components (union-find).
std::size_t component_count(const CommGraph& graph);

/// Smallest radius at which the placement is one component: the largest
/// edge of a Euclidean minimum spanning tree (Kruskal).
double bottleneck_by_mst(const Placement& placement);

/// Same quantity, found by binary search over the sorted distinct pairwise
/// distances with a connectivity test per probe.
double bottleneck_by_search(const Placement& placement);

/// One-hop reachability of face neighbours, checked on interior nodes only
/// (nodes whose every face-neighbour offset is present in the placement).
struct AdjacencyCheck {
    std::size_t interior_nodes = 0;
    std::size_t missing_edges = 0;

    bool complete() const { return interior_nodes > 0 && missing_edges == 0; }
};

AdjacencyCheck check_face_adjacency(const Placement& placement, const CommGraph& graph);

/// Two notions of "connected" are reported side by side:
///  - graph-connected: the placement is a single component at r_tx; the
///    smallest such radius is `bottleneck_range`.
///  - adjacency-complete: every interior node reaches all its face
///    neighbours directly; the lattice-wide threshold is
///    `adjacency_complete_range` (the axis max-of-min times R).
struct ConnectivityReport {
    double r_tx = 0.0;
    std::size_t edge_count = 0;
    std::size_t component_count = 0;
    bool is_connected = false;
    double bottleneck_range = 0.0;
    double bottleneck_range_search = 0.0;
    double adjacency_complete_range = 0.0;
    AdjacencyCheck adjacency;
};

ConnectivityReport analyze(const Placement& placement, double r_tx);

}  // namespace polycover
