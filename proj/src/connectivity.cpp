#include "polycover/connectivity.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "polycover/spatial_index.hpp"

namespace polycover {

namespace {

class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n), rank_(n, 0), sets_(n) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (rank_[a] < rank_[b]) std::swap(a, b);
        parent_[b] = a;
        if (rank_[a] == rank_[b]) ++rank_[a];
        --sets_;
        return true;
    }

    std::size_t sets() const { return sets_; }

private:
    std::vector<std::size_t> parent_;
    std::vector<std::uint8_t> rank_;
    std::size_t sets_;
};

std::string axis_label_of(LatticeCoord c) {
    const int nonzero = (c.u != 0) + (c.v != 0) + (c.w != 0);
    if (nonzero != 1) return "mixed";
    if (c.u != 0) return "u";
    if (c.v != 0) return "v";
    return "w";
}

// Graph over all pairs within the smallest doubling of 2R that connects the
// placement. Its MST equals the MST of the complete Euclidean graph.
CommGraph spanning_candidates(const Placement& placement) {
    double radius = 2.0 * placement.sensing_radius;
    for (;;) {
        CommGraph g = build_graph(placement, radius);
        if (component_count(g) == 1) return g;
        radius *= 2.0;
    }
}

}  // namespace

TransmissionTable min_transmission_range(StrategyKind kind) {
    const LatticeCoord origin{};
    const std::array<std::pair<LatticeCoord, const char*>, 3> axes{
        {{{1, 0, 0}, "u"}, {{0, 1, 0}, "v"}, {{0, 0, 1}, "w"}}};
    TransmissionTable table{};
    table.max_of_min = 0.0;
    for (std::size_t i = 0; i < 3; ++i) {
        const double d = lattice_distance(kind, origin, axes[i].first, 1.0);
        table.axes[i] = {axes[i].second, d, 2};
        table.max_of_min = std::max(table.max_of_min, d);
    }
    return table;
}

std::vector<NeighborClass> voronoi_neighbor_classes(StrategyKind kind) {
    const LatticeCoord origin{};
    std::vector<NeighborClass> classes;
    std::vector<std::vector<LatticeCoord>> members;
    for (const LatticeCoord& offset : face_neighbor_offsets(kind)) {
        const double d = lattice_distance(kind, origin, offset, 1.0);
        if (classes.empty() || std::abs(classes.back().distance - d) > kRangeTolerance * d) {
            classes.push_back({"", d, 0});
            members.emplace_back();
        }
        ++classes.back().multiplicity;
        members.back().push_back(offset);
    }
    for (std::size_t i = 0; i < classes.size(); ++i) {
        std::string label = axis_label_of(members[i].front());
        for (const LatticeCoord& c : members[i]) {
            if (axis_label_of(c) != label) label = "mixed";
        }
        classes[i].axis_label = label;
    }
    return classes;
}

CommGraph build_graph(const Placement& placement, double r_tx) {
    require_positive_length(r_tx, "transmission range");
    CommGraph graph{placement.nodes.size(), r_tx, {}};
    if (placement.nodes.empty()) return graph;

    const std::vector<Point3> positions = placement.positions();
    const SpatialIndex index(positions, r_tx);
    const double reach = r_tx * (1.0 + kRangeTolerance);
    for (std::size_t i = 0; i < positions.size(); ++i) {
        for (std::size_t j : index.within(positions[i], reach)) {
            if (j > i) graph.edges.push_back({i, j, distance(positions[i], positions[j])});
        }
    }
    // already in (a, b) order: outer loop ascends a, within() ascends b
    return graph;
}

std::size_t component_count(const CommGraph& graph) {
    DisjointSets sets(graph.node_count);
    for (const Edge& e : graph.edges) sets.unite(e.a, e.b);
    return sets.sets();
}

double bottleneck_by_mst(const Placement& placement) {
    if (placement.nodes.size() < 2) return 0.0;
    std::vector<Edge> edges = spanning_candidates(placement).edges;
    std::sort(edges.begin(), edges.end(), [](const Edge& x, const Edge& y) {
        if (x.distance != y.distance) return x.distance < y.distance;
        return std::pair(x.a, x.b) < std::pair(y.a, y.b);
    });
    DisjointSets sets(placement.nodes.size());
    double longest = 0.0;
    for (const Edge& e : edges) {
        if (sets.unite(e.a, e.b)) {
            longest = e.distance;
            if (sets.sets() == 1) break;
        }
    }
    return longest;
}

double bottleneck_by_search(const Placement& placement) {
    if (placement.nodes.size() < 2) return 0.0;
    const std::vector<Edge> edges = spanning_candidates(placement).edges;
    std::vector<double> candidates;
    candidates.reserve(edges.size());
    for (const Edge& e : edges) candidates.push_back(e.distance);
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    auto connected_at = [&](double limit) {
        DisjointSets sets(placement.nodes.size());
        for (const Edge& e : edges) {
            if (e.distance <= limit) sets.unite(e.a, e.b);
        }
        return sets.sets() == 1;
    };
    std::size_t lo = 0;
    std::size_t hi = candidates.size() - 1;  // connected by construction
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        if (connected_at(candidates[mid])) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    return candidates[lo];
}

AdjacencyCheck check_face_adjacency(const Placement& placement, const CommGraph& graph) {
    std::map<LatticeCoord, std::size_t> where;
    for (std::size_t i = 0; i < placement.nodes.size(); ++i) where.emplace(placement.nodes[i].coord, i);
    std::vector<std::pair<std::size_t, std::size_t>> linked;
    linked.reserve(graph.edges.size());
    for (const Edge& e : graph.edges) linked.emplace_back(e.a, e.b);
    std::sort(linked.begin(), linked.end());

    const std::vector<LatticeCoord> offsets = face_neighbor_offsets(placement.kind);
    AdjacencyCheck check;
    for (std::size_t i = 0; i < placement.nodes.size(); ++i) {
        std::vector<std::size_t> neighbors;
        for (const LatticeCoord& off : offsets) {
            const auto it = where.find(placement.nodes[i].coord + off);
            if (it == where.end()) break;
            neighbors.push_back(it->second);
        }
        if (neighbors.size() != offsets.size()) continue;
        ++check.interior_nodes;
        for (std::size_t j : neighbors) {
            const auto key = std::minmax(i, j);
            if (!std::binary_search(linked.begin(), linked.end(), std::pair(key.first, key.second))) {
                ++check.missing_edges;
            }
        }
    }
    return check;
}

ConnectivityReport analyze(const Placement& placement, double r_tx) {
    if (placement.nodes.empty()) throw std::domain_error("placement has no nodes");
    const CommGraph graph = build_graph(placement, r_tx);
    ConnectivityReport report;
    report.r_tx = r_tx;
    report.edge_count = graph.edges.size();
    report.component_count = component_count(graph);
    report.is_connected = report.component_count == 1;
    report.bottleneck_range = bottleneck_by_mst(placement);
    report.bottleneck_range_search = bottleneck_by_search(placement);
    report.adjacency_complete_range = min_transmission_range(placement.kind).max_of_min * placement.sensing_radius;
    report.adjacency = check_face_adjacency(placement, graph);
    return report;
}

}  // namespace polycover
