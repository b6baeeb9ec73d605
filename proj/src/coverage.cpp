#include "polycover/coverage.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace polycover {

namespace {

double unit_double(std::mt19937_64& gen) { return static_cast<double>(gen() >> 11) * 0x1.0p-53; }

double grid_coordinate(double lo, double hi, std::uint64_t i, std::uint64_t n) {
    if (n == 1) return 0.5 * (lo + hi);
    if (i + 1 == n) return hi;
    return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
}

struct WorstTracker {
    double max_distance = -1.0;
    Point3 worst{};

    void offer(Point3 p, double d) {
        if (d > max_distance) {
            max_distance = d;
            worst = p;
        }
    }
};

// Grid over a box; returns the worst point found.
WorstTracker scan_grid(const SpatialIndex& index, Point3 lo, Point3 hi, std::uint64_t n) {
    WorstTracker tracker;
    for (std::uint64_t k = 0; k < n; ++k) {
        const double z = grid_coordinate(lo.z, hi.z, k, n);
        for (std::uint64_t j = 0; j < n; ++j) {
            const double y = grid_coordinate(lo.y, hi.y, j, n);
            for (std::uint64_t i = 0; i < n; ++i) {
                const Point3 p{grid_coordinate(lo.x, hi.x, i, n), y, z};
                tracker.offer(p, index.nearest(p).distance);
            }
        }
    }
    return tracker;
}

}  // namespace

SpatialIndex build_index(const Placement& placement) {
    if (placement.nodes.empty()) throw std::domain_error("placement has no nodes");
    return SpatialIndex(placement.positions(), placement.sensing_radius);
}

CoverageReport verify_coverage(const Placement& placement, const Region& region, const SamplingSpec& spec,
                               std::optional<double> sensing_radius_override) {
    if (spec.count_or_resolution < 1) throw std::domain_error("sampling needs at least one point");
    const double radius = sensing_radius_override.value_or(placement.sensing_radius);
    require_positive_length(radius, "sensing radius");
    const SpatialIndex index = build_index(placement);
    const double limit = radius * (1.0 + kRangeTolerance);

    CoverageReport report;
    WorstTracker tracker;
    auto probe = [&](Point3 p) {
        const double d = index.nearest(p).distance;
        ++report.samples;
        if (d <= limit) ++report.covered;
        tracker.offer(p, d);
    };

    const Point3 lo = region.min_corner();
    const Point3 hi = region.max_corner();
    if (spec.mode == SamplingMode::Grid) {
        const std::uint64_t n = spec.count_or_resolution;
        for (std::uint64_t k = 0; k < n; ++k) {
            const double z = grid_coordinate(lo.z, hi.z, k, n);
            for (std::uint64_t j = 0; j < n; ++j) {
                const double y = grid_coordinate(lo.y, hi.y, j, n);
                for (std::uint64_t i = 0; i < n; ++i) probe({grid_coordinate(lo.x, hi.x, i, n), y, z});
            }
        }
    } else {
        std::mt19937_64 gen(spec.rng_seed);
        const Point3 e = region.extents();
        for (std::uint64_t s = 0; s < spec.count_or_resolution; ++s) {
            const double x = lo.x + e.x * unit_double(gen);
            const double y = lo.y + e.y * unit_double(gen);
            const double z = lo.z + e.z * unit_double(gen);
            probe({x, y, z});
        }
    }

    report.max_nearest_distance = tracker.max_distance;
    report.worst_point = tracker.worst;
    report.coverage_fraction = static_cast<double>(report.covered) / static_cast<double>(report.samples);
    return report;
}

double max_gap_estimate(const Placement& placement, const Region& region, int initial_resolution,
                        int refinement_rounds) {
    if (initial_resolution < 8) throw std::domain_error("initial resolution must be at least 8");
    if (refinement_rounds < 0) throw std::domain_error("refinement rounds must be non-negative");
    const SpatialIndex index = build_index(placement);
    const auto n = static_cast<std::uint64_t>(initial_resolution);

    const Point3 lo = region.min_corner();
    const Point3 hi = region.max_corner();
    WorstTracker best = scan_grid(index, lo, hi, n);
    Point3 half = 0.5 * region.extents();
    for (int round = 0; round < refinement_rounds; ++round) {
        half = 0.5 * half;
        const Point3 c = best.worst;
        const Point3 wlo{std::max(lo.x, c.x - half.x), std::max(lo.y, c.y - half.y), std::max(lo.z, c.z - half.z)};
        const Point3 whi{std::min(hi.x, c.x + half.x), std::min(hi.y, c.y + half.y), std::min(hi.z, c.z + half.z)};
        const WorstTracker local = scan_grid(index, wlo, whi, n);
        if (local.max_distance > best.max_distance) best = local;
    }
    return best.max_distance;
}

}  // namespace polycover
