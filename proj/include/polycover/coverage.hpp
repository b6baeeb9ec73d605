#pragma once

#include <cstdint>
#include <optional>

#include "polycover/lattice.hpp"
#include "polycover/spatial_index.hpp"
#include "polycover/types.hpp"

namespace polycover {

enum class SamplingMode { Grid, Random };

/// How the region is probed.
///
/// Grid: `count_or_resolution` points per axis, corners included.
/// Random: `count_or_resolution` i.i.d. uniform points from std::mt19937_64
/// seeded with `rng_seed`; each coordinate takes one draw, converted to
/// [0, 1) as (draw >> 11) * 2^-53, in x, y, z order.
struct SamplingSpec {
    SamplingMode mode = SamplingMode::Grid;
    std::uint64_t count_or_resolution = 101;
    std::uint64_t rng_seed = 0;

    static SamplingSpec grid(std::uint64_t resolution) { return {SamplingMode::Grid, resolution, 0}; }
    static SamplingSpec random(std::uint64_t count, std::uint64_t seed) {
        return {SamplingMode::Random, count, seed};
    }

    friend bool operator==(const SamplingSpec&, const SamplingSpec&) = default;
};

struct CoverageReport {
    std::uint64_t samples = 0;
    std::uint64_t covered = 0;
    double max_nearest_distance = 0.0;
    Point3 worst_point{};
    double coverage_fraction = 0.0;

    friend bool operator==(const CoverageReport&, const CoverageReport&) = default;
};

/// Spatial index over a placement's node positions, bucketed at R.
SpatialIndex build_index(const Placement& placement);

/// Samples the closed region and counts points within the sensing radius
/// (R * (1 + 1e-9)) of their nearest node. `sensing_radius_override`
/// replaces the placement's R for the covered test only.
CoverageReport verify_coverage(const Placement& placement, const Region& region, const SamplingSpec& spec,
                               std::optional<double> sensing_radius_override = std::nullopt);

/// Lower bound on the covering radius: grid search, then `refinement_rounds`
/// grids over windows halved each round around the current worst point.
double max_gap_estimate(const Placement& placement, const Region& region, int initial_resolution,
                        int refinement_rounds);

}  // namespace polycover
