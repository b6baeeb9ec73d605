#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "polycover/types.hpp"

namespace polycover {

/// Uniform-grid bucket index over a fixed point set. Exact nearest-node and
/// fixed-radius queries; immutable after construction.
class SpatialIndex {
public:
    using BucketKey = std::array<std::int64_t, 3>;

    struct Nearest {
        std::size_t index;
        double distance;
    };

    SpatialIndex(std::vector<Point3> nodes, double cell_size);

    double cell_size() const { return cell_size_; }
    std::span<const Point3> nodes() const { return nodes_; }
    std::size_t size() const { return nodes_.size(); }

    BucketKey bucket_key(Point3 p) const;
    /// Node indices stored under `key` (empty when outside the grid).
    std::span<const std::size_t> bucket(const BucketKey& key) const;

    /// Closest node; equidistant nodes resolve to the lowest index.
    Nearest nearest(Point3 query) const;

    /// Indices of all nodes with distance <= radius, ascending.
    std::vector<std::size_t> within(Point3 query, double radius) const;

private:
    std::int64_t clamp_axis(double coordinate, double origin) const;
    std::size_t flat(std::int64_t i, std::int64_t j, std::int64_t k) const;

    std::vector<Point3> nodes_;
    double cell_size_;
    Point3 origin_{};
    std::array<std::int64_t, 3> dims_{};
    // CSR layout: bucket b holds indices_[offsets_[b] .. offsets_[b + 1])
    std::vector<std::size_t> offsets_;
    std::vector<std::size_t> indices_;
};

/// Reference nearest-node search by linear scan, same tie-break rule.
SpatialIndex::Nearest nearest_linear_scan(std::span<const Point3> nodes, Point3 query);

}  // namespace polycover
