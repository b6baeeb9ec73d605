#include "polycover/spatial_index.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace polycover {

namespace {

constexpr std::int64_t kMaxBuckets = std::int64_t{1} << 27;
constexpr double kAxisClamp = 1e12;

}  // namespace

SpatialIndex::SpatialIndex(std::vector<Point3> nodes, double cell_size)
    : nodes_(std::move(nodes)), cell_size_(cell_size) {
    if (nodes_.empty()) throw std::domain_error("spatial index needs at least one node");
    require_positive_length(cell_size_, "bucket size");

    Point3 lo = nodes_.front();
    Point3 hi = nodes_.front();
    for (const Point3& p : nodes_) {
        if (!p.is_finite()) throw std::domain_error("node positions must be finite");
        lo = {std::min(lo.x, p.x), std::min(lo.y, p.y), std::min(lo.z, p.z)};
        hi = {std::max(hi.x, p.x), std::max(hi.y, p.y), std::max(hi.z, p.z)};
    }
    origin_ = lo;
    const Point3 span = hi - lo;
    const std::array<double, 3> extent{span.x, span.y, span.z};
    std::int64_t total = 1;
    for (int k = 0; k < 3; ++k) {
        const double cells = std::floor(extent[k] / cell_size_) + 1.0;
        if (cells > static_cast<double>(kMaxBuckets)) {
            throw std::domain_error("bucket size is too small for the node extent");
        }
        dims_[k] = static_cast<std::int64_t>(cells);
        total *= dims_[k];
        if (total > kMaxBuckets) throw std::domain_error("bucket size is too small for the node extent");
    }

    std::vector<std::size_t> bucket_of(nodes_.size());
    offsets_.assign(static_cast<std::size_t>(total) + 1, 0);
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        const BucketKey key = bucket_key(nodes_[i]);
        bucket_of[i] = flat(key[0], key[1], key[2]);
        ++offsets_[bucket_of[i] + 1];
    }
    for (std::size_t b = 1; b < offsets_.size(); ++b) offsets_[b] += offsets_[b - 1];
    indices_.resize(nodes_.size());
    std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
    for (std::size_t i = 0; i < nodes_.size(); ++i) indices_[cursor[bucket_of[i]]++] = i;
}

std::int64_t SpatialIndex::clamp_axis(double coordinate, double origin) const {
    const double cell = std::floor((coordinate - origin) / cell_size_);
    return static_cast<std::int64_t>(std::clamp(cell, -kAxisClamp, kAxisClamp));
}

SpatialIndex::BucketKey SpatialIndex::bucket_key(Point3 p) const {
    const BucketKey key{clamp_axis(p.x, origin_.x), clamp_axis(p.y, origin_.y), clamp_axis(p.z, origin_.z)};
    return key;
}

std::size_t SpatialIndex::flat(std::int64_t i, std::int64_t j, std::int64_t k) const {
    return static_cast<std::size_t>((k * dims_[1] + j) * dims_[0] + i);
}

std::span<const std::size_t> SpatialIndex::bucket(const BucketKey& key) const {
    for (int k = 0; k < 3; ++k) {
        if (key[k] < 0 || key[k] >= dims_[k]) return {};
    }
    const std::size_t b = flat(key[0], key[1], key[2]);
    return std::span<const std::size_t>(indices_).subspan(offsets_[b], offsets_[b + 1] - offsets_[b]);
}

SpatialIndex::Nearest SpatialIndex::nearest(Point3 query) const {
    if (!query.is_finite()) throw std::domain_error("query point must be finite");
    const BucketKey q = bucket_key(query);

    // Chebyshev bucket distance from q to the grid box and to its far corner
    std::int64_t k_start = 0;
    std::int64_t k_end = 0;
    for (int a = 0; a < 3; ++a) {
        const std::int64_t below = -q[a];
        const std::int64_t above = q[a] - (dims_[a] - 1);
        k_start = std::max({k_start, below, above});
        k_end = std::max({k_end, q[a], dims_[a] - 1 - q[a]});
    }
    k_end = std::max(k_end, k_start);

    std::size_t best = std::numeric_limits<std::size_t>::max();
    double best_d2 = std::numeric_limits<double>::infinity();
    auto visit = [&](std::int64_t i, std::int64_t j, std::int64_t k) {
        for (std::size_t idx : bucket({i, j, k})) {
            const double d2 = distance_squared(nodes_[idx], query);
            if (d2 < best_d2 || (d2 == best_d2 && idx < best)) {
                best_d2 = d2;
                best = idx;
            }
        }
    };

    for (std::int64_t ring = k_start; ring <= k_end; ++ring) {
        const std::int64_t z0 = std::max<std::int64_t>(q[2] - ring, 0);
        const std::int64_t z1 = std::min<std::int64_t>(q[2] + ring, dims_[2] - 1);
        const std::int64_t y0 = std::max<std::int64_t>(q[1] - ring, 0);
        const std::int64_t y1 = std::min<std::int64_t>(q[1] + ring, dims_[1] - 1);
        const std::int64_t x0 = std::max<std::int64_t>(q[0] - ring, 0);
        const std::int64_t x1 = std::min<std::int64_t>(q[0] + ring, dims_[0] - 1);
        for (std::int64_t k = z0; k <= z1; ++k) {
            for (std::int64_t j = y0; j <= y1; ++j) {
                const bool face = std::abs(k - q[2]) == ring || std::abs(j - q[1]) == ring;
                if (face) {
                    for (std::int64_t i = x0; i <= x1; ++i) visit(i, j, k);
                } else {
                    for (std::int64_t i : {q[0] - ring, q[0] + ring}) {
                        if (i >= 0 && i < dims_[0]) visit(i, j, k);
                    }
                }
            }
        }
        // anything in a later ring is at least ring * cell away
        const double reach = static_cast<double>(ring) * cell_size_;
        if (best_d2 < reach * reach) break;
    }
    return {best, std::sqrt(best_d2)};
}

std::vector<std::size_t> SpatialIndex::within(Point3 query, double radius) const {
    if (!query.is_finite()) throw std::domain_error("query point must be finite");
    if (!(radius >= 0.0)) throw std::domain_error("search radius must be non-negative");
    const double r2 = radius * radius;
    const Point3 d{radius, radius, radius};
    const BucketKey lo = bucket_key(query - d);
    const BucketKey hi = bucket_key(query + d);
    std::vector<std::size_t> out;
    for (std::int64_t k = std::max<std::int64_t>(lo[2], 0); k <= std::min(hi[2], dims_[2] - 1); ++k)
        for (std::int64_t j = std::max<std::int64_t>(lo[1], 0); j <= std::min(hi[1], dims_[1] - 1); ++j)
            for (std::int64_t i = std::max<std::int64_t>(lo[0], 0); i <= std::min(hi[0], dims_[0] - 1); ++i)
                for (std::size_t idx : bucket({i, j, k})) {
                    if (distance_squared(nodes_[idx], query) <= r2) out.push_back(idx);
                }
    std::sort(out.begin(), out.end());
    return out;
}

SpatialIndex::Nearest nearest_linear_scan(std::span<const Point3> nodes, Point3 query) {
    if (nodes.empty()) throw std::domain_error("linear scan needs at least one node");
    std::size_t best = 0;
    double best_d2 = distance_squared(nodes[0], query);
    for (std::size_t i = 1; i < nodes.size(); ++i) {
        const double d2 = distance_squared(nodes[i], query);
        if (d2 < best_d2) {
            best_d2 = d2;
            best = i;
        }
    }
    return {best, std::sqrt(best_d2)};
}

}  // namespace polycover
