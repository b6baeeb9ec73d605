#include "polycover/lattice.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

namespace polycover {

namespace {

const double kSqrt2 = std::sqrt(2.0);
const double kSqrt3 = std::sqrt(3.0);
const double kSqrt5 = std::sqrt(5.0);

// Candidate loops larger than this are almost certainly a unit mistake.
constexpr double kMaxCandidates = 5e8;

double to_double(std::int64_t n) { return static_cast<double>(n); }

std::int64_t checked_round(double x) {
    if (!std::isfinite(x) || std::abs(x) > 9.0e15) {
        throw std::domain_error("point is too far from the seed to index the lattice");
    }
    return static_cast<std::int64_t>(std::nearbyint(x));
}

}  // namespace

LatticeBasis lattice_basis(StrategyKind kind, double sensing_radius) {
    const Point3 origin{};
    return {place(kind, {1, 0, 0}, origin, sensing_radius), place(kind, {0, 1, 0}, origin, sensing_radius),
            place(kind, {0, 0, 1}, origin, sensing_radius)};
}

Point3 place(StrategyKind kind, LatticeCoord c, Point3 seed, double sensing_radius) {
    require_positive_length(sensing_radius, "sensing radius");
    const double r = sensing_radius;
    const double u = to_double(c.u);
    const double v = to_double(c.v);
    const double w = to_double(c.w);
    switch (kind) {
        case StrategyKind::Cube: {
            const double step = 2.0 * r / kSqrt3;
            return {seed.x + u * step, seed.y + v * step, seed.z + w * step};
        }
        case StrategyKind::HexagonalPrism:
            return {seed.x + u * r * std::sqrt(1.5), seed.y + (u + 2.0 * v) * r / kSqrt2,
                    seed.z + 2.0 * r * w / kSqrt3};
        case StrategyKind::RhombicDodecahedron:
            return {seed.x + (2.0 * u + w) * r / kSqrt2, seed.y + (2.0 * v + w) * r / kSqrt2, seed.z + w * r};
        case StrategyKind::TruncatedOctahedron: {
            const double step = 2.0 * r / kSqrt5;
            return {seed.x + (2.0 * u + w) * step, seed.y + (2.0 * v + w) * step, seed.z + w * step};
        }
    }
    throw std::logic_error("unknown StrategyKind");
}

double lattice_distance(StrategyKind kind, LatticeCoord a, LatticeCoord b, double sensing_radius) {
    require_positive_length(sensing_radius, "sensing radius");
    const double r = sensing_radius;
    const double du = to_double(b.u - a.u);
    const double dv = to_double(b.v - a.v);
    const double dw = to_double(b.w - a.w);
    switch (kind) {
        case StrategyKind::Cube:
            return 2.0 * r / kSqrt3 * std::sqrt(du * du + dv * dv + dw * dw);
        case StrategyKind::HexagonalPrism:
            return r * kSqrt2 * std::sqrt(du * du + du * dv + dv * dv + 2.0 / 3.0 * dw * dw);
        case StrategyKind::RhombicDodecahedron:
            return r * kSqrt2 * std::sqrt(du * du + dv * dv + dw * dw + du * dw + dv * dw);
        case StrategyKind::TruncatedOctahedron:
            return 4.0 * r / kSqrt5 * std::sqrt(du * du + dv * dv + du * dw + dv * dw + 0.75 * dw * dw);
    }
    throw std::logic_error("unknown StrategyKind");
}

Point3 fractional_coords(StrategyKind kind, Point3 p, Point3 seed, double sensing_radius) {
    require_positive_length(sensing_radius, "sensing radius");
    if (!p.is_finite()) throw std::domain_error("query point must be finite");
    const double r = sensing_radius;
    const Point3 d = p - seed;
    switch (kind) {
        case StrategyKind::Cube: {
            const double step = 2.0 * r / kSqrt3;
            return {d.x / step, d.y / step, d.z / step};
        }
        case StrategyKind::HexagonalPrism: {
            const double u = d.x / (r * std::sqrt(1.5));
            return {u, (d.y * kSqrt2 / r - u) / 2.0, d.z * kSqrt3 / (2.0 * r)};
        }
        case StrategyKind::RhombicDodecahedron: {
            const double w = d.z / r;
            return {(d.x * kSqrt2 / r - w) / 2.0, (d.y * kSqrt2 / r - w) / 2.0, w};
        }
        case StrategyKind::TruncatedOctahedron: {
            const double step = 2.0 * r / kSqrt5;
            const double w = d.z / step;
            return {(d.x / step - w) / 2.0, (d.y / step - w) / 2.0, w};
        }
    }
    throw std::logic_error("unknown StrategyKind");
}

LatticeCoord nearest_cell(StrategyKind kind, Point3 p, Point3 seed, double sensing_radius) {
    const Point3 f = fractional_coords(kind, p, seed, sensing_radius);
    const LatticeCoord rounded{checked_round(f.x), checked_round(f.y), checked_round(f.z)};

    LatticeCoord best = rounded;
    double best_d2 = std::numeric_limits<double>::infinity();
    // lexicographic scan + strict improvement gives the tie-break for free
    for (std::int64_t du = -1; du <= 1; ++du) {
        for (std::int64_t dv = -1; dv <= 1; ++dv) {
            for (std::int64_t dw = -1; dw <= 1; ++dw) {
                const LatticeCoord c = rounded + LatticeCoord{du, dv, dw};
                const double d2 = distance_squared(place(kind, c, seed, sensing_radius), p);
                if (d2 < best_d2) {
                    best_d2 = d2;
                    best = c;
                }
            }
        }
    }
    return best;
}

std::vector<LatticeCoord> face_neighbor_offsets(StrategyKind kind) {
    const Point3 origin{};
    auto len2 = [&](LatticeCoord c) { return distance_squared(place(kind, c, origin, 1.0), origin); };
    auto same_parity = [](LatticeCoord a, LatticeCoord b) {
        return ((a.u - b.u) % 2 == 0) && ((a.v - b.v) % 2 == 0) && ((a.w - b.w) % 2 == 0);
    };

    std::vector<LatticeCoord> relevant;
    for (std::int64_t u = -2; u <= 2; ++u) {
        for (std::int64_t v = -2; v <= 2; ++v) {
            for (std::int64_t w = -2; w <= 2; ++w) {
                const LatticeCoord n{u, v, w};
                if (n == LatticeCoord{}) continue;
                const LatticeCoord neg{-u, -v, -w};
                const double n2 = len2(n);
                bool strict_minimum = true;
                for (std::int64_t a = -4; a <= 4 && strict_minimum; ++a) {
                    for (std::int64_t b = -4; b <= 4 && strict_minimum; ++b) {
                        for (std::int64_t c = -4; c <= 4 && strict_minimum; ++c) {
                            const LatticeCoord m{a, b, c};
                            if (m == n || m == neg || !same_parity(m, n)) continue;
                            if (len2(m) <= n2 * (1.0 + kRangeTolerance)) strict_minimum = false;
                        }
                    }
                }
                if (strict_minimum) relevant.push_back(n);
            }
        }
    }
    std::sort(relevant.begin(), relevant.end(), [&](LatticeCoord a, LatticeCoord b) {
        const double la = len2(a);
        const double lb = len2(b);
        if (std::abs(la - lb) > kRangeTolerance * std::max(la, lb)) return la < lb;
        return a < b;
    });
    return relevant;
}

std::vector<Point3> Placement::positions() const {
    std::vector<Point3> out;
    out.reserve(nodes.size());
    for (const Node& n : nodes) out.push_back(n.position);
    return out;
}

Placement enumerate_region(StrategyKind kind, const Region& region, Point3 seed, double sensing_radius,
                           EnumerateOptions options) {
    require_positive_length(sensing_radius, "sensing radius");
    if (!seed.is_finite()) throw std::domain_error("seed must be finite");
    const Region target = options.boundary_expansion ? region.expanded(sensing_radius) : region;
    const Point3 lo = target.min_corner();
    const Point3 hi = target.max_corner();

    std::array<double, 3> fmin{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity(),
                               std::numeric_limits<double>::infinity()};
    std::array<double, 3> fmax{-fmin[0], -fmin[1], -fmin[2]};
    for (int corner = 0; corner < 8; ++corner) {
        const Point3 p{(corner & 1) ? hi.x : lo.x, (corner & 2) ? hi.y : lo.y, (corner & 4) ? hi.z : lo.z};
        const Point3 f = fractional_coords(kind, p, seed, sensing_radius);
        const std::array<double, 3> fa{f.x, f.y, f.z};
        for (int k = 0; k < 3; ++k) {
            fmin[k] = std::min(fmin[k], fa[k]);
            fmax[k] = std::max(fmax[k], fa[k]);
        }
    }
    std::array<std::int64_t, 3> first{};
    std::array<std::int64_t, 3> last{};
    double candidates = 1.0;
    for (int k = 0; k < 3; ++k) {
        first[k] = checked_round(std::floor(fmin[k])) - 1;
        last[k] = checked_round(std::ceil(fmax[k])) + 1;
        candidates *= to_double(last[k] - first[k] + 1);
    }
    if (candidates > kMaxCandidates) {
        throw std::domain_error("region is too large relative to the sensing radius");
    }

    const Point3 e = target.extents();
    const double tol = kRangeTolerance * std::max({e.x, e.y, e.z, sensing_radius});

    Placement out{kind, sensing_radius, seed, {}};
    for (std::int64_t u = first[0]; u <= last[0]; ++u) {
        for (std::int64_t v = first[1]; v <= last[1]; ++v) {
            for (std::int64_t w = first[2]; w <= last[2]; ++w) {
                const LatticeCoord c{u, v, w};
                const Point3 p = place(kind, c, seed, sensing_radius);
                if (target.contains(p, tol)) out.nodes.push_back({c, p});
            }
        }
    }
    return out;
}

Placement enumerate_block(StrategyKind kind, LatticeCoord lo, LatticeCoord hi, Point3 seed,
                          double sensing_radius) {
    require_positive_length(sensing_radius, "sensing radius");
    if (hi.u < lo.u || hi.v < lo.v || hi.w < lo.w) throw std::domain_error("empty lattice block");
    Placement out{kind, sensing_radius, seed, {}};
    for (std::int64_t u = lo.u; u <= hi.u; ++u)
        for (std::int64_t v = lo.v; v <= hi.v; ++v)
            for (std::int64_t w = lo.w; w <= hi.w; ++w) {
                const LatticeCoord c{u, v, w};
                out.nodes.push_back({c, place(kind, c, seed, sensing_radius)});
            }
    return out;
}

}  // namespace polycover
