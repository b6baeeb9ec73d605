#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace polycover {

/// The four space-filling cells a placement can be built from.
enum class StrategyKind { Cube, HexagonalPrism, RhombicDodecahedron, TruncatedOctahedron };

inline constexpr std::array<StrategyKind, 4> kAllStrategies = {
    StrategyKind::Cube, StrategyKind::HexagonalPrism, StrategyKind::RhombicDodecahedron,
    StrategyKind::TruncatedOctahedron};

/// Short CLI tag: cube, hp, rd, to.
std::string_view short_name(StrategyKind kind);
std::string_view display_name(StrategyKind kind);
/// Accepts the short tags and the long snake_case names.
std::optional<StrategyKind> parse_strategy(std::string_view text);

struct Point3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    friend constexpr Point3 operator+(Point3 a, Point3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
    friend constexpr Point3 operator-(Point3 a, Point3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
    friend constexpr Point3 operator*(double s, Point3 p) { return {s * p.x, s * p.y, s * p.z}; }
    friend constexpr bool operator==(Point3 a, Point3 b) = default;

    bool is_finite() const { return std::isfinite(x) && std::isfinite(y) && std::isfinite(z); }
};

constexpr double dot(Point3 a, Point3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
constexpr Point3 cross(Point3 a, Point3 b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(Point3 p) { return std::sqrt(dot(p, p)); }
inline double distance(Point3 a, Point3 b) { return norm(a - b); }
constexpr double distance_squared(Point3 a, Point3 b) { return dot(a - b, a - b); }

/// Integer coordinate in a strategy's oblique (u, v, w) frame.
struct LatticeCoord {
    std::int64_t u = 0;
    std::int64_t v = 0;
    std::int64_t w = 0;

    friend constexpr LatticeCoord operator+(LatticeCoord a, LatticeCoord b) {
        return {a.u + b.u, a.v + b.v, a.w + b.w};
    }
    friend constexpr LatticeCoord operator-(LatticeCoord a, LatticeCoord b) {
        return {a.u - b.u, a.v - b.v, a.w - b.w};
    }
    friend constexpr bool operator==(LatticeCoord, LatticeCoord) = default;
    friend constexpr auto operator<=>(LatticeCoord, LatticeCoord) = default;
};

/// Closed axis-aligned box with positive extent on every axis.
class Region {
public:
    Region(Point3 min_corner, Point3 max_corner);

    /// Box of extents (lx, ly, lz) centred at `center`.
    static Region centered(Point3 center, Point3 extents);

    Point3 min_corner() const { return min_; }
    Point3 max_corner() const { return max_; }
    Point3 center() const { return 0.5 * (min_ + max_); }
    Point3 extents() const { return max_ - min_; }
    double volume() const;

    /// Grows every face outward by `margin` (margin >= 0).
    Region expanded(double margin) const;
    bool contains(Point3 p, double tolerance = 0.0) const;

private:
    Point3 min_;
    Point3 max_;
};

/// Relative tolerance applied to "within R" style comparisons.
inline constexpr double kRangeTolerance = 1e-9;

inline void require_positive_length(double value, const char* what) {
    if (!(value > 0.0) || !std::isfinite(value)) {
        throw std::domain_error(std::string(what) + " must be a positive finite length");
    }
}

}  // namespace polycover
