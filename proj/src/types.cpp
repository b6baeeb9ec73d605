#include "polycover/types.hpp"

#include <algorithm>
#include <cctype>
#include <string>

namespace polycover {

std::string_view short_name(StrategyKind kind) {
    switch (kind) {
        case StrategyKind::Cube: return "cube";
        case StrategyKind::HexagonalPrism: return "hp";
        case StrategyKind::RhombicDodecahedron: return "rd";
        case StrategyKind::TruncatedOctahedron: return "to";
    }
    throw std::logic_error("unknown StrategyKind");
}

std::string_view display_name(StrategyKind kind) {
    switch (kind) {
        case StrategyKind::Cube: return "Cube";
        case StrategyKind::HexagonalPrism: return "Hexagonal Prism";
        case StrategyKind::RhombicDodecahedron: return "Rhombic Dodecahedron";
        case StrategyKind::TruncatedOctahedron: return "Truncated Octahedron";
    }
    throw std::logic_error("unknown StrategyKind");
}

std::optional<StrategyKind> parse_strategy(std::string_view text) {
    std::string lower(text);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (lower == "cube") return StrategyKind::Cube;
    if (lower == "hp" || lower == "hexagonal_prism") return StrategyKind::HexagonalPrism;
    if (lower == "rd" || lower == "rhombic_dodecahedron") return StrategyKind::RhombicDodecahedron;
    if (lower == "to" || lower == "truncated_octahedron") return StrategyKind::TruncatedOctahedron;
    return std::nullopt;
}

Region::Region(Point3 min_corner, Point3 max_corner) : min_(min_corner), max_(max_corner) {
    if (!min_.is_finite() || !max_.is_finite()) {
        throw std::domain_error("region corners must be finite");
    }
    if (!(max_.x > min_.x && max_.y > min_.y && max_.z > min_.z)) {
        throw std::domain_error("region must have positive extent on every axis");
    }
}

Region Region::centered(Point3 center, Point3 extents) {
    const Point3 half = 0.5 * extents;
    return Region(center - half, center + half);
}

double Region::volume() const {
    const Point3 e = extents();
    return e.x * e.y * e.z;
}

Region Region::expanded(double margin) const {
    if (!(margin >= 0.0)) throw std::domain_error("expansion margin must be non-negative");
    const Point3 m{margin, margin, margin};
    return Region(min_ - m, max_ + m);
}

bool Region::contains(Point3 p, double tolerance) const {
    return p.x >= min_.x - tolerance && p.x <= max_.x + tolerance &&
           p.y >= min_.y - tolerance && p.y <= max_.y + tolerance &&
           p.z >= min_.z - tolerance && p.z <= max_.z + tolerance;
}

}  // namespace polycover
