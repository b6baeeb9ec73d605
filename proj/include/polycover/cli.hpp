#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "polycover/coverage.hpp"
#include "polycover/types.hpp"

namespace polycover::cli {

enum ExitCode : int { kSuccess = 0, kConditionFailed = 1, kUsageError = 2 };

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Everything a subcommand needs. Lengths are absolute (any R suffix has
/// already been resolved).
struct RunConfig {
    StrategyKind strategy = StrategyKind::TruncatedOctahedron;
    double sensing_radius = 0.0;
    Point3 box{};
    Point3 center{};
    std::optional<Point3> seed;  // defaults to the region centre
    std::optional<SamplingSpec> sampling;
    std::optional<double> r_tx;
    std::optional<double> coverage_radius;  // verify only: overrides R when testing coverage
    bool boundary_expansion = true;
    std::string nodes_path;
    std::string out_path;
    std::string edges_path;
    std::string format;

    Region region() const { return Region::centered(center, box); }
    Point3 effective_seed() const { return seed.value_or(center); }

    friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

nlohmann::json config_to_json(const RunConfig& config);
RunConfig config_from_json(const nlohmann::json& doc);

/// "2.5" -> 2.5, "1.7889R" -> 1.7889 * sensing_radius.
double parse_length(const std::string& text, double sensing_radius);
/// Three comma-separated lengths.
Point3 parse_triple(const std::string& text, double sensing_radius);

/// Grid resolution giving a pitch of at most R/10 over the region.
std::uint64_t default_grid_resolution(const Region& region, double sensing_radius);

/// Runs one command line (without the program name). Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polycover::cli
