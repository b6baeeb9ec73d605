#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "polycover/connectivity.hpp"
#include "polycover/coverage.hpp"
#include "polycover/lattice.hpp"

namespace polycover {

/// Thrown for malformed input files.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// 9 significant digits, no "-0".
std::string format_length(double value);

/// `u,v,w,x,y,z` header, one node per row.
void write_placement_csv(std::ostream& out, const Placement& placement);

/// CSV rows carry only nodes, so strategy, R and seed come from the caller.
Placement read_placement_csv(std::istream& in, StrategyKind kind, double sensing_radius, Point3 seed);

/// {"strategy", "sensing_radius", "seed": [x,y,z], "nodes": [{"u","v","w","x","y","z"}...]}
/// Doubles are written at full round-trip precision.
nlohmann::json placement_to_json(const Placement& placement);
Placement placement_from_json(const nlohmann::json& doc);

nlohmann::json coverage_report_to_json(const CoverageReport& report);
nlohmann::json connectivity_report_to_json(const ConnectivityReport& report);

/// One `i j dist` line per edge.
void write_edge_list(std::ostream& out, const CommGraph& graph);

}  // namespace polycover
