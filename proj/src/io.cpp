#include "polycover/io.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

namespace polycover {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    return fields;
}

template <typename T>
T parse_field(const std::string& text, std::size_t line_no) {
    std::istringstream in(text);
    T value{};
    in >> value;
    if (in.fail() || !(in >> std::ws).eof()) {
        throw FormatError("line " + std::to_string(line_no) + ": cannot parse '" + text + "'");
    }
    return value;
}

}  // namespace

std::string format_length(double value) {
    if (value == 0.0) value = 0.0;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", value);
    return buf;
}

void write_placement_csv(std::ostream& out, const Placement& placement) {
    out << "u,v,w,x,y,z\n";
    for (const Node& n : placement.nodes) {
        out << n.coord.u << ',' << n.coord.v << ',' << n.coord.w << ',' << format_length(n.position.x) << ','
            << format_length(n.position.y) << ',' << format_length(n.position.z) << '\n';
    }
}

Placement read_placement_csv(std::istream& in, StrategyKind kind, double sensing_radius, Point3 seed) {
    std::string line;
    if (!std::getline(in, line)) throw FormatError("empty node file");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "u,v,w,x,y,z") throw FormatError("expected header 'u,v,w,x,y,z'");

    Placement placement{kind, sensing_radius, seed, {}};
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto f = split_csv_line(line);
        if (f.size() != 6) throw FormatError("line " + std::to_string(line_no) + ": expected 6 fields");
        const LatticeCoord c{parse_field<std::int64_t>(f[0], line_no), parse_field<std::int64_t>(f[1], line_no),
                             parse_field<std::int64_t>(f[2], line_no)};
        const Point3 p{parse_field<double>(f[3], line_no), parse_field<double>(f[4], line_no),
                       parse_field<double>(f[5], line_no)};
        placement.nodes.push_back({c, p});
    }
    return placement;
}

nlohmann::json placement_to_json(const Placement& placement) {
    nlohmann::json nodes = nlohmann::json::array();
    for (const Node& n : placement.nodes) {
        nodes.push_back({{"u", n.coord.u},
                         {"v", n.coord.v},
                         {"w", n.coord.w},
                         {"x", n.position.x},
                         {"y", n.position.y},
                         {"z", n.position.z}});
    }
    return {{"strategy", std::string(short_name(placement.kind))},
            {"sensing_radius", placement.sensing_radius},
            {"seed", {placement.seed.x, placement.seed.y, placement.seed.z}},
            {"nodes", std::move(nodes)}};
}

Placement placement_from_json(const nlohmann::json& doc) {
    try {
        const auto kind = parse_strategy(doc.at("strategy").get<std::string>());
        if (!kind) throw FormatError("unknown strategy in placement document");
        const auto& s = doc.at("seed");
        Placement placement{*kind, doc.at("sensing_radius").get<double>(),
                            {s.at(0).get<double>(), s.at(1).get<double>(), s.at(2).get<double>()},
                            {}};
        for (const auto& n : doc.at("nodes")) {
            placement.nodes.push_back(
                {{n.at("u").get<std::int64_t>(), n.at("v").get<std::int64_t>(), n.at("w").get<std::int64_t>()},
                 {n.at("x").get<double>(), n.at("y").get<double>(), n.at("z").get<double>()}});
        }
        return placement;
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("malformed placement document: ") + e.what());
    }
}

nlohmann::json coverage_report_to_json(const CoverageReport& report) {
    return {{"samples", report.samples},
            {"covered", report.covered},
            {"coverage_fraction", report.coverage_fraction},
            {"max_nearest_distance", report.max_nearest_distance},
            {"worst_point", {report.worst_point.x, report.worst_point.y, report.worst_point.z}}};
}

nlohmann::json connectivity_report_to_json(const ConnectivityReport& report) {
    return {{"r_tx", report.r_tx},
            {"edge_count", report.edge_count},
            {"component_count", report.component_count},
            {"is_connected", report.is_connected},
            {"graph_connected_bottleneck_range", report.bottleneck_range},
            {"graph_connected_bottleneck_range_search", report.bottleneck_range_search},
            {"adjacency_complete_range", report.adjacency_complete_range},
            {"adjacency_interior_nodes", report.adjacency.interior_nodes},
            {"adjacency_missing_edges", report.adjacency.missing_edges},
            {"adjacency_complete", report.adjacency.complete()}};
}

void write_edge_list(std::ostream& out, const CommGraph& graph) {
    for (const Edge& e : graph.edges) out << e.a << ' ' << e.b << ' ' << format_length(e.distance) << '\n';
}

}  // namespace polycover
