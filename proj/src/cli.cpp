#include "polycover/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "polycover/cellgeom.hpp"
#include "polycover/connectivity.hpp"
#include "polycover/io.hpp"
#include "polycover/lattice.hpp"

namespace polycover::cli {

namespace {

struct RawOptions {
    std::string strategy, r, box, center, seed, span, tx, sensing_r;
    std::string grid, samples, rng_seed;
    std::string nodes, out, edges, format, config, save_config;
    bool no_expansion = false;
};

void add_common_options(CLI::App* cmd, RawOptions& o) {
    cmd->add_option("--strategy", o.strategy, "cube | hp | rd | to");
    cmd->add_option("--r", o.r, "sensing radius R");
    cmd->add_option("--box", o.box, "region extents Lx,Ly,Lz (R suffix allowed)");
    cmd->add_option("--center", o.center, "region centre x,y,z (default origin)");
    cmd->add_option("--seed", o.seed, "lattice seed x,y,z (default region centre)");
    cmd->add_option("--span", o.span, "cubic region spanning N nodes along the u axis");
    cmd->add_flag("--no-boundary-expansion", o.no_expansion, "enumerate inside the region only");
    cmd->add_option("--nodes", o.nodes, "read nodes from a CSV or JSON placement instead of planning");
    cmd->add_option("--out", o.out, "output path (default stdout)");
    cmd->add_option("--format", o.format, "csv | json | obj");
    cmd->add_option("--config", o.config, "JSON run configuration; flags override it");
    cmd->add_option("--save-config", o.save_config, "write the effective configuration as JSON");
}

double parse_number(const std::string& text, const char* what) {
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(text, &used);
    } catch (const std::exception&) {
        throw UsageError(std::string("cannot parse ") + what + " '" + text + "'");
    }
    if (used != text.size() || !std::isfinite(value)) {
        throw UsageError(std::string("cannot parse ") + what + " '" + text + "'");
    }
    return value;
}

std::uint64_t parse_count(const std::string& text, const char* what) {
    const double value = parse_number(text, what);
    if (value < 1.0 || value != std::floor(value) || value > 1e15) {
        throw UsageError(std::string(what) + " must be a positive integer");
    }
    return static_cast<std::uint64_t>(value);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const std::string& path, const std::string& content, std::ostream& out) {
    if (path.empty()) {
        out << content;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    file << content;
    file.close();
    if (!file) throw UsageError("cannot write '" + path + "'");
}

std::string dump(const nlohmann::json& doc) { return doc.dump(2) + "\n"; }

RunConfig resolve(const RawOptions& o) {
    RunConfig c;
    if (!o.config.empty()) {
        try {
            c = config_from_json(nlohmann::json::parse(read_file(o.config)));
        } catch (const nlohmann::json::exception& e) {
            throw UsageError("invalid config file: " + std::string(e.what()));
        }
    }
    if (!o.strategy.empty()) {
        const auto kind = parse_strategy(o.strategy);
        if (!kind) throw UsageError("unknown strategy '" + o.strategy + "' (expected cube|hp|rd|to)");
        c.strategy = *kind;
    }
    if (!o.r.empty()) c.sensing_radius = parse_number(o.r, "--r");
    if (!(c.sensing_radius > 0.0)) throw UsageError("--r must be given as a positive length");
    const double r = c.sensing_radius;

    if (!o.box.empty()) c.box = parse_triple(o.box, r);
    if (!o.center.empty()) c.center = parse_triple(o.center, r);
    if (!o.seed.empty()) c.seed = parse_triple(o.seed, r);
    if (!o.span.empty()) {
        const std::uint64_t n = parse_count(o.span, "--span");
        if (n < 2) throw UsageError("--span must be at least 2");
        const double side = static_cast<double>(n - 1) * norm(lattice_basis(c.strategy, r).u);
        c.box = {side, side, side};
    }
    if (!o.tx.empty()) {
        c.r_tx = parse_length(o.tx, r);
        if (!(*c.r_tx > 0.0)) throw UsageError("--tx must be positive");
    }
    if (!o.sensing_r.empty()) {
        c.coverage_radius = parse_length(o.sensing_r, r);
        if (!(*c.coverage_radius > 0.0)) throw UsageError("--sensing-r must be positive");
    }
    if (!o.grid.empty() && !o.samples.empty()) throw UsageError("--grid and --samples are exclusive");
    if (!o.grid.empty()) c.sampling = SamplingSpec::grid(parse_count(o.grid, "--grid"));
    if (!o.samples.empty()) {
        std::uint64_t seed = 0;
        if (!o.rng_seed.empty()) {
            std::size_t used = 0;
            try {
                seed = std::stoull(o.rng_seed, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used == 0 || used != o.rng_seed.size()) throw UsageError("--rng-seed must be an unsigned integer");
        }
        c.sampling = SamplingSpec::random(parse_count(o.samples, "--samples"), seed);
    }
    if (o.no_expansion) c.boundary_expansion = false;
    if (!o.nodes.empty()) c.nodes_path = o.nodes;
    if (!o.out.empty()) c.out_path = o.out;
    if (!o.edges.empty()) c.edges_path = o.edges;
    if (!o.format.empty()) c.format = o.format;
    return c;
}

Region checked_region(const RunConfig& c) {
    try {
        return c.region();
    } catch (const std::domain_error& e) {
        throw UsageError(std::string("invalid region (use --box Lx,Ly,Lz): ") + e.what());
    }
}

Placement obtain_placement(const RunConfig& c) {
    if (!c.nodes_path.empty()) {
        const std::string text = read_file(c.nodes_path);
        const bool is_json = c.nodes_path.size() >= 5 && c.nodes_path.substr(c.nodes_path.size() - 5) == ".json";
        if (is_json) {
            try {
                return placement_from_json(nlohmann::json::parse(text));
            } catch (const nlohmann::json::exception& e) {
                throw FormatError(e.what());
            }
        }
        std::istringstream in(text);
        return read_placement_csv(in, c.strategy, c.sensing_radius, c.effective_seed());
    }
    return enumerate_region(c.strategy, checked_region(c), c.effective_seed(), c.sensing_radius,
                            {c.boundary_expansion});
}

double interior_estimate(const Region& region, StrategyKind kind, double r) {
    return region.volume() / cell_geometry(kind, r).volume;
}

int cmd_plan(const RunConfig& c, std::ostream& out, std::ostream& err) {
    const Region region = checked_region(c);
    const Placement placement =
        enumerate_region(c.strategy, region, c.effective_seed(), c.sensing_radius, {c.boundary_expansion});
    const std::string format = c.format.empty() ? "csv" : c.format;
    std::ostringstream body;
    if (format == "csv") {
        write_placement_csv(body, placement);
    } else if (format == "json") {
        body << dump(placement_to_json(placement));
    } else {
        throw UsageError("plan writes csv or json, not '" + format + "'");
    }
    emit(c.out_path, body.str(), out);
    std::ostream& summary = c.out_path.empty() ? err : out;
    char line[160];
    std::snprintf(line, sizeof line, "strategy: %s\nnodes: %zu\ninterior estimate: %.3f\n",
                  std::string(short_name(c.strategy)).c_str(), placement.nodes.size(),
                  interior_estimate(region, c.strategy, c.sensing_radius));
    summary << line;
    return kSuccess;
}

int cmd_verify(const RunConfig& c, std::ostream& out) {
    const Region region = checked_region(c);
    const Placement placement = obtain_placement(c);
    if (placement.nodes.empty()) throw UsageError("placement has no nodes");
    const SamplingSpec spec = c.sampling.value_or(SamplingSpec::grid(default_grid_resolution(region, c.sensing_radius)));
    const CoverageReport report = verify_coverage(placement, region, spec, c.coverage_radius);
    emit(c.out_path, dump(coverage_report_to_json(report)), out);
    if (!c.out_path.empty()) {
        out << "coverage: " << report.covered << "/" << report.samples << " max nearest distance "
            << format_length(report.max_nearest_distance) << "\n";
    }
    return report.covered == report.samples ? kSuccess : kConditionFailed;
}

int cmd_compare(const RunConfig& c, std::ostream& out) {
    const Region region = checked_region(c);
    const double r = c.sensing_radius;
    const std::size_t to_count =
        enumerate_region(StrategyKind::TruncatedOctahedron, region, c.effective_seed(), r, {c.boundary_expansion})
            .nodes.size();

    nlohmann::json rows = nlohmann::json::array();
    std::ostringstream text;
    char line[256];
    std::snprintf(line, sizeof line, "%-22s %9s %12s %10s %10s %9s %9s %8s %8s %8s %8s\n", "strategy", "quotient",
                  "theoretical", "enumerated", "more(th)%", "more(en)%", "u[R]", "v[R]", "w[R]", "max[R]",
                  "iso");
    text << line;
    for (StrategyKind kind : kAllStrategies) {
        const CellGeometry g = cell_geometry(kind, r);
        const std::size_t count =
            enumerate_region(kind, region, c.effective_seed(), r, {c.boundary_expansion}).nodes.size();
        const double more_closed = (node_count_ratio(kind, StrategyKind::TruncatedOctahedron) - 1.0) * 100.0;
        const double more_enum = (static_cast<double>(count) / static_cast<double>(to_count) - 1.0) * 100.0;
        const TransmissionTable t = min_transmission_range(kind);
        const double theoretical = region.volume() / g.volume;
        std::snprintf(line, sizeof line, "%-22s %9.5f %12.1f %10zu %10.2f %9.2f %9.4f %8.4f %8.4f %8.4f %8.5f\n",
                      std::string(display_name(kind)).c_str(), volumetric_quotient(kind), theoretical, count,
                      more_closed, more_enum, t.axes[0].distance, t.axes[1].distance, t.axes[2].distance,
                      t.max_of_min, isoperimetric_quotient(kind));
        text << line;
        rows.push_back({{"strategy", std::string(short_name(kind))},
                        {"volumetric_quotient", volumetric_quotient(kind)},
                        {"cell_volume", g.volume},
                        {"node_density", 1.0 / g.volume},
                        {"theoretical_count", theoretical},
                        {"enumerated_count", count},
                        {"percent_more_than_to", more_closed},
                        {"percent_more_than_to_enumerated", more_enum},
                        {"min_tx_u", t.axes[0].distance * r},
                        {"min_tx_v", t.axes[1].distance * r},
                        {"min_tx_w", t.axes[2].distance * r},
                        {"min_tx_max", t.max_of_min * r},
                        {"isoperimetric_quotient", isoperimetric_quotient(kind)}});
    }
    std::snprintf(line, sizeof line, "2D hexagon quotient: %.5f\n", hexagon_quotient_2d());
    text << line;

    const nlohmann::json doc{{"sensing_radius", r},
                             {"region_volume", region.volume()},
                             {"boundary_expansion", c.boundary_expansion},
                             {"hexagon_quotient_2d", hexagon_quotient_2d()},
                             {"strategies", rows}};
    if (c.format == "json") {
        emit(c.out_path, dump(doc), out);
    } else {
        out << text.str();
        if (!c.out_path.empty()) emit(c.out_path, dump(doc), out);
    }
    return kSuccess;
}

int cmd_graph(const RunConfig& c, std::ostream& out) {
    if (!c.r_tx) throw UsageError("graph needs --tx <len> or --tx <k>R");
    const Placement placement = obtain_placement(c);
    if (placement.nodes.empty()) throw UsageError("placement has no nodes");
    const ConnectivityReport report = analyze(placement, *c.r_tx);
    emit(c.out_path, dump(connectivity_report_to_json(report)), out);
    if (!c.edges_path.empty()) {
        std::ostringstream edges;
        write_edge_list(edges, build_graph(placement, *c.r_tx));
        emit(c.edges_path, edges.str(), out);
    }
    if (!c.out_path.empty()) {
        out << "components: " << report.component_count << "\n"
            << "graph-connected bottleneck range: " << format_length(report.bottleneck_range) << "\n"
            << "adjacency-complete range: " << format_length(report.adjacency_complete_range) << "\n";
    }
    return report.is_connected ? kSuccess : kConditionFailed;
}

int cmd_export_cells(const RunConfig& c, std::ostream& out) {
    if (!c.format.empty() && c.format != "obj") throw UsageError("export-cells writes obj only");
    const Placement placement = obtain_placement(c);
    const CellMesh prototype = cell_mesh(placement.kind, placement.sensing_radius, Point3{});
    std::vector<CellMesh> meshes;
    meshes.reserve(placement.nodes.size());
    for (const Node& n : placement.nodes) meshes.push_back(prototype.translated(n.position));
    std::ostringstream body;
    write_obj(body, meshes);
    emit(c.out_path, body.str(), out);
    return kSuccess;
}

}  // namespace

nlohmann::json config_to_json(const RunConfig& c) {
    nlohmann::json doc{{"strategy", std::string(short_name(c.strategy))},
                       {"sensing_radius", c.sensing_radius},
                       {"box", {c.box.x, c.box.y, c.box.z}},
                       {"center", {c.center.x, c.center.y, c.center.z}},
                       {"boundary_expansion", c.boundary_expansion},
                       {"nodes_path", c.nodes_path},
                       {"out_path", c.out_path},
                       {"edges_path", c.edges_path},
                       {"format", c.format}};
    if (c.seed) doc["seed"] = {c.seed->x, c.seed->y, c.seed->z};
    if (c.r_tx) doc["r_tx"] = *c.r_tx;
    if (c.coverage_radius) doc["coverage_radius"] = *c.coverage_radius;
    if (c.sampling) {
        doc["sampling"] = {{"mode", c.sampling->mode == SamplingMode::Grid ? "grid" : "random"},
                           {"count_or_resolution", c.sampling->count_or_resolution},
                           {"rng_seed", c.sampling->rng_seed}};
    }
    return doc;
}

RunConfig config_from_json(const nlohmann::json& doc) {
    auto triple = [](const nlohmann::json& a) {
        return Point3{a.at(0).get<double>(), a.at(1).get<double>(), a.at(2).get<double>()};
    };
    RunConfig c;
    const auto kind = parse_strategy(doc.at("strategy").get<std::string>());
    if (!kind) throw UsageError("unknown strategy in config");
    c.strategy = *kind;
    c.sensing_radius = doc.at("sensing_radius").get<double>();
    c.box = triple(doc.at("box"));
    c.center = triple(doc.value("center", nlohmann::json::array({0.0, 0.0, 0.0})));
    c.boundary_expansion = doc.value("boundary_expansion", true);
    c.nodes_path = doc.value("nodes_path", "");
    c.out_path = doc.value("out_path", "");
    c.edges_path = doc.value("edges_path", "");
    c.format = doc.value("format", "");
    if (doc.contains("seed")) c.seed = triple(doc.at("seed"));
    if (doc.contains("r_tx")) c.r_tx = doc.at("r_tx").get<double>();
    if (doc.contains("coverage_radius")) c.coverage_radius = doc.at("coverage_radius").get<double>();
    if (doc.contains("sampling")) {
        const auto& s = doc.at("sampling");
        const std::string mode = s.at("mode").get<std::string>();
        if (mode != "grid" && mode != "random") throw UsageError("sampling mode must be grid or random");
        c.sampling = SamplingSpec{mode == "grid" ? SamplingMode::Grid : SamplingMode::Random,
                                  s.at("count_or_resolution").get<std::uint64_t>(),
                                  s.value("rng_seed", std::uint64_t{0})};
    }
    return c;
}

double parse_length(const std::string& text, double sensing_radius) {
    if (text.empty()) throw UsageError("empty length");
    if (text.back() == 'R' || text.back() == 'r') {
        return parse_number(text.substr(0, text.size() - 1), "length") * sensing_radius;
    }
    return parse_number(text, "length");
}

Point3 parse_triple(const std::string& text, double sensing_radius) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) parts.push_back(part);
    if (parts.size() != 3) throw UsageError("expected three comma-separated values, got '" + text + "'");
    return {parse_length(parts[0], sensing_radius), parse_length(parts[1], sensing_radius),
            parse_length(parts[2], sensing_radius)};
}

std::uint64_t default_grid_resolution(const Region& region, double sensing_radius) {
    const Point3 e = region.extents();
    const double longest = std::max({e.x, e.y, e.z});
    const double steps = std::ceil(longest / (sensing_radius / 10.0));
    if (steps > 2000.0) throw UsageError("region too large for the default grid; pass --grid or --samples");
    return static_cast<std::uint64_t>(steps) + 1;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Sensor placement planning with space-filling polyhedra", "polycover"};
    app.require_subcommand(1);
    RawOptions o;

    CLI::App* plan = app.add_subcommand("plan", "enumerate node positions for a region");
    CLI::App* verify = app.add_subcommand("verify", "check that a placement covers the region");
    CLI::App* compare = app.add_subcommand("compare", "compare the four strategies on one region");
    CLI::App* graph = app.add_subcommand("graph", "connectivity at a transmission range");
    CLI::App* exporter = app.add_subcommand("export-cells", "write one cell mesh per node as OBJ");
    for (CLI::App* cmd : {plan, verify, compare, graph, exporter}) add_common_options(cmd, o);
    for (CLI::App* cmd : {verify, graph}) {
        cmd->add_option("--tx", o.tx, "transmission range, absolute or with R suffix");
    }
    verify->add_option("--sensing-r", o.sensing_r, "sensing radius used for the coverage test");
    verify->add_option("--grid", o.grid, "grid resolution per axis");
    verify->add_option("--samples", o.samples, "number of uniform random samples");
    verify->add_option("--rng-seed", o.rng_seed, "seed for --samples");
    graph->add_option("--edges", o.edges, "write the edge list (i j dist) here");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kUsageError;
    }

    try {
        const RunConfig config = resolve(o);
        if (!o.save_config.empty()) emit(o.save_config, dump(config_to_json(config)), out);
        if (plan->parsed()) return cmd_plan(config, out, err);
        if (verify->parsed()) return cmd_verify(config, out);
        if (compare->parsed()) return cmd_compare(config, out);
        if (graph->parsed()) return cmd_graph(config, out);
        if (exporter->parsed()) return cmd_export_cells(config, out);
        err << "error: no command\n";
        return kUsageError;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const FormatError& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    }
}

}  // namespace polycover::cli
