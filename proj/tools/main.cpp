#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dires/edgelist.hpp"
#include "dires/errors.hpp"
#include "dires/resistance.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitComputation = 1;
constexpr int kExitParse = 2;

std::string format_double(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

std::string json_int_list(const std::vector<int>& values) {
    std::string out = "[";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) {
            out += ",";
        }
        out += std::to_string(values[i]);
    }
    return out + "]";
}

std::string json_node_lists(const std::vector<dires::Subgraph>& subgraphs) {
    std::string out = "[";
    for (std::size_t i = 0; i < subgraphs.size(); ++i) {
        if (i > 0) {
            out += ",";
        }
        out += json_int_list(subgraphs[i].original_ids);
    }
    return out + "]";
}

/// number, "inf", or {"undefined": [[node lists]]}
std::string json_resistance(const dires::GeneralResistance& r) {
    switch (r.kind) {
    case dires::ResistanceKind::Finite:
        return format_double(r.value);
    case dires::ResistanceKind::Infinite:
        return "\"inf\"";
    case dires::ResistanceKind::Undefined:
        return "{\"undefined\":" + json_node_lists(r.analysis.subgraphs) + "}";
    }
    return "null";
}

std::string csv_resistance(const dires::GeneralResistance& r) {
    switch (r.kind) {
    case dires::ResistanceKind::Finite:
        return format_double(r.value);
    case dires::ResistanceKind::Infinite:
        return "inf";
    case dires::ResistanceKind::Undefined:
        return "undefined";
    }
    return "";
}

std::string wrap_json(int n, const std::string& command, const std::string& result) {
    return "{\"n\":" + std::to_string(n) + ",\"command\":\"" + command +
           "\",\"result\":" + result + "}\n";
}

struct Options {
    std::string input = "-";
    std::string solver = "bartels-stewart";
    std::string format = "json";
    std::string q_variant = "deterministic";
    double tol = 1e-8;
    std::uint64_t seed = 0;

    dires::PipelineOptions pipeline() const {
        dires::PipelineOptions opts;
        opts.solver = solver == "kronecker" ? dires::LyapunovMethod::Kronecker
                                            : dires::LyapunovMethod::BartelsStewart;
        opts.q_variant = q_variant == "random" ? dires::QVariant::SeededRandom
                                               : dires::QVariant::Deterministic;
        opts.seed = seed;
        opts.tol = tol;
        return opts;
    }
};

std::string read_input(const std::string& path) {
    if (path == "-") {
        return std::string(std::istreambuf_iterator<char>(std::cin),
                           std::istreambuf_iterator<char>());
    }
    std::ifstream file(path);
    if (!file) {
        throw dires::ParseError(0, "cannot open input file '" + path + "'");
    }
    return std::string(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
}

void require_cli_node(const dires::DiGraph& g, int node) {
    if (node < 1 || node > g.node_count()) {
        throw dires::ParseError(0, "node id " + std::to_string(node) + " out of range 1.." +
                                       std::to_string(g.node_count()));
    }
}

std::string run_pair(const dires::DiGraph& g, int k, int j, const Options& opts) {
    const auto r = dires::general_resistance(g, k, j, opts.pipeline());
    if (opts.format == "csv") {
        return "k,j,r\n" + std::to_string(k) + "," + std::to_string(j) + "," + csv_resistance(r) +
               "\n";
    }
    return wrap_json(g.node_count(), "pair", json_resistance(r));
}

std::string run_matrix(const dires::DiGraph& g, const Options& opts) {
    const int n = g.node_count();
    const bool connected = dires::is_connected(g);

    // One pipeline when possible, per-pair trichotomy otherwise.
    std::vector<std::vector<dires::GeneralResistance>> cells(n);
    if (connected) {
        const auto pipeline = dires::build_pipeline(g, opts.pipeline());
        const dires::Matrix r = pipeline.resistance_matrix();
        for (int k = 0; k < n; ++k) {
            cells[k].resize(n);
            for (int j = 0; j < n; ++j) {
                cells[k][j].kind = dires::ResistanceKind::Finite;
                cells[k][j].value = r(k, j);
            }
        }
    } else {
        for (int k = 0; k < n; ++k) {
            cells[k].resize(n);
            for (int j = 0; j < n; ++j) {
                if (k == j) {
                    cells[k][j].kind = dires::ResistanceKind::Finite;
                    cells[k][j].value = 0.0;
                } else if (j > k) {
                    cells[k][j] = dires::general_resistance(g, k + 1, j + 1, opts.pipeline());
                } else {
                    cells[k][j] = cells[j][k];
                }
            }
        }
    }

    if (opts.format == "csv") {
        std::string out = "k,j,r\n";
        for (int k = 0; k < n; ++k) {
            for (int j = k + 1; j < n; ++j) {
                out += std::to_string(k + 1) + "," + std::to_string(j + 1) + "," +
                       csv_resistance(cells[k][j]) + "\n";
            }
        }
        return out;
    }
    std::string rows = "[";
    for (int k = 0; k < n; ++k) {
        if (k > 0) {
            rows += ",";
        }
        rows += "[";
        for (int j = 0; j < n; ++j) {
            if (j > 0) {
                rows += ",";
            }
            rows += json_resistance(cells[k][j]);
        }
        rows += "]";
    }
    rows += "]";
    return wrap_json(n, "matrix", rows);
}

std::string run_scalar(const dires::DiGraph& g, const std::string& command, const Options& opts) {
    const auto pipeline = dires::build_pipeline(g, opts.pipeline());
    const double value =
        command == "kirchhoff" ? pipeline.kirchhoff_index() : pipeline.h2_norm();
    if (opts.format == "csv") {
        return command + "\n" + format_double(value) + "\n";
    }
    return wrap_json(g.node_count(), command, format_double(value));
}

std::string run_reduce(const dires::DiGraph& g, int k, int j) {
    const dires::Subgraph reachable = dires::reachable_subgraph(g, k, j);
    const dires::Subgraph pruned =
        dires::prune_trailing_path(reachable.graph, reachable.local_id(k), reachable.local_id(j));

    // Re-emit over the original node set so k and j keep their ids.
    std::vector<dires::Edge> edges;
    for (const dires::Edge& e : pruned.graph.edges()) {
        edges.push_back({reachable.original_ids[pruned.original_ids[e.tail - 1] - 1],
                         reachable.original_ids[pruned.original_ids[e.head - 1] - 1], e.weight});
    }
    return dires::to_edge_list(dires::DiGraph(g.node_count(), std::move(edges)));
}

std::string run_subgraphs(const dires::DiGraph& g, int k, int j, const Options& opts) {
    const auto analysis = dires::analyze_connections(g, k, j);
    if (opts.format == "csv") {
        std::string out = "subgraph,tail,head,weight\n";
        for (std::size_t s = 0; s < analysis.subgraphs.size(); ++s) {
            const auto& sub = analysis.subgraphs[s];
            for (const dires::Edge& e : sub.graph.edges()) {
                out += std::to_string(s + 1) + "," +
                       std::to_string(sub.original_ids[e.tail - 1]) + "," +
                       std::to_string(sub.original_ids[e.head - 1]) + "," +
                       format_double(e.weight) + "\n";
            }
        }
        return out;
    }
    std::string result = "[";
    for (std::size_t s = 0; s < analysis.subgraphs.size(); ++s) {
        if (s > 0) {
            result += ",";
        }
        const auto& sub = analysis.subgraphs[s];
        result += "{\"nodes\":" + json_int_list(sub.original_ids) + ",\"edges\":[";
        const auto& edges = sub.graph.edges();
        for (std::size_t e = 0; e < edges.size(); ++e) {
            if (e > 0) {
                result += ",";
            }
            result += "[" + std::to_string(sub.original_ids[edges[e].tail - 1]) + "," +
                      std::to_string(sub.original_ids[edges[e].head - 1]) + "," +
                      format_double(edges[e].weight) + "]";
        }
        result += "]}";
    }
    result += "]";
    return wrap_json(g.node_count(), "subgraphs", result);
}

std::string run_check_metric(const dires::DiGraph& g, const Options& opts) {
    const auto pipeline = dires::build_pipeline(g, opts.pipeline());
    const dires::MetricReport report = dires::check_metric(pipeline);

    auto bool_str = [](bool b) { return b ? "true" : "false"; };
    auto triple = [](const std::array<int, 3>& t) {
        return std::to_string(t[0]) + " " + std::to_string(t[1]) + " " + std::to_string(t[2]);
    };
    if (opts.format == "csv") {
        std::string out = "key,value\n";
        out += std::string("nonnegative,") + bool_str(report.nonnegative) + "\n";
        out += std::string("zero_iff_equal,") + bool_str(report.zero_iff_equal) + "\n";
        out += std::string("symmetric,") + bool_str(report.symmetric) + "\n";
        out += std::string("sqrt_triangle,") + bool_str(report.sqrt_triangle) + "\n";
        out += std::string("plain_triangle,") + bool_str(report.plain_triangle) + "\n";
        out += "plain_violations," + std::to_string(report.plain_violations) + "\n";
        out += "min_sqrt_slack," + format_double(report.min_sqrt_slack) + "\n";
        out += "min_plain_slack," + format_double(report.min_plain_slack) + "\n";
        out += "worst_sqrt_triple," + triple(report.worst_sqrt_triple) + "\n";
        out += "worst_plain_triple," + triple(report.worst_plain_triple) + "\n";
        return out;
    }
    std::string result = "{";
    result += std::string("\"nonnegative\":") + bool_str(report.nonnegative);
    result += std::string(",\"zero_iff_equal\":") + bool_str(report.zero_iff_equal);
    result += std::string(",\"symmetric\":") + bool_str(report.symmetric);
    result += std::string(",\"sqrt_triangle\":") + bool_str(report.sqrt_triangle);
    result += std::string(",\"plain_triangle\":") + bool_str(report.plain_triangle);
    result += ",\"plain_violations\":" + std::to_string(report.plain_violations);
    result += ",\"min_sqrt_slack\":" + format_double(report.min_sqrt_slack);
    result += ",\"min_plain_slack\":" + format_double(report.min_plain_slack);
    result += ",\"worst_sqrt_triple\":[" + std::to_string(report.worst_sqrt_triple[0]) + "," +
              std::to_string(report.worst_sqrt_triple[1]) + "," +
              std::to_string(report.worst_sqrt_triple[2]) + "]";
    result += ",\"worst_plain_triple\":[" + std::to_string(report.worst_plain_triple[0]) + "," +
              std::to_string(report.worst_plain_triple[1]) + "," +
              std::to_string(report.worst_plain_triple[2]) + "]";
    result += "}";
    return wrap_json(g.node_count(), "check-metric", result);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Generalized effective resistance for weighted directed graphs"};
    app.require_subcommand(1);

    Options opts;
    app.add_option("--input", opts.input, "edge-list file, '-' for stdin")->capture_default_str();
    app.add_option("--solver", opts.solver, "Lyapunov solver")
        ->check(CLI::IsMember({"bartels-stewart", "kronecker"}))
        ->capture_default_str();
    app.add_option("--tol", opts.tol, "residual tolerance scale")->capture_default_str();
    app.add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    app.add_option("--q", opts.q_variant, "orthonormal basis construction")
        ->check(CLI::IsMember({"deterministic", "random"}))
        ->capture_default_str();
    app.add_option("--seed", opts.seed, "seed for --q random")->capture_default_str();

    int k = 0;
    int j = 0;
    auto* pair = app.add_subcommand("pair", "general resistance between two nodes");
    pair->add_option("k", k)->required();
    pair->add_option("j", j)->required();
    auto* matrix = app.add_subcommand("matrix", "all pairwise resistances");
    auto* kirchhoff = app.add_subcommand("kirchhoff", "sum of resistances over unordered pairs");
    auto* h2 = app.add_subcommand("h2", "consensus H2 norm sqrt(Kf / 2N)");
    auto* reduce = app.add_subcommand("reduce", "pruned reachable subgraph as an edge list");
    reduce->add_option("k", k)->required();
    reduce->add_option("j", j)->required();
    auto* subgraphs = app.add_subcommand("subgraphs", "connection subgraphs of a node pair");
    subgraphs->add_option("k", k)->required();
    subgraphs->add_option("j", j)->required();
    auto* metric = app.add_subcommand("check-metric", "metric axioms over all node triples");

    for (auto* sub : {pair, matrix, kirchhoff, h2, reduce, subgraphs, metric}) {
        sub->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParse;
    }

    try {
        const dires::DiGraph graph = dires::parse_edge_list(read_input(opts.input));

        std::string output;
        if (pair->parsed()) {
            require_cli_node(graph, k);
            require_cli_node(graph, j);
            output = run_pair(graph, k, j, opts);
        } else if (matrix->parsed()) {
            output = run_matrix(graph, opts);
        } else if (kirchhoff->parsed()) {
            output = run_scalar(graph, "kirchhoff", opts);
        } else if (h2->parsed()) {
            output = run_scalar(graph, "h2", opts);
        } else if (reduce->parsed()) {
            require_cli_node(graph, k);
            require_cli_node(graph, j);
            output = run_reduce(graph, k, j);
        } else if (subgraphs->parsed()) {
            require_cli_node(graph, k);
            require_cli_node(graph, j);
            output = run_subgraphs(graph, k, j, opts);
        } else if (metric->parsed()) {
            output = run_check_metric(graph, opts);
        }
        std::cout << output;
        return kExitOk;
    } catch (const dires::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitComputation;
    }
}
