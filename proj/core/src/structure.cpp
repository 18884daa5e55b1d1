#include "dires/structure.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stack>
#include <stdexcept>
#include <string>

namespace dires {

namespace {

void require_node(const DiGraph& g, int node) {
    if (node < 1 || node > g.node_count()) {
        throw std::invalid_argument("node id out of range: " + std::to_string(node));
    }
}

} // namespace

std::vector<int> SccResult::sink_components() const {
    std::vector<bool> has_out(components.size(), false);
    for (const auto& [from, to] : condensation_edges) {
        has_out[from] = true;
    }
    std::vector<int> sinks;
    for (int c = 0; c < static_cast<int>(components.size()); ++c) {
        if (!has_out[c]) {
            sinks.push_back(c);
        }
    }
    return sinks;
}

SccResult strongly_connected_components(const DiGraph& g) {
    const int n = g.node_count();
    SccResult result;
    result.component_of.assign(n, -1);

    // Iterative Tarjan.
    std::vector<int> index(n, -1);
    std::vector<int> lowlink(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<int> stack;
    int next_index = 0;

    struct Frame {
        int node;       // 0-based
        std::size_t nb; // next out-neighbor position
    };

    for (int root = 0; root < n; ++root) {
        if (index[root] != -1) {
            continue;
        }
        std::vector<Frame> frames{{root, 0}};
        index[root] = lowlink[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = true;

        while (!frames.empty()) {
            Frame& f = frames.back();
            const auto& nbs = g.out_neighbors(f.node + 1);
            if (f.nb < nbs.size()) {
                const int w = nbs[f.nb++] - 1;
                if (index[w] == -1) {
                    index[w] = lowlink[w] = next_index++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    frames.push_back({w, 0});
                } else if (on_stack[w]) {
                    lowlink[f.node] = std::min(lowlink[f.node], index[w]);
                }
            } else {
                if (lowlink[f.node] == index[f.node]) {
                    std::vector<int> comp;
                    int w;
                    do {
                        w = stack.back();
                        stack.pop_back();
                        on_stack[w] = false;
                        result.component_of[w] = static_cast<int>(result.components.size());
                        comp.push_back(w + 1);
                    } while (w != f.node);
                    std::sort(comp.begin(), comp.end());
                    result.components.push_back(std::move(comp));
                }
                const int v = f.node;
                frames.pop_back();
                if (!frames.empty()) {
                    lowlink[frames.back().node] = std::min(lowlink[frames.back().node], lowlink[v]);
                }
            }
        }
    }

    std::set<std::pair<int, int>> cond;
    for (const Edge& e : g.edges()) {
        const int a = result.component_of[e.tail - 1];
        const int b = result.component_of[e.head - 1];
        if (a != b) {
            cond.insert({a, b});
        }
    }
    result.condensation_edges.assign(cond.begin(), cond.end());
    return result;
}

bool is_connected(const DiGraph& g) {
    return strongly_connected_components(g).sink_components().size() == 1;
}

int Subgraph::local_id(int original) const {
    for (int v = 0; v < static_cast<int>(original_ids.size()); ++v) {
        if (original_ids[v] == original) {
            return v + 1;
        }
    }
    return 0;
}

std::vector<int> reachable_set(const DiGraph& g, int node) {
    require_node(g, node);
    std::vector<bool> seen(g.node_count(), false);
    std::queue<int> frontier;
    seen[node - 1] = true;
    frontier.push(node);
    while (!frontier.empty()) {
        const int v = frontier.front();
        frontier.pop();
        for (int w : g.out_neighbors(v)) {
            if (!seen[w - 1]) {
                seen[w - 1] = true;
                frontier.push(w);
            }
        }
    }
    std::vector<int> out;
    for (int v = 1; v <= g.node_count(); ++v) {
        if (seen[v - 1]) {
            out.push_back(v);
        }
    }
    return out;
}

namespace {

/// Induced subgraph on a sorted list of original node ids.
Subgraph induced_subgraph(const DiGraph& g, const std::vector<int>& nodes) {
    std::vector<int> local(g.node_count() + 1, 0);
    for (int v = 0; v < static_cast<int>(nodes.size()); ++v) {
        local[nodes[v]] = v + 1;
    }
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        if (local[e.tail] != 0 && local[e.head] != 0) {
            edges.push_back({local[e.tail], local[e.head], e.weight});
        }
    }
    return Subgraph{DiGraph(static_cast<int>(nodes.size()), std::move(edges)), nodes};
}

std::vector<int> set_union_sorted(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<int> set_intersection_sorted(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

} // namespace

Subgraph reachable_subgraph(const DiGraph& g, int k, int j) {
    require_node(g, k);
    require_node(g, j);
    return induced_subgraph(g, set_union_sorted(reachable_set(g, k), reachable_set(g, j)));
}

ConnectionAnalysis analyze_connections(const DiGraph& g, int k, int j) {
    require_node(g, k);
    require_node(g, j);

    ConnectionAnalysis analysis;
    analysis.k = k;
    analysis.j = j;

    const auto from_k = reachable_set(g, k);
    const auto from_j = reachable_set(g, j);
    analysis.reachable_nodes = set_union_sorted(from_k, from_j);
    const auto terminals = set_intersection_sorted(from_k, from_j);
    if (terminals.empty()) {
        return analysis; // no connection between k and j
    }

    // A node joins the connection subgraph when it is reachable from k or j
    // and can still reach a common terminal.
    for (int m : analysis.reachable_nodes) {
        const auto from_m = reachable_set(g, m);
        if (!set_intersection_sorted(from_m, terminals).empty()) {
            analysis.connection_nodes.push_back(m);
        }
    }
    std::vector<bool> is_connection(g.node_count() + 1, false);
    for (int m : analysis.connection_nodes) {
        is_connection[m] = true;
    }
    for (const Edge& e : g.edges()) {
        if (is_connection[e.tail] && is_connection[e.head]) {
            analysis.connection_edges.push_back(e);
        }
    }

    const Subgraph connection = induced_subgraph(g, analysis.connection_nodes);
    const SccResult scc = strongly_connected_components(connection.graph);
    for (int sink : scc.sink_components()) {
        std::vector<int> terminal;
        for (int local : scc.components[sink]) {
            terminal.push_back(connection.original_ids[local - 1]);
        }
        std::sort(terminal.begin(), terminal.end());
        analysis.terminal_components.push_back(terminal);

        // All connection nodes that reach this sink, in local ids.
        std::vector<bool> reaches(connection.graph.node_count(), false);
        std::queue<int> frontier;
        for (int local : scc.components[sink]) {
            reaches[local - 1] = true;
            frontier.push(local);
        }
        while (!frontier.empty()) {
            const int v = frontier.front();
            frontier.pop();
            for (int u : connection.graph.in_neighbors(v)) {
                if (!reaches[u - 1]) {
                    reaches[u - 1] = true;
                    frontier.push(u);
                }
            }
        }
        std::vector<int> members;
        for (int v = 1; v <= connection.graph.node_count(); ++v) {
            if (reaches[v - 1]) {
                members.push_back(connection.original_ids[v - 1]);
            }
        }
        std::sort(members.begin(), members.end());
        analysis.subgraphs.push_back(induced_subgraph(g, members));
    }
    return analysis;
}

Subgraph prune_trailing_path(const DiGraph& g, int k, int j) {
    require_node(g, k);
    require_node(g, j);

    std::vector<int> nodes(g.node_count());
    for (int v = 0; v < g.node_count(); ++v) {
        nodes[v] = v + 1;
    }
    std::vector<Edge> edges = g.edges();

    auto out_count = [&](int v) {
        int c = 0;
        for (const Edge& e : edges) {
            c += e.tail == v;
        }
        return c;
    };

    for (;;) {
        int removable = 0;
        for (int v : nodes) {
            if (v == k || v == j || out_count(v) != 0) {
                continue;
            }
            const Edge* in_edge = nullptr;
            int in_count = 0;
            for (const Edge& e : edges) {
                if (e.head == v) {
                    ++in_count;
                    in_edge = &e;
                }
            }
            if (in_count != 1) {
                continue;
            }
            if (out_count(in_edge->tail) != 1) {
                continue;
            }
            removable = v;
            break; // nodes is sorted, so this is the lowest eligible id
        }
        if (removable == 0) {
            break;
        }
        nodes.erase(std::find(nodes.begin(), nodes.end(), removable));
        std::erase_if(edges, [&](const Edge& e) { return e.head == removable; });
    }

    return induced_subgraph(g, nodes);
}

} // namespace dires
