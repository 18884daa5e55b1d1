#pragma once

#include <utility>
#include <vector>

#include "dires/graph.hpp"

namespace dires {

/// Partition into strongly connected components plus the condensation DAG.
struct SccResult {
    /// Each component as a sorted list of 1-based node ids.
    std::vector<std::vector<int>> components;
    /// component_of[v-1] = index into `components` for node v.
    std::vector<int> component_of;
    /// Deduplicated condensation edges (from-component, to-component).
    std::vector<std::pair<int, int>> condensation_edges;

    /// Component indices with no outgoing condensation edge.
    std::vector<int> sink_components() const;
};

SccResult strongly_connected_components(const DiGraph& g);

/// True iff some node is reachable from every node, i.e. the condensation
/// has exactly one sink component.
bool is_connected(const DiGraph& g);

/// A graph extracted from another one, with nodes relabeled 1..m and the
/// original ids retained.
struct Subgraph {
    DiGraph graph;
    /// original_ids[v-1] = id of local node v in the parent graph.
    std::vector<int> original_ids;

    /// Local id of a parent node, or 0 when the node is not present.
    int local_id(int original) const;
};

/// Nodes reachable from `node` (including itself), as a sorted id list.
std::vector<int> reachable_set(const DiGraph& g, int node);

/// Induced subgraph on reach(k) u reach(j), both sets including their source.
Subgraph reachable_subgraph(const DiGraph& g, int k, int j);

/// Connection structure between a node pair: the union of all connections,
/// its terminal components and the connection subgraphs they induce.
struct ConnectionAnalysis {
    int k = 0;
    int j = 0;
    std::vector<int> reachable_nodes;
    std::vector<int> connection_nodes;
    std::vector<Edge> connection_edges;
    /// Sink components of the connection subgraph, each a sorted node set
    /// lying inside reach(k) n reach(j).
    std::vector<std::vector<int>> terminal_components;
    /// One connected subgraph per terminal component; empty iff no
    /// connection exists between k and j.
    std::vector<Subgraph> subgraphs;
};

ConnectionAnalysis analyze_connections(const DiGraph& g, int k, int j);

/// Repeatedly removes a node v not in {k, j} with out-degree 0, a single
/// in-edge (u, v), and u having (u, v) as its only out-edge. The resistance
/// between k and j is unchanged by each removal. Lowest eligible id first.
Subgraph prune_trailing_path(const DiGraph& g, int k, int j);

} // namespace dires
