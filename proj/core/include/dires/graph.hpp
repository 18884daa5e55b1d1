#pragma once

#include <vector>

#include "dires/matrix.hpp"

namespace dires {

/// Directed edge with a strictly positive weight. Node ids are 1-based.
struct Edge {
    int tail;
    int head;
    double weight;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Weighted directed graph on nodes 1..n. No self-loops, at most one edge
/// per ordered pair, all weights > 0. Immutable after construction.
class DiGraph {
public:
    /// Validates and stores the edge set; throws std::invalid_argument on a
    /// self-loop, a duplicate ordered pair, a non-positive or non-finite
    /// weight, or a node id outside 1..n.
    DiGraph(int node_count, std::vector<Edge> edges);

    int node_count() const noexcept { return n_; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    bool has_edge(int tail, int head) const;
    /// Weight of edge (tail, head), or 0 when absent.
    double weight(int tail, int head) const;

    /// Heads of edges leaving `node` (1-based ids).
    const std::vector<int>& out_neighbors(int node) const;
    /// Tails of edges entering `node` (1-based ids).
    const std::vector<int>& in_neighbors(int node) const;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> out_;
    std::vector<std::vector<int>> in_;
    std::vector<Edge> by_pair_; ///< edges sorted by (tail, head) for weight lookup
};

Matrix adjacency_matrix(const DiGraph& g);
/// L = D - A with D the diagonal of out-degrees; rows sum to zero.
Matrix laplacian(const DiGraph& g);

std::vector<double> out_degrees(const DiGraph& g);
std::vector<double> in_degrees(const DiGraph& g);

/// Out-degree equals in-degree at every node (absolute tolerance 1e-12).
bool is_balanced(const DiGraph& g);
/// Adjacency matrix is exactly symmetric.
bool is_undirected(const DiGraph& g);

} // namespace dires
