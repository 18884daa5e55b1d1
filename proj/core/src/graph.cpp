#include "dires/graph.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

namespace dires {

DiGraph::DiGraph(int node_count, std::vector<Edge> edges)
    : n_(node_count), edges_(std::move(edges)), out_(node_count), in_(node_count) {
    if (node_count < 1) {
        throw std::invalid_argument("DiGraph: node count must be positive");
    }
    std::set<std::pair<int, int>> seen;
    for (const Edge& e : edges_) {
        if (e.tail < 1 || e.tail > n_ || e.head < 1 || e.head > n_) {
            throw std::invalid_argument("DiGraph: node id out of range: (" +
                                        std::to_string(e.tail) + "," + std::to_string(e.head) + ")");
        }
        if (e.tail == e.head) {
            throw std::invalid_argument("DiGraph: self-loop at node " + std::to_string(e.tail));
        }
        if (!(e.weight > 0.0) || !std::isfinite(e.weight)) {
            throw std::invalid_argument("DiGraph: weight of edge (" + std::to_string(e.tail) + "," +
                                        std::to_string(e.head) + ") must be a positive real");
        }
        if (!seen.insert({e.tail, e.head}).second) {
            throw std::invalid_argument("DiGraph: duplicate edge (" + std::to_string(e.tail) + "," +
                                        std::to_string(e.head) + ")");
        }
        out_[e.tail - 1].push_back(e.head);
        in_[e.head - 1].push_back(e.tail);
    }
    for (auto& v : out_) {
        std::sort(v.begin(), v.end());
    }
    for (auto& v : in_) {
        std::sort(v.begin(), v.end());
    }
    by_pair_ = edges_;
    std::sort(by_pair_.begin(), by_pair_.end(), [](const Edge& a, const Edge& b) {
        return std::pair{a.tail, a.head} < std::pair{b.tail, b.head};
    });
}

double DiGraph::weight(int tail, int head) const {
    auto it = std::lower_bound(by_pair_.begin(), by_pair_.end(), std::pair{tail, head},
                               [](const Edge& e, const std::pair<int, int>& key) {
                                   return std::pair{e.tail, e.head} < key;
                               });
    if (it != by_pair_.end() && it->tail == tail && it->head == head) {
        return it->weight;
    }
    return 0.0;
}

bool DiGraph::has_edge(int tail, int head) const {
    return weight(tail, head) != 0.0;
}

const std::vector<int>& DiGraph::out_neighbors(int node) const {
    return out_.at(node - 1);
}

const std::vector<int>& DiGraph::in_neighbors(int node) const {
    return in_.at(node - 1);
}

Matrix adjacency_matrix(const DiGraph& g) {
    Matrix a(g.node_count(), g.node_count());
    for (const Edge& e : g.edges()) {
        a(e.tail - 1, e.head - 1) = e.weight;
    }
    return a;
}

Matrix laplacian(const DiGraph& g) {
    const int n = g.node_count();
    Matrix l(n, n);
    for (const Edge& e : g.edges()) {
        l(e.tail - 1, e.head - 1) -= e.weight;
        l(e.tail - 1, e.tail - 1) += e.weight;
    }
    return l;
}

std::vector<double> out_degrees(const DiGraph& g) {
    std::vector<double> d(g.node_count(), 0.0);
    for (const Edge& e : g.edges()) {
        d[e.tail - 1] += e.weight;
    }
    return d;
}

std::vector<double> in_degrees(const DiGraph& g) {
    std::vector<double> d(g.node_count(), 0.0);
    for (const Edge& e : g.edges()) {
        d[e.head - 1] += e.weight;
    }
    return d;
}

bool is_balanced(const DiGraph& g) {
    const auto dout = out_degrees(g);
    const auto din = in_degrees(g);
    for (int i = 0; i < g.node_count(); ++i) {
        if (std::abs(dout[i] - din[i]) > 1e-12) {
            return false;
        }
    }
    return true;
}

bool is_undirected(const DiGraph& g) {
    for (const Edge& e : g.edges()) {
        if (g.weight(e.head, e.tail) != e.weight) {
            return false;
        }
    }
    return true;
}

} // namespace dires
