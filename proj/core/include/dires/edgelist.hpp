#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dires/graph.hpp"

namespace dires {

/// Parsed form of the edge-list text format:
///   # comment
///   nodes <N>
///   <u> <v> <w>              directed edge u -> v
///   <u> <v> <w> undirected   pair of opposite edges of equal weight
struct EdgeListDocument {
    struct Record {
        int tail = 0;
        int head = 0;
        double weight = 0.0;
        bool undirected = false;
    };

    int node_count = 0;
    std::vector<Record> records;
};

/// Throws ParseError with a 1-based line number on a missing or misplaced
/// `nodes` header, malformed fields, ids out of range, non-positive
/// weights, duplicate ordered pairs, or self-loops.
EdgeListDocument parse_edge_list_document(std::string_view text);

/// Full parse: text -> validated DiGraph, undirected records expanded.
DiGraph parse_edge_list(std::string_view text);

/// Serializes a graph back to the edge-list format, directed lines only,
/// weights with 17 significant digits.
std::string to_edge_list(const DiGraph& g);

} // namespace dires
