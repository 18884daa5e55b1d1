#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "dires/edgelist.hpp"
#include "dires/errors.hpp"

namespace dires {

namespace {

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::istringstream stream(line);
    std::string field;
    while (stream >> field) {
        fields.push_back(field);
    }
    return fields;
}

int parse_int(const std::string& field, int line_no, const char* what) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size()) {
        throw ParseError(line_no, std::string("expected an integer ") + what + ", got '" + field + "'");
    }
    return value;
}

double parse_weight(const std::string& field, int line_no) {
    try {
        std::size_t consumed = 0;
        const double value = std::stod(field, &consumed);
        if (consumed != field.size() || !std::isfinite(value)) {
            throw std::invalid_argument(field);
        }
        return value;
    } catch (const std::exception&) {
        throw ParseError(line_no, "expected a real weight, got '" + field + "'");
    }
}

} // namespace

EdgeListDocument parse_edge_list_document(std::string_view text) {
    EdgeListDocument doc;
    bool have_header = false;

    std::istringstream stream{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(stream, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        const auto fields = split_fields(line);
        if (fields.empty() || fields[0][0] == '#') {
            continue;
        }

        if (!have_header) {
            if (fields[0] != "nodes" || fields.size() != 2) {
                throw ParseError(line_no, "first line must be 'nodes <N>'");
            }
            doc.node_count = parse_int(fields[1], line_no, "node count");
            if (doc.node_count < 1) {
                throw ParseError(line_no, "node count must be positive");
            }
            have_header = true;
            continue;
        }
        if (fields[0] == "nodes") {
            throw ParseError(line_no, "duplicate 'nodes' header");
        }
        if (fields.size() != 3 && !(fields.size() == 4 && fields[3] == "undirected")) {
            throw ParseError(line_no, "expected '<u> <v> <w>' or '<u> <v> <w> undirected'");
        }

        EdgeListDocument::Record record;
        record.tail = parse_int(fields[0], line_no, "tail node id");
        record.head = parse_int(fields[1], line_no, "head node id");
        record.weight = parse_weight(fields[2], line_no);
        record.undirected = fields.size() == 4;

        if (record.tail < 1 || record.tail > doc.node_count || record.head < 1 ||
            record.head > doc.node_count) {
            throw ParseError(line_no, "node id out of range 1.." + std::to_string(doc.node_count));
        }
        if (record.tail == record.head) {
            throw ParseError(line_no, "self-loop at node " + std::to_string(record.tail));
        }
        if (!(record.weight > 0.0)) {
            throw ParseError(line_no, "weight must be strictly positive");
        }
        for (const auto& prev : doc.records) {
            const bool forward = prev.tail == record.tail && prev.head == record.head;
            const bool reversed = prev.tail == record.head && prev.head == record.tail;
            if (forward || (reversed && (prev.undirected || record.undirected))) {
                throw ParseError(line_no, "duplicate edge (" + std::to_string(record.tail) + "," +
                                              std::to_string(record.head) + ")");
            }
        }
        doc.records.push_back(record);
    }
    if (!have_header) {
        throw ParseError(line_no == 0 ? 1 : line_no, "missing 'nodes <N>' header");
    }
    return doc;
}

DiGraph parse_edge_list(std::string_view text) {
    const EdgeListDocument doc = parse_edge_list_document(text);
    std::vector<Edge> edges;
    edges.reserve(doc.records.size() * 2);
    for (const auto& record : doc.records) {
        edges.push_back({record.tail, record.head, record.weight});
        if (record.undirected) {
            edges.push_back({record.head, record.tail, record.weight});
        }
    }
    return DiGraph(doc.node_count, std::move(edges));
}

std::string to_edge_list(const DiGraph& g) {
    std::string out = "nodes " + std::to_string(g.node_count()) + "\n";
    char buffer[64];
    for (const Edge& e : g.edges()) {
        std::snprintf(buffer, sizeof(buffer), "%d %d %.17g\n", e.tail, e.head, e.weight);
        out += buffer;
    }
    return out;
}

} // namespace dires
