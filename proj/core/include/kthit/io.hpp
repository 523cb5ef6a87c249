#pragma once

#include <string>
#include <vector>

#include "kthit/graph.hpp"

namespace kthit {

// CNF formula with literals as signed 1-based variable indices.
struct CnfFormula {
    int num_vars = 0;
    std::vector<std::vector<int>> clauses;

    bool operator==(const CnfFormula&) const = default;
};

// Exhaustive satisfiability check (num_vars <= 24).
bool is_satisfiable(const CnfFormula& phi);
bool evaluate(const CnfFormula& phi, const std::vector<bool>& assignment);  // assignment[i] is x_{i+1}

// Graph text format: "p graph <n> <m>" followed by m lines "e <u> <v>" with 0-based ids.
// Lines starting with 'c' and blank lines are ignored. Throws ParseError with the offending line.
Graph parse_graph(const std::string& text);
std::string serialize_graph(const Graph& g);

// DIMACS CNF. Throws ParseError on malformed input or an empty clause.
CnfFormula parse_cnf(const std::string& text);
std::string serialize_cnf(const CnfFormula& phi);

// Parses a vertex list such as "0,3,5" (also accepts spaces); empty string gives the empty set.
VertexSet parse_vertex_list(const std::string& text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

// A modulator instance bundled with free-form JSON metadata.
struct InstanceDocument {
    Graph graph;
    VertexSet x;
    long long k = 0;
    int t = 3;
    int lambda = 0;
    std::string metadata_json = "{}";  // serialized JSON object

    bool operator==(const InstanceDocument&) const = default;
};

std::string serialize_instance(const InstanceDocument& doc);
InstanceDocument parse_instance(const std::string& json_text);

// DOT rendering with optional per-vertex labels.
std::string to_dot(const Graph& g, const std::vector<std::string>& labels = {});

}  // namespace kthit
