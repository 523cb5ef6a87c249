#include "kthit/io.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "kthit/errors.hpp"

namespace kthit {

bool evaluate(const CnfFormula& phi, const std::vector<bool>& assignment) {
    for (const auto& clause : phi.clauses) {
        bool sat = false;
        for (int lit : clause) {
            bool value = assignment[std::abs(lit) - 1];
            if ((lit > 0) == value) {
                sat = true;
                break;
            }
        }
        if (!sat) return false;
    }
    return true;
}

bool is_satisfiable(const CnfFormula& phi) {
    if (phi.num_vars > 24) throw CapExceeded("exhaustive SAT check is capped at 24 variables");
    std::vector<bool> a(phi.num_vars, false);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << phi.num_vars); ++bits) {
        for (int i = 0; i < phi.num_vars; ++i) a[i] = (bits >> i) & 1u;
        if (evaluate(phi, a)) return true;
    }
    return false;
}

namespace {

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(line);
    }
    return lines;
}

bool blank_or_comment(const std::string& line) {
    std::size_t p = line.find_first_not_of(" \t");
    return p == std::string::npos || line[p] == 'c' || line[p] == '%';
}

}  // namespace

Graph parse_graph(const std::string& text) {
    auto lines = split_lines(text);
    int n = -1;
    long long m = -1;
    long long seen_edges = 0;
    Graph g;
    int header_line = 0;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        int lineno = static_cast<int>(i) + 1;
        const std::string& line = lines[i];
        if (blank_or_comment(line)) continue;
        std::istringstream in(line);
        std::string tag;
        in >> tag;
        if (tag == "p") {
            if (n >= 0) throw ParseError(lineno, "duplicate header");
            std::string kind;
            if (!(in >> kind >> n >> m) || kind != "graph" || n < 0 || m < 0)
                throw ParseError(lineno, "expected 'p graph <n> <m>'");
            std::string extra;
            if (in >> extra) throw ParseError(lineno, "trailing tokens after header");
            g = Graph(n);
            header_line = lineno;
        } else if (tag == "e") {
            if (n < 0) throw ParseError(lineno, "edge before header");
            long long u, v;
            if (!(in >> u >> v)) throw ParseError(lineno, "expected 'e <u> <v>'");
            std::string extra;
            if (in >> extra) throw ParseError(lineno, "trailing tokens after edge");
            if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError(lineno, "vertex id out of range");
            if (u == v) throw ParseError(lineno, "self-loop at vertex " + std::to_string(u));
            if (!g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v)))
                throw ParseError(lineno, "duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
            ++seen_edges;
        } else {
            throw ParseError(lineno, "unknown line tag '" + tag + "'");
        }
    }
    if (n < 0) throw ParseError(static_cast<int>(lines.size()), "missing 'p graph' header");
    if (seen_edges != m)
        throw ParseError(header_line, "header announces " + std::to_string(m) + " edges but " +
                                          std::to_string(seen_edges) + " were given");
    return g;
}

std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    out << "p graph " << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (auto [u, v] : g.edges()) out << "e " << u << ' ' << v << '\n';
    return out.str();
}

CnfFormula parse_cnf(const std::string& text) {
    auto lines = split_lines(text);
    CnfFormula phi;
    long long declared_clauses = -1;
    int header_line = 0;
    std::vector<int> current;
    int current_start = 0;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        int lineno = static_cast<int>(i) + 1;
        const std::string& line = lines[i];
        if (blank_or_comment(line)) continue;
        std::istringstream in(line);
        if (line.find_first_not_of(" \t") != std::string::npos && line[line.find_first_not_of(" \t")] == 'p') {
            std::string p, kind;
            long long nv;
            if (declared_clauses >= 0) throw ParseError(lineno, "duplicate header");
            if (!(in >> p >> kind >> nv >> declared_clauses) || kind != "cnf" || nv < 0 || declared_clauses < 0)
                throw ParseError(lineno, "expected 'p cnf <vars> <clauses>'");
            phi.num_vars = static_cast<int>(nv);
            header_line = lineno;
            continue;
        }
        if (declared_clauses < 0) throw ParseError(lineno, "clause before header");
        std::string tok;
        while (in >> tok) {
            long long lit;
            try {
                std::size_t used = 0;
                lit = std::stoll(tok, &used);
                if (used != tok.size()) throw std::invalid_argument(tok);
            } catch (const std::exception&) {
                throw ParseError(lineno, "invalid literal '" + tok + "'");
            }
            if (current.empty()) current_start = lineno;
            if (lit == 0) {
                if (current.empty()) throw ParseError(lineno, "empty clause");
                phi.clauses.push_back(current);
                current.clear();
                continue;
            }
            if (std::llabs(lit) > phi.num_vars) throw ParseError(lineno, "literal references undeclared variable");
            current.push_back(static_cast<int>(lit));
        }
    }
    if (declared_clauses < 0) throw ParseError(static_cast<int>(lines.size()), "missing 'p cnf' header");
    if (!current.empty()) throw ParseError(current_start, "clause not terminated by 0");
    if (static_cast<long long>(phi.clauses.size()) != declared_clauses)
        throw ParseError(header_line, "header announces " + std::to_string(declared_clauses) + " clauses but " +
                                          std::to_string(phi.clauses.size()) + " were given");
    return phi;
}

std::string serialize_cnf(const CnfFormula& phi) {
    std::ostringstream out;
    out << "p cnf " << phi.num_vars << ' ' << phi.clauses.size() << '\n';
    for (const auto& c : phi.clauses) {
        for (int lit : c) out << lit << ' ';
        out << "0\n";
    }
    return out.str();
}

VertexSet parse_vertex_list(const std::string& text) {
    std::vector<Vertex> out;
    std::string tok;
    auto flush = [&] {
        if (tok.empty()) return;
        std::size_t used = 0;
        long long v = -1;
        try {
            v = std::stoll(tok, &used);
        } catch (const std::logic_error&) {
            used = 0;
        }
        if (used != tok.size() || v < 0) throw ParseError(1, "invalid vertex id '" + tok + "'");
        out.push_back(static_cast<Vertex>(v));
        tok.clear();
    };
    for (char ch : text) {
        if (ch == ',' || ch == ' ' || ch == '\t' || ch == '\n') flush();
        else tok.push_back(ch);
    }
    flush();
    return make_set(std::move(out));
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write '" + path + "'");
    out << text;
}

std::string serialize_instance(const InstanceDocument& doc) {
    nlohmann::ordered_json j;
    nlohmann::ordered_json edges = nlohmann::ordered_json::array();
    for (auto [u, v] : doc.graph.edges()) edges.push_back({u, v});
    j["graph"] = {{"n", doc.graph.num_vertices()}, {"edges", edges}};
    j["x"] = doc.x;
    j["k"] = doc.k;
    j["t"] = doc.t;
    j["lambda"] = doc.lambda;
    j["metadata"] = nlohmann::ordered_json::parse(doc.metadata_json);
    return j.dump(2) + "\n";
}

InstanceDocument parse_instance(const std::string& json_text) {
    InstanceDocument doc;
    nlohmann::ordered_json j;
    try {
        j = nlohmann::ordered_json::parse(json_text);
        int n = j.at("graph").at("n").get<int>();
        doc.graph = Graph(n);
        for (const auto& e : j.at("graph").at("edges")) {
            Vertex u = e.at(0).get<int>(), v = e.at(1).get<int>();
            if (u < 0 || v < 0 || u >= n || v >= n || u == v || !doc.graph.add_edge(u, v))
                throw ParseError(1, "invalid edge in instance document");
        }
        doc.x = make_set(j.at("x").get<std::vector<int>>());
        for (Vertex v : doc.x)
            if (v < 0 || v >= n) throw ParseError(1, "modulator id out of range");
        doc.k = j.at("k").get<long long>();
        doc.t = j.at("t").get<int>();
        doc.lambda = j.at("lambda").get<int>();
        doc.metadata_json = j.contains("metadata") ? j.at("metadata").dump() : "{}";
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(1, std::string("malformed instance document: ") + e.what());
    }
    return doc;
}

std::string to_dot(const Graph& g, const std::vector<std::string>& labels) {
    std::ostringstream out;
    out << "graph G {\n";
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        out << "  " << v;
        if (v < static_cast<Vertex>(labels.size()) && !labels[v].empty()) out << " [label=\"" << v << ":" << labels[v] << "\"]";
        out << ";\n";
    }
    for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace kthit
