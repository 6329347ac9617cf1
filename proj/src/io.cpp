#include "capnash/io.hpp"

#include <fstream>
#include <sstream>

namespace capnash {

namespace {

bool next_token_line(std::istream& in, std::istringstream& out, int& line_no) {
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        out.clear();
        out.str(line);
        return true;
    }
    return false;
}

void require_line_end(std::istringstream& ss, int line_no) {
    std::string rest;
    if (ss >> rest) throw ParseError(line_no, "unexpected trailing token '" + rest + "'");
}

}  // namespace

CapacitatedGraph parse_graph_text(std::istream& in) {
    int line_no = 0;
    std::istringstream ss;

    if (!next_token_line(in, ss, line_no)) throw ParseError(line_no, "missing capgraph header");
    std::string tag;
    long long n = 0, m = 0;
    if (!(ss >> tag) || tag != "capgraph" || !(ss >> n >> m) || n < 0 || m < 0)
        throw ParseError(line_no, "expected 'capgraph <n> <m>'");
    require_line_end(ss, line_no);

    std::vector<int> kappa(n, -1);
    for (long long i = 0; i < n; ++i) {
        if (!next_token_line(in, ss, line_no)) throw ParseError(line_no, "missing 'k' line");
        long long v = 0, k = 0;
        if (!(ss >> tag) || tag != "k" || !(ss >> v >> k))
            throw ParseError(line_no, "expected 'k <vertex-id> <kappa>'");
        require_line_end(ss, line_no);
        if (v < 0 || v >= n) throw ParseError(line_no, "vertex id out of range");
        if (k < 0) throw ParseError(line_no, "kappa must be non-negative");
        if (kappa[v] >= 0) throw ParseError(line_no, "duplicate 'k' line for vertex " + std::to_string(v));
        kappa[v] = static_cast<int>(k);
    }

    std::vector<Edge> edges;
    edges.reserve(m);
    for (long long i = 0; i < m; ++i) {
        if (!next_token_line(in, ss, line_no)) throw ParseError(line_no, "missing 'e' line");
        long long u = 0, v = 0;
        if (!(ss >> tag) || tag != "e" || !(ss >> u >> v))
            throw ParseError(line_no, "expected 'e <u> <v>'");
        require_line_end(ss, line_no);
        if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError(line_no, "edge endpoint out of range");
        if (u >= v) throw ParseError(line_no, "edges must satisfy u < v");
        edges.push_back({static_cast<int>(u), static_cast<int>(v)});
    }
    if (next_token_line(in, ss, line_no)) throw ParseError(line_no, "unexpected extra line");

    try {
        return CapacitatedGraph(static_cast<int>(n), std::move(edges), std::move(kappa));
    } catch (const std::invalid_argument& e) {
        throw ParseError(line_no, e.what());
    }
}

CapacitatedGraph parse_graph_text(const std::string& text) {
    std::istringstream in(text);
    return parse_graph_text(in);
}

CapacitatedGraph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    return parse_graph_text(in);
}

std::string write_graph_text(const CapacitatedGraph& g) {
    std::ostringstream out;
    out << "capgraph " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (int v = 0; v < g.vertex_count(); ++v) out << "k " << v << ' ' << g.kappa(v) << '\n';
    for (const auto& [u, v] : g.edges()) out << "e " << u << ' ' << v << '\n';
    return out.str();
}

}  // namespace capnash
