#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "capnash/graph.hpp"

namespace capnash {

struct ParseError : std::runtime_error {
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_number(line) {}
    int line_number;
};

// Text format:
//   capgraph <n> <m>
//   k <vertex-id> <kappa>     one line per vertex, each vertex exactly once
//   e <u> <v>                 m lines, u < v
// '#'-prefixed comment lines and blank lines are allowed anywhere.
CapacitatedGraph parse_graph_text(std::istream& in);
CapacitatedGraph parse_graph_text(const std::string& text);
CapacitatedGraph read_graph_file(const std::string& path);

std::string write_graph_text(const CapacitatedGraph& g);

}  // namespace capnash
