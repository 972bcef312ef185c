#pragma once

#include <string>

#include "lazynets/net.hpp"

namespace lazynets {

struct ParseError : std::runtime_error {
  int line = 0;
  int column = 0;
  ParseError(const std::string& what, int l, int c)
      : std::runtime_error(what + " (line " + std::to_string(l) + ", column " +
                           std::to_string(c) + ")"),
        line(l),
        column(c) {}
};

// Line-based textual format, bit-exact for a given net:
//   net <name>
//   node <id> <label>
//   box <id> principal=<node> aux=<a>,... content=<m>,...
//   edge <id>:<port> <id>:<port>
//   premise <node>
//   conclusion <node>
// Lines ordered: header, nodes ascending, boxes ascending, edges sorted,
// premises in interface order, conclusion. '#' starts a comment line.
std::string serialize(const ProofNet& net, const std::string& name = "net");

// Rejects syntax errors and validation failures with line/column positions.
ProofNet deserialize(const std::string& text);

}  // namespace lazynets
