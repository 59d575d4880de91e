#pragma once

#include <stdexcept>
#include <string>

#include "contmeas/graph.hpp"

namespace contmeas {

/// Thrown by parse_graph with a line-precise diagnostic message.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Graph text format: lines `v <x> <y> [...]`, `e <i> <j>`, `#` comments.
/// The parsed graph is validated; violations are reported as ParseError.
EmbeddedGraph parse_graph(const std::string& text);

EmbeddedGraph load_graph(const std::string& path);

/// Round-trips bit-exactly through parse_graph.
std::string serialize_graph(const EmbeddedGraph& g);

}  // namespace contmeas
