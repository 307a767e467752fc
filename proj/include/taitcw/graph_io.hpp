#pragma once

#include <string>
#include <string_view>

#include "taitcw/graph.hpp"

namespace taitcw {

/// Line-oriented graph format, `#` starts a comment:
///
///     vertex <vid>: <h1> <h2> <h3>     counterclockwise rotation
///     edge <eid>: <hA> <hB>
///     leg in <position>: <h>
///     leg out <position>: <h>
///
/// Ids must be dense from 0. Throws ParseError (with line number) on syntax
/// or duplicate use, MalformedGraph on violated map invariants.
EmbeddedGraph parse_graph(std::string_view text);

std::string serialize_graph(const EmbeddedGraph& g);

EmbeddedGraph read_graph_file(const std::string& path);

}  // namespace taitcw
