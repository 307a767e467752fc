#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "taitcw/graph.hpp"

namespace taitcw {

/// Named fixtures: "theta", "dumbbell", "tetrahedron", "prism", "cube",
/// "k33" (genus-1 embedding) and "petersen" (arbitrary embedding, for
/// oracle use). Throws UnknownName.
EmbeddedGraph corpus(std::string_view name);

const std::vector<std::string>& corpus_names();

/// The closed genus-0 fixtures, in a fixed order.
const std::vector<std::string>& planar_corpus_names();

}  // namespace taitcw
