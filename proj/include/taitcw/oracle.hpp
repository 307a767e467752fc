#pragma once

#include <string>
#include <vector>

#include "taitcw/graph.hpp"
#include "taitcw/k4.hpp"
#include "taitcw/slicer.hpp"
#include "taitcw/tft.hpp"

namespace taitcw {

/// Color per edge id; a leg carries the color of its edge.
using ColorAssignment = std::vector<Color>;

/// K4 value per face, indexed like validate(g).faces.
using FaceColoring = std::vector<K4Element>;

struct OracleOptions {
  /// Report zero colorings as soon as a loop is seen.
  bool loop_shortcut = true;
  /// Scan all 3^E assignments instead of backtracking (at most 12 edges).
  bool raw_scan = false;
  /// Worker threads; the search splits on the first edge's color.
  unsigned threads = 1;
};

/// Three incident edges pairwise distinct at every vertex.
bool is_admissible(const EmbeddedGraph& g, const ColorAssignment& col);

/// All admissible colorings, lexicographic by (edge0, edge1, ...).
std::vector<ColorAssignment> enumerate_colorings(const EmbeddedGraph& g, const OracleOptions& options = {});

/// Entry (output leg colors, input leg colors) counts the admissible
/// colorings inducing those boundary colors.
CountMatrix count_matrix_oracle(const EmbeddedGraph& g, const OracleOptions& options = {});

/// Gives the face through half-edge 0 the identity and propagates across a
/// spanning tree of the dual graph, then checks every remaining dual edge.
/// Throws NotClosed, NotPlanar, Disconnected, InconsistentHolonomy.
FaceColoring tait_face_coloring(const EmbeddedGraph& g, const ColorAssignment& col);

/// K4 product of the strand colors at every layer boundary of `w`, which
/// must recompose to `g`. Throws WidthMismatch.
std::vector<K4Element> cross_section_products(const EmbeddedGraph& g, const ColorAssignment& col,
                                              const MorphismWord& w);

/// `edge0=a edge1=b ...`
std::string format_coloring(const ColorAssignment& col);
/// `face0=1 face1=c ...`
std::string format_face_coloring(const FaceColoring& faces);

}  // namespace taitcw
