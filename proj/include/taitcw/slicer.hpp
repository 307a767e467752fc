#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "taitcw/graph.hpp"

namespace taitcw {

enum class GenKind : std::uint8_t { Cup, Cap, Merge, Split };

/// One elementary layer acting at strand position `pos`; every other strand
/// passes through unchanged.
struct Generator {
  GenKind kind = GenKind::Cup;
  int pos = 0;

  static Generator cup(int p) { return {GenKind::Cup, p}; }
  static Generator cap(int p) { return {GenKind::Cap, p}; }
  static Generator merge(int p) { return {GenKind::Merge, p}; }
  static Generator split(int p) { return {GenKind::Split, p}; }

  friend bool operator==(const Generator&, const Generator&) = default;
};

/// Width change caused by a generator: Cup +2, Cap -2, Merge -1, Split +1.
int width_delta(GenKind kind);
const char* gen_name(GenKind kind);
/// Throws UnknownGenerator.
GenKind gen_from_name(const std::string& name);
/// Throws InvalidPosition when `gen` does not fit a cross-section of `width`.
void check_position(const Generator& gen, int width);

struct MorphismWord {
  int input_width = 0;
  std::vector<Generator> layers;
  int output_width = 0;

  /// Widths at every layer boundary: input first, output last.
  /// Throws InvalidPosition or MalformedWord (final width != output_width).
  std::vector<int> widths() const;
  int max_width() const;
  /// Layers [begin, end) as a word of its own.
  MorphismWord slice_range(std::size_t begin, std::size_t end) const;

  friend bool operator==(const MorphismWord&, const MorphismWord&) = default;
};

/// Decomposes a connected genus-0 graph into generator layers; the in-legs
/// become the input strands and the out-legs the output strands. Equivalent
/// to reslice_distinct(g, 0). Throws NotPlanar, Disconnected,
/// SliceSearchExhausted.
MorphismWord slice(const EmbeddedGraph& g);

/// Same sweep with seed-dependent tie breaking among admissible moves.
MorphismWord reslice_distinct(const EmbeddedGraph& g, std::uint64_t seed);

/// Tries many start corners and move orders and keeps the word with the
/// smallest peak width (then the smallest total of 3^width over boundaries).
MorphismWord slice_min_width(const EmbeddedGraph& g);

/// Rebuilds the embedded graph of a word. Vertices are numbered in layer
/// order with half-edges 3v..3v+2; leg half-edges follow (inputs, then
/// outputs). Throws MalformedWord for vertex-free closed loops.
EmbeddedGraph recompose(const MorphismWord& w);

struct TracedGraph {
  EmbeddedGraph graph;
  /// For every layer boundary, the edge of the recomposed graph carried by
  /// each strand, left to right.
  std::vector<std::vector<EdgeId>> strand_edges;
};

TracedGraph recompose_traced(const MorphismWord& w);

}  // namespace taitcw
