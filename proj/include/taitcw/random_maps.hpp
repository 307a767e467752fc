#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "taitcw/graph.hpp"

namespace taitcw {

/// Deterministic uniform index in [0, n) from a 64-bit Mersenne twister. The
/// modulo bias is irrelevant at these sizes and keeps output identical
/// across standard libraries.
std::size_t uniform_index(std::mt19937_64& rng, std::size_t n);

struct PlanarMapOptions {
  /// Probability that a growth step attaches a pendant loop through a new
  /// bridge instead of adding a chord inside a face.
  double bridge_probability = 0.0;
  /// Guarantees at least one bridge (requires vertices >= 4).
  bool force_bridge = false;
};

/// Random connected genus-0 trivalent map with an even number `vertices`
/// (>= 2) of vertices, grown from the theta graph by face-chord insertions
/// and optional pendant loops, then randomly relabeled.
EmbeddedGraph random_planar_map(std::size_t vertices, std::uint64_t seed,
                                PlanarMapOptions options = {});

/// Random trivalent map of arbitrary genus: a uniformly random pairing of
/// the 3n half-edges. May contain loops and be disconnected.
EmbeddedGraph random_trivalent_map(std::size_t vertices, std::uint64_t seed);

/// Same map under random vertex, edge and half-edge ids and rotation start
/// slots. Leg order is preserved.
EmbeddedGraph relabeled(const EmbeddedGraph& g, std::uint64_t seed);

}  // namespace taitcw
