#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace taitcw {

using HalfEdgeId = std::int32_t;
using EdgeId = std::int32_t;
using VertexId = std::int32_t;

inline constexpr std::int32_t kNone = -1;

/// Trivalent combinatorial map with optional boundary legs.
///
/// Every half-edge belongs to exactly one edge, and sits either in exactly one
/// vertex rotation slot or in exactly one leg slot. Rotations list the three
/// half-edges of a vertex counterclockwise. Legs are the boundary ends of
/// edges: `legs_in` is the ordered bottom boundary, `legs_out` the ordered top
/// boundary. Loops and parallel edges are allowed.
///
/// For face tracing, each non-empty boundary is closed up by a virtual node
/// whose counterclockwise rotation is `legs_in` reversed (bottom) or
/// `legs_out` in order (top). The gap between the last and first leg of a
/// boundary is its base point.
class EmbeddedGraph {
 public:
  using Rotation = std::array<HalfEdgeId, 3>;
  using EdgeEnds = std::array<HalfEdgeId, 2>;

  enum class Place : std::uint8_t { Vertex, LegIn, LegOut };

  EmbeddedGraph() = default;
  /// Throws MalformedGraph naming the first violated invariant.
  EmbeddedGraph(std::vector<Rotation> rotations, std::vector<EdgeEnds> edges,
                std::vector<HalfEdgeId> legs_in = {}, std::vector<HalfEdgeId> legs_out = {});

  std::size_t vertex_count() const { return rotations_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t half_edge_count() const { return 2 * edges_.size(); }

  const std::vector<Rotation>& rotations() const { return rotations_; }
  const Rotation& rotation(VertexId v) const { return rotations_[static_cast<std::size_t>(v)]; }
  const std::vector<EdgeEnds>& edges() const { return edges_; }
  const EdgeEnds& edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }
  const std::vector<HalfEdgeId>& legs_in() const { return legs_in_; }
  const std::vector<HalfEdgeId>& legs_out() const { return legs_out_; }
  bool is_closed() const { return legs_in_.empty() && legs_out_.empty(); }

  HalfEdgeId partner(HalfEdgeId h) const { return partner_[idx(h)]; }
  EdgeId edge_of(HalfEdgeId h) const { return edge_of_[idx(h)]; }
  Place place_of(HalfEdgeId h) const { return place_[idx(h)]; }
  /// Vertex holding `h`, or kNone for a leg.
  VertexId vertex_of(HalfEdgeId h) const {
    return place_[idx(h)] == Place::Vertex ? owner_[idx(h)] : kNone;
  }
  /// Rotation slot (0..2) or leg position.
  int slot_of(HalfEdgeId h) const { return slot_[idx(h)]; }

  /// Counterclockwise successor around the (possibly virtual) node of `h`.
  HalfEdgeId next_ccw(HalfEdgeId h) const;
  HalfEdgeId prev_ccw(HalfEdgeId h) const;
  /// Next half-edge of the face lying to the right of `h`.
  HalfEdgeId face_next(HalfEdgeId h) const { return next_ccw(partner(h)); }

  /// Nodes of the closed-up map: vertices first, then the in-boundary node
  /// (if any legs_in), then the out-boundary node (if any legs_out).
  std::size_t node_count() const;
  std::size_t node_of(HalfEdgeId h) const;
  std::optional<std::size_t> in_node() const;
  std::optional<std::size_t> out_node() const;
  std::size_t node_degree(std::size_t node) const;
  /// Half-edge in rotation slot 0 of `node` (leg 0 for boundary nodes).
  HalfEdgeId node_first(std::size_t node) const;

  friend bool operator==(const EmbeddedGraph& x, const EmbeddedGraph& y) {
    return x.rotations_ == y.rotations_ && x.edges_ == y.edges_ && x.legs_in_ == y.legs_in_ &&
           x.legs_out_ == y.legs_out_;
  }

 private:
  static std::size_t idx(HalfEdgeId h) { return static_cast<std::size_t>(h); }

  std::vector<Rotation> rotations_;
  std::vector<EdgeEnds> edges_;
  std::vector<HalfEdgeId> legs_in_;
  std::vector<HalfEdgeId> legs_out_;

  std::vector<HalfEdgeId> partner_;
  std::vector<EdgeId> edge_of_;
  std::vector<Place> place_;
  std::vector<std::int32_t> owner_;
  std::vector<std::int32_t> slot_;
};

struct EmbeddingReport {
  /// Closed face walks under face_next, ordered by smallest half-edge.
  std::vector<std::vector<HalfEdgeId>> faces;
  /// Face index of every half-edge (the face to its right).
  std::vector<std::size_t> face_of;
  int genus = 0;
  int component_count = 0;
  std::vector<int> component_genus;
};

/// Traces faces of the closed-up map and applies Euler's formula per
/// connected component.
EmbeddingReport validate(const EmbeddedGraph& g);

/// Component index per node of the closed-up map.
std::vector<std::size_t> node_components(const EmbeddedGraph& g, std::size_t* count = nullptr);

/// Edges whose deletion disconnects the closed-up map (linear time).
std::set<EdgeId> find_bridges(const EmbeddedGraph& g);

/// Byte string equal for two graphs iff they are isomorphic combinatorial
/// maps with matching leg orders.
std::string canonical_code(const EmbeddedGraph& g);

/// Half-edge map from `a` to `b` realizing an isomorphism of connected maps
/// (legs matched by position), or nullopt.
std::optional<std::vector<HalfEdgeId>> find_isomorphism(const EmbeddedGraph& a,
                                                        const EmbeddedGraph& b);

/// Builds a planar map from straight-line vertex coordinates of a simple
/// trivalent graph; rotations are the neighbors sorted by angle.
EmbeddedGraph from_drawing(const std::vector<std::array<double, 2>>& points,
                           const std::vector<std::array<VertexId, 2>>& edges);

/// Builds a closed map from per-vertex counterclockwise neighbor lists of a
/// simple trivalent graph.
EmbeddedGraph from_neighbor_rotations(const std::vector<std::array<VertexId, 3>>& neighbors);

}  // namespace taitcw
