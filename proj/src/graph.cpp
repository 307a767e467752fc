#include "taitcw/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <map>
#include <stdexcept>
#include <utility>

#include "taitcw/errors.hpp"

namespace taitcw {

EmbeddedGraph::EmbeddedGraph(std::vector<Rotation> rotations, std::vector<EdgeEnds> edges,
                             std::vector<HalfEdgeId> legs_in, std::vector<HalfEdgeId> legs_out)
    : rotations_(std::move(rotations)),
      edges_(std::move(edges)),
      legs_in_(std::move(legs_in)),
      legs_out_(std::move(legs_out)) {
  const std::size_t count = half_edge_count();
  auto check_id = [&](HalfEdgeId h, const std::string& where) {
    if (h < 0 || static_cast<std::size_t>(h) >= count) {
      throw MalformedGraph("half-edge " + std::to_string(h) + " in " + where +
                           " is outside the dense range 0.." + std::to_string(count) +
                           " implied by " + std::to_string(edges_.size()) + " edges");
    }
  };

  partner_.assign(count, kNone);
  edge_of_.assign(count, kNone);
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const auto [x, y] = edges_[e];
    const std::string where = "edge " + std::to_string(e);
    check_id(x, where);
    check_id(y, where);
    if (x == y) throw MalformedGraph(where + " pairs half-edge " + std::to_string(x) + " with itself");
    for (HalfEdgeId h : {x, y}) {
      if (edge_of_[idx(h)] != kNone)
        throw MalformedGraph("half-edge " + std::to_string(h) + " belongs to two edges");
    }
    partner_[idx(x)] = y;
    partner_[idx(y)] = x;
    edge_of_[idx(x)] = edge_of_[idx(y)] = static_cast<EdgeId>(e);
  }

  place_.assign(count, Place::Vertex);
  owner_.assign(count, kNone);
  slot_.assign(count, kNone);
  auto claim = [&](HalfEdgeId h, Place place, std::int32_t owner, std::int32_t slot,
                   const std::string& where) {
    check_id(h, where);
    if (owner_[idx(h)] != kNone)
      throw MalformedGraph("half-edge " + std::to_string(h) + " occupies more than one slot");
    place_[idx(h)] = place;
    owner_[idx(h)] = owner;
    slot_[idx(h)] = slot;
  };
  for (std::size_t v = 0; v < rotations_.size(); ++v) {
    for (int s = 0; s < 3; ++s) {
      claim(rotations_[v][static_cast<std::size_t>(s)], Place::Vertex, static_cast<std::int32_t>(v), s,
            "vertex " + std::to_string(v));
    }
  }
  for (std::size_t i = 0; i < legs_in_.size(); ++i)
    claim(legs_in_[i], Place::LegIn, 0, static_cast<std::int32_t>(i), "leg in " + std::to_string(i));
  for (std::size_t i = 0; i < legs_out_.size(); ++i)
    claim(legs_out_[i], Place::LegOut, 1, static_cast<std::int32_t>(i), "leg out " + std::to_string(i));
  for (std::size_t h = 0; h < count; ++h) {
    if (owner_[h] == kNone)
      throw MalformedGraph("half-edge " + std::to_string(h) +
                           " is neither in a vertex rotation nor a leg");
  }
}

HalfEdgeId EmbeddedGraph::next_ccw(HalfEdgeId h) const {
  const int s = slot_[idx(h)];
  switch (place_[idx(h)]) {
    case Place::Vertex:
      return rotations_[static_cast<std::size_t>(owner_[idx(h)])][static_cast<std::size_t>((s + 1) % 3)];
    case Place::LegIn: {
      const int n = static_cast<int>(legs_in_.size());
      return legs_in_[static_cast<std::size_t>((s + n - 1) % n)];
    }
    case Place::LegOut: {
      const int m = static_cast<int>(legs_out_.size());
      return legs_out_[static_cast<std::size_t>((s + 1) % m)];
    }
  }
  return kNone;
}

HalfEdgeId EmbeddedGraph::prev_ccw(HalfEdgeId h) const {
  const int s = slot_[idx(h)];
  switch (place_[idx(h)]) {
    case Place::Vertex:
      return rotations_[static_cast<std::size_t>(owner_[idx(h)])][static_cast<std::size_t>((s + 2) % 3)];
    case Place::LegIn: {
      const int n = static_cast<int>(legs_in_.size());
      return legs_in_[static_cast<std::size_t>((s + 1) % n)];
    }
    case Place::LegOut: {
      const int m = static_cast<int>(legs_out_.size());
      return legs_out_[static_cast<std::size_t>((s + m - 1) % m)];
    }
  }
  return kNone;
}

std::size_t EmbeddedGraph::node_count() const {
  return rotations_.size() + (legs_in_.empty() ? 0 : 1) + (legs_out_.empty() ? 0 : 1);
}

std::optional<std::size_t> EmbeddedGraph::in_node() const {
  if (legs_in_.empty()) return std::nullopt;
  return rotations_.size();
}

std::optional<std::size_t> EmbeddedGraph::out_node() const {
  if (legs_out_.empty()) return std::nullopt;
  return rotations_.size() + (legs_in_.empty() ? 0 : 1);
}

std::size_t EmbeddedGraph::node_of(HalfEdgeId h) const {
  switch (place_[idx(h)]) {
    case Place::Vertex: return static_cast<std::size_t>(owner_[idx(h)]);
    case Place::LegIn: return *in_node();
    case Place::LegOut: return *out_node();
  }
  return 0;
}

std::size_t EmbeddedGraph::node_degree(std::size_t node) const {
  if (node < rotations_.size()) return 3;
  if (in_node() == node) return legs_in_.size();
  return legs_out_.size();
}

HalfEdgeId EmbeddedGraph::node_first(std::size_t node) const {
  if (node < rotations_.size()) return rotations_[node][0];
  if (in_node() == node) return legs_in_.front();
  return legs_out_.front();
}

std::vector<std::size_t> node_components(const EmbeddedGraph& g, std::size_t* count) {
  const std::size_t n = g.node_count();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [x, y] : g.edges()) {
    std::size_t rx = find(g.node_of(x)), ry = find(g.node_of(y));
    if (rx != ry) parent[rx] = ry;
  }
  std::vector<std::size_t> label(n, n), comp(n);
  std::size_t next = 0;
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t r = find(v);
    if (label[r] == n) label[r] = next++;
    comp[v] = label[r];
  }
  if (count) *count = next;
  return comp;
}

EmbeddingReport validate(const EmbeddedGraph& g) {
  EmbeddingReport report;
  const std::size_t count = g.half_edge_count();
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  report.face_of.assign(count, kUnset);
  for (std::size_t start = 0; start < count; ++start) {
    if (report.face_of[start] != kUnset) continue;
    const std::size_t face = report.faces.size();
    std::vector<HalfEdgeId> walk;
    HalfEdgeId h = static_cast<HalfEdgeId>(start);
    do {
      if (walk.size() > count) throw MalformedGraph("face walk does not close");
      report.face_of[static_cast<std::size_t>(h)] = face;
      walk.push_back(h);
      h = g.face_next(h);
    } while (h != static_cast<HalfEdgeId>(start));
    report.faces.push_back(std::move(walk));
  }

  std::size_t components = 0;
  const auto comp = node_components(g, &components);
  std::vector<long> euler(components, 0);
  for (std::size_t v = 0; v < g.node_count(); ++v) euler[comp[v]] += 1;
  for (const auto& ends : g.edges()) euler[comp[g.node_of(ends[0])]] -= 1;
  for (const auto& walk : report.faces) euler[comp[g.node_of(walk.front())]] += 1;

  report.component_count = static_cast<int>(components);
  for (std::size_t c = 0; c < components; ++c) {
    const long chi = euler[c];
    if (chi > 2 || (2 - chi) % 2 != 0)
      throw MalformedGraph("Euler characteristic " + std::to_string(chi) + " of component " +
                           std::to_string(c) + " is not that of a closed orientable surface");
    report.component_genus.push_back(static_cast<int>((2 - chi) / 2));
    report.genus += report.component_genus.back();
  }
  return report;
}

std::set<EdgeId> find_bridges(const EmbeddedGraph& g) {
  const std::size_t n = g.node_count();
  // Incidence lists over the closed-up map, keyed by (neighbor, edge id).
  std::vector<std::vector<std::pair<std::size_t, EdgeId>>> adj(n);
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const auto [x, y] = g.edge(static_cast<EdgeId>(e));
    const std::size_t u = g.node_of(x), v = g.node_of(y);
    adj[u].push_back({v, static_cast<EdgeId>(e)});
    if (u != v) adj[v].push_back({u, static_cast<EdgeId>(e)});
  }

  std::set<EdgeId> bridges;
  std::vector<int> disc(n, -1), low(n, 0);
  int timer = 0;
  struct Frame {
    std::size_t node;
    EdgeId via;
    std::size_t next;
  };
  for (std::size_t root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    std::vector<Frame> stack{{root, kNone, 0}};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      Frame& top = stack.back();
      if (top.next < adj[top.node].size()) {
        const auto [to, e] = adj[top.node][top.next++];
        if (e == top.via) continue;
        if (disc[to] == -1) {
          disc[to] = low[to] = timer++;
          stack.push_back({to, e, 0});
        } else {
          low[top.node] = std::min(low[top.node], disc[to]);
        }
      } else {
        const Frame done = top;
        stack.pop_back();
        if (!stack.empty()) {
          Frame& parent = stack.back();
          low[parent.node] = std::min(low[parent.node], low[done.node]);
          if (low[done.node] > disc[parent.node]) bridges.insert(done.via);
        }
      }
    }
  }
  return bridges;
}

namespace {

enum NodeKind : std::uint32_t { kRealNode = 0, kInNode = 1, kOutNode = 2 };

std::uint32_t kind_of(const EmbeddedGraph& g, std::size_t node) {
  if (node < g.vertex_count()) return kRealNode;
  return g.in_node() == node ? kInNode : kOutNode;
}

// Breadth-first relabeling of the component containing `root`, entering
// each node at the half-edge through which it was discovered.
std::vector<std::uint32_t> rooted_code(const EmbeddedGraph& g, HalfEdgeId root,
                                       std::vector<HalfEdgeId>* order = nullptr) {
  const std::size_t n = g.node_count();
  std::vector<std::int64_t> label(n, -1);
  std::vector<HalfEdgeId> entry(n, kNone);
  std::vector<std::size_t> queue;
  std::vector<std::uint32_t> code;

  const std::size_t r = g.node_of(root);
  label[r] = 0;
  entry[r] = root;
  queue.push_back(r);
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const std::size_t u = queue[qi];
    const std::size_t deg = g.node_degree(u);
    code.push_back(kind_of(g, u));
    code.push_back(static_cast<std::uint32_t>(deg));
    HalfEdgeId d = entry[u];
    for (std::size_t k = 0; k < deg; ++k, d = g.next_ccw(d)) {
      if (order) order->push_back(d);
      const HalfEdgeId p = g.partner(d);
      const std::size_t w = g.node_of(p);
      if (label[w] < 0) {
        label[w] = static_cast<std::int64_t>(queue.size());
        entry[w] = p;
        queue.push_back(w);
      }
      std::uint32_t offset = 0;
      for (HalfEdgeId x = entry[w]; x != p; x = g.next_ccw(x)) ++offset;
      code.push_back(static_cast<std::uint32_t>(label[w]));
      code.push_back(offset);
    }
  }
  return code;
}

void append_bytes(std::string& out, const std::vector<std::uint32_t>& code) {
  for (std::uint32_t x : code) {
    for (int shift = 24; shift >= 0; shift -= 8) out.push_back(static_cast<char>((x >> shift) & 0xFF));
  }
}

std::string to_bytes(const std::vector<std::uint32_t>& code) {
  std::string out;
  append_bytes(out, code);
  return out;
}

}  // namespace

std::string canonical_code(const EmbeddedGraph& g) {
  std::size_t components = 0;
  const auto comp = node_components(g, &components);
  std::vector<std::string> rooted, closed(components);
  std::vector<bool> done(components, false);

  for (auto node : {g.in_node(), g.out_node()}) {
    if (!node) continue;
    const std::size_t c = comp[*node];
    if (done[c]) continue;
    done[c] = true;
    rooted.push_back(to_bytes(rooted_code(g, g.node_first(*node))));
  }
  for (std::size_t h = 0; h < g.half_edge_count(); ++h) {
    const std::size_t c = comp[g.node_of(static_cast<HalfEdgeId>(h))];
    if (done[c]) continue;
    std::string code = to_bytes(rooted_code(g, static_cast<HalfEdgeId>(h)));
    if (closed[c].empty() || code < closed[c]) closed[c] = std::move(code);
  }
  std::vector<std::string> tail;
  for (std::size_t c = 0; c < components; ++c) {
    if (!done[c] && !closed[c].empty()) tail.push_back(std::move(closed[c]));
  }
  std::sort(tail.begin(), tail.end());

  std::string out;
  append_bytes(out, {static_cast<std::uint32_t>(g.legs_in().size()),
                     static_cast<std::uint32_t>(g.legs_out().size()),
                     static_cast<std::uint32_t>(rooted.size())});
  for (const auto& part : rooted) out += part;
  for (const auto& part : tail) {
    append_bytes(out, {0xFFFFFFFFu});
    out += part;
  }
  return out;
}

std::optional<std::vector<HalfEdgeId>> find_isomorphism(const EmbeddedGraph& a,
                                                        const EmbeddedGraph& b) {
  if (a.half_edge_count() != b.half_edge_count() || a.vertex_count() != b.vertex_count() ||
      a.legs_in().size() != b.legs_in().size() || a.legs_out().size() != b.legs_out().size())
    return std::nullopt;
  std::size_t ca = 0, cb = 0;
  node_components(a, &ca);
  node_components(b, &cb);
  if (ca != 1 || cb != 1 || a.half_edge_count() == 0) return std::nullopt;

  auto root_of = [](const EmbeddedGraph& g) -> HalfEdgeId {
    if (!g.legs_in().empty()) return g.legs_in().front();
    if (!g.legs_out().empty()) return g.legs_out().front();
    return 0;
  };
  std::vector<HalfEdgeId> order_a;
  const auto code_a = rooted_code(a, root_of(a), &order_a);

  std::vector<HalfEdgeId> candidates;
  if (a.is_closed()) {
    for (std::size_t h = 0; h < b.half_edge_count(); ++h) candidates.push_back(static_cast<HalfEdgeId>(h));
  } else {
    candidates.push_back(root_of(b));
  }
  for (HalfEdgeId root : candidates) {
    std::vector<HalfEdgeId> order_b;
    if (rooted_code(b, root, &order_b) != code_a) continue;
    std::vector<HalfEdgeId> map(a.half_edge_count(), kNone);
    for (std::size_t i = 0; i < order_a.size(); ++i)
      map[static_cast<std::size_t>(order_a[i])] = order_b[i];
    return map;
  }
  return std::nullopt;
}

EmbeddedGraph from_neighbor_rotations(const std::vector<std::array<VertexId, 3>>& neighbors) {
  const std::size_t n = neighbors.size();
  std::vector<EmbeddedGraph::Rotation> rotations(n);
  for (std::size_t v = 0; v < n; ++v) {
    for (int s = 0; s < 3; ++s)
      rotations[v][static_cast<std::size_t>(s)] = static_cast<HalfEdgeId>(3 * v + static_cast<std::size_t>(s));
  }
  std::vector<EmbeddedGraph::EdgeEnds> edges;
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t s = 0; s < 3; ++s) {
      const auto w = static_cast<std::size_t>(neighbors[v][s]);
      if (w <= v) continue;
      const auto& back = neighbors.at(w);
      auto it = std::find(back.begin(), back.end(), static_cast<VertexId>(v));
      if (it == back.end())
        throw MalformedGraph("neighbor lists are not symmetric at vertex " + std::to_string(v));
      const auto t = static_cast<std::size_t>(it - back.begin());
      edges.push_back({static_cast<HalfEdgeId>(3 * v + s), static_cast<HalfEdgeId>(3 * w + t)});
    }
  }
  return EmbeddedGraph(std::move(rotations), std::move(edges));
}

EmbeddedGraph from_drawing(const std::vector<std::array<double, 2>>& points,
                           const std::vector<std::array<VertexId, 2>>& edges) {
  const std::size_t n = points.size();
  std::vector<std::vector<VertexId>> around(n);
  for (const auto& [u, v] : edges) {
    around.at(static_cast<std::size_t>(u)).push_back(v);
    around.at(static_cast<std::size_t>(v)).push_back(u);
  }
  std::vector<std::array<VertexId, 3>> neighbors(n);
  for (std::size_t v = 0; v < n; ++v) {
    auto& list = around[v];
    if (list.size() != 3) throw MalformedGraph("vertex " + std::to_string(v) + " is not trivalent");
    auto angle = [&](VertexId w) {
      const auto& p = points[static_cast<std::size_t>(w)];
      return std::atan2(p[1] - points[v][1], p[0] - points[v][0]);
    };
    std::sort(list.begin(), list.end(), [&](VertexId x, VertexId y) { return angle(x) < angle(y); });
    std::copy(list.begin(), list.end(), neighbors[v].begin());
  }
  return from_neighbor_rotations(neighbors);
}

}  // namespace taitcw
