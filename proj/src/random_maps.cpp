#include "taitcw/random_maps.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace taitcw {

std::size_t uniform_index(std::mt19937_64& rng, std::size_t n) {
  return static_cast<std::size_t>(rng() % n);
}

namespace {

template <typename T>
void shuffle(std::vector<T>& items, std::mt19937_64& rng) {
  for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[uniform_index(rng, i)]);
}

// Map under construction: half-edge 3v+s sits in slot s of vertex v.
struct GrowingMap {
  std::vector<int> partner;

  int vertex_count() const { return static_cast<int>(partner.size() / 3); }
  int next_ccw(int h) const { return 3 * (h / 3) + (h % 3 + 1) % 3; }
  int face_next(int h) const { return next_ccw(partner[static_cast<std::size_t>(h)]); }

  void link(int x, int y) {
    partner[static_cast<std::size_t>(x)] = y;
    partner[static_cast<std::size_t>(y)] = x;
  }

  int add_vertex() {
    partner.resize(partner.size() + 3, -1);
    return vertex_count() - 1;
  }

  // Splits the edge of `h` by a new vertex S with rotation (forward, back,
  // side); side points into the face to the right of h. Returns S.
  int subdivide(int h) {
    const int far = partner[static_cast<std::size_t>(h)];
    const int s = add_vertex();
    link(h, 3 * s + 1);
    link(3 * s, far);
    return s;
  }

  EmbeddedGraph build() const {
    std::vector<EmbeddedGraph::Rotation> rotations;
    for (int v = 0; v < vertex_count(); ++v) rotations.push_back({3 * v, 3 * v + 1, 3 * v + 2});
    std::vector<EmbeddedGraph::EdgeEnds> edges;
    for (std::size_t h = 0; h < partner.size(); ++h) {
      if (static_cast<int>(h) < partner[h]) edges.push_back({static_cast<HalfEdgeId>(h), partner[h]});
    }
    return EmbeddedGraph(std::move(rotations), std::move(edges));
  }
};

void add_chord(GrowingMap& m, std::mt19937_64& rng) {
  const int start = static_cast<int>(uniform_index(rng, m.partner.size()));
  std::vector<int> face;
  int h = start;
  do {
    face.push_back(h);
    h = m.face_next(h);
  } while (h != start);
  std::size_t i = uniform_index(rng, face.size());
  std::size_t j = uniform_index(rng, face.size());
  if (j < i) std::swap(i, j);
  const int s1 = m.subdivide(face[i]);
  // When both ends land on one side of one edge, the second split happens on
  // the forward piece of the first.
  const int s2 = m.subdivide(i == j ? 3 * s1 : face[j]);
  m.link(3 * s1 + 2, 3 * s2 + 2);
}

// Returns the loop vertex; its slot-0 edge is the new bridge.
int add_pendant_loop(GrowingMap& m, std::mt19937_64& rng) {
  const int h = static_cast<int>(uniform_index(rng, m.partner.size()));
  const int s = m.subdivide(h);
  const int w = m.add_vertex();
  m.link(3 * s + 2, 3 * w);
  m.link(3 * w + 1, 3 * w + 2);
  return w;
}

// Whether removing the edge at half-edge h disconnects the map.
bool is_bridge(const GrowingMap& m, int h) {
  const int other = m.partner[static_cast<std::size_t>(h)];
  std::vector<char> seen(static_cast<std::size_t>(m.vertex_count()), 0);
  std::vector<int> stack{h / 3};
  seen[static_cast<std::size_t>(h / 3)] = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int x = 3 * v; x < 3 * v + 3; ++x) {
      if (x == h || x == other) continue;
      const int u = m.partner[static_cast<std::size_t>(x)] / 3;
      if (!seen[static_cast<std::size_t>(u)]) {
        seen[static_cast<std::size_t>(u)] = 1;
        stack.push_back(u);
      }
    }
  }
  return !seen[static_cast<std::size_t>(other / 3)];
}

}  // namespace

EmbeddedGraph random_planar_map(std::size_t vertices, std::uint64_t seed, PlanarMapOptions options) {
  if (vertices < 2 || vertices % 2 != 0)
    throw std::invalid_argument("trivalent maps need an even number (>= 2) of vertices");
  if (options.force_bridge && vertices < 4)
    throw std::invalid_argument("a bridged trivalent map needs at least 4 vertices");
  std::mt19937_64 rng(seed);
  GrowingMap m;
  m.partner = {5, 4, 3, 2, 1, 0};  // theta
  const std::size_t steps = (vertices - 2) / 2;
  const std::size_t forced = options.force_bridge ? uniform_index(rng, steps) : steps;
  int pendant = -1;
  for (std::size_t step = 0; step < steps; ++step) {
    const double roll = static_cast<double>(rng() >> 11) / static_cast<double>(1ULL << 53);
    if (step == forced) {
      pendant = add_pendant_loop(m, rng);
    } else if (roll < options.bridge_probability) {
      add_pendant_loop(m, rng);
    } else if (pendant < 0) {
      add_chord(m, rng);
    } else {
      // A chord across the face around the forced bridge would close it.
      const GrowingMap before = m;
      add_chord(m, rng);
      while (!is_bridge(m, 3 * pendant)) {
        m = before;
        add_chord(m, rng);
      }
    }
  }
  return relabeled(m.build(), rng());
}

EmbeddedGraph random_trivalent_map(std::size_t vertices, std::uint64_t seed) {
  if (vertices % 2 != 0) throw std::invalid_argument("trivalent maps need an even number of vertices");
  std::mt19937_64 rng(seed);
  GrowingMap m;
  m.partner.assign(3 * vertices, -1);
  std::vector<int> darts(3 * vertices);
  std::iota(darts.begin(), darts.end(), 0);
  shuffle(darts, rng);
  for (std::size_t i = 0; i + 1 < darts.size(); i += 2) m.link(darts[i], darts[i + 1]);
  return m.build();
}

EmbeddedGraph relabeled(const EmbeddedGraph& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::size_t count = g.half_edge_count();
  std::vector<HalfEdgeId> half(count);
  std::iota(half.begin(), half.end(), 0);
  shuffle(half, rng);
  auto map = [&](HalfEdgeId h) { return half[static_cast<std::size_t>(h)]; };

  std::vector<std::size_t> vorder(g.vertex_count());
  std::iota(vorder.begin(), vorder.end(), 0);
  shuffle(vorder, rng);
  std::vector<EmbeddedGraph::Rotation> rotations;
  for (std::size_t v : vorder) {
    const auto& r = g.rotation(static_cast<VertexId>(v));
    const std::size_t shift = uniform_index(rng, 3);
    rotations.push_back({map(r[shift]), map(r[(shift + 1) % 3]), map(r[(shift + 2) % 3])});
  }

  std::vector<std::size_t> eorder(g.edge_count());
  std::iota(eorder.begin(), eorder.end(), 0);
  shuffle(eorder, rng);
  std::vector<EmbeddedGraph::EdgeEnds> edges;
  for (std::size_t e : eorder) {
    auto ends = g.edge(static_cast<EdgeId>(e));
    if (rng() & 1) std::swap(ends[0], ends[1]);
    edges.push_back({map(ends[0]), map(ends[1])});
  }

  std::vector<HalfEdgeId> legs_in, legs_out;
  for (HalfEdgeId h : g.legs_in()) legs_in.push_back(map(h));
  for (HalfEdgeId h : g.legs_out()) legs_out.push_back(map(h));
  return EmbeddedGraph(std::move(rotations), std::move(edges), std::move(legs_in), std::move(legs_out));
}

}  // namespace taitcw
