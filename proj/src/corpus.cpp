#include "taitcw/corpus.hpp"

#include <cmath>
#include <numbers>

#include "taitcw/errors.hpp"

namespace taitcw {

namespace {

std::array<double, 2> polar(double radius, double degrees) {
  const double t = degrees * std::numbers::pi / 180.0;
  return {radius * std::cos(t), radius * std::sin(t)};
}

// Two concentric k-gons joined by spokes: k = 3 gives the prism, k = 4 the cube.
EmbeddedGraph ring_pair(int k) {
  std::vector<std::array<double, 2>> points;
  std::vector<std::array<VertexId, 2>> edges;
  for (int i = 0; i < k; ++i) points.push_back(polar(1.0, 90.0 + 360.0 * i / k));
  for (int i = 0; i < k; ++i) points.push_back(polar(2.0, 90.0 + 360.0 * i / k));
  for (int i = 0; i < k; ++i) {
    edges.push_back({i, (i + 1) % k});
    edges.push_back({k + i, k + (i + 1) % k});
    edges.push_back({i, k + i});
  }
  return from_drawing(points, edges);
}

}  // namespace

EmbeddedGraph corpus(std::string_view name) {
  if (name == "theta") {
    // Vertex 0 sees its edges counterclockwise as e0 e1 e2, vertex 1 as e2 e1 e0.
    return EmbeddedGraph({{0, 1, 2}, {3, 4, 5}}, {{0, 5}, {1, 4}, {2, 3}});
  }
  if (name == "dumbbell") {
    // Loop e0 at vertex 0, bridge e1, loop e2 at vertex 1.
    return EmbeddedGraph({{0, 1, 2}, {3, 4, 5}}, {{0, 1}, {2, 3}, {4, 5}});
  }
  if (name == "tetrahedron") {
    std::vector<std::array<double, 2>> points{{0.0, 0.0}, polar(1, 90), polar(1, 210), polar(1, 330)};
    return from_drawing(points, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}, {3, 1}});
  }
  if (name == "prism") return ring_pair(3);
  if (name == "cube") return ring_pair(4);
  if (name == "k33") {
    return from_neighbor_rotations({{3, 4, 5}, {3, 4, 5}, {3, 4, 5}, {0, 1, 2}, {0, 1, 2}, {0, 1, 2}});
  }
  if (name == "petersen") {
    std::vector<std::array<double, 2>> points;
    std::vector<std::array<VertexId, 2>> edges;
    for (int i = 0; i < 5; ++i) points.push_back(polar(2.0, 90.0 + 72.0 * i));
    for (int i = 0; i < 5; ++i) points.push_back(polar(1.0, 90.0 + 72.0 * i));
    for (int i = 0; i < 5; ++i) {
      edges.push_back({i, (i + 1) % 5});
      edges.push_back({i, 5 + i});
      edges.push_back({5 + i, 5 + (i + 2) % 5});
    }
    return from_drawing(points, edges);
  }
  throw UnknownName("no corpus graph named '" + std::string(name) + "'");
}

const std::vector<std::string>& corpus_names() {
  static const std::vector<std::string> names{"theta", "dumbbell", "tetrahedron", "prism",
                                              "cube",  "k33",      "petersen"};
  return names;
}

const std::vector<std::string>& planar_corpus_names() {
  static const std::vector<std::string> names{"theta", "dumbbell", "tetrahedron", "prism", "cube"};
  return names;
}

}  // namespace taitcw
