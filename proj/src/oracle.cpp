#include "taitcw/oracle.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <thread>

#include "taitcw/errors.hpp"

namespace taitcw {

namespace {

bool has_loop(const EmbeddedGraph& g) {
  for (const auto& [x, y] : g.edges()) {
    const VertexId v = g.vertex_of(x);
    if (v != kNone && v == g.vertex_of(y)) return true;
  }
  return false;
}

// Edges ordered by a breadth-first sweep over vertices, so each vertex is
// closed off soon after its first edge is colored.
std::vector<EdgeId> search_order(const EmbeddedGraph& g) {
  std::vector<EdgeId> order;
  std::vector<char> taken(g.edge_count(), 0), seen(g.vertex_count(), 0);
  auto take = [&](EdgeId e) {
    if (!taken[static_cast<std::size_t>(e)]) {
      taken[static_cast<std::size_t>(e)] = 1;
      order.push_back(e);
    }
  };
  for (std::size_t root = 0; root < g.vertex_count(); ++root) {
    if (seen[root]) continue;
    std::queue<VertexId> queue;
    queue.push(static_cast<VertexId>(root));
    seen[root] = 1;
    while (!queue.empty()) {
      const VertexId v = queue.front();
      queue.pop();
      for (HalfEdgeId h : g.rotation(v)) {
        take(g.edge_of(h));
        const VertexId u = g.vertex_of(g.partner(h));
        if (u != kNone && !seen[static_cast<std::size_t>(u)]) {
          seen[static_cast<std::size_t>(u)] = 1;
          queue.push(u);
        }
      }
    }
  }
  for (std::size_t e = 0; e < g.edge_count(); ++e) take(static_cast<EdgeId>(e));
  return order;
}

class Backtracker {
 public:
  Backtracker(const EmbeddedGraph& g) : g_(g), order_(search_order(g)) {}

  void run(int first_color, std::vector<ColorAssignment>& out) {
    col_.assign(g_.edge_count(), 0);
    if (order_.empty()) {
      out.emplace_back();
      return;
    }
    col_[static_cast<std::size_t>(order_[0])] = first_color;
    if (consistent(order_[0])) descend(1, out);
  }

 private:
  bool consistent(EdgeId e) const {
    for (HalfEdgeId h : g_.edge(e)) {
      const VertexId v = g_.vertex_of(h);
      if (v == kNone) continue;
      const auto& r = g_.rotation(v);
      int seen = 0;
      for (HalfEdgeId x : r) {
        const int c = col_[static_cast<std::size_t>(g_.edge_of(x))];
        if (c == 0) continue;
        if (seen & (1 << c)) return false;
        seen |= 1 << c;
      }
    }
    return true;
  }

  void descend(std::size_t depth, std::vector<ColorAssignment>& out) {
    if (depth == order_.size()) {
      ColorAssignment c;
      for (int x : col_) c.push_back(static_cast<Color>(x));
      out.push_back(std::move(c));
      return;
    }
    const EdgeId e = order_[depth];
    for (int c = 1; c <= 3; ++c) {
      col_[static_cast<std::size_t>(e)] = c;
      if (consistent(e)) descend(depth + 1, out);
    }
    col_[static_cast<std::size_t>(e)] = 0;
  }

  const EmbeddedGraph& g_;
  std::vector<EdgeId> order_;
  std::vector<int> col_;
};

std::vector<ColorAssignment> raw_scan(const EmbeddedGraph& g) {
  const std::size_t edges = g.edge_count();
  if (edges > 12) throw CapacityExceeded("raw scan is limited to 12 edges");
  std::vector<ColorAssignment> out;
  std::size_t total = 1;
  for (std::size_t i = 0; i < edges; ++i) total *= 3;
  ColorAssignment col(edges);
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t rest = code;
    for (std::size_t i = edges; i-- > 0;) {
      col[i] = static_cast<Color>(rest % 3 + 1);
      rest /= 3;
    }
    if (is_admissible(g, col)) out.push_back(col);
  }
  return out;
}

std::string leg_colors(const EmbeddedGraph& g, const std::vector<HalfEdgeId>& legs, const ColorAssignment& col) {
  std::string s;
  for (HalfEdgeId h : legs) s += color_char(col[static_cast<std::size_t>(g.edge_of(h))]);
  return s;
}

}  // namespace

bool is_admissible(const EmbeddedGraph& g, const ColorAssignment& col) {
  if (col.size() != g.edge_count()) return false;
  for (const auto& r : g.rotations()) {
    const auto x = col[static_cast<std::size_t>(g.edge_of(r[0]))];
    const auto y = col[static_cast<std::size_t>(g.edge_of(r[1]))];
    const auto z = col[static_cast<std::size_t>(g.edge_of(r[2]))];
    if (x == y || y == z || x == z) return false;
  }
  return true;
}

std::vector<ColorAssignment> enumerate_colorings(const EmbeddedGraph& g, const OracleOptions& options) {
  if (options.loop_shortcut && has_loop(g)) return {};
  if (options.raw_scan) return raw_scan(g);
  std::vector<ColorAssignment> parts[3];
  if (g.edge_count() == 0) {
    parts[0].emplace_back();
  } else if (options.threads > 1) {
    std::vector<std::thread> pool;
    for (int c = 0; c < 3; ++c) pool.emplace_back([&, c] { Backtracker(g).run(c + 1, parts[c]); });
    for (auto& t : pool) t.join();
  } else {
    for (int c = 0; c < 3; ++c) Backtracker(g).run(c + 1, parts[c]);
  }
  std::vector<ColorAssignment> out;
  for (auto& part : parts) out.insert(out.end(), part.begin(), part.end());
  std::sort(out.begin(), out.end());
  return out;
}

CountMatrix count_matrix_oracle(const EmbeddedGraph& g, const OracleOptions& options) {
  CountMatrix m(static_cast<int>(g.legs_out().size()), static_cast<int>(g.legs_in().size()));
  for (const auto& col : enumerate_colorings(g, options))
    m.add(leg_colors(g, g.legs_out(), col), leg_colors(g, g.legs_in(), col), 1);
  return m;
}

FaceColoring tait_face_coloring(const EmbeddedGraph& g, const ColorAssignment& col) {
  if (!g.is_closed()) throw NotClosed("face coloring needs a graph without legs");
  if (col.size() != g.edge_count()) throw WidthMismatch("coloring does not cover every edge");
  const auto report = validate(g);
  if (report.genus > 0) throw NotPlanar("genus " + std::to_string(report.genus));
  if (report.component_count > 1) throw Disconnected(std::to_string(report.component_count) + " connected components");
  const std::size_t faces = report.faces.size();
  if (faces == 0) return {};

  // Dual adjacency: crossing edge e from the face right of one end to the
  // face right of the other multiplies by the edge's color.
  std::vector<std::vector<std::pair<std::size_t, EdgeId>>> dual(faces);
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const auto [x, y] = g.edge(static_cast<EdgeId>(e));
    const std::size_t fx = report.face_of[static_cast<std::size_t>(x)];
    const std::size_t fy = report.face_of[static_cast<std::size_t>(y)];
    dual[fx].push_back({fy, static_cast<EdgeId>(e)});
    dual[fy].push_back({fx, static_cast<EdgeId>(e)});
  }
  FaceColoring value(faces);
  std::vector<char> reached(faces, 0);
  std::vector<char> tree_edge(g.edge_count(), 0);
  const std::size_t base = report.face_of[0];
  std::queue<std::size_t> queue;
  queue.push(base);
  reached[base] = 1;
  while (!queue.empty()) {
    const std::size_t f = queue.front();
    queue.pop();
    for (const auto& [to, e] : dual[f]) {
      if (reached[to]) continue;
      reached[to] = 1;
      tree_edge[static_cast<std::size_t>(e)] = 1;
      value[to] = value[f] * to_k4(col[static_cast<std::size_t>(e)]);
      queue.push(to);
    }
  }
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (tree_edge[e]) continue;
    const auto [x, y] = g.edge(static_cast<EdgeId>(e));
    const std::size_t fx = report.face_of[static_cast<std::size_t>(x)];
    const std::size_t fy = report.face_of[static_cast<std::size_t>(y)];
    if (value[fx] * to_k4(col[e]) != value[fy]) {
      throw InconsistentHolonomy("crossing edge " + std::to_string(e) + " from face " + std::to_string(fx) +
                                 " to face " + std::to_string(fy) + " contradicts the spanning-tree labels");
    }
  }
  return value;
}

std::vector<K4Element> cross_section_products(const EmbeddedGraph& g, const ColorAssignment& col,
                                              const MorphismWord& w) {
  if (col.size() != g.edge_count()) throw WidthMismatch("coloring does not cover every edge");
  const TracedGraph traced = recompose_traced(w);
  const auto iso = find_isomorphism(traced.graph, g);
  if (!iso) throw WidthMismatch("the word does not recompose to the given graph");
  std::vector<K4Element> products;
  for (const auto& strands : traced.strand_edges) {
    K4Element p;
    for (EdgeId e : strands) {
      const HalfEdgeId h = (*iso)[static_cast<std::size_t>(traced.graph.edge(e)[0])];
      p = p * to_k4(col[static_cast<std::size_t>(g.edge_of(h))]);
    }
    products.push_back(p);
  }
  return products;
}

std::string format_coloring(const ColorAssignment& col) {
  std::ostringstream out;
  for (std::size_t e = 0; e < col.size(); ++e) out << (e ? " " : "") << "edge" << e << '=' << color_char(col[e]);
  return out.str();
}

std::string format_face_coloring(const FaceColoring& faces) {
  std::ostringstream out;
  for (std::size_t f = 0; f < faces.size(); ++f) out << (f ? " " : "") << "face" << f << '=' << faces[f].symbol();
  return out.str();
}

}  // namespace taitcw
