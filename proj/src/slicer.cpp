#include "taitcw/slicer.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <random>

#include "taitcw/errors.hpp"
#include "taitcw/random_maps.hpp"

namespace taitcw {

int width_delta(GenKind kind) {
  switch (kind) {
    case GenKind::Cup: return 2;
    case GenKind::Cap: return -2;
    case GenKind::Merge: return -1;
    case GenKind::Split: return 1;
  }
  return 0;
}

const char* gen_name(GenKind kind) {
  switch (kind) {
    case GenKind::Cup: return "cup";
    case GenKind::Cap: return "cap";
    case GenKind::Merge: return "merge";
    case GenKind::Split: return "split";
  }
  return "?";
}

GenKind gen_from_name(const std::string& name) {
  for (GenKind k : {GenKind::Cup, GenKind::Cap, GenKind::Merge, GenKind::Split}) {
    if (name == gen_name(k)) return k;
  }
  throw UnknownGenerator("no generator named '" + name + "'");
}

void check_position(const Generator& gen, int width) {
  const int p = gen.pos;
  bool ok = p >= 0;
  switch (gen.kind) {
    case GenKind::Cup: ok = ok && p <= width; break;
    case GenKind::Cap:
    case GenKind::Merge: ok = ok && p + 1 < width; break;
    case GenKind::Split: ok = ok && p < width; break;
  }
  if (!ok) {
    throw InvalidPosition(std::string(gen_name(gen.kind)) + " at position " + std::to_string(p) +
                          " does not fit width " + std::to_string(width));
  }
}

std::vector<int> MorphismWord::widths() const {
  if (input_width < 0 || output_width < 0) throw MalformedWord("negative boundary width");
  std::vector<int> out{input_width};
  int w = input_width;
  for (const auto& gen : layers) {
    check_position(gen, w);
    w += width_delta(gen.kind);
    out.push_back(w);
  }
  if (w != output_width) {
    throw MalformedWord("layers end at width " + std::to_string(w) + " but output_width is " +
                        std::to_string(output_width));
  }
  return out;
}

int MorphismWord::max_width() const {
  const auto ws = widths();
  return *std::max_element(ws.begin(), ws.end());
}

MorphismWord MorphismWord::slice_range(std::size_t begin, std::size_t end) const {
  const auto ws = widths();
  MorphismWord part;
  part.input_width = ws.at(begin);
  part.output_width = ws.at(end);
  part.layers.assign(layers.begin() + static_cast<std::ptrdiff_t>(begin),
                     layers.begin() + static_cast<std::ptrdiff_t>(end));
  return part;
}

namespace {

enum class SplitOrder : std::uint8_t { Leftmost, Oldest, Newest, Greedy, Distance };

struct SweepOptions {
  std::uint64_t seed = 0;
  SplitOrder order = SplitOrder::Leftmost;
  HalfEdgeId first_dart = kNone;
  std::size_t budget = 200000;
  // Per-vertex priority for the Distance order; lower splits first.
  const std::vector<int>* rank = nullptr;
};

// A strand crossing the current cross-section. Real strands hang from a
// swept half-edge `lower`; the edge continues upward to `upper`, its
// partner. Arms of an output arc have no lower end.
struct Strand {
  HalfEdgeId lower = kNone;
  HalfEdgeId upper = kNone;
  int arc = -1;
  std::size_t age = 0;
};

enum class MoveKind : std::uint8_t { Cap, Merge3, Merge2, Split, Place, Arc };

struct Move {
  MoveKind kind;
  int pos;
  HalfEdgeId dart = kNone;
};

struct SweepState {
  std::vector<Strand> strands;
  std::vector<char> done;
  std::size_t remaining = 0;
  std::size_t arcs_left = 0;
  std::vector<char> arc_placed;
  std::size_t layer_count = 0;
  std::size_t clock = 0;
};

class Sweep {
 public:
  Sweep(const EmbeddedGraph& g, const SweepOptions& options)
      : g_(g), options_(options), rng_(options.seed) {
    lower_pos_.assign(g.half_edge_count(), -1);
    upper_pos_.assign(g.half_edge_count(), -1);
    arc_of_.assign(g.half_edge_count(), -1);
    const auto& out = g.legs_out();
    for (std::size_t a = 0; a < out.size(); ++a) {
      const HalfEdgeId o = out[a];
      const HalfEdgeId q = g.partner(o);
      if (g.place_of(q) == EmbeddedGraph::Place::LegOut && g.slot_of(q) > static_cast<int>(a)) {
        arc_of_[static_cast<std::size_t>(o)] = static_cast<int>(arc_count_++);
      }
    }
  }

  MorphismWord run() {
    SweepState s;
    s.done.assign(g_.vertex_count(), 0);
    s.remaining = g_.vertex_count();
    s.arcs_left = arc_count_;
    s.arc_placed.assign(arc_count_, 0);
    for (HalfEdgeId l : g_.legs_in()) s.strands.push_back({l, g_.partner(l), -1, 0});

    struct Frame {
      SweepState state;
      std::vector<Move> moves;
      std::size_t next = 0;
    };
    std::vector<Frame> stack;
    std::size_t expansions = 0;
    SweepState cur = std::move(s);
    for (;;) {
      index(cur);
      if (finished(cur)) break;
      if (++expansions > options_.budget)
        throw SliceSearchExhausted("sweep gave up after " + std::to_string(options_.budget) + " steps");
      stack.push_back({cur, candidates(cur), 0});
      // Pop exhausted frames, then take the next untried move.
      while (!stack.empty() && stack.back().next >= stack.back().moves.size()) stack.pop_back();
      if (stack.empty()) throw SliceSearchExhausted("no sweep order reaches the output boundary");
      Frame& top = stack.back();
      cur = top.state;
      layers_.resize(cur.layer_count);
      apply(cur, top.moves[top.next++]);
    }
    MorphismWord w;
    w.input_width = static_cast<int>(g_.legs_in().size());
    w.output_width = static_cast<int>(g_.legs_out().size());
    w.layers = layers_;
    return w;
  }

 private:
  void index(const SweepState& s) {
    for (HalfEdgeId h : touched_) {
      lower_pos_[static_cast<std::size_t>(h)] = -1;
      upper_pos_[static_cast<std::size_t>(h)] = -1;
    }
    touched_.clear();
    for (std::size_t i = 0; i < s.strands.size(); ++i) {
      const Strand& st = s.strands[i];
      if (st.lower != kNone) {
        lower_pos_[static_cast<std::size_t>(st.lower)] = static_cast<int>(i);
        touched_.push_back(st.lower);
      }
      upper_pos_[static_cast<std::size_t>(st.upper)] = static_cast<int>(i);
      touched_.push_back(st.upper);
    }
  }

  bool finished(const SweepState& s) const {
    if (s.remaining != 0 || s.arcs_left != 0 || s.strands.size() != g_.legs_out().size()) return false;
    for (std::size_t j = 0; j < s.strands.size(); ++j) {
      if (s.strands[j].upper != g_.legs_out()[j]) return false;
    }
    return true;
  }

  bool open_vertex_dart(const SweepState& s, HalfEdgeId h) const {
    const VertexId v = g_.vertex_of(h);
    return v != kNone && !s.done[static_cast<std::size_t>(v)];
  }

  struct Hit {
    int gap;
    HalfEdgeId dart;
  };

  // Walks the boundary of the region above the cross-section that contains
  // gap `gap` (1..w), or the whole face through the top base point when the
  // cross-section is empty. Records each unswept half-edge together with the
  // gap it faces.
  std::vector<Hit> piece(const SweepState& s, int gap, std::vector<char>* seen) const {
    std::vector<Hit> hits;
    const int w = static_cast<int>(s.strands.size());
    const auto& out = g_.legs_out();
    const std::size_t guard = 4 * (g_.half_edge_count() + s.strands.size()) + 8;
    int cur = gap;
    auto turn = [&](HalfEdgeId x) {
      if (!out.empty() && x == out.back()) cur = 0;
      return g_.next_ccw(x);
    };
    if (w == 0) {
      const HalfEdgeId start = out.front();
      HalfEdgeId h = start;
      cur = 0;
      do {
        if (hits.size() > guard) throw SliceSearchExhausted("runaway face walk");
        hits.push_back({cur, h});
        h = turn(g_.partner(h));
      } while (h != start);
      return hits;
    }
    int up = gap - 1;
    for (std::size_t steps = 0;; ++steps) {
      if (steps > guard) throw SliceSearchExhausted("runaway face walk");
      if (seen) (*seen)[static_cast<std::size_t>(up)] = 1;
      cur = up + 1;
      int arrive = -1;
      const HalfEdgeId top = s.strands[static_cast<std::size_t>(up)].upper;
      if (lower_pos_[static_cast<std::size_t>(top)] >= 0) {
        arrive = lower_pos_[static_cast<std::size_t>(top)];
      } else {
        HalfEdgeId h = turn(top);
        for (;; ++steps) {
          if (steps > guard) throw SliceSearchExhausted("runaway face walk");
          hits.push_back({cur, h});
          if (upper_pos_[static_cast<std::size_t>(h)] >= 0) {
            arrive = upper_pos_[static_cast<std::size_t>(h)];
            break;
          }
          h = turn(g_.partner(h));
        }
      }
      if (arrive == 0) arrive = w;
      if (arrive == gap) break;
      up = arrive - 1;
    }
    return hits;
  }

  template <typename T>
  void shuffle(std::vector<T>& items) {
    if (options_.seed == 0) return;
    for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[uniform_index(rng_, i)]);
  }

  std::vector<Move> candidates(const SweepState& s) {
    const auto& st = s.strands;
    const int w = static_cast<int>(st.size());
    std::vector<Move> caps, merges3, merges2, splits;
    for (int i = 0; i + 1 < w; ++i) {
      const Strand& x = st[static_cast<std::size_t>(i)];
      const Strand& y = st[static_cast<std::size_t>(i + 1)];
      if (x.lower != kNone && x.upper == y.lower) caps.push_back({MoveKind::Cap, i});
      if (open_vertex_dart(s, x.upper) && g_.next_ccw(x.upper) == y.upper) {
        merges2.push_back({MoveKind::Merge2, i});
        if (i + 2 < w && g_.next_ccw(y.upper) == st[static_cast<std::size_t>(i + 2)].upper)
          merges3.push_back({MoveKind::Merge3, i});
      }
    }
    for (int i = 0; i < w; ++i) {
      if (open_vertex_dart(s, st[static_cast<std::size_t>(i)].upper)) splits.push_back({MoveKind::Split, i});
    }
    if (options_.order != SplitOrder::Leftmost) shuffle(splits);
    if (options_.order == SplitOrder::Greedy || options_.order == SplitOrder::Distance) {
      std::vector<std::pair<int, Move>> scored;
      for (const Move& m : splits) {
        int score = split_score(s, m.pos);
        if (options_.order == SplitOrder::Distance) {
          const VertexId v = g_.vertex_of(st[static_cast<std::size_t>(m.pos)].upper);
          score = (score >= 4 ? 1 << 20 : 0) - (*options_.rank)[static_cast<std::size_t>(v)];
        }
        scored.push_back({score, m});
      }
      std::stable_sort(scored.begin(), scored.end(), [&](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first > b.first;
        return st[static_cast<std::size_t>(a.second.pos)].age < st[static_cast<std::size_t>(b.second.pos)].age;
      });
      for (std::size_t k = 0; k < splits.size(); ++k) splits[k] = scored[k].second;
    } else if (options_.order != SplitOrder::Leftmost) {
      const bool oldest = options_.order == SplitOrder::Oldest;
      std::stable_sort(splits.begin(), splits.end(), [&](const Move& a, const Move& b) {
        const auto aa = st[static_cast<std::size_t>(a.pos)].age, ab = st[static_cast<std::size_t>(b.pos)].age;
        return oldest ? aa < ab : aa > ab;
      });
    }
    std::vector<Move> places, arcs;
    if (caps.empty() && merges3.empty() && merges2.empty() && splits.empty()) {
      if (w == 0 && g_.legs_out().empty()) {
        for (std::size_t h = 0; h < g_.half_edge_count(); ++h) {
          if (open_vertex_dart(s, static_cast<HalfEdgeId>(h))) places.push_back({MoveKind::Place, 0, static_cast<HalfEdgeId>(h)});
        }
      } else {
        std::vector<char> seen(static_cast<std::size_t>(w), 0);
        for (int gap = (w == 0 ? 0 : 1); gap <= w; ++gap) {
          if (w > 0 && seen[static_cast<std::size_t>(gap - 1)]) continue;
          for (const Hit& hit : piece(s, gap, &seen)) {
            if (open_vertex_dart(s, hit.dart)) {
              places.push_back({MoveKind::Place, hit.gap, hit.dart});
            } else {
              const int arc = arc_of_[static_cast<std::size_t>(hit.dart)];
              if (arc >= 0 && !s.arc_placed[static_cast<std::size_t>(arc)])
                arcs.push_back({MoveKind::Arc, hit.gap, hit.dart});
            }
          }
        }
      }
      if (options_.first_dart != kNone) {
        std::stable_partition(places.begin(), places.end(),
                              [&](const Move& m) { return m.dart == options_.first_dart; });
      }
    }
    std::vector<Move> all;
    for (auto* group : {&caps, &merges3, &merges2, &splits, &places, &arcs}) {
      if (group != &splits || options_.order == SplitOrder::Leftmost) shuffle(*group);
      all.insert(all.end(), group->begin(), group->end());
    }
    return all;
  }

  // How soon the two strands created by splitting strand `i` get absorbed:
  // immediate merges with a neighbour count most, then strands that reach a
  // vertex already touching the cross-section.
  int split_score(const SweepState& s, int i) const {
    const auto& st = s.strands;
    const int w = static_cast<int>(st.size());
    const HalfEdgeId d = st[static_cast<std::size_t>(i)].upper;
    const HalfEdgeId right = g_.next_ccw(d), left = g_.next_ccw(right);
    const HalfEdgeId pl = g_.partner(left), pr = g_.partner(right);
    if (pl == right) return 8;
    int score = 0;
    if (i > 0 && open_vertex_dart(s, st[static_cast<std::size_t>(i - 1)].upper) &&
        g_.next_ccw(st[static_cast<std::size_t>(i - 1)].upper) == pl)
      score += 4;
    if (i + 1 < w && open_vertex_dart(s, pr) && g_.next_ccw(pr) == st[static_cast<std::size_t>(i + 1)].upper)
      score += 4;
    for (HalfEdgeId p : {pl, pr}) {
      if (!open_vertex_dart(s, p)) continue;
      if (upper_pos_[static_cast<std::size_t>(g_.next_ccw(p))] >= 0 ||
          upper_pos_[static_cast<std::size_t>(g_.next_ccw(g_.next_ccw(p)))] >= 0)
        score += 1;
    }
    return score;
  }

  Strand real(HalfEdgeId lower, std::size_t age) const { return {lower, g_.partner(lower), -1, age}; }

  void emit(SweepState& s, Generator gen) {
    layers_.push_back(gen);
    s.layer_count = layers_.size();
  }

  void finish_vertex(SweepState& s, HalfEdgeId h) {
    s.done[static_cast<std::size_t>(g_.vertex_of(h))] = 1;
    --s.remaining;
  }

  void apply(SweepState& s, const Move& m) {
    auto& st = s.strands;
    const auto at = st.begin() + m.pos;
    const std::size_t age = ++s.clock;
    switch (m.kind) {
      case MoveKind::Cap:
        st.erase(at, at + 2);
        emit(s, Generator::cap(m.pos));
        break;
      case MoveKind::Merge3:
        finish_vertex(s, at->upper);
        st.erase(at, at + 3);
        emit(s, Generator::merge(m.pos));
        emit(s, Generator::cap(m.pos));
        break;
      case MoveKind::Merge2: {
        finish_vertex(s, at->upper);
        const HalfEdgeId third = g_.next_ccw((at + 1)->upper);
        st.erase(at, at + 2);
        st.insert(st.begin() + m.pos, real(third, age));
        emit(s, Generator::merge(m.pos));
        break;
      }
      case MoveKind::Split: {
        const HalfEdgeId d = at->upper;
        finish_vertex(s, d);
        const HalfEdgeId right = g_.next_ccw(d), left = g_.next_ccw(right);
        *at = real(left, age);
        st.insert(st.begin() + m.pos + 1, real(right, age));
        emit(s, Generator::split(m.pos));
        break;
      }
      case MoveKind::Place: {
        const HalfEdgeId z = m.dart;
        finish_vertex(s, z);
        const HalfEdgeId y = g_.next_ccw(z), x = g_.next_ccw(y);
        st.insert(at, {real(x, age), real(y, age), real(z, age)});
        emit(s, Generator::cup(m.pos));
        emit(s, Generator::split(m.pos));
        break;
      }
      case MoveKind::Arc: {
        const int arc = arc_of_[static_cast<std::size_t>(m.dart)];
        s.arc_placed[static_cast<std::size_t>(arc)] = 1;
        --s.arcs_left;
        st.insert(at, {Strand{kNone, m.dart, arc, age}, Strand{kNone, g_.partner(m.dart), arc, age}});
        emit(s, Generator::cup(m.pos));
        break;
      }
    }
  }

  const EmbeddedGraph& g_;
  SweepOptions options_;
  std::mt19937_64 rng_;
  std::vector<int> lower_pos_, upper_pos_, arc_of_;
  std::vector<HalfEdgeId> touched_;
  std::size_t arc_count_ = 0;
  std::vector<Generator> layers_;
};

void check_sliceable(const EmbeddedGraph& g) {
  const auto report = validate(g);
  if (report.genus > 0) throw NotPlanar("genus " + std::to_string(report.genus));
  if (report.component_count > 1)
    throw Disconnected(std::to_string(report.component_count) + " connected components");
  if (!g.legs_in().empty() && !g.legs_out().empty()) {
    const auto in_corner = static_cast<std::size_t>(g.legs_in().back());
    const auto out_corner = static_cast<std::size_t>(g.legs_out().front());
    if (report.face_of[in_corner] != report.face_of[out_corner])
      throw NotPlanar("the input and output base points lie in different faces");
  }
}

MorphismWord sweep(const EmbeddedGraph& g, const SweepOptions& options) {
  if (g.node_count() == 0) return {};
  check_sliceable(g);
  return Sweep(g, options).run();
}

// Sum of 3^width over boundaries, saturating; a proxy for evaluation cost.
double sweep_cost(const MorphismWord& w) {
  double total = 0;
  for (int width : w.widths()) total += std::pow(3.0, width);
  return total;
}

}  // namespace

namespace {

// Graph distance of every vertex from the vertex of `start` (or from the
// vertices touching the input legs when there is no start dart).
std::vector<int> bfs_distances(const EmbeddedGraph& g, HalfEdgeId start) {
  std::vector<int> dist(g.vertex_count(), -1);
  std::vector<VertexId> queue;
  auto reach = [&](HalfEdgeId h, int d) {
    const VertexId v = g.vertex_of(h);
    if (v == kNone || dist[static_cast<std::size_t>(v)] >= 0) return;
    dist[static_cast<std::size_t>(v)] = d;
    queue.push_back(v);
  };
  if (start != kNone) {
    reach(start, 0);
  } else {
    for (HalfEdgeId l : g.legs_in()) reach(g.partner(l), 0);
    for (HalfEdgeId o : g.legs_out()) reach(g.partner(o), 0);
  }
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const VertexId v = queue[i];
    for (HalfEdgeId h : g.rotation(v)) {
      const HalfEdgeId p = g.partner(h);
      if (p != kNone) reach(p, dist[static_cast<std::size_t>(v)] + 1);
    }
  }
  for (int& d : dist) {
    if (d < 0) d = static_cast<int>(g.vertex_count());
  }
  return dist;
}

}  // namespace

MorphismWord slice(const EmbeddedGraph& g) { return reslice_distinct(g, 0); }

MorphismWord reslice_distinct(const EmbeddedGraph& g, std::uint64_t seed) {
  SweepOptions options;
  options.seed = seed;
  return sweep(g, options);
}

MorphismWord slice_min_width(const EmbeddedGraph& g) {
  if (g.node_count() == 0) return {};
  check_sliceable(g);
  std::vector<HalfEdgeId> starts{kNone};
  if (g.is_closed()) {
    starts.clear();
    for (std::size_t h = 0; h < g.half_edge_count(); ++h) starts.push_back(static_cast<HalfEdgeId>(h));
  }
  using Key = std::pair<int, double>;
  MorphismWord best;
  Key best_key{std::numeric_limits<int>::max(), 0.0};
  auto consider = [&](MorphismWord w) {
    const Key key{w.max_width(), sweep_cost(w)};
    if (key < best_key) {
      best_key = key;
      best = std::move(w);
    }
    return key;
  };
  for (SplitOrder order : {SplitOrder::Leftmost, SplitOrder::Oldest, SplitOrder::Newest, SplitOrder::Greedy}) {
    for (HalfEdgeId start : starts) {
      SweepOptions options;
      options.order = order;
      options.first_dart = start;
      consider(Sweep(g, options).run());
    }
  }

  // Distance orders get a priority per vertex; the best one is then
  // refined by random local changes to single priorities.
  constexpr int kStep = 16;
  std::vector<int> rank, best_rank;
  HalfEdgeId best_start = kNone;
  Key distance_key{std::numeric_limits<int>::max(), 0.0};
  SweepOptions options;
  options.order = SplitOrder::Distance;
  options.rank = &rank;
  for (HalfEdgeId start : starts) {
    rank = bfs_distances(g, start);
    for (int& r : rank) r *= kStep;
    options.first_dart = start;
    const Key key = consider(Sweep(g, options).run());
    if (key < distance_key) {
      distance_key = key;
      best_rank = rank;
      best_start = start;
    }
  }
  std::mt19937_64 rng(0);
  options.first_dart = best_start;
  const std::size_t rounds = std::min<std::size_t>(20 * g.vertex_count(), 8000);
  for (std::size_t r = 0; r < rounds && g.vertex_count() > 1; ++r) {
    rank = best_rank;
    const std::size_t v = uniform_index(rng, rank.size());
    rank[v] += static_cast<int>(uniform_index(rng, 4 * kStep + 1)) - 2 * kStep;
    const Key key = consider(Sweep(g, options).run());
    if (key <= distance_key) {
      distance_key = key;
      best_rank = rank;
    }
  }
  return best;
}

namespace {

// Recomposition tracks open edge pieces ("paths"). A path has two ends, each
// either a half-edge of the graph under construction or still dangling on a
// strand. Capping two paths fuses them; the fused path replaces both.
struct Path {
  std::array<HalfEdgeId, 2> end{kNone, kNone};
  int forward = -1;
  EdgeId edge = kNone;
};

struct Builder {
  std::vector<Path> paths;
  std::vector<std::pair<int, int>> strands;  // (path, end index)
  std::vector<EmbeddedGraph::EdgeEnds> edges;

  int open_path(HalfEdgeId first) {
    paths.push_back({{first, kNone}, -1, kNone});
    return static_cast<int>(paths.size() - 1);
  }

  void close(std::pair<int, int> strand, HalfEdgeId h) {
    Path& p = paths[static_cast<std::size_t>(strand.first)];
    p.end[static_cast<std::size_t>(strand.second)] = h;
    if (p.end[0] != kNone && p.end[1] != kNone) {
      p.edge = static_cast<EdgeId>(edges.size());
      edges.push_back({p.end[0], p.end[1]});
    }
  }

  EdgeId edge_of_path(int path) const {
    while (paths[static_cast<std::size_t>(path)].forward >= 0) path = paths[static_cast<std::size_t>(path)].forward;
    return paths[static_cast<std::size_t>(path)].edge;
  }
};

}  // namespace

TracedGraph recompose_traced(const MorphismWord& w) {
  const auto widths = w.widths();
  int vertices = 0;
  for (const auto& gen : w.layers) vertices += gen.kind == GenKind::Merge || gen.kind == GenKind::Split;
  const HalfEdgeId in_base = 3 * vertices;
  const HalfEdgeId out_base = in_base + w.input_width;

  Builder b;
  std::vector<EmbeddedGraph::Rotation> rotations;
  std::vector<HalfEdgeId> legs_in, legs_out;
  for (int i = 0; i < w.input_width; ++i) {
    legs_in.push_back(in_base + i);
    b.strands.push_back({b.open_path(in_base + i), 1});
  }
  std::vector<std::vector<int>> strand_paths;
  auto snapshot = [&] {
    std::vector<int> ids;
    for (const auto& s : b.strands) ids.push_back(s.first);
    strand_paths.push_back(std::move(ids));
  };
  snapshot();

  for (const auto& gen : w.layers) {
    auto& st = b.strands;
    const auto at = st.begin() + gen.pos;
    switch (gen.kind) {
      case GenKind::Cup: {
        const int p = static_cast<int>(b.paths.size());
        b.paths.push_back({});
        st.insert(at, {{p, 0}, {p, 1}});
        break;
      }
      case GenKind::Cap: {
        const auto x = *at, y = *(at + 1);
        if (x.first == y.first)
          throw MalformedWord("cap at position " + std::to_string(gen.pos) + " closes a loop without vertices");
        st.erase(at, at + 2);
        const auto& px = b.paths[static_cast<std::size_t>(x.first)];
        const auto& py = b.paths[static_cast<std::size_t>(y.first)];
        const int fused = static_cast<int>(b.paths.size());
        Path f{{px.end[static_cast<std::size_t>(1 - x.second)], py.end[static_cast<std::size_t>(1 - y.second)]}, -1, kNone};
        b.paths.push_back(f);
        b.paths[static_cast<std::size_t>(x.first)].forward = fused;
        b.paths[static_cast<std::size_t>(y.first)].forward = fused;
        for (auto& s : st) {
          if (s.first == x.first) s = {fused, 0};
          else if (s.first == y.first) s = {fused, 1};
        }
        auto& fp = b.paths.back();
        if (fp.end[0] != kNone && fp.end[1] != kNone) {
          fp.edge = static_cast<EdgeId>(b.edges.size());
          b.edges.push_back({fp.end[0], fp.end[1]});
        }
        break;
      }
      case GenKind::Merge: {
        const HalfEdgeId base = 3 * static_cast<HalfEdgeId>(rotations.size());
        rotations.push_back({base, base + 1, base + 2});
        b.close(*at, base);
        b.close(*(at + 1), base + 1);
        st.erase(at, at + 2);
        st.insert(st.begin() + gen.pos, {b.open_path(base + 2), 1});
        break;
      }
      case GenKind::Split: {
        // Rotation (down, upper right, upper left).
        const HalfEdgeId base = 3 * static_cast<HalfEdgeId>(rotations.size());
        rotations.push_back({base, base + 1, base + 2});
        b.close(*at, base);
        st.erase(at);
        st.insert(st.begin() + gen.pos, {{b.open_path(base + 2), 1}, {b.open_path(base + 1), 1}});
        break;
      }
    }
    snapshot();
  }
  for (int j = 0; j < w.output_width; ++j) {
    legs_out.push_back(out_base + j);
    b.close(b.strands[static_cast<std::size_t>(j)], out_base + j);
  }

  TracedGraph traced;
  for (const auto& ids : strand_paths) {
    std::vector<EdgeId> edges;
    for (int p : ids) edges.push_back(b.edge_of_path(p));
    traced.strand_edges.push_back(std::move(edges));
  }
  (void)widths;
  traced.graph = EmbeddedGraph(std::move(rotations), std::move(b.edges), std::move(legs_in), std::move(legs_out));
  return traced;
}

EmbeddedGraph recompose(const MorphismWord& w) { return recompose_traced(w).graph; }

}  // namespace taitcw
