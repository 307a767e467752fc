#pragma once

#include <optional>
#include <random>
#include <string>

#include "taitcw/errors.hpp"
#include "taitcw/graph.hpp"
#include "taitcw/random_maps.hpp"
#include "taitcw/slicer.hpp"

namespace fixtures {

inline std::string source_path(const std::string& relative) { return std::string(TAITCW_SOURCE_DIR) + "/" + relative; }

// Theta with one edge cut: both vertices keep one out-leg.
inline taitcw::EmbeddedGraph theta_cup_graph() {
  return taitcw::EmbeddedGraph({{0, 1, 2}, {3, 4, 5}}, {{0, 5}, {1, 4}, {2, 6}, {3, 7}}, {}, {6, 7});
}

inline taitcw::MorphismWord word(int in, std::initializer_list<taitcw::Generator> layers, int out) {
  return {in, std::vector<taitcw::Generator>(layers), out};
}

inline taitcw::MorphismWord theta_cup_word() {
  using taitcw::Generator;
  return word(0, {Generator::cup(0), Generator::split(0), Generator::merge(0)}, 2);
}

inline taitcw::MorphismWord theta_cap_word() {
  using taitcw::Generator;
  return word(2, {Generator::split(0), Generator::merge(0), Generator::cap(0)}, 0);
}

// Random word of up to `layers` generators whose recomposition is a
// connected map; nullopt when the draw is unusable.
inline std::optional<taitcw::MorphismWord> random_open_word(std::uint64_t seed, int input_width, int layers,
                                                             int max_width = 5) {
  using namespace taitcw;
  std::mt19937_64 rng(seed);
  MorphismWord w;
  w.input_width = input_width;
  int width = input_width;
  for (int i = 0; i < layers; ++i) {
    std::vector<GenKind> kinds;
    if (width + 2 <= max_width) kinds.push_back(GenKind::Cup);
    if (width >= 2) kinds.push_back(GenKind::Cap);
    if (width >= 2) kinds.push_back(GenKind::Merge);
    if (width >= 1 && width + 1 <= max_width) kinds.push_back(GenKind::Split);
    if (kinds.empty()) break;
    const GenKind kind = kinds[uniform_index(rng, kinds.size())];
    const int range = kind == GenKind::Cup ? width + 1 : kind == GenKind::Split ? width : width - 1;
    w.layers.push_back({kind, static_cast<int>(uniform_index(rng, static_cast<std::size_t>(range)))});
    width += width_delta(kind);
  }
  w.output_width = width;
  try {
    const auto g = recompose(w);
    if (g.vertex_count() == 0) return std::nullopt;
    const auto r = validate(g);
    if (r.component_count != 1 || r.genus != 0) return std::nullopt;
  } catch (const MalformedWord&) {
    return std::nullopt;
  } catch (const MalformedGraph&) {
    return std::nullopt;
  }
  return w;
}

}  // namespace fixtures
