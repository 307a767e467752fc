#include "taitcw/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <vector>

#include "taitcw/errors.hpp"

namespace taitcw {

namespace {

std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> tokens;
  std::string current;
  for (char ch : line) {
    if (ch == ' ' || ch == '\t' || ch == '\r') {
      if (!current.empty()) tokens.push_back(std::move(current)), current.clear();
    } else if (ch == ':') {
      if (!current.empty()) tokens.push_back(std::move(current)), current.clear();
      tokens.emplace_back(":");
    } else {
      current.push_back(ch);
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

std::int32_t to_id(const std::string& token, std::size_t line) {
  std::int32_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() || value < 0)
    throw ParseError(line, "expected a nonnegative integer, got '" + token + "'");
  return value;
}

template <typename T>
std::vector<T> densify(std::map<std::int32_t, T>& entries, const std::string& what) {
  std::vector<T> out;
  out.reserve(entries.size());
  std::int32_t expected = 0;
  for (auto& [id, value] : entries) {
    if (id != expected)
      throw MalformedGraph(what + " ids are not dense: missing " + std::to_string(expected));
    out.push_back(std::move(value));
    ++expected;
  }
  return out;
}

}  // namespace

EmbeddedGraph parse_graph(std::string_view text) {
  std::map<std::int32_t, std::vector<HalfEdgeId>> vertices;
  std::map<std::int32_t, EmbeddedGraph::EdgeEnds> edges;
  std::map<std::int32_t, HalfEdgeId> legs_in, legs_out;
  std::set<HalfEdgeId> placed, paired;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tok = tokenize(line);
    if (tok.empty()) {
      if (end == text.size()) break;
      continue;
    }

    auto colon_at = [&](std::size_t i) {
      if (tok.size() <= i || tok[i] != ":") throw ParseError(line_no, "expected ':'");
    };
    auto place = [&](HalfEdgeId h) {
      if (!placed.insert(h).second)
        throw ParseError(line_no, "half-edge " + std::to_string(h) + " appears twice");
    };

    if (tok[0] == "vertex") {
      if (tok.size() < 3) throw ParseError(line_no, "truncated vertex line");
      const auto vid = to_id(tok[1], line_no);
      colon_at(2);
      std::vector<HalfEdgeId> rot;
      for (std::size_t i = 3; i < tok.size(); ++i) {
        rot.push_back(to_id(tok[i], line_no));
        place(rot.back());
      }
      if (!vertices.emplace(vid, std::move(rot)).second)
        throw ParseError(line_no, "vertex " + std::to_string(vid) + " defined twice");
    } else if (tok[0] == "edge") {
      if (tok.size() != 5) throw ParseError(line_no, "edge line needs 'edge <eid>: <hA> <hB>'");
      const auto eid = to_id(tok[1], line_no);
      colon_at(2);
      const HalfEdgeId x = to_id(tok[3], line_no), y = to_id(tok[4], line_no);
      for (HalfEdgeId h : {x, y}) {
        if (!paired.insert(h).second)
          throw ParseError(line_no, "half-edge " + std::to_string(h) + " appears in two edges");
      }
      if (!edges.emplace(eid, EmbeddedGraph::EdgeEnds{x, y}).second)
        throw ParseError(line_no, "edge " + std::to_string(eid) + " defined twice");
    } else if (tok[0] == "leg") {
      if (tok.size() != 5 || (tok[1] != "in" && tok[1] != "out"))
        throw ParseError(line_no, "leg line needs 'leg in|out <position>: <h>'");
      const auto pos = to_id(tok[2], line_no);
      colon_at(3);
      const HalfEdgeId h = to_id(tok[4], line_no);
      place(h);
      auto& legs = tok[1] == "in" ? legs_in : legs_out;
      if (!legs.emplace(pos, h).second)
        throw ParseError(line_no, "leg " + tok[1] + " " + std::to_string(pos) + " defined twice");
    } else {
      throw ParseError(line_no, "unknown record '" + tok[0] + "'");
    }
    if (end == text.size()) break;
  }

  std::vector<EmbeddedGraph::Rotation> rotations;
  for (auto& rot : densify(vertices, "vertex")) {
    if (rot.size() != 3)
      throw MalformedGraph("vertex " + std::to_string(rotations.size()) + " has valency " +
                           std::to_string(rot.size()) + ", expected 3");
    rotations.push_back({rot[0], rot[1], rot[2]});
  }
  return EmbeddedGraph(std::move(rotations), densify(edges, "edge"), densify(legs_in, "leg in"),
                       densify(legs_out, "leg out"));
}

std::string serialize_graph(const EmbeddedGraph& g) {
  std::ostringstream out;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const auto& r = g.rotation(static_cast<VertexId>(v));
    out << "vertex " << v << ": " << r[0] << ' ' << r[1] << ' ' << r[2] << '\n';
  }
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const auto& ends = g.edge(static_cast<EdgeId>(e));
    out << "edge " << e << ": " << ends[0] << ' ' << ends[1] << '\n';
  }
  for (std::size_t i = 0; i < g.legs_in().size(); ++i) out << "leg in " << i << ": " << g.legs_in()[i] << '\n';
  for (std::size_t i = 0; i < g.legs_out().size(); ++i) out << "leg out " << i << ": " << g.legs_out()[i] << '\n';
  return out.str();
}

EmbeddedGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str());
}

}  // namespace taitcw
