#include "taitcw/word_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "taitcw/errors.hpp"

namespace taitcw {

std::string serialize_word(const MorphismWord& w) {
  std::ostringstream out;
  out << "{\"input_width\": " << w.input_width << ", \"layers\": [";
  for (std::size_t i = 0; i < w.layers.size(); ++i) {
    if (i) out << ", ";
    out << "{\"gen\": \"" << gen_name(w.layers[i].kind) << "\", \"pos\": " << w.layers[i].pos << '}';
  }
  out << "], \"output_width\": " << w.output_width << '}';
  return out.str();
}

MorphismWord parse_word(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(0, e.what());
  }
  auto integer = [](const nlohmann::json& node, const char* key) {
    if (!node.is_object() || !node.contains(key) || !node[key].is_number_integer())
      throw ParseError(0, std::string("expected integer field '") + key + "'");
    return node[key].get<int>();
  };
  MorphismWord w;
  w.input_width = integer(doc, "input_width");
  w.output_width = integer(doc, "output_width");
  if (!doc.contains("layers") || !doc["layers"].is_array()) throw ParseError(0, "expected array field 'layers'");
  for (const auto& layer : doc["layers"]) {
    if (!layer.is_object() || !layer.contains("gen") || !layer["gen"].is_string())
      throw ParseError(0, "expected string field 'gen'");
    w.layers.push_back({gen_from_name(layer["gen"].get<std::string>()), integer(layer, "pos")});
  }
  w.widths();
  return w;
}

MorphismWord read_word_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_word(buffer.str());
}

}  // namespace taitcw
