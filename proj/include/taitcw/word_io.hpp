#pragma once

#include <string>
#include <string_view>

#include "taitcw/slicer.hpp"

namespace taitcw {

/// `{"input_width": n, "layers": [{"gen": "cup", "pos": 0}, ...], "output_width": m}`
/// with exactly this field order and spacing, no trailing newline.
std::string serialize_word(const MorphismWord& w);

/// Accepts any JSON with the same fields. Throws ParseError, UnknownGenerator,
/// InvalidPosition or MalformedWord.
MorphismWord parse_word(std::string_view text);

MorphismWord read_word_file(const std::string& path);

}  // namespace taitcw
