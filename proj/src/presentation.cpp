#include "taitcw/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "taitcw/errors.hpp"

namespace taitcw {

Word Word::inverse() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push_back(it->inverse());
  return Word(std::move(out));
}

Word Word::rotated(std::size_t shift) const {
  if (letters_.empty()) return *this;
  shift %= letters_.size();
  std::vector<Letter> out(letters_.begin() + static_cast<std::ptrdiff_t>(shift), letters_.end());
  out.insert(out.end(), letters_.begin(), letters_.begin() + static_cast<std::ptrdiff_t>(shift));
  return Word(std::move(out));
}

Word Word::concatenated(const Word& tail) const {
  std::vector<Letter> out = letters_;
  out.insert(out.end(), tail.letters_.begin(), tail.letters_.end());
  return Word(std::move(out));
}

Word free_reduce(const Word& word) {
  std::vector<Letter> stack;
  stack.reserve(word.size());
  for (const Letter& x : word.letters()) {
    if (!stack.empty() && stack.back() == x.inverse()) {
      stack.pop_back();
    } else {
      stack.push_back(x);
    }
  }
  return Word(std::move(stack));
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      parts.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return parts;
}

std::string strip_comments(std::string_view text) {
  std::string out;
  for (std::string_view line : split(text, '\n')) {
    auto hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    out.append(line);
    out.push_back(' ');
  }
  return out;
}

Word parse_letters(std::string_view text, const std::vector<std::string>& generators) {
  text = trim(text);
  std::vector<Letter> letters;
  if (text.empty() || text == "1") {
    bool one_is_generator =
        std::find(generators.begin(), generators.end(), "1") != generators.end();
    if (text.empty() || !one_is_generator) return Word();
  }
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    // Longest generator name matching at i.
    std::size_t best = generators.size();
    std::size_t best_len = 0;
    for (std::size_t g = 0; g < generators.size(); ++g) {
      const std::string& name = generators[g];
      if (name.size() > best_len && text.substr(i, name.size()) == name) {
        best = g;
        best_len = name.size();
      }
    }
    if (best == generators.size()) {
      std::size_t end = i;
      while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end])) &&
             text[end] != '^')
        ++end;
      throw UnknownGenerator("unknown generator '" + std::string(text.substr(i, std::max<std::size_t>(end - i, 1))) + "'");
    }
    i += best_len;
    int exponent = 1;
    if (i < text.size() && text[i] == '^') {
      std::size_t j = i + 1;
      std::string exp;
      while (j < text.size() && (text[j] == '-' || text[j] == '+' ||
                                 std::isdigit(static_cast<unsigned char>(text[j])))) {
        exp.push_back(text[j]);
        ++j;
      }
      if (exp == "-1") {
        exponent = -1;
      } else if (exp == "1" || exp == "+1") {
        exponent = 1;
      } else {
        throw ParseError(0, "unsupported exponent '^" + exp + "'");
      }
      i = j;
    }
    letters.push_back({static_cast<std::uint32_t>(best), exponent});
  }
  return Word(std::move(letters));
}

}  // namespace

GroupPresentation::GroupPresentation(std::vector<std::string> generators,
                                     std::vector<Word> relators)
    : generators_(std::move(generators)), relators_(std::move(relators)) {
  std::set<std::string> seen;
  for (const std::string& name : generators_) {
    if (name.empty()) throw ParseError(0, "empty generator name");
    if (!seen.insert(name).second) throw ParseError(0, "duplicate generator '" + name + "'");
  }
  for (const Word& r : relators_) {
    for (const Letter& x : r.letters()) {
      if (x.generator >= generators_.size()) throw UnknownGenerator("relator uses undeclared generator");
    }
  }
}

GroupPresentation GroupPresentation::parse(std::string_view text) {
  std::string clean = strip_comments(text);
  auto bar = clean.find('|');
  if (bar == std::string::npos) throw ParseError(0, "presentation needs '|' between generators and relators");
  std::vector<std::string> generators;
  std::string_view gens(clean.data(), bar);
  std::size_t i = 0;
  while (i < gens.size()) {
    while (i < gens.size() && std::isspace(static_cast<unsigned char>(gens[i]))) ++i;
    std::size_t start = i;
    while (i < gens.size() && !std::isspace(static_cast<unsigned char>(gens[i]))) ++i;
    if (i > start) generators.emplace_back(gens.substr(start, i - start));
  }
  if (generators.empty()) throw ParseError(0, "presentation has no generators");
  for (const std::string& name : generators) {
    if (name.find_first_of("^,|") != std::string::npos)
      throw ParseError(0, "invalid generator name '" + name + "'");
  }
  std::vector<Word> relators;
  std::string_view rels = std::string_view(clean).substr(bar + 1);
  for (std::string_view part : split(rels, ',')) {
    part = trim(part);
    if (part.empty()) continue;
    relators.push_back(parse_letters(part, generators));
  }
  return GroupPresentation(std::move(generators), std::move(relators));
}

GroupPresentation GroupPresentation::klein_four() {
  return parse("a b c | a a, b b, c c, a b c");
}

Word GroupPresentation::parse_word(std::string_view text) const {
  return parse_letters(text, generators_);
}

std::string GroupPresentation::format(const Word& word) const {
  if (word.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i > 0) out.push_back(' ');
    out += generators_.at(word[i].generator);
    if (word[i].exponent < 0) out += "^-1";
  }
  return out;
}

bool GroupPresentation::is_klein_four() const {
  std::vector<std::string> sorted = generators_;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != std::vector<std::string>{"a", "b", "c"}) return false;
  // Compare relator sets by their text form under this generator order.
  std::set<std::string> mine;
  for (const Word& r : relators_) mine.insert(format(r));
  return mine == std::set<std::string>{"a a", "b b", "c c", "a b c"};
}

}  // namespace taitcw
