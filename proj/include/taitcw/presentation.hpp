#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace taitcw {

struct Letter {
  std::uint32_t generator = 0;
  int exponent = 1;  // +1 or -1

  Letter inverse() const { return {generator, -exponent}; }
  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// A word in the free group on a presentation's generators. Exponents are
/// kept explicit even for involutive generators.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }

  Word inverse() const;
  /// Cyclic rotation starting at letter `shift`.
  Word rotated(std::size_t shift) const;
  Word concatenated(const Word& tail) const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

/// Deletes adjacent g g^-1 pairs until none remain.
Word free_reduce(const Word& word);

class GroupPresentation {
 public:
  GroupPresentation(std::vector<std::string> generators, std::vector<Word> relators);

  /// Parses `<gens separated by spaces> | <relators separated by commas>`.
  /// Letters are generator names optionally followed by `^-1`; whitespace
  /// between letters is optional.
  static GroupPresentation parse(std::string_view text);

  /// The presentation <a, b, c | a^2, b^2, c^2, abc>.
  static GroupPresentation klein_four();

  const std::vector<std::string>& generators() const { return generators_; }
  const std::vector<Word>& relators() const { return relators_; }

  /// Parses a word over this presentation's generators. `1` and the empty
  /// string denote the identity. Throws UnknownGenerator.
  Word parse_word(std::string_view text) const;
  std::string format(const Word& word) const;

  bool is_klein_four() const;

 private:
  std::vector<std::string> generators_;
  std::vector<Word> relators_;
};

}  // namespace taitcw
