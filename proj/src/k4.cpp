#include "taitcw/k4.hpp"

namespace taitcw {

char K4Element::symbol() const {
  static constexpr char kSymbols[4] = {'1', 'a', 'b', 'c'};
  return kSymbols[bits_];
}

std::optional<K4Element> K4Element::from_symbol(char symbol) {
  switch (symbol) {
    case '1': return identity();
    case 'a': return a();
    case 'b': return b();
    case 'c': return c();
    default: return std::nullopt;
  }
}

K4Element k4_mul(K4Element x, K4Element y) { return x * y; }

K4Element k4_word_product(std::span<const K4Element> word) {
  K4Element acc = K4Element::identity();
  for (K4Element x : word) acc = acc * x;
  return acc;
}

char color_char(Color color) { return to_k4(color).symbol(); }

std::optional<Color> color_from_char(char ch) {
  switch (ch) {
    case 'a': return Color::a;
    case 'b': return Color::b;
    case 'c': return Color::c;
    default: return std::nullopt;
  }
}

}  // namespace taitcw
