#pragma once

#include <cstdint>
#include <optional>
#include <span>

namespace taitcw {

/// Element of the Klein four-group, stored as Z2 x Z2 bits (z1, z2):
/// 1 = (0,0), a = (1,0), b = (0,1), c = (1,1). The group law is XOR.
class K4Element {
 public:
  constexpr K4Element() = default;

  static constexpr K4Element from_bits(bool z1, bool z2) {
    return K4Element(static_cast<std::uint8_t>((z1 ? 1 : 0) | (z2 ? 2 : 0)));
  }
  /// `code` is z1 | (z2 << 1), i.e. 0..3.
  static constexpr K4Element from_code(std::uint8_t code) { return K4Element(code & 3u); }

  static constexpr K4Element identity() { return K4Element(0); }
  static constexpr K4Element a() { return K4Element(1); }
  static constexpr K4Element b() { return K4Element(2); }
  static constexpr K4Element c() { return K4Element(3); }

  constexpr bool z1() const { return (bits_ & 1u) != 0; }
  constexpr bool z2() const { return (bits_ & 2u) != 0; }
  constexpr std::uint8_t code() const { return bits_; }
  constexpr bool is_identity() const { return bits_ == 0; }

  constexpr K4Element operator*(K4Element other) const {
    return K4Element(static_cast<std::uint8_t>(bits_ ^ other.bits_));
  }

  /// '1', 'a', 'b' or 'c'.
  char symbol() const;
  static std::optional<K4Element> from_symbol(char symbol);

  friend constexpr bool operator==(K4Element, K4Element) = default;

 private:
  constexpr explicit K4Element(std::uint8_t bits) : bits_(bits) {}

  std::uint8_t bits_ = 0;
};

K4Element k4_mul(K4Element x, K4Element y);

/// Left fold of k4_mul starting at the identity.
K4Element k4_word_product(std::span<const K4Element> word);

/// Edge color of a Tait coloring. The numeric value is the K4 code of the
/// corresponding non-identity element, so the product of colors is an XOR.
enum class Color : std::uint8_t { a = 1, b = 2, c = 3 };

inline constexpr Color kColors[3] = {Color::a, Color::b, Color::c};

constexpr K4Element to_k4(Color color) {
  return K4Element::from_code(static_cast<std::uint8_t>(color));
}

/// The color different from both `x` and `y` (requires x != y).
constexpr Color third_color(Color x, Color y) {
  return static_cast<Color>(static_cast<std::uint8_t>(x) ^ static_cast<std::uint8_t>(y));
}

char color_char(Color color);
std::optional<Color> color_from_char(char ch);

}  // namespace taitcw
