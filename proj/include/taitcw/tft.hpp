#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "taitcw/slicer.hpp"

namespace taitcw {

using Count = boost::multiprecision::cpp_int;

/// Color string packed two bits per strand (a=1, b=2, c=3), strand 0 in the
/// most significant position, so numeric order is lexicographic order.
using StateKey = unsigned __int128;

inline constexpr int kMaxStateWidth = 64;

std::string key_to_colors(StateKey key, int width);
/// Throws ParseError on characters other than a, b, c.
StateKey colors_to_key(std::string_view colors);

/// Sparse vector over color strings of a fixed width with positive integer
/// coefficients; terms are kept sorted by key with no zero entries.
class StateVector {
 public:
  using Term = std::pair<StateKey, Count>;

  StateVector() = default;
  /// Zero vector. Throws CapacityExceeded beyond kMaxStateWidth.
  explicit StateVector(int width);
  /// The width-0 vector with the empty string at coefficient 1.
  static StateVector unit();
  static StateVector basis(std::string_view colors);
  /// Takes ownership of terms, sorting and combining duplicates and
  /// dropping zeros.
  static StateVector from_terms(int width, std::vector<Term> terms);

  int width() const { return width_; }
  std::size_t support() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }

  Count coefficient(std::string_view colors) const;
  std::map<std::string, Count> to_map() const;
  /// Lines `<colors> <coefficient>` in lexicographic order.
  std::string serialize() const;

  friend bool operator==(const StateVector&, const StateVector&) = default;

 private:
  int width_ = 0;
  std::vector<Term> terms_;
};

/// Throws InvalidPosition.
StateVector apply_generator(const StateVector& s, const Generator& gen);

struct EvalStats {
  int peak_width = 0;
  std::size_t peak_support = 0;
};

/// Throws WidthMismatch when the input width differs from the word's.
StateVector evaluate_state(const MorphismWord& w, const StateVector& input, EvalStats* stats = nullptr);

/// Throws NotClosed unless both boundary widths are 0.
Count evaluate_closed(const MorphismWord& w, EvalStats* stats = nullptr);

/// Sparse matrix of boundary-conditioned counts: entry (output colors, input
/// colors).
class CountMatrix {
 public:
  CountMatrix() = default;
  CountMatrix(int output_width, int input_width) : output_width_(output_width), input_width_(input_width) {}

  int output_width() const { return output_width_; }
  int input_width() const { return input_width_; }
  const std::map<std::pair<std::string, std::string>, Count>& entries() const { return entries_; }

  /// Adds `value` at (row, col); zero sums are removed.
  void add(const std::string& row, const std::string& col, const Count& value);
  Count at(const std::string& row, const std::string& col) const;

  /// Matrix product `*this · right`. Throws WidthMismatch.
  CountMatrix operator*(const CountMatrix& right) const;

  /// Lines `<output colors> <input colors> <value>`, sorted; an empty color
  /// string prints as `-`.
  std::string serialize() const;

  friend bool operator==(const CountMatrix&, const CountMatrix&) = default;

 private:
  int output_width_ = 0;
  int input_width_ = 0;
  std::map<std::pair<std::string, std::string>, Count> entries_;
};

/// One column per input basis string, split across `threads` workers
/// (0 = hardware concurrency).
CountMatrix evaluate_matrix(const MorphismWord& w, unsigned threads = 1);

/// All color strings of `width`, lexicographic.
std::vector<std::string> all_color_strings(int width);

}  // namespace taitcw
