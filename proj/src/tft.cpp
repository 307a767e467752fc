#include "taitcw/tft.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <type_traits>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "taitcw/errors.hpp"
#include "taitcw/k4.hpp"

namespace taitcw {

namespace {

StateKey shl(StateKey k, int bits) { return bits >= 128 ? 0 : k << bits; }
StateKey shr(StateKey k, int bits) { return bits >= 128 ? 0 : k >> bits; }
StateKey low_bits(StateKey k, int bits) { return bits >= 128 ? k : k & ((StateKey(1) << bits) - 1); }

void check_width(int width) {
  if (width < 0) throw WidthMismatch("negative width");
  if (width > kMaxStateWidth)
    throw CapacityExceeded("cross-section width " + std::to_string(width) + " exceeds " +
                           std::to_string(kMaxStateWidth) + " strands");
}

std::vector<StateVector::Term> combine(std::vector<StateVector::Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i + 1;
    if (out != i) terms[out] = std::move(terms[i]);
    for (; j < terms.size() && terms[j].first == terms[out].first; ++j) terms[out].second += terms[j].second;
    if (terms[out].second != 0) ++out;
    i = j;
  }
  terms.resize(out);
  return terms;
}

}  // namespace

std::string key_to_colors(StateKey key, int width) {
  std::string s(static_cast<std::size_t>(width), '?');
  for (int i = 0; i < width; ++i) {
    const auto code = static_cast<unsigned>(shr(key, 2 * (width - 1 - i)) & 3);
    s[static_cast<std::size_t>(i)] = "?abc"[code];
  }
  return s;
}

StateKey colors_to_key(std::string_view colors) {
  if (static_cast<int>(colors.size()) > kMaxStateWidth)
    throw CapacityExceeded("color string longer than " + std::to_string(kMaxStateWidth));
  StateKey key = 0;
  for (char ch : colors) {
    auto color = color_from_char(ch);
    if (!color) throw ParseError(0, std::string("bad color '") + ch + "'");
    key = (key << 2) | static_cast<unsigned>(*color);
  }
  return key;
}

StateVector::StateVector(int width) : width_(width) { check_width(width); }

StateVector StateVector::unit() {
  StateVector s(0);
  s.terms_.push_back({0, 1});
  return s;
}

StateVector StateVector::basis(std::string_view colors) {
  StateVector s(static_cast<int>(colors.size()));
  s.terms_.push_back({colors_to_key(colors), 1});
  return s;
}

StateVector StateVector::from_terms(int width, std::vector<Term> terms) {
  StateVector s(width);
  s.terms_ = combine(std::move(terms));
  return s;
}

Count StateVector::coefficient(std::string_view colors) const {
  if (static_cast<int>(colors.size()) != width_) return 0;
  const StateKey key = colors_to_key(colors);
  auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                             [](const Term& t, StateKey k) { return t.first < k; });
  return it != terms_.end() && it->first == key ? it->second : Count(0);
}

std::map<std::string, Count> StateVector::to_map() const {
  std::map<std::string, Count> out;
  for (const auto& [key, value] : terms_) out.emplace(key_to_colors(key, width_), value);
  return out;
}

std::string StateVector::serialize() const {
  std::ostringstream out;
  for (const auto& [key, value] : terms_) out << key_to_colors(key, width_) << ' ' << value << '\n';
  return out.str();
}

namespace {

struct Overflow {};

void add_to(Count& a, const Count& b) { a += b; }
void add_to(std::uint64_t& a, std::uint64_t b) {
  if (__builtin_add_overflow(a, b, &a)) throw Overflow{};
}

// Terms of a state as parallel arrays, sorted by key.
template <typename C>
struct Packed {
  int width = 0;
  std::vector<StateKey> keys;
  std::vector<C> vals;
};

// A generator rewrites `in_digits` colors at its position into `out_digits`
// colors. Each output pattern lists the input patterns that feed it; the
// patterns are 2-bit color codes packed like keys.
struct LocalRule {
  int in_digits;
  int out_digits;
  std::vector<std::pair<unsigned, std::vector<unsigned>>> outputs;
};

const LocalRule& rule_for(GenKind kind) {
  static const LocalRule cup{0, 2, {{5, {0}}, {10, {0}}, {15, {0}}}};
  static const LocalRule cap{2, 0, {{0, {5, 10, 15}}}};
  static const LocalRule merge{2, 1, {{1, {11, 14}}, {2, {7, 13}}, {3, {6, 9}}}};
  static const LocalRule split{1, 2, {{6, {3}}, {7, {2}}, {9, {3}}, {11, {1}}, {13, {2}}, {14, {1}}}};
  switch (kind) {
    case GenKind::Cup: return cup;
    case GenKind::Cap: return cap;
    case GenKind::Merge: return merge;
    case GenKind::Split: return split;
  }
  return cup;
}

// Keys stay sorted because the rewritten digits sit between an untouched
// head and an untouched tail: within one head, each input pattern is a
// contiguous run sorted by tail, so every output pattern is a merge of at
// most three runs.
template <typename C>
Packed<C> step(const Packed<C>& s, const Generator& gen) {
  const int w = s.width;
  check_position(gen, w);
  const LocalRule& rule = rule_for(gen.kind);
  Packed<C> out;
  out.width = w + width_delta(gen.kind);
  check_width(out.width);
  const int tail = 2 * (w - gen.pos - rule.in_digits);
  const int head_shift = tail + 2 * rule.in_digits;
  const int out_shift = tail + 2 * rule.out_digits;
  const unsigned mask = (1u << (2 * rule.in_digits)) - 1;
  const std::size_t n = s.keys.size();
  const std::size_t expect = gen.kind == GenKind::Cup ? 3 * n : gen.kind == GenKind::Split ? 2 * n : n;
  out.keys.reserve(expect);
  out.vals.reserve(expect);

  std::size_t begin[16], end[16];
  for (std::size_t i = 0; i < n;) {
    const StateKey head = shr(s.keys[i], head_shift);
    std::fill(std::begin(begin), std::end(begin), 0);
    std::fill(std::begin(end), std::end(end), 0);
    std::size_t j = i;
    while (j < n && shr(s.keys[j], head_shift) == head) {
      const auto local = static_cast<unsigned>(shr(s.keys[j], tail)) & mask;
      std::size_t k = j + 1;
      while (k < n && shr(s.keys[k], head_shift) == head && (static_cast<unsigned>(shr(s.keys[k], tail)) & mask) == local)
        ++k;
      begin[local] = j;
      end[local] = k;
      j = k;
    }
    const StateKey head_bits = shl(head, out_shift);
    for (const auto& [pattern, sources] : rule.outputs) {
      const StateKey prefix = head_bits | shl(StateKey(pattern), tail);
      std::size_t cur[3], stop[3];
      int runs = 0;
      for (unsigned src : sources) {
        if (begin[src] < end[src]) {
          cur[runs] = begin[src];
          stop[runs++] = end[src];
        }
      }
      if (runs == 1) {
        for (std::size_t k = cur[0]; k < stop[0]; ++k) {
          out.keys.push_back(prefix | low_bits(s.keys[k], tail));
          out.vals.push_back(s.vals[k]);
        }
        continue;
      }
      for (;;) {
        bool any = false;
        StateKey least = 0;
        for (int r = 0; r < runs; ++r) {
          if (cur[r] == stop[r]) continue;
          const StateKey rest = low_bits(s.keys[cur[r]], tail);
          if (!any || rest < least) least = rest;
          any = true;
        }
        if (!any) break;
        C sum{};
        for (int r = 0; r < runs; ++r) {
          if (cur[r] != stop[r] && low_bits(s.keys[cur[r]], tail) == least) add_to(sum, s.vals[cur[r]++]);
        }
        out.keys.push_back(prefix | least);
        out.vals.push_back(std::move(sum));
      }
    }
    i = j;
  }
  return out;
}

template <typename C>
Packed<C> pack(const StateVector& s) {
  Packed<C> p;
  p.width = s.width();
  for (const auto& [key, value] : s.terms()) {
    p.keys.push_back(key);
    if constexpr (std::is_same_v<C, Count>) {
      p.vals.push_back(value);
    } else {
      if (value > std::numeric_limits<C>::max()) throw Overflow{};
      p.vals.push_back(static_cast<C>(value));
    }
  }
  return p;
}

template <typename C>
StateVector unpack(const Packed<C>& p) {
  std::vector<StateVector::Term> terms;
  terms.reserve(p.keys.size());
  for (std::size_t i = 0; i < p.keys.size(); ++i) terms.push_back({p.keys[i], Count(p.vals[i])});
  return StateVector::from_terms(p.width, std::move(terms));
}

template <typename C>
StateVector run_word(const MorphismWord& w, const StateVector& input, EvalStats& stats) {
  Packed<C> s = pack<C>(input);
  stats = {s.width, s.keys.size()};
  for (const auto& gen : w.layers) {
    s = step(s, gen);
    stats.peak_width = std::max(stats.peak_width, s.width);
    stats.peak_support = std::max(stats.peak_support, s.keys.size());
  }
  return unpack(s);
}

}  // namespace

StateVector apply_generator(const StateVector& s, const Generator& gen) {
  return unpack(step(pack<Count>(s), gen));
}

StateVector evaluate_state(const MorphismWord& w, const StateVector& input, EvalStats* stats) {
  if (input.width() != w.input_width) {
    throw WidthMismatch("input state has width " + std::to_string(input.width()) + ", word expects " +
                        std::to_string(w.input_width));
  }
  w.widths();
  EvalStats local;
  StateVector result;
  try {
    result = run_word<std::uint64_t>(w, input, local);
  } catch (const Overflow&) {
    result = run_word<Count>(w, input, local);
  }
  if (stats) *stats = local;
  return result;
}

Count evaluate_closed(const MorphismWord& w, EvalStats* stats) {
  if (w.input_width != 0 || w.output_width != 0) {
    throw NotClosed("word has boundary widths " + std::to_string(w.input_width) + " -> " +
                    std::to_string(w.output_width));
  }
  const StateVector s = evaluate_state(w, StateVector::unit(), stats);
  return s.is_zero() ? Count(0) : s.terms().front().second;
}

void CountMatrix::add(const std::string& row, const std::string& col, const Count& value) {
  if (value == 0) return;
  auto [it, inserted] = entries_.try_emplace({row, col}, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) entries_.erase(it);
  }
}

Count CountMatrix::at(const std::string& row, const std::string& col) const {
  auto it = entries_.find({row, col});
  return it == entries_.end() ? Count(0) : it->second;
}

CountMatrix CountMatrix::operator*(const CountMatrix& right) const {
  if (input_width_ != right.output_width_) {
    throw WidthMismatch("cannot compose a matrix with input width " + std::to_string(input_width_) +
                        " after one with output width " + std::to_string(right.output_width_));
  }
  std::map<std::string, std::vector<std::pair<std::string, const Count*>>> by_row;
  for (const auto& [index, value] : right.entries_) by_row[index.first].push_back({index.second, &value});
  CountMatrix out(output_width_, right.input_width_);
  for (const auto& [index, value] : entries_) {
    auto it = by_row.find(index.second);
    if (it == by_row.end()) continue;
    for (const auto& [col, other] : it->second) out.add(index.first, col, value * *other);
  }
  return out;
}

std::string CountMatrix::serialize() const {
  std::ostringstream out;
  for (const auto& [index, value] : entries_) {
    out << (index.first.empty() ? "-" : index.first) << ' ' << (index.second.empty() ? "-" : index.second)
        << ' ' << value << '\n';
  }
  return out.str();
}

std::vector<std::string> all_color_strings(int width) {
  std::vector<std::string> out{""};
  for (int i = 0; i < width; ++i) {
    std::vector<std::string> next;
    next.reserve(out.size() * 3);
    for (const auto& s : out) {
      for (char ch : {'a', 'b', 'c'}) next.push_back(s + ch);
    }
    out = std::move(next);
  }
  return out;
}

CountMatrix evaluate_matrix(const MorphismWord& w, unsigned threads) {
  w.widths();
  const auto columns = all_color_strings(w.input_width);
  std::vector<StateVector> results(columns.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, columns.size())));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    try {
      for (std::size_t j; (j = next.fetch_add(1)) < columns.size();)
        results[j] = evaluate_state(w, StateVector::basis(columns[j]));
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next = columns.size();
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  CountMatrix m(w.output_width, w.input_width);
  for (std::size_t j = 0; j < columns.size(); ++j) {
    for (const auto& [key, value] : results[j].terms()) m.add(key_to_colors(key, w.output_width), columns[j], value);
  }
  return m;
}

}  // namespace taitcw
