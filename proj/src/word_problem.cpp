#include "taitcw/word_problem.hpp"

#include <algorithm>
#include <sstream>
#include <cstdint>
#include <unordered_set>

#include "taitcw/errors.hpp"

namespace taitcw {

namespace {

bool cancels(const Letter& x, const Letter& y) { return x.generator == y.generator && x.exponent == -y.exponent; }

std::vector<Letter> splice(const std::vector<Letter>& base, std::size_t at, std::size_t erase,
                           const std::vector<Letter>& insert) {
  std::vector<Letter> out(base.begin(), base.begin() + static_cast<std::ptrdiff_t>(at));
  out.insert(out.end(), insert.begin(), insert.end());
  out.insert(out.end(), base.begin() + static_cast<std::ptrdiff_t>(at + erase), base.end());
  return out;
}

// Reduces `w` one leftmost pair at a time, recording each deletion.
Word reduce_recorded(Word w, std::vector<CertificateStep>* steps) {
  for (;;) {
    const auto& l = w.letters();
    std::size_t i = 0;
    while (i + 1 < l.size() && !cancels(l[i], l[i + 1])) ++i;
    if (i + 1 >= l.size()) return w;
    w = Word(splice(l, i, 2, {}));
    if (steps) steps->push_back({{RewriteKind::FreeDelete, i, 0}, w});
  }
}

}  // namespace

const char* rewrite_name(RewriteKind kind) {
  switch (kind) {
    case RewriteKind::InsertRelator: return "insert-relator";
    case RewriteKind::DeleteRelator: return "delete-relator";
    case RewriteKind::FreeInsert: return "free-insert";
    case RewriteKind::FreeDelete: return "free-delete";
  }
  return "?";
}

std::vector<Word> relator_variants(const GroupPresentation& p) {
  std::vector<Word> out;
  auto add_rotations = [&](const Word& r) {
    for (std::size_t s = 0; s < std::max<std::size_t>(r.size(), 1); ++s) {
      Word v = r.rotated(s);
      if (!v.empty() && std::find(out.begin(), out.end(), v) == out.end()) out.push_back(std::move(v));
    }
  };
  for (const Word& r : p.relators()) add_rotations(r);
  for (const Word& r : p.relators()) add_rotations(r.inverse());
  return out;
}

Word apply_move(const GroupPresentation& p, const Word& w, const RewriteMove& move) {
  const auto& l = w.letters();
  if (move.position > l.size()) throw MalformedWord("move position past the end of the word");
  switch (move.kind) {
    case RewriteKind::InsertRelator:
    case RewriteKind::DeleteRelator: {
      const auto variants = relator_variants(p);
      if (move.index >= variants.size()) throw MalformedWord("no relator variant " + std::to_string(move.index));
      const auto& r = variants[move.index].letters();
      if (move.kind == RewriteKind::InsertRelator) return Word(splice(l, move.position, 0, r));
      if (move.position + r.size() > l.size() ||
          !std::equal(r.begin(), r.end(), l.begin() + static_cast<std::ptrdiff_t>(move.position)))
        throw MalformedWord("relator variant " + std::to_string(move.index) + " does not occur at " +
                            std::to_string(move.position));
      return Word(splice(l, move.position, r.size(), {}));
    }
    case RewriteKind::FreeInsert: {
      if (move.index >= p.generators().size()) throw MalformedWord("no generator " + std::to_string(move.index));
      const Letter g{static_cast<std::uint32_t>(move.index), 1};
      return Word(splice(l, move.position, 0, {g, g.inverse()}));
    }
    case RewriteKind::FreeDelete:
      if (move.position + 1 >= l.size() || !cancels(l[move.position], l[move.position + 1]))
        throw MalformedWord("no cancelling pair at " + std::to_string(move.position));
      return Word(splice(l, move.position, 2, {}));
  }
  return w;
}

K4Element k4_value(const Word& w) {
  K4Element p;
  for (const Letter& l : w.letters()) {
    if (l.generator > 2) throw UnknownGenerator("K4 words use only a, b, c");
    p = p * K4Element::from_code(static_cast<std::uint8_t>(l.generator + 1));
  }
  return p;
}

bool words_equal_k4(const Word& w1, const Word& w2) { return k4_value(w1) == k4_value(w2); }

bool words_equal_k4(std::string_view w1, std::string_view w2) {
  const auto k4 = GroupPresentation::klein_four();
  return words_equal_k4(k4.parse_word(w1), k4.parse_word(w2));
}

std::size_t default_max_length(const GroupPresentation& p, const Word& w1, const Word& w2) {
  std::size_t longest = std::max(w1.size(), w2.size());
  for (const Word& r : p.relators()) longest = std::max(longest, r.size());
  return 4 * longest;
}

namespace {

// Reduced words packed `bits` bits per letter, first letter most
// significant, each letter stored as (generator * 2 + inverse) + 1.
using PackedWord = unsigned __int128;

struct PackedHash {
  std::size_t operator()(PackedWord k) const {
    std::uint64_t x = static_cast<std::uint64_t>(k) ^ (static_cast<std::uint64_t>(k >> 64) * 0x9E3779B97F4A7C15ULL);
    x ^= x >> 31;
    x *= 0xBF58476D1CE4E5B9ULL;
    x ^= x >> 29;
    return static_cast<std::size_t>(x);
  }
};

std::vector<std::uint8_t> codes_of(const Word& w) {
  std::vector<std::uint8_t> out;
  for (const Letter& l : w.letters()) out.push_back(static_cast<std::uint8_t>(l.generator * 2 + (l.exponent < 0 ? 1 : 0)));
  return out;
}

}  // namespace

std::optional<CobordismCertificate> bounded_cobordism_search(const GroupPresentation& p, const Word& w1,
                                                             const Word& w2, std::size_t max_depth,
                                                             std::size_t max_length, SearchStats* stats) {
  for (const Word* w : {&w1, &w2}) {
    for (const Letter& l : w->letters()) {
      if (l.generator >= p.generators().size()) throw UnknownGenerator("letter outside the presentation");
    }
  }
  CobordismCertificate cert;
  cert.source = free_reduce(w1);
  const Word target = free_reduce(w2);

  int bits = 1;
  while ((std::size_t{1} << bits) <= 2 * p.generators().size()) ++bits;
  const std::size_t longest = std::max({max_length, cert.source.size(), target.size()});
  if (longest * static_cast<std::size_t>(bits) > 128) {
    throw CapacityExceeded("words of length " + std::to_string(longest) + " over " +
                           std::to_string(p.generators().size()) + " generators exceed the packed search key");
  }
  auto pack = [&](const std::vector<std::uint8_t>& codes) {
    PackedWord key = 0;
    for (std::uint8_t c : codes) key = (key << bits) | (c + 1u);
    return key;
  };
  const PackedWord letter_mask = (PackedWord{1} << bits) - 1;
  auto unpack = [&](PackedWord key, std::vector<std::uint8_t>& codes) {
    codes.clear();
    for (; key != 0; key >>= bits) codes.push_back(static_cast<std::uint8_t>((key & letter_mask) - 1));
    std::reverse(codes.begin(), codes.end());
  };

  std::vector<std::vector<std::uint8_t>> variants;
  for (const Word& v : relator_variants(p)) variants.push_back(codes_of(v));
  const PackedWord target_key = pack(codes_of(target));

  struct Node {
    PackedWord key;
    std::size_t parent;
    RewriteMove move;
  };
  std::vector<Node> nodes{{pack(codes_of(cert.source)), 0, {}}};
  std::unordered_set<PackedWord, PackedHash> seen{nodes.front().key};
  auto report = [&](std::size_t depth) {
    if (stats) *stats = {nodes.size(), depth};
  };

  auto finish = [&](std::size_t hit) {
    std::vector<std::size_t> chain;
    for (std::size_t at = hit; at != 0; at = nodes[at].parent) chain.push_back(at);
    Word current = cert.source;
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
      const RewriteMove& move = nodes[*it].move;
      current = apply_move(p, current, move);
      cert.steps.push_back({move, current});
      current = reduce_recorded(current, &cert.steps);
    }
    return cert;
  };

  if (nodes.front().key == target_key) {
    report(0);
    return cert;
  }
  std::vector<std::uint8_t> cur, stack;
  std::vector<PackedWord> prefix;
  // Builds cur[0, cut) + insert + cur[resume, end) and reduces it on the fly.
  auto build = [&](std::size_t cut, std::size_t resume, const std::vector<std::uint8_t>& insert) {
    stack.assign(cur.begin(), cur.begin() + static_cast<std::ptrdiff_t>(cut));
    PackedWord key = prefix[cut];
    auto push = [&](std::uint8_t c) {
      if (!stack.empty() && stack.back() == (c ^ 1)) {
        stack.pop_back();
        key >>= bits;
      } else {
        stack.push_back(c);
        key = (key << bits) | (c + 1u);
      }
    };
    for (std::uint8_t c : insert) push(c);
    for (std::size_t i = resume; i < cur.size(); ++i) push(cur[i]);
    return key;
  };
  static const std::vector<std::uint8_t> nothing;

  std::size_t level_begin = 0, level_end = 1;
  for (std::size_t depth = 1; depth <= max_depth && level_begin < level_end; ++depth) {
    // The last level is only compared against the target, never stored.
    const bool last = depth == max_depth;
    for (std::size_t at = level_begin; at < level_end; ++at) {
      unpack(nodes[at].key, cur);
      prefix.assign(cur.size() + 1, 0);
      for (std::size_t i = 0; i < cur.size(); ++i) prefix[i + 1] = (prefix[i] << bits) | (cur[i] + 1u);
      auto visit = [&](const RewriteMove& move, PackedWord key) -> bool {
        if (last) {
          if (key != target_key) return false;
          nodes.push_back({key, at, move});
          return true;
        }
        if (!seen.insert(key).second) return false;
        nodes.push_back({key, at, move});
        return key == target_key;
      };
      for (std::size_t v = 0; v < variants.size(); ++v) {
        const auto& r = variants[v];
        for (std::size_t i = 0; i + r.size() <= cur.size(); ++i) {
          if (!std::equal(r.begin(), r.end(), cur.begin() + static_cast<std::ptrdiff_t>(i))) continue;
          if (visit({RewriteKind::DeleteRelator, i, v}, build(i, i + r.size(), nothing))) {
            report(depth);
            return finish(nodes.size() - 1);
          }
        }
      }
      for (std::size_t v = 0; v < variants.size(); ++v) {
        const auto& r = variants[v];
        if (cur.size() + r.size() > max_length) continue;
        for (std::size_t i = 0; i <= cur.size(); ++i) {
          if (visit({RewriteKind::InsertRelator, i, v}, build(i, i, r))) {
            report(depth);
            return finish(nodes.size() - 1);
          }
        }
      }
    }
    level_begin = level_end;
    level_end = nodes.size();
    report(depth);
  }
  return std::nullopt;
}

bool replay_certificate(const GroupPresentation& p, const CobordismCertificate& cert, const Word& target) {
  Word current = cert.source;
  try {
    for (const auto& step : cert.steps) {
      current = apply_move(p, current, step.move);
      if (current != step.word) return false;
    }
  } catch (const MalformedWord&) {
    return false;
  }
  return current == free_reduce(target);
}

std::string format_certificate(const GroupPresentation& p, const CobordismCertificate& cert) {
  std::ostringstream out;
  for (const auto& step : cert.steps) {
    out << rewrite_name(step.move.kind) << '@' << step.move.position;
    if (step.move.kind == RewriteKind::InsertRelator || step.move.kind == RewriteKind::DeleteRelator)
      out << " rel " << step.move.index;
    out << " -> " << p.format(step.word) << '\n';
  }
  return out.str();
}

}  // namespace taitcw
