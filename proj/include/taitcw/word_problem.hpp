#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "taitcw/k4.hpp"
#include "taitcw/presentation.hpp"

namespace taitcw {

enum class RewriteKind : std::uint8_t { InsertRelator, DeleteRelator, FreeInsert, FreeDelete };

/// For relator moves `index` selects an entry of relator_variants(); for
/// FreeInsert it is the generator inserted as g g^-1.
struct RewriteMove {
  RewriteKind kind = RewriteKind::FreeDelete;
  std::size_t position = 0;
  std::size_t index = 0;

  friend bool operator==(const RewriteMove&, const RewriteMove&) = default;
};

struct CertificateStep {
  RewriteMove move;
  Word word;
};

struct CobordismCertificate {
  Word source;
  std::vector<CertificateStep> steps;
};

/// Every cyclic rotation of every relator, then of every inverse relator,
/// without duplicates.
std::vector<Word> relator_variants(const GroupPresentation& p);

/// Throws MalformedWord when the move does not apply to `w`.
Word apply_move(const GroupPresentation& p, const Word& w, const RewriteMove& move);

/// Product in K4 of a word over the generators a, b, c (in that order).
K4Element k4_value(const Word& w);
bool words_equal_k4(const Word& w1, const Word& w2);
/// Parses both words over <a, b, c>; throws UnknownGenerator.
bool words_equal_k4(std::string_view w1, std::string_view w2);

/// 4 * max(|w1|, |w2|, longest relator).
std::size_t default_max_length(const GroupPresentation& p, const Word& w1, const Word& w2);

struct SearchStats {
  std::size_t visited = 0;
  std::size_t depth_reached = 0;
};

/// Breadth-first search over freely reduced words. One level applies one
/// relator insertion or deletion (deletions first, then insertions; variants
/// outermost, positions innermost), followed by free reduction recorded as
/// FreeDelete steps on the leftmost cancelling pair. Words longer than
/// `max_length` are never formed. Returns nullopt when w2 is not reached
/// within `max_depth` relator moves.
std::optional<CobordismCertificate> bounded_cobordism_search(const GroupPresentation& p, const Word& w1,
                                                             const Word& w2, std::size_t max_depth,
                                                             std::size_t max_length, SearchStats* stats = nullptr);

/// Applies every step and checks that the chain ends at free_reduce(target).
bool replay_certificate(const GroupPresentation& p, const CobordismCertificate& cert, const Word& target);

/// One line per step: `<move-kind>@<pos> [rel <idx>] -> <word>`.
std::string format_certificate(const GroupPresentation& p, const CobordismCertificate& cert);

const char* rewrite_name(RewriteKind kind);

}  // namespace taitcw
