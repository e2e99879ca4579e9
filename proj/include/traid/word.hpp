#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "traid/errors.hpp"

// Words over the generators t_1 .. t_{N-1} of the traid group T_N:
//
//   t_i^2     = 1              for all i
//   t_i t_j   = t_j t_i        for |i - j| > 1
//
// T_N is a linear Coxeter group with every edge label infinite, so it is
// right-angled: the only moves between words of the same element are
// square cancellations and distant commutations.  That gives a unique
// shortlex-minimal geodesic per element, computed by normal_form().
//
// Composition convention used everywhere in this library: a word reads
// left-to-right as a strand diagram, i.e. the leftmost letter acts first.
// Consequently perm_image(multiply(a, b)) == compose(perm_image(b),
// perm_image(a)) where compose(q, p) maps position x to q[p[x]].

namespace traid {

struct Word {
  int n_strands = 2;
  std::vector<int> letters;  // generator indices, each in [1, n_strands-1]

  bool operator==(const Word&) const = default;
};

/// Image of a word under T_N ->> S_N.  `images[s-1]` is the final
/// position of the strand that starts at position s (both 1-based).
struct Permutation {
  std::vector<int> images;

  bool operator==(const Permutation&) const = default;
  int size() const { return static_cast<int>(images.size()); }
  bool is_identity() const;
};

/// Identity permutation on n points.
Permutation identity_permutation(int n);

/// compose(q, p): apply p first, then q.
Permutation compose(const Permutation& q, const Permutation& p);

/// True when t_i and t_j commute in T_N (distant generators).
inline bool generators_commute(int i, int j) { return i > j + 1 || j > i + 1; }

/// Validate and build a word; letters are stored verbatim.
Word make_word(const std::vector<int>& tokens, int n_strands);

/// The unique shortlex-minimal geodesic representative.
Word normal_form(const Word& w);

/// normal_form of "a then b" (a acts first).
Word multiply(const Word& a, const Word& b);

/// Letters reversed (generators are involutions), then normalized.
Word inverse(const Word& w);

/// Word-problem equality via normal forms.
bool equals(const Word& a, const Word& b);

Permutation perm_image(const Word& w);

/// True iff the word lies in the pure traid group PT_N.
bool is_pure(const Word& w);

/// Length of the normal form.
int geodesic_length(const Word& w);

/// Co-dimension of a k-body coincidence in d dimensions: d*(k-1).
int codimension(int d, int k);

/// Verdict of the brute-force word-problem search.  Budget exhaustion is
/// reported explicitly instead of being folded into Unequal.
enum class OracleVerdict { Equal, Unequal, Inconclusive };

/// Breadth-first search from `a` over the elementary moves
///   - delete / insert an adjacent equal pair t_i t_i,
///   - swap adjacent commuting letters,
/// truncated at word length `max_length`.  Returns Equal as soon as `b`
/// is reached, Unequal when the truncated class is exhausted, and
/// Inconclusive when `node_budget` states were expanded first.
/// Validation oracle only; not for production equality.
OracleVerdict brute_force_equals(const Word& a, const Word& b, int max_length,
                                 std::size_t node_budget = 4'000'000);

// --- text form ------------------------------------------------------------
//
// Serialized form is whitespace-separated "t1 t2 t1".  The parser also
// accepts bare indices ("1 2 1") and, for N <= 10, the compact digit form
// "121".

Word parse_word(const std::string& text, int n_strands);
std::string format_word(const Word& w);

std::string format_permutation(const Permutation& p);

}  // namespace traid
