#include "traid/word.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_set>

namespace traid {

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (images[i] != i + 1) return false;
  return true;
}

Permutation identity_permutation(int n) {
  Permutation p;
  p.images.resize(n);
  for (int i = 0; i < n; ++i) p.images[i] = i + 1;
  return p;
}

Permutation compose(const Permutation& q, const Permutation& p) {
  if (q.size() != p.size())
    throw StrandMismatch("compose: permutation sizes differ");
  Permutation r;
  r.images.resize(p.size());
  for (int i = 0; i < p.size(); ++i) r.images[i] = q.images[p.images[i] - 1];
  return r;
}

Word make_word(const std::vector<int>& tokens, int n_strands) {
  if (n_strands < 2)
    throw ValidationError("make_word: n_strands must be >= 2, got " +
                          std::to_string(n_strands));
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (tokens[i] < 1 || tokens[i] > n_strands - 1)
      throw ValidationError("make_word: letter t" + std::to_string(tokens[i]) +
                            " at position " + std::to_string(i + 1) +
                            " is outside [1, " + std::to_string(n_strands - 1) +
                            "]");
  }
  return Word{n_strands, tokens};
}

namespace {

// One square-cancellation pass: for each position, slide its letter left
// past commuting letters; an equal letter met on the way cancels the pair.
bool cancel_once(std::vector<int>& ls) {
  for (std::size_t q = 1; q < ls.size(); ++q) {
    const int x = ls[q];
    for (std::size_t p = q; p-- > 0;) {
      if (ls[p] == x) {
        ls.erase(ls.begin() + static_cast<std::ptrdiff_t>(q));
        ls.erase(ls.begin() + static_cast<std::ptrdiff_t>(p));
        return true;
      }
      if (!generators_commute(ls[p], x)) break;
    }
  }
  return false;
}

}  // namespace

Word normal_form(const Word& w) {
  Word checked = make_word(w.letters, w.n_strands);
  std::vector<int> ls = std::move(checked.letters);

  while (cancel_once(ls)) {
  }

  // ls is now geodesic; geodesics of one element differ only by distant
  // commutations, so the lex-least linearization is found greedily: keep
  // extracting the smallest letter whose earlier letters all commute with
  // it.  Equal letters never commute past each other, so the choice is
  // unambiguous.
  std::vector<int> out;
  out.reserve(ls.size());
  while (!ls.empty()) {
    std::size_t best = ls.size();
    for (std::size_t p = 0; p < ls.size(); ++p) {
      bool ready = true;
      for (std::size_t r = 0; r < p; ++r) {
        if (!generators_commute(ls[r], ls[p])) {
          ready = false;
          break;
        }
      }
      if (ready && (best == ls.size() || ls[p] < ls[best])) best = p;
    }
    out.push_back(ls[best]);
    ls.erase(ls.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return Word{w.n_strands, out};
}

Word multiply(const Word& a, const Word& b) {
  if (a.n_strands != b.n_strands)
    throw StrandMismatch("multiply: words over T_" +
                         std::to_string(a.n_strands) + " and T_" +
                         std::to_string(b.n_strands));
  std::vector<int> cat = a.letters;
  cat.insert(cat.end(), b.letters.begin(), b.letters.end());
  return normal_form(Word{a.n_strands, cat});
}

Word inverse(const Word& w) {
  std::vector<int> rev(w.letters.rbegin(), w.letters.rend());
  return normal_form(Word{w.n_strands, rev});
}

bool equals(const Word& a, const Word& b) {
  if (a.n_strands != b.n_strands)
    throw StrandMismatch("equals: words over T_" +
                         std::to_string(a.n_strands) + " and T_" +
                         std::to_string(b.n_strands));
  return normal_form(a).letters == normal_form(b).letters;
}

Permutation perm_image(const Word& w) {
  make_word(w.letters, w.n_strands);
  std::vector<int> at(w.n_strands);  // at[p] = strand occupying position p+1
  for (int p = 0; p < w.n_strands; ++p) at[p] = p + 1;
  for (int letter : w.letters) std::swap(at[letter - 1], at[letter]);
  Permutation out;
  out.images.resize(w.n_strands);
  for (int p = 0; p < w.n_strands; ++p) out.images[at[p] - 1] = p + 1;
  return out;
}

bool is_pure(const Word& w) { return perm_image(w).is_identity(); }

int geodesic_length(const Word& w) {
  return static_cast<int>(normal_form(w).letters.size());
}

int codimension(int d, int k) {
  if (d < 1) throw ValidationError("codimension: d must be >= 1");
  if (k < 2) throw ValidationError("codimension: k must be >= 2");
  return d * (k - 1);
}

// --- brute-force oracle -----------------------------------------------------

namespace {

// Packed state for the BFS fast path: nibble i holds letter i (values
// 1..15), the top nibble holds length+1 so the empty word is non-zero.
using Packed = std::uint64_t;

constexpr int kMaxPackedLen = 14;

Packed pack(const std::vector<int>& ls) {
  Packed s = (static_cast<Packed>(ls.size() + 1)) << 60;
  for (std::size_t i = 0; i < ls.size(); ++i)
    s |= static_cast<Packed>(ls[i]) << (4 * i);
  return s;
}

inline int packed_len(Packed s) { return static_cast<int>(s >> 60) - 1; }
inline int packed_at(Packed s, int i) {
  return static_cast<int>((s >> (4 * i)) & 0xF);
}

inline Packed with_len(Packed body, int len) {
  return body | (static_cast<Packed>(len + 1) << 60);
}

// Open-addressing hash set of packed states (0 is never a valid state).
class PackedSet {
 public:
  explicit PackedSet(std::size_t expect) { rehash(round_up(expect * 2)); }

  // Returns true when the key was newly inserted.
  bool insert(Packed key) {
    if (2 * (count_ + 1) > slots_.size()) rehash(slots_.size() * 2);
    std::size_t i = index_of(key);
    if (slots_[i] == key) return false;
    slots_[i] = key;
    ++count_;
    return true;
  }

  bool contains(Packed key) const { return slots_[index_of(key)] == key; }
  std::size_t size() const { return count_; }

 private:
  static std::size_t round_up(std::size_t n) {
    std::size_t c = 1024;
    while (c < n) c <<= 1;
    return c;
  }
  std::size_t index_of(Packed key) const {
    std::size_t mask = slots_.size() - 1;
    std::size_t i = (key * 0x9E3779B97F4A7C15ull) >> shift_;
    while (slots_[i] != 0 && slots_[i] != key) i = (i + 1) & mask;
    return i;
  }
  void rehash(std::size_t cap) {
    std::vector<Packed> old = std::move(slots_);
    slots_.assign(cap, 0);
    shift_ = 64;
    while ((1ull << (64 - shift_)) < cap) --shift_;
    count_ = 0;
    for (Packed k : old)
      if (k != 0) {
        slots_[index_of(k)] = k;
        ++count_;
      }
  }

  std::vector<Packed> slots_;
  int shift_ = 64;
  std::size_t count_ = 0;
};

OracleVerdict bfs_packed(const std::vector<int>& a, const std::vector<int>& b,
                         int n_strands, int max_length,
                         std::size_t node_budget) {
  const Packed target = pack(b);
  const Packed start = pack(a);
  if (start == target) return OracleVerdict::Equal;

  PackedSet visited(1 << 14);
  visited.insert(start);
  std::vector<Packed> queue;
  queue.push_back(start);
  std::size_t expanded = 0;

  const int gens = n_strands - 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    if (++expanded > node_budget) return OracleVerdict::Inconclusive;
    const Packed s = queue[head];
    const int len = packed_len(s);
    const Packed body = s & ~(0xFull << 60);

    auto push = [&](Packed next) -> bool {
      if (next == target) return true;
      if (visited.insert(next)) queue.push_back(next);
      return false;
    };

    // deletions of adjacent equal pairs
    for (int i = 0; i + 1 < len; ++i) {
      if (packed_at(s, i) != packed_at(s, i + 1)) continue;
      const Packed low = body & ((i == 0) ? 0 : ((1ull << (4 * i)) - 1));
      const Packed high = (body >> (4 * (i + 2))) << (4 * i);
      if (push(with_len(low | high, len - 2))) return OracleVerdict::Equal;
    }
    // swaps of adjacent commuting letters
    for (int i = 0; i + 1 < len; ++i) {
      const int x = packed_at(s, i), y = packed_at(s, i + 1);
      if (!generators_commute(x, y)) continue;
      Packed next = body & ~(0xFFull << (4 * i));
      next |= static_cast<Packed>(y) << (4 * i);
      next |= static_cast<Packed>(x) << (4 * (i + 1));
      if (push(with_len(next, len))) return OracleVerdict::Equal;
    }
    // insertions of t_g t_g at every position
    if (len + 2 <= max_length) {
      for (int pos = 0; pos <= len; ++pos) {
        const Packed low = body & ((pos == 0) ? 0 : ((1ull << (4 * pos)) - 1));
        const Packed high = (body >> (4 * pos)) << (4 * (pos + 2));
        for (int g = 1; g <= gens; ++g) {
          const Packed pair = (static_cast<Packed>(g) | (static_cast<Packed>(g) << 4))
                              << (4 * pos);
          if (push(with_len(low | pair | high, len + 2)))
            return OracleVerdict::Equal;
        }
      }
    }
  }
  return OracleVerdict::Unequal;
}

struct VecHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) {
      h ^= static_cast<std::size_t>(x);
      h *= 1099511628211ull;
    }
    return h;
  }
};

OracleVerdict bfs_generic(const std::vector<int>& a, const std::vector<int>& b,
                          int n_strands, int max_length,
                          std::size_t node_budget) {
  if (a == b) return OracleVerdict::Equal;
  std::unordered_set<std::vector<int>, VecHash> visited{a};
  std::vector<std::vector<int>> queue{a};
  std::size_t expanded = 0;
  const int gens = n_strands - 1;

  auto push = [&](std::vector<int>&& next) -> bool {
    if (next == b) return true;
    if (visited.insert(next).second) queue.push_back(std::move(next));
    return false;
  };

  for (std::size_t head = 0; head < queue.size(); ++head) {
    if (++expanded > node_budget) return OracleVerdict::Inconclusive;
    const std::vector<int> s = queue[head];  // copy; queue may reallocate
    const int len = static_cast<int>(s.size());
    for (int i = 0; i + 1 < len; ++i) {
      if (s[i] == s[i + 1]) {
        std::vector<int> next(s);
        next.erase(next.begin() + i, next.begin() + i + 2);
        if (push(std::move(next))) return OracleVerdict::Equal;
      }
      if (generators_commute(s[i], s[i + 1])) {
        std::vector<int> next(s);
        std::swap(next[i], next[i + 1]);
        if (push(std::move(next))) return OracleVerdict::Equal;
      }
    }
    if (len + 2 <= max_length) {
      for (int pos = 0; pos <= len; ++pos) {
        for (int g = 1; g <= gens; ++g) {
          std::vector<int> next(s);
          next.insert(next.begin() + pos, {g, g});
          if (push(std::move(next))) return OracleVerdict::Equal;
        }
      }
    }
  }
  return OracleVerdict::Unequal;
}

}  // namespace

OracleVerdict brute_force_equals(const Word& a, const Word& b, int max_length,
                                 std::size_t node_budget) {
  if (a.n_strands != b.n_strands)
    throw StrandMismatch("brute_force_equals: strand counts differ");
  make_word(a.letters, a.n_strands);
  make_word(b.letters, b.n_strands);
  if (static_cast<int>(a.letters.size()) > max_length ||
      static_cast<int>(b.letters.size()) > max_length)
    throw ValidationError(
        "brute_force_equals: input words exceed max_length");

  if (a.n_strands <= 16 && max_length <= kMaxPackedLen)
    return bfs_packed(a.letters, b.letters, a.n_strands, max_length,
                      node_budget);
  return bfs_generic(a.letters, b.letters, a.n_strands, max_length,
                     node_budget);
}

// --- text form --------------------------------------------------------------

Word parse_word(const std::string& text, int n_strands) {
  std::vector<std::string> tokens;
  std::istringstream in(text);
  for (std::string tok; in >> tok;) tokens.push_back(tok);

  std::vector<int> letters;
  const bool all_digits =
      tokens.size() == 1 &&
      std::all_of(tokens[0].begin(), tokens[0].end(),
                  [](unsigned char c) { return std::isdigit(c); });
  if (all_digits && n_strands <= 10 && tokens[0].size() > 1) {
    for (char c : tokens[0]) letters.push_back(c - '0');
    return make_word(letters, n_strands);
  }

  for (const std::string& tok : tokens) {
    std::string digits = tok;
    if (!digits.empty() && (digits[0] == 't' || digits[0] == 'T'))
      digits.erase(digits.begin());
    if (digits.empty() ||
        !std::all_of(digits.begin(), digits.end(),
                     [](unsigned char c) { return std::isdigit(c); }))
      throw ValidationError("parse_word: bad token '" + tok + "'");
    letters.push_back(std::stoi(digits));
  }
  return make_word(letters, n_strands);
}

std::string format_word(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i) out += ' ';
    out += 't' + std::to_string(w.letters[i]);
  }
  return out;
}

std::string format_permutation(const Permutation& p) {
  std::string out;
  for (int i = 0; i < p.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(p.images[i]);
  }
  return out;
}

}  // namespace traid
