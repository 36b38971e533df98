#pragma once

// Words over a signed generator alphabet: free and cyclic reduction,
// canonical cyclic representatives, and the text format used by the CLI.

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dehn {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : Error {
  using Error::Error;
};

/// A generator index together with an exponent sign (+1 or -1).
struct Letter {
  int gen = 0;
  int sign = 1;

  constexpr Letter inverse() const { return {gen, -sign}; }

  /// Generator order first, positive before negative.
  constexpr int order_key() const { return 2 * gen + (sign < 0 ? 1 : 0); }

  friend constexpr bool operator==(Letter a, Letter b) = default;
  friend constexpr std::strong_ordering operator<=>(Letter a, Letter b) {
    return a.order_key() <=> b.order_key();
  }
};

using Word = std::vector<Letter>;

inline Word inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverse());
  return out;
}

inline Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

inline Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (Letter x : w) {
    if (!out.empty() && out.back() == x.inverse())
      out.pop_back();
    else
      out.push_back(x);
  }
  return out;
}

inline bool is_freely_reduced(const Word& w) {
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i] == w[i - 1].inverse()) return false;
  return true;
}

inline bool is_cyclically_reduced(const Word& w) {
  return is_freely_reduced(w) && (w.size() < 2 || w.front() != w.back().inverse());
}

/// Rotation of `w` starting at position `k`.
inline Word rotate_word(const Word& w, std::size_t k) {
  if (w.empty()) return w;
  Word out;
  out.reserve(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out.push_back(w[(k + i) % w.size()]);
  return out;
}

/// Index of the lexicographically least rotation. Words here are short, so
/// the quadratic scan is fine.
inline std::size_t least_rotation(const Word& w) {
  const std::size_t n = w.size();
  std::size_t best = 0;
  for (std::size_t k = 1; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      Letter a = w[(k + i) % n], b = w[(best + i) % n];
      if (a == b) continue;
      if (a < b) best = k;
      break;
    }
  }
  return best;
}

/// A word considered up to rotation; always stores the least rotation.
class CyclicWord {
 public:
  CyclicWord() = default;
  explicit CyclicWord(const Word& w) : letters_(rotate_word(w, least_rotation(w))) {}

  const Word& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  CyclicWord inverse() const { return CyclicWord(dehn::inverse(letters_)); }

  /// Representative that is also invariant under inversion.
  CyclicWord unoriented() const {
    CyclicWord inv = inverse();
    return inv.letters_ < letters_ ? inv : *this;
  }

  friend bool operator==(const CyclicWord&, const CyclicWord&) = default;
  friend auto operator<=>(const CyclicWord& a, const CyclicWord& b) {
    return std::lexicographical_compare_three_way(a.letters_.begin(), a.letters_.end(),
                                                  b.letters_.begin(), b.letters_.end());
  }

 private:
  Word letters_;
};

struct CyclicReduction {
  Word core;        // cyclically reduced
  Word conjugator;  // free_reduce(w) == conjugator * core * conjugator^-1
};

inline CyclicReduction cyclic_reduce(const Word& w) {
  Word r = free_reduce(w);
  std::size_t lo = 0, hi = r.size();
  while (hi - lo >= 2 && r[lo] == r[hi - 1].inverse()) {
    ++lo;
    --hi;
  }
  return {Word(r.begin() + static_cast<long>(lo), r.begin() + static_cast<long>(hi)),
          Word(r.begin(), r.begin() + static_cast<long>(lo))};
}

inline Word cyclic_core(const Word& w) { return cyclic_reduce(w).core; }

/// All distinct rotations of w and of w^-1.
inline std::vector<Word> symmetrized(const Word& w) {
  std::vector<Word> out;
  for (const Word& base : {w, inverse(w)})
    for (std::size_t k = 0; k < base.size(); ++k) {
      Word r = rotate_word(base, k);
      if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(std::move(r));
    }
  return out;
}

/// Generator names plus the text format for words.
///
/// Inverses are written either with a leading capital (`A1` for `a1^-1`) or
/// with an `^-1` suffix. Whitespace between letters is ignored.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
    for (std::size_t i = 0; i < names_.size(); ++i) {
      const auto& n = names_[i];
      if (n.empty()) throw ParseError("empty generator name");
      if (!std::islower(static_cast<unsigned char>(n[0])))
        throw ParseError("generator names must start with a lower-case letter: " + n);
      for (std::size_t j = 0; j < i; ++j)
        if (names_[j] == n) throw ParseError("duplicate generator: " + n);
    }
  }

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int gen) const { return names_.at(static_cast<std::size_t>(gen)); }

  int find(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return static_cast<int>(i);
    return -1;
  }

  Word parse(std::string_view text) const {
    Word out;
    std::size_t i = 0;
    while (i < text.size()) {
      if (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == '*' || text[i] == '.') {
        ++i;
        continue;
      }
      if (text[i] == '1' && (i + 1 == text.size() || !std::isalnum(static_cast<unsigned char>(text[i + 1])))) {
        ++i;  // "1" denotes the empty word
        continue;
      }
      bool upper = std::isupper(static_cast<unsigned char>(text[i]));
      // longest generator name matching here
      int best = -1;
      std::size_t best_len = 0;
      for (std::size_t g = 0; g < names_.size(); ++g) {
        const auto& n = names_[g];
        if (n.size() > text.size() - i || n.size() <= best_len) continue;
        bool ok = true;
        for (std::size_t k = 0; k < n.size(); ++k) {
          char c = text[i + k];
          if (k == 0 && upper) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
          if (c != n[k]) {
            ok = false;
            break;
          }
        }
        if (ok) {
          best = static_cast<int>(g);
          best_len = n.size();
        }
      }
      if (best < 0) throw ParseError("unknown generator at '" + std::string(text.substr(i)) + "'");
      i += best_len;
      int sign = upper ? -1 : 1;
      if (text.substr(i, 3) == "^-1") {
        sign = -sign;
        i += 3;
      } else if (text.substr(i, 2) == "^1") {
        i += 2;
      }
      out.push_back({best, sign});
    }
    return out;
  }

  /// Compact form with capitals for inverses, e.g. `a1b1A1B1`.
  std::string format(const Word& w) const {
    if (w.empty()) return "1";
    std::string s;
    for (Letter x : w) {
      std::string n = name(x.gen);
      if (x.sign < 0) n[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(n[0])));
      s += n;
    }
    return s;
  }

  /// Single letter in `^-1` form, used for JSON labels.
  std::string format_letter(Letter x) const {
    return x.sign < 0 ? name(x.gen) + "^-1" : name(x.gen);
  }

  Letter parse_letter(std::string_view text) const {
    Word w = parse(text);
    if (w.size() != 1) throw ParseError("expected a single letter: " + std::string(text));
    return w[0];
  }

 private:
  std::vector<std::string> names_;
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (Letter x : w) {
      h ^= static_cast<std::size_t>(x.order_key() + 1);
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace dehn
