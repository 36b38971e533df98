#pragma once

// Whole-complex checks over enumerated minimal disks (Dehn and generalized
// Dehn properties), pieces, cell embedding, and the f(n) recursion behind
// the linear isoperimetric bound.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dehn/area.hpp"
#include "dehn/diagram.hpp"
#include "dehn/enumerate.hpp"
#include "dehn/features.hpp"
#include "dehn/group_model.hpp"
#include "dehn/presentation.hpp"

namespace dehn {

struct Violation {
  DiskDiagram diagram;
  std::string reason;
};

struct PropertyReport {
  std::string property;
  int max_area = 0;
  std::size_t scanned = 0;
  std::size_t exempt = 0;   // single cells
  std::size_t unknown = 0;  // minimality not certified
  std::size_t not_minimal = 0;
  std::vector<Violation> violations;
  bool holds() const { return violations.empty(); }
};

/// Reduced disks up to the bound, each tagged with whether it is of minimal
/// area for its boundary word.
struct MinimalCorpus {
  int max_area = 0;
  std::vector<DiskDiagram> minimal;
  std::size_t not_minimal = 0;
  std::size_t unknown = 0;
};

struct CorpusOptions {
  bool cross_check_relator_search = false;  // also run RelatorBFS on every boundary word
  const LatticeFillingBound* lattice = nullptr;
  RelatorSearchLimits limits;
};

inline MinimalCorpus minimal_corpus(const Enumeration& e, const CorpusOptions& opt = {}) {
  MinimalCorpus c;
  c.max_area = e.max_area();
  const auto disks = e.disks();
  DiagramSearch search(disks, e.max_area());
  std::optional<RelatorBFS> bfs;
  if (opt.cross_check_relator_search) bfs.emplace(e.presentation(), opt.lattice);
  for (const DiskDiagram& d : disks) {
    const Word w = boundary_path(d).word;
    AreaResult r = search.area(w);
    if (bfs) {
      AreaResult b = bfs->area(w, e.max_area(), opt.limits);
      if (!b.certified_exact || b.value != r.value) r.certified_exact = false;
    }
    if (!r.value || !r.certified_exact) {
      ++c.unknown;
    } else if (*r.value == area(d)) {
      c.minimal.push_back(d);
    } else {
      ++c.not_minimal;
    }
  }
  return c;
}

inline std::string property_name(int def) { return def == 0 ? "dehn" : "gdehn" + std::to_string(def); }

/// def 0: spur or shell (Dehn property); def 1..3: spur, shell or cutcell of
/// that definition. Single cells are exempt.
inline PropertyReport check_property(const MinimalCorpus& c, int def) {
  if (def < 0 || def > 3) throw Error("property definition must be 0..3");
  PropertyReport rep;
  rep.property = property_name(def);
  rep.max_area = c.max_area;
  rep.unknown = c.unknown;
  rep.not_minimal = c.not_minimal;
  for (const DiskDiagram& d : c.minimal) {
    ++rep.scanned;
    if (area(d) < 2) {
      ++rep.exempt;
      continue;
    }
    if (!find_spurs(d).empty() || !find_shells(d).empty()) continue;
    if (def > 0 && !find_cutcells(d, def).empty()) continue;
    rep.violations.push_back({d, def == 0 ? "no spur or shell" : "no spur, shell or def-" + std::to_string(def) + " cutcell"});
  }
  return rep;
}

inline PropertyReport check_dehn(const Presentation& p, int max_area, const CorpusOptions& opt = {}) {
  EnumerationConfig cfg;
  cfg.max_area = max_area;
  return check_property(minimal_corpus(Enumeration(p, cfg), opt), 0);
}

inline PropertyReport check_generalized_dehn(const Presentation& p, int def, int max_area,
                                             const CorpusOptions& opt = {}) {
  if (def < 1 || def > 3) throw Error("cutcell definition must be 1, 2 or 3");
  EnumerationConfig cfg;
  cfg.max_area = max_area;
  return check_property(minimal_corpus(Enumeration(p, cfg), opt), def);
}

inline PropertyReport check_cells_embed(const Presentation& p, const FreeProductModel& m) {
  PropertyReport rep;
  rep.property = "embed";
  for (const Word& r : p.relators()) {
    ++rep.scanned;
    if (!m.cell_embeds(r)) rep.violations.push_back({DiskDiagram(), "cell " + p.format(r) + " does not embed"});
  }
  return rep;
}

// ---- pieces

struct PieceSite {
  int relator = 0;
  int offset = 0;  // rotation start in r (sign +1) or in r^-1 (sign -1)
  int sign = 1;
  friend auto operator<=>(const PieceSite&, const PieceSite&) = default;
};

struct Piece {
  Word word;
  PieceSite first, second;
};

namespace detail {

struct SymmetrizedWord {
  Word word;
  PieceSite site;
};

inline std::vector<SymmetrizedWord> symmetrized_set(const Presentation& p) {
  std::vector<SymmetrizedWord> out;
  std::map<Word, bool> seen;
  for (std::size_t r = 0; r < p.relators().size(); ++r)
    for (int sign : {1, -1}) {
      Word base = sign > 0 ? p.relators()[r] : inverse(p.relators()[r]);
      for (std::size_t k = 0; k < base.size(); ++k) {
        Word w = rotate_word(base, k);
        if (seen.emplace(w, true).second) out.push_back({w, {static_cast<int>(r), static_cast<int>(k), sign}});
      }
    }
  return out;
}

}  // namespace detail

/// Maximal common prefixes of distinct words of the symmetrized relator
/// set, one entry per unordered pair.
inline std::vector<Piece> pieces(const Presentation& p) {
  auto s = detail::symmetrized_set(p);
  std::vector<Piece> out;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      const Word &u = s[i].word, &v = s[j].word;
      std::size_t l = 0;
      while (l < u.size() && l < v.size() && u[l] == v[l]) ++l;
      if (l == 0) continue;
      out.push_back({Word(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(l)), s[i].site, s[j].site});
    }
  return out;
}

/// A piece is big when it is at least half as long as the shorter of the two
/// relators it lies on.
inline bool is_big(const Presentation& p, const Piece& x) {
  std::size_t shorter = std::min(p.relators()[static_cast<std::size_t>(x.first.relator)].size(),
                                 p.relators()[static_cast<std::size_t>(x.second.relator)].size());
  return 2 * x.word.size() >= shorter;
}

inline std::optional<Piece> big_piece(const Presentation& p) {
  std::optional<Piece> best;
  for (const Piece& x : pieces(p))
    if (is_big(p, x) && (!best || x.word.size() > best->word.size())) best = x;
  return best;
}

inline bool has_big_pieces(const Presentation& p) { return big_piece(p).has_value(); }

// ---- f(n)

struct FSequence {
  int c = 1;
  std::vector<long long> values;  // f(0..N)
};

/// f(0) = 0, f(n) = 1 + max sum f(n_i) over multisets of parts 0 < n_i < n
/// with sum n_i <= n + c. Unbounded knapsack per n.
inline FSequence f_values(int c, int N) {
  if (c < 1) throw Error("c must be at least 1");
  if (N < 0) throw Error("N must be nonnegative");
  FSequence s;
  s.c = c;
  s.values.assign(static_cast<std::size_t>(N) + 1, 0);
  for (int n = 1; n <= N; ++n) {
    const int cap = n + c;
    std::vector<long long> best(static_cast<std::size_t>(cap) + 1, 0);
    for (int t = 1; t <= cap; ++t)
      for (int part = 1; part < n && part <= t; ++part)
        best[static_cast<std::size_t>(t)] =
            std::max(best[static_cast<std::size_t>(t)],
                     best[static_cast<std::size_t>(t - part)] + s.values[static_cast<std::size_t>(part)]);
    s.values[static_cast<std::size_t>(n)] = 1 + best[static_cast<std::size_t>(cap)];
  }
  return s;
}

struct PropositionReport {
  int c = 1;
  int N = 0;
  bool increments_nondecreasing = true;
  bool arithmetic_tail = true;
  long long slope = 0;  // f(c+2) - f(c+1)
  long long K = 0;      // slope - 1
  int first_bad = -1;
  bool ok() const { return increments_nondecreasing && arithmetic_tail; }
};

inline PropositionReport verify_proposition_bound(int c, int N) {
  if (N < c + 2) throw Error("N must be at least c + 2");
  FSequence s = f_values(c, N);
  PropositionReport r;
  r.c = c;
  r.N = N;
  auto f = [&](int n) { return s.values[static_cast<std::size_t>(n)]; };
  r.slope = f(c + 2) - f(c + 1);
  r.K = r.slope - 1;
  for (int n = 2; n <= N; ++n)
    if (f(n) - f(n - 1) < f(n - 1) - f(n - 2)) {
      r.increments_nondecreasing = false;
      if (r.first_bad < 0) r.first_bad = n;
    }
  for (int n = c + 2; n <= N; ++n)
    if (f(n) - f(n - 1) != r.slope) {
      r.arithmetic_tail = false;
      if (r.first_bad < 0) r.first_bad = n;
    }
  return r;
}

}  // namespace dehn
