#pragma once

// Minimal-area oracles. DiagramSearch looks boundary words up among
// enumerated disks and peels leaf disks off at cut vertices; RelatorBFS is an iterative
// deepening search over relator applications on cyclic words.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "dehn/diagram.hpp"
#include "dehn/enumerate.hpp"
#include "dehn/lattice_bound.hpp"
#include "dehn/presentation.hpp"

namespace dehn {

enum class AreaMethod { DiagramSearch, RelatorBFS };

inline std::string to_string(AreaMethod m) { return m == AreaMethod::DiagramSearch ? "DiagramSearch" : "RelatorBFS"; }

struct AreaResult {
  std::optional<int> value;
  bool certified_exact = false;
  AreaMethod method = AreaMethod::RelatorBFS;
  int bound = 0;
  bool exceeds_bound = false;  // certified: no filling of area <= bound
  std::size_t nodes = 0;
};

/// Area lookup over all reduced disks of area <= the enumeration bound.
class DiagramSearch {
 public:
  explicit DiagramSearch(const Enumeration& e) : bound_(e.max_area()) {
    for (const DiskDiagram& d : e.disks()) add(d);
  }
  DiagramSearch(const std::vector<DiskDiagram>& disks, int bound) : bound_(bound) {
    for (const DiskDiagram& d : disks) add(d);
  }

  int bound() const { return bound_; }

  AreaResult area(const Word& w) {
    AreaResult r;
    r.method = AreaMethod::DiagramSearch;
    r.bound = bound_;
    r.value = solve(w);
    r.certified_exact = r.value.has_value();
    r.exceeds_bound = !r.value;
    return r;
  }

 private:
  void add(const DiskDiagram& d) {
    CyclicWord key = CyclicWord(boundary_path(d).word).unoriented();
    int a = dehn::area(d);
    auto [it, fresh] = index_.try_emplace(key, a);
    if (!fresh) it->second = std::min(it->second, a);
  }

  // Minimal area <= bound. A filling of a cyclically reduced word that is
  // not a single disk has a leaf disk whose boundary is a proper cyclic
  // segment of the word; peel it and recurse on what remains.
  std::optional<int> solve(const Word& w) {
    Word core = cyclic_core(w);
    if (core.empty()) return 0;
    CyclicWord key = CyclicWord(core).unoriented();
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::optional<int> best;
    if (auto it = index_.find(key); it != index_.end()) best = it->second;
    const Word& x = key.letters();
    const std::size_t n = x.size();
    for (std::size_t s = 0; s < n; ++s)
      for (std::size_t len = 1; len < n; ++len) {
        Word u, rest;
        for (std::size_t j = 0; j < n; ++j) (j < len ? u : rest).push_back(x[(s + j) % n]);
        auto leaf = index_.find(CyclicWord(u).unoriented());
        if (leaf == index_.end() || leaf->second >= bound_) continue;
        auto r = solve(rest);
        if (!r || leaf->second + *r > bound_) continue;
        if (!best || leaf->second + *r < *best) best = leaf->second + *r;
      }
    memo_[key] = best;
    return best;
  }

  int bound_;
  std::map<CyclicWord, int> index_;
  std::map<CyclicWord, std::optional<int>> memo_;
};

struct RelatorSearchLimits {
  std::size_t node_limit = 50'000'000;
  std::optional<std::size_t> length_cap;  // default |w| + max relator length * bound
};

/// Iterative deepening over single relator applications: a move replaces a
/// cyclic subword matching a prefix of some relator variant by the inverse
/// of the rest of that variant, then reduces cyclically. The heuristic is
/// ceil(|w| / max relator length), raised by the lattice filling bound when
/// one is supplied.
class RelatorBFS {
 public:
  explicit RelatorBFS(const Presentation& p, const LatticeFillingBound* lattice = nullptr)
      : p_(&p), lattice_(lattice), variants_(relator_variants(p)), by_first_(2 * p.generator_count()) {
    for (std::size_t i = 0; i < variants_.size(); ++i)
      by_first_[static_cast<std::size_t>(variants_[i][0].order_key())].push_back(i);
    lmax_ = static_cast<int>(p.max_relator_length());
  }

  AreaResult area(const Word& w, int bound, RelatorSearchLimits limits = {}) {
    AreaResult r;
    r.method = AreaMethod::RelatorBFS;
    r.bound = bound;
    Word start = canon(cyclic_core(w));
    cap_ = limits.length_cap.value_or(start.size() + static_cast<std::size_t>(lmax_) * static_cast<std::size_t>(bound));
    node_limit_ = limits.node_limit;
    nodes_ = 0;
    cap_hit_ = limit_hit_ = false;
    int threshold = h(start);
    while (threshold <= bound) {
      tt_.clear();
      next_threshold_ = -1;
      if (dfs(start, 0, threshold)) {
        r.value = threshold;
        break;
      }
      if (limit_hit_ || next_threshold_ < 0) break;
      threshold = next_threshold_;
    }
    r.nodes = nodes_;
    r.certified_exact = !cap_hit_ && !limit_hit_;
    r.exceeds_bound = !r.value && r.certified_exact;
    return r;
  }

  /// All words reachable by one relator application.
  std::vector<Word> moves(const Word& w) const {
    std::vector<Word> out;
    const std::size_t n = w.size();
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t vi : by_first_[static_cast<std::size_t>(w[p].order_key())]) {
        const Word& v = variants_[vi];
        for (std::size_t k = 1; k <= n && k <= v.size(); ++k) {
          if (w[(p + k - 1) % n] != v[k - 1]) break;
          Word nw;
          nw.reserve(n - k + v.size() - k);
          for (std::size_t j = v.size(); j > k; --j) nw.push_back(v[j - 1].inverse());
          for (std::size_t j = k; j < n; ++j) nw.push_back(w[(p + j) % n]);
          out.push_back(canon(cyclic_core(nw)));
        }
      }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

 private:
  static Word canon(const Word& w) { return CyclicWord(w).unoriented().letters(); }

  int h(const Word& w) {
    if (w.empty()) return 0;
    if (auto it = hcache_.find(w); it != hcache_.end()) return it->second;
    int v = static_cast<int>((w.size() + static_cast<std::size_t>(lmax_) - 1) / static_cast<std::size_t>(lmax_));
    if (lattice_)
      if (auto c = (*lattice_)(w)) v = std::max(v, static_cast<int>(*c));
    hcache_.emplace(w, v);
    return v;
  }

  bool dfs(const Word& w, int g, int threshold) {
    int f = g + h(w);
    if (f > threshold) {
      if (next_threshold_ < 0 || f < next_threshold_) next_threshold_ = f;
      return false;
    }
    if (w.empty()) return true;
    if (auto it = tt_.find(w); it != tt_.end() && it->second <= g) return false;
    tt_[w] = g;
    if (++nodes_ > node_limit_) {
      limit_hit_ = true;
      return false;
    }
    auto kids = moves(w);
    std::vector<std::pair<int, std::size_t>> order;
    for (std::size_t i = 0; i < kids.size(); ++i) {
      if (kids[i].size() > cap_) {
        cap_hit_ = true;
        continue;
      }
      order.emplace_back(h(kids[i]), i);
    }
    std::sort(order.begin(), order.end());
    for (auto& [hv, i] : order) {
      if (dfs(kids[i], g + 1, threshold)) return true;
      if (limit_hit_) return false;
    }
    return false;
  }

  const Presentation* p_;
  const LatticeFillingBound* lattice_;
  std::vector<Word> variants_;
  std::vector<std::vector<std::size_t>> by_first_;
  int lmax_ = 1;
  std::size_t cap_ = 0, node_limit_ = 0, nodes_ = 0;
  bool cap_hit_ = false, limit_hit_ = false;
  int next_threshold_ = -1;
  std::unordered_map<Word, int, WordHash> tt_, hcache_;
};

struct AreaOracleOptions {
  int bound = 8;
  bool use_relator_search = true;
  const LatticeFillingBound* lattice = nullptr;
  DiagramSearch* diagram_search = nullptr;  // used when its bound suffices
  RelatorSearchLimits limits;
};

/// Combines the available methods. A value is certified only if every
/// method that certified agrees.
inline AreaResult area_oracle(const Word& w, const Presentation& p, const AreaOracleOptions& opt) {
  std::optional<AreaResult> a, b;
  if (opt.diagram_search) a = opt.diagram_search->area(w);
  if (opt.use_relator_search) b = RelatorBFS(p, opt.lattice).area(w, opt.bound, opt.limits);
  if (a && !b) return *a;
  if (b && !a) return *b;
  if (!a && !b) throw Error("area_oracle: no method enabled");
  bool clash = (a->value && b->value && *a->value != *b->value) ||
               (a->exceeds_bound && b->value && *b->value <= a->bound) ||
               (b->exceeds_bound && a->value && *a->value <= b->bound);
  AreaResult r = b->certified_exact || !a->value ? *b : *a;
  if (clash) r.certified_exact = false;
  return r;
}

/// Compares area(d) with the certified area of its boundary word; nothing
/// when no certificate is available.
inline std::optional<bool> is_minimal(const DiskDiagram& d, const Presentation& p, const AreaOracleOptions& opt) {
  AreaResult r = area_oracle(boundary_path(d).word, p, opt);
  int a = area(d);
  if (r.value && r.certified_exact) return a == *r.value;
  if (r.exceeds_bound && a <= r.bound) return false;
  return std::nullopt;
}

struct DehnRow {
  int n = 0;
  std::size_t length = 0;
  AreaResult result;
};

inline std::vector<DehnRow> dehn_table(const Presentation& p, const std::function<Word(int)>& family, int n_from,
                                       int n_to, const AreaOracleOptions& opt) {
  std::vector<DehnRow> rows;
  for (int n = n_from; n <= n_to; ++n) {
    Word w = family(n);
    rows.push_back({n, w.size(), area_oracle(w, p, opt)});
  }
  return rows;
}

/// [x^n, y^n] = x^n y^n x^-n y^-n.
inline Word power_commutator(Letter x, Letter y, int n) {
  Word w;
  for (Letter l : {x, y, x.inverse(), y.inverse()})
    for (int i = 0; i < n; ++i) w.push_back(l);
  return w;
}

}  // namespace dehn
