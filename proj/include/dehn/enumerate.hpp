#pragma once

// Exhaustive generation of reduced diagrams by attaching one cell at a time
// along a boundary arc, with isomorphism rejection by canonical codes.

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dehn/diagram.hpp"
#include "dehn/features.hpp"
#include "dehn/presentation.hpp"

namespace dehn {

struct ResourceCapExceeded : Error {
  using Error::Error;
};

struct EnumerationConfig {
  int max_area = 1;
  std::optional<int> max_perimeter;  // filters output only
  bool require_reduced = true;
  bool up_to_iso = true;  // false: mirror images count separately
  std::size_t max_diagrams = 5'000'000;
};

/// All distinct rotations of every relator and of its inverse.
inline std::vector<Word> relator_variants(const Presentation& p) {
  std::set<Word> seen;
  std::vector<Word> out;
  for (const Word& r : p.relators())
    for (Word& v : symmetrized(r))
      if (seen.insert(v).second) out.push_back(std::move(v));
  return out;
}

/// Attaches a new cell reading `v` along the boundary arc of length k that
/// starts at outer position i. The cell reuses the arc (v[0..k) must read it)
/// and adds a fresh path for v[k..). Requires k < |v|; k may be 0 (attach at
/// a corner) or the whole perimeter.
inline DiskDiagram attach_cell(const DiskDiagram& d, const std::vector<int>& outer, std::size_t i, std::size_t k,
                               const Word& v) {
  const std::size_t P = outer.size();
  const int n = d.dart_count();
  const int m = static_cast<int>(v.size() - k);
  if (m < 1 || k > P) throw Error("attach_cell: bad arc");
  std::vector<int> opp = d.opposite_map(), sig = d.sigma_map();
  std::vector<Letter> lab = d.labels();
  opp.resize(static_cast<std::size_t>(n + 2 * m));
  sig.resize(opp.size());
  lab.resize(opp.size());
  auto f = [&](int j) { return n + 2 * (j - 1); };
  auto fr = [&](int j) { return n + 2 * (j - 1) + 1; };
  auto at = [](std::vector<int>& a, int x) -> int& { return a[static_cast<std::size_t>(x)]; };
  for (int j = 1; j <= m; ++j) {
    at(opp, f(j)) = fr(j);
    at(opp, fr(j)) = f(j);
    lab[static_cast<std::size_t>(f(j))] = v[k + static_cast<std::size_t>(j) - 1];
    lab[static_cast<std::size_t>(fr(j))] = v[k + static_cast<std::size_t>(j) - 1].inverse();
  }
  for (int j = 1; j < m; ++j) {
    at(sig, fr(j)) = f(j + 1);
    at(sig, f(j + 1)) = fr(j);
  }
  if (P == 0) {
    at(sig, f(1)) = fr(m);
    at(sig, fr(m)) = f(1);
  } else {
    auto o = [&](std::size_t x) { return outer[x % P]; };
    int A = d.opposite(o(i + k + P - 1)), B = o(i + k);
    int C = d.opposite(o(i + P - 1)), D = o(i);
    if (k == 0) {
      at(sig, C) = fr(m);
      at(sig, fr(m)) = f(1);
      at(sig, f(1)) = D;
    } else if (k == P) {
      at(sig, C) = f(1);
      at(sig, f(1)) = fr(m);
      at(sig, fr(m)) = D;
    } else {
      at(sig, A) = f(1);
      at(sig, f(1)) = B;
      at(sig, C) = fr(m);
      at(sig, fr(m)) = D;
    }
  }
  return DiskDiagram(std::move(opp), std::move(sig), std::move(lab), fr(1));
}

/// Every way of attaching one cell to `d`.
inline void for_each_attachment(const DiskDiagram& d, const std::vector<Word>& variants,
                                const std::function<void(DiskDiagram)>& emit) {
  if (d.dart_count() == 0) {
    std::set<CyclicWord> done;
    for (const Word& v : variants)
      if (done.insert(CyclicWord(v)).second) emit(attach_cell(d, {}, 0, 0, v));
    return;
  }
  const BoundaryPath b = boundary_path(d);
  const std::size_t P = b.darts.size();
  for (std::size_t i = 0; i < P; ++i)
    for (const Word& v : variants) {
      for (std::size_t k = 0; k < v.size() && k <= P; ++k) {
        if (k > 0 && b.word[(i + k - 1) % P] != v[k - 1]) break;
        emit(attach_cell(d, b.darts, i, k, v));
      }
    }
}

/// Glues disk d2 onto disk d1 along a boundary arc of length k: outer darts
/// b1[i..i+k) of d1 are matched with b2[j..j+k) of d2 traversed backwards.
/// An arc may be the whole boundary of one side, not of both.
inline DiskDiagram glue_disks(const DiskDiagram& d1, const BoundaryPath& b1, std::size_t i, const DiskDiagram& d2,
                              const BoundaryPath& b2, std::size_t j, std::size_t k) {
  const std::size_t P1 = b1.darts.size(), P2 = b2.darts.size();
  if (k < 1 || k > P1 || k > P2 || (k == P1 && k == P2)) throw Error("glue_disks: bad arc");
  const int n1 = d1.dart_count(), n2 = d2.dart_count(), n = n1 + n2;
  auto opp0 = [&](int x) { return x < n1 ? d1.opposite(x) : n1 + d2.opposite(x - n1); };
  auto next0 = [&](int x) { return x < n1 ? d1.face_next(x) : n1 + d2.face_next(x - n1); };
  std::vector<int> partner(static_cast<std::size_t>(n), -1);
  std::vector<char> removed(static_cast<std::size_t>(n), 0);
  for (std::size_t t = 0; t < k; ++t) {
    int x = b1.darts[(i + t) % P1];
    int y = n1 + b2.darts[(j + k - 1 - t) % P2];
    if (d1.label(x) != d2.label(y - n1).inverse()) throw Error("glue_disks: labels do not match");
    removed[static_cast<std::size_t>(x)] = removed[static_cast<std::size_t>(y)] = 1;
    partner[static_cast<std::size_t>(opp0(x))] = opp0(y);
    partner[static_cast<std::size_t>(opp0(y))] = opp0(x);
  }
  std::vector<int> outer;
  for (std::size_t t = k; t < P1; ++t) outer.push_back(b1.darts[(i + t) % P1]);
  for (std::size_t t = k; t < P2; ++t) outer.push_back(n1 + b2.darts[(j + t) % P2]);
  std::vector<int> id(static_cast<std::size_t>(n), -1);
  int m = 0;
  for (int x = 0; x < n; ++x)
    if (!removed[static_cast<std::size_t>(x)]) id[static_cast<std::size_t>(x)] = m++;
  std::vector<int> opp(static_cast<std::size_t>(m)), next(static_cast<std::size_t>(m)), sig(static_cast<std::size_t>(m));
  std::vector<Letter> lab(static_cast<std::size_t>(m));
  for (int x = 0; x < n; ++x) {
    int nx = id[static_cast<std::size_t>(x)];
    if (nx < 0) continue;
    int o = partner[static_cast<std::size_t>(x)] >= 0 ? partner[static_cast<std::size_t>(x)] : opp0(x);
    opp[static_cast<std::size_t>(nx)] = id[static_cast<std::size_t>(o)];
    next[static_cast<std::size_t>(nx)] = id[static_cast<std::size_t>(next0(x))];
    lab[static_cast<std::size_t>(nx)] = x < n1 ? d1.label(x) : d2.label(x - n1);
  }
  for (std::size_t t = 0; t < outer.size(); ++t)
    next[static_cast<std::size_t>(id[static_cast<std::size_t>(outer[t])])] =
        id[static_cast<std::size_t>(outer[(t + 1) % outer.size()])];
  for (int y = 0; y < m; ++y) sig[static_cast<std::size_t>(y)] = next[static_cast<std::size_t>(opp[static_cast<std::size_t>(y)])];
  return DiskDiagram(std::move(opp), std::move(sig), std::move(lab), id[static_cast<std::size_t>(outer.front())]);
}

/// How diagrams of area n are produced from smaller ones.
enum class GrowthStrategy {
  DiskGluing,  // topological disks only: glue two smaller disks along an arc
  CellGrowth,  // attach single cells, keeping wedges of disks; reference only
};

/// Reduced diagrams grouped by area, one representative per isomorphism
/// class.
class Enumeration {
 public:
  Enumeration(const Presentation& p, EnumerationConfig cfg, GrowthStrategy strategy = GrowthStrategy::DiskGluing)
      : p_(&p), cfg_(cfg), strategy_(strategy) {
    if (cfg.max_area < 1) throw Error("max_area must be at least 1");
    if (p.relators().empty()) throw Error("presentation has no relators");
    variants_ = relator_variants(p);
    levels_.push_back({DiskDiagram::single_vertex()});
    for (int a = 1; a <= cfg.max_area; ++a) grow(a);
  }

  const Presentation& presentation() const { return *p_; }
  const EnumerationConfig& config() const { return cfg_; }
  int max_area() const { return cfg_.max_area; }

  /// All diagrams produced at the given area (with cell growth this
  /// includes wedges).
  const std::vector<DiskDiagram>& level(int a) const { return levels_.at(static_cast<std::size_t>(a)); }

  /// Topological disks of area 1..max_area, in generation order.
  std::vector<DiskDiagram> disks() const {
    std::vector<DiskDiagram> out;
    for (std::size_t a = 1; a < levels_.size(); ++a)
      for (const DiskDiagram& d : levels_[a])
        if (is_topological_disk(d) && (!cfg_.max_perimeter || perimeter(d) <= *cfg_.max_perimeter))
          out.push_back(d);
    return out;
  }

  std::map<int, std::size_t> disk_counts() const {
    std::map<int, std::size_t> c;
    for (std::size_t a = 1; a < levels_.size(); ++a) c[static_cast<int>(a)] = 0;
    for (const DiskDiagram& d : disks()) ++c[area(d)];
    return c;
  }

 private:
  void grow(int a) {
    std::set<std::vector<int>> seen;
    std::vector<DiskDiagram> next;
    auto offer = [&](const DiskDiagram& e) {
      if (cfg_.require_reduced && !is_reduced(e, *p_)) return;
      DiskDiagram c = canonical_form(e, cfg_.up_to_iso);
      if (!seen.insert(code_from(c, 0)).second) return;
      if (++total_ > cfg_.max_diagrams)
        throw ResourceCapExceeded("enumeration exceeded " + std::to_string(cfg_.max_diagrams) + " diagrams");
      next.push_back(std::move(c));
    };
    if (strategy_ == GrowthStrategy::CellGrowth || a == 1) {
      for (const DiskDiagram& d : levels_[static_cast<std::size_t>(a - 1)])
        for_each_attachment(d, variants_, [&](DiskDiagram e) {
          if (a == 1 || strategy_ == GrowthStrategy::CellGrowth) offer(e);
        });
    } else {
      for (int a1 = 1; 2 * a1 <= a; ++a1) {
        const auto& left = levels_[static_cast<std::size_t>(a1)];
        const auto& right = levels_[static_cast<std::size_t>(a - a1)];
        for (std::size_t x = 0; x < left.size(); ++x) {
          const BoundaryPath b1 = boundary_path(left[x]);
          for (std::size_t y = (a1 == a - a1 ? x : 0); y < right.size(); ++y) {
            std::vector<DiskDiagram> sides{right[y]};
            if (cfg_.up_to_iso) sides.push_back(right[y].mirror());
            for (const DiskDiagram& r : sides) glue_all(left[x], b1, r, offer);
          }
        }
      }
    }
    levels_.push_back(std::move(next));
  }

  template <class F>
  static void glue_all(const DiskDiagram& d1, const BoundaryPath& b1, const DiskDiagram& d2, F& offer) {
    const BoundaryPath b2 = boundary_path(d2);
    const std::size_t P1 = b1.darts.size(), P2 = b2.darts.size();
    for (std::size_t i = 0; i < P1; ++i)
      for (std::size_t j = 0; j < P2; ++j)
        // arc of d1 starts at i, arc of d2 ends at j
        for (std::size_t k = 1; k <= P1 && k <= P2 && !(k == P1 && k == P2); ++k) {
          if (b1.word[(i + k - 1) % P1] != b2.word[(j + P2 - (k - 1)) % P2].inverse()) break;
          offer(glue_disks(d1, b1, i, d2, b2, (j + P2 - (k - 1)) % P2, k));
        }
  }

  const Presentation* p_;
  EnumerationConfig cfg_;
  GrowthStrategy strategy_;
  std::vector<Word> variants_;
  std::vector<std::vector<DiskDiagram>> levels_;
  std::size_t total_ = 1;
};

inline std::vector<DiskDiagram> enumerate_diagrams(const Presentation& p, EnumerationConfig cfg) {
  return Enumeration(p, cfg).disks();
}

}  // namespace dehn
