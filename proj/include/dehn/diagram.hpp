#pragma once

// Disk diagrams as combinatorial maps.
//
// Every edge is a pair of darts swapped by `opposite`. `sigma` rotates darts
// around their common tail vertex. Faces are the orbits of
// face_next(d) = sigma(opposite(d)); the face containing `outer` is the
// complementary cell R_inf. A diagram with no darts is a single vertex.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "dehn/presentation.hpp"
#include "dehn/word.hpp"

namespace dehn {

class DiskDiagram {
 public:
  DiskDiagram() = default;
  DiskDiagram(std::vector<int> opposite, std::vector<int> sigma, std::vector<Letter> label, int outer)
      : opposite_(std::move(opposite)), sigma_(std::move(sigma)), label_(std::move(label)), outer_(outer) {}

  static DiskDiagram single_vertex() { return {}; }

  int dart_count() const { return static_cast<int>(opposite_.size()); }
  int edge_count() const { return dart_count() / 2; }
  int opposite(int d) const { return opposite_[static_cast<std::size_t>(d)]; }
  int sigma(int d) const { return sigma_[static_cast<std::size_t>(d)]; }
  Letter label(int d) const { return label_[static_cast<std::size_t>(d)]; }
  int face_next(int d) const { return sigma(opposite(d)); }
  int outer_dart() const { return outer_; }

  const std::vector<int>& opposite_map() const { return opposite_; }
  const std::vector<int>& sigma_map() const { return sigma_; }
  const std::vector<Letter>& labels() const { return label_; }

  /// Same map with the orientation of the sphere reversed. Boundary words
  /// of all faces get inverted.
  DiskDiagram mirror() const {
    std::vector<int> inv(sigma_.size());
    for (std::size_t d = 0; d < sigma_.size(); ++d) inv[static_cast<std::size_t>(sigma_[d])] = static_cast<int>(d);
    return DiskDiagram(opposite_, std::move(inv), label_, outer_ < 0 ? -1 : opposite(outer_));
  }

  friend bool operator==(const DiskDiagram&, const DiskDiagram&) = default;

 private:
  std::vector<int> opposite_;
  std::vector<int> sigma_;
  std::vector<Letter> label_;
  int outer_ = -1;
};

/// Orbit structure of a diagram, computed once.
struct MapView {
  int vertex_count = 0;
  std::vector<int> vertex_of;             // dart -> tail vertex
  std::vector<int> face_of;               // dart -> face index
  std::vector<std::vector<int>> faces;    // dart cycles in face_next order
  std::vector<std::vector<int>> rotation; // vertex -> darts in sigma order
  int outer_face = -1;

  explicit MapView(const DiskDiagram& d) {
    const int n = d.dart_count();
    vertex_of.assign(static_cast<std::size_t>(n), -1);
    face_of.assign(static_cast<std::size_t>(n), -1);
    if (n == 0) {
      vertex_count = 1;
      rotation.emplace_back();
      return;
    }
    for (int s = 0; s < n; ++s) {
      if (vertex_of[static_cast<std::size_t>(s)] >= 0) continue;
      std::vector<int> rot;
      int x = s;
      do {
        vertex_of[static_cast<std::size_t>(x)] = vertex_count;
        rot.push_back(x);
        x = d.sigma(x);
      } while (x != s && rot.size() <= static_cast<std::size_t>(n));
      rotation.push_back(std::move(rot));
      ++vertex_count;
    }
    auto trace = [&](int s) {
      std::vector<int> cyc;
      int x = s;
      do {
        face_of[static_cast<std::size_t>(x)] = static_cast<int>(faces.size());
        cyc.push_back(x);
        x = d.face_next(x);
      } while (x != s && cyc.size() <= static_cast<std::size_t>(n));
      faces.push_back(std::move(cyc));
    };
    if (d.outer_dart() >= 0 && d.outer_dart() < n) {
      trace(d.outer_dart());
      outer_face = 0;
    }
    for (int s = 0; s < n; ++s)
      if (face_of[static_cast<std::size_t>(s)] < 0) trace(s);
  }

  int tail(int dart) const { return vertex_of[static_cast<std::size_t>(dart)]; }
  int head(const DiskDiagram& d, int dart) const { return tail(d.opposite(dart)); }
  int face_count() const { return dart_count_empty() ? 1 : static_cast<int>(faces.size()); }
  int inner_face_count() const { return dart_count_empty() ? 0 : static_cast<int>(faces.size()) - 1; }
  bool is_outer(int dart) const { return face_of[static_cast<std::size_t>(dart)] == outer_face; }
  int degree(int v) const { return static_cast<int>(rotation[static_cast<std::size_t>(v)].size()); }

  std::vector<int> inner_faces() const {
    std::vector<int> out;
    for (int f = 0; f < static_cast<int>(faces.size()); ++f)
      if (f != outer_face) out.push_back(f);
    return out;
  }

  Word face_word(const DiskDiagram& d, int f) const {
    Word w;
    for (int x : faces[static_cast<std::size_t>(f)]) w.push_back(d.label(x));
    return w;
  }

 private:
  bool dart_count_empty() const { return face_of.empty(); }
};

/// How an inner face reads a relator: face word == rotation of r^sign
/// starting at `offset`.
struct FaceTag {
  int relator = -1;
  int offset = 0;
  int sign = 1;
};

/// Matches a face word against the relators (up to rotation and inversion).
inline std::optional<FaceTag> match_relator(const Presentation& p, const Word& w) {
  for (std::size_t r = 0; r < p.relators().size(); ++r) {
    const Word& rel = p.relators()[r];
    if (rel.size() != w.size()) continue;
    for (int sign : {1, -1}) {
      Word base = sign > 0 ? rel : inverse(rel);
      for (std::size_t k = 0; k < base.size(); ++k) {
        bool ok = true;
        for (std::size_t i = 0; i < w.size(); ++i)
          if (base[(k + i) % base.size()] != w[i]) {
            ok = false;
            break;
          }
        if (ok) return FaceTag{static_cast<int>(r), static_cast<int>(k), sign};
      }
    }
  }
  return std::nullopt;
}

inline int area(const DiskDiagram& d) { return MapView(d).inner_face_count(); }

struct BoundaryPath {
  std::vector<int> darts;
  Word word;
  std::size_t perimeter() const { return darts.size(); }
};

inline BoundaryPath boundary_path(const DiskDiagram& d) {
  BoundaryPath b;
  if (d.dart_count() == 0) return b;
  int x = d.outer_dart();
  do {
    b.darts.push_back(x);
    b.word.push_back(d.label(x));
    x = d.face_next(x);
  } while (x != d.outer_dart());
  return b;
}

inline int perimeter(const DiskDiagram& d) { return static_cast<int>(boundary_path(d).perimeter()); }

struct ValidationReport {
  std::vector<std::string> failures;
  int vertices = 0;
  int edges = 0;
  int faces = 0;  // including the outer face
  bool ok() const { return failures.empty(); }
};

/// Checks the defining conditions of a disk diagram over `p`: involution and
/// rotation well-formed, inverse labels on opposite darts, connected, Euler
/// count of a sphere, a single outer face, and relator-labelled inner faces.
inline ValidationReport validate(const DiskDiagram& d, const Presentation& p) {
  ValidationReport rep;
  const int n = d.dart_count();
  auto fail = [&](std::string s) { rep.failures.push_back(std::move(s)); };
  if (n == 0) {
    rep.vertices = 1;
    rep.faces = 1;
    if (d.outer_dart() != -1) fail("single-vertex diagram must have outer dart -1");
    return rep;
  }
  if (static_cast<int>(d.sigma_map().size()) != n || static_cast<int>(d.labels().size()) != n) {
    fail("array sizes differ");
    return rep;
  }
  if (n % 2 != 0) fail("odd number of darts");
  for (int x = 0; x < n; ++x) {
    int o = d.opposite(x);
    if (o < 0 || o >= n || o == x || d.opposite(o) != x) {
      fail("opposite is not a fixed-point-free involution at dart " + std::to_string(x));
      return rep;
    }
  }
  std::vector<int> seen(static_cast<std::size_t>(n), 0);
  for (int x = 0; x < n; ++x) {
    int s = d.sigma(x);
    if (s < 0 || s >= n || seen[static_cast<std::size_t>(s)]++) {
      fail("sigma is not a permutation");
      return rep;
    }
  }
  for (int x = 0; x < n; ++x) {
    Letter l = d.label(x);
    if (l.gen < 0 || static_cast<std::size_t>(l.gen) >= p.generator_count() || (l.sign != 1 && l.sign != -1))
      fail("dart " + std::to_string(x) + " has a label outside the alphabet");
    else if (d.label(d.opposite(x)) != l.inverse())
      fail("opposite darts " + std::to_string(x) + " do not carry inverse labels");
  }
  if (d.outer_dart() < 0 || d.outer_dart() >= n) {
    fail("outer dart out of range");
    return rep;
  }
  MapView v(d);
  rep.vertices = v.vertex_count;
  rep.edges = n / 2;
  rep.faces = static_cast<int>(v.faces.size());
  // connectivity through opposite and sigma
  std::vector<int> comp(static_cast<std::size_t>(n), 0), stack{0};
  comp[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int y : {d.opposite(x), d.sigma(x)})
      if (!comp[static_cast<std::size_t>(y)]) {
        comp[static_cast<std::size_t>(y)] = 1;
        ++reached;
        stack.push_back(y);
      }
  }
  if (reached != n) fail("diagram is not connected");
  if (rep.vertices - rep.edges + rep.faces != 2)
    fail("Euler count V - E + F = " + std::to_string(rep.vertices - rep.edges + rep.faces) + ", expected 2");
  for (int f : v.inner_faces()) {
    if (!match_relator(p, v.face_word(d, f)))
      fail("inner face " + std::to_string(f) + " reads " + p.format(v.face_word(d, f)) + ", not a relator");
  }
  return rep;
}

/// Tags for the inner faces of a valid diagram, indexed by MapView face id.
inline std::vector<std::optional<FaceTag>> face_tags(const DiskDiagram& d, const MapView& v, const Presentation& p) {
  std::vector<std::optional<FaceTag>> out(v.faces.size());
  for (int f : v.inner_faces()) out[static_cast<std::size_t>(f)] = match_relator(p, v.face_word(d, f));
  return out;
}

/// Builds a diagram from a drawing: each vertex has a position and each
/// dart leaves its tail at a given angle. Rotation is counter-clockwise by
/// angle. Intended for hand-made gallery diagrams.
class PlanarBuilder {
 public:
  int add_vertex() { return vertex_count_++; }

  /// Adds an edge from u to v read as `label`; returns the forward dart.
  int add_edge(int u, int v, Letter label, double angle_at_u, double angle_at_v) {
    int d = static_cast<int>(darts_.size());
    darts_.push_back({u, label, angle_at_u});
    darts_.push_back({v, label.inverse(), angle_at_v});
    return d;
  }

  /// Convenience for straight edges between positioned points.
  int add_segment(int u, int v, Letter label, std::pair<double, double> pu, std::pair<double, double> pv) {
    double a = angle(pv.first - pu.first, pv.second - pu.second);
    double b = angle(pu.first - pv.first, pu.second - pv.second);
    return add_edge(u, v, label, a, b);
  }

  static double angle(double dx, double dy) {
    double a = std::atan2(dy, dx);
    return a < 0 ? a + 2 * 3.14159265358979323846 : a;
  }

  /// `outer` picks a dart lying on the outer face.
  DiskDiagram build(int outer) const {
    const int n = static_cast<int>(darts_.size());
    std::vector<int> opp(static_cast<std::size_t>(n)), sig(static_cast<std::size_t>(n));
    std::vector<Letter> lab(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) {
      opp[static_cast<std::size_t>(x)] = x ^ 1;
      lab[static_cast<std::size_t>(x)] = darts_[static_cast<std::size_t>(x)].label;
    }
    std::vector<std::vector<int>> at(static_cast<std::size_t>(vertex_count_));
    for (int x = 0; x < n; ++x) at[static_cast<std::size_t>(darts_[static_cast<std::size_t>(x)].tail)].push_back(x);
    for (auto& list : at) {
      std::sort(list.begin(), list.end(), [&](int a, int b) {
        return darts_[static_cast<std::size_t>(a)].angle < darts_[static_cast<std::size_t>(b)].angle;
      });
      for (std::size_t i = 0; i < list.size(); ++i)
        sig[static_cast<std::size_t>(list[i])] = list[(i + 1) % list.size()];
    }
    return DiskDiagram(std::move(opp), std::move(sig), std::move(lab), n == 0 ? -1 : outer);
  }

 private:
  struct Dart {
    int tail;
    Letter label;
    double angle;
  };
  int vertex_count_ = 0;
  std::vector<Dart> darts_;
};

/// Dart renumbering by breadth-first search from `start`; two diagrams are
/// isomorphic iff some pair of start darts gives identical codes.
inline std::vector<int> code_from(const DiskDiagram& d, int start) {
  const int n = d.dart_count();
  std::vector<int> id(static_cast<std::size_t>(n), -1), order;
  order.reserve(static_cast<std::size_t>(n));
  id[static_cast<std::size_t>(start)] = 0;
  order.push_back(start);
  for (std::size_t i = 0; i < order.size(); ++i) {
    int x = order[i];
    for (int y : {d.opposite(x), d.sigma(x)})
      if (id[static_cast<std::size_t>(y)] < 0) {
        id[static_cast<std::size_t>(y)] = static_cast<int>(order.size());
        order.push_back(y);
      }
  }
  std::vector<int> code;
  code.reserve(3 * order.size() + 1);
  code.push_back(n);
  for (int x : order) {
    code.push_back(id[static_cast<std::size_t>(d.opposite(x))]);
    code.push_back(id[static_cast<std::size_t>(d.sigma(x))]);
    code.push_back(d.label(x).order_key());
  }
  return code;
}

/// Canonical code up to isomorphism preserving the outer face, allowing
/// reversal of orientation. Diagrams carry no basepoint.
inline std::vector<int> canonical_code(const DiskDiagram& d, bool allow_mirror = true) {
  if (d.dart_count() == 0) return {0};
  std::vector<int> best;
  std::vector<DiskDiagram> maps{d};
  if (allow_mirror) maps.push_back(d.mirror());
  for (const DiskDiagram& m : maps) {
    int x = m.outer_dart();
    do {
      auto c = code_from(m, x);
      if (best.empty() || c < best) best = std::move(c);
      x = m.face_next(x);
    } while (x != m.outer_dart());
  }
  return best;
}

/// Rebuilds the diagram with darts renumbered in canonical order.
inline DiskDiagram canonical_form(const DiskDiagram& d, bool allow_mirror = true) {
  if (d.dart_count() == 0) return d;
  std::vector<int> best;
  const DiskDiagram* best_map = nullptr;
  int best_start = -1;
  const DiskDiagram mir = d.mirror();
  for (const DiskDiagram* m : {&d, &mir}) {
    if (m == &mir && !allow_mirror) break;
    int x = m->outer_dart();
    do {
      auto c = code_from(*m, x);
      if (best.empty() || c < best) {
        best = std::move(c);
        best_map = m;
        best_start = x;
      }
      x = m->face_next(x);
    } while (x != m->outer_dart());
  }
  const DiskDiagram& m = *best_map;
  const int n = m.dart_count();
  std::vector<int> id(static_cast<std::size_t>(n), -1), order{best_start};
  id[static_cast<std::size_t>(best_start)] = 0;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (int y : {m.opposite(order[i]), m.sigma(order[i])})
      if (id[static_cast<std::size_t>(y)] < 0) {
        id[static_cast<std::size_t>(y)] = static_cast<int>(order.size());
        order.push_back(y);
      }
  std::vector<int> opp(static_cast<std::size_t>(n)), sig(static_cast<std::size_t>(n));
  std::vector<Letter> lab(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    auto i = static_cast<std::size_t>(id[static_cast<std::size_t>(x)]);
    opp[i] = id[static_cast<std::size_t>(m.opposite(x))];
    sig[i] = id[static_cast<std::size_t>(m.sigma(x))];
    lab[i] = m.label(x);
  }
  return DiskDiagram(std::move(opp), std::move(sig), std::move(lab), 0);
}

inline bool isomorphic(const DiskDiagram& a, const DiskDiagram& b) { return canonical_code(a) == canonical_code(b); }

}  // namespace dehn
