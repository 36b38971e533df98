#pragma once

// Built-in presentations with word-problem models, the two grid diagram
// families, the projection to the plane grid and the corner classifier for
// the Z^2 * F_4 complex.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dehn/diagram.hpp"
#include "dehn/features.hpp"
#include "dehn/group_model.hpp"
#include "dehn/presentation.hpp"

namespace dehn {

struct GalleryEntry {
  std::string id;
  std::string description;
  Presentation presentation;
  FreeProductModel model;
  bool aspherical_lattice = false;  // model is Z^2 and the universal cover is contractible
};

inline const std::vector<std::string>& gallery_ids() {
  static const std::vector<std::string> ids{"thm1", "thm2", "eq1", "eq2", "torusT"};
  return ids;
}

namespace detail {

inline GalleryEntry make_entry(std::string id, std::string desc, std::vector<std::string> gens,
                               std::vector<std::string> rels, const std::string& model, bool aspherical) {
  Presentation p(std::move(gens), rels);
  FreeProductModel m = parse_model(model, p);
  return {std::move(id), std::move(desc), std::move(p), std::move(m), aspherical};
}

}  // namespace detail

inline GalleryEntry gallery(const std::string& id) {
  if (id == "thm1")
    return detail::make_entry(
        "thm1", "two cells over Z^2 * F_4 with the strong generalized Dehn property",
        {"a1", "a2", "b1", "b2", "c1", "c2", "c3"}, {"a2 b1 b2 A2 A1 B2 c1 c2 c3", "A1 b1 c1 c2 c3"},
        "abelian_rank 2\nfree_rank 4\n"
        "image a1 = e1 f1^-1\nimage a2 = f1\nimage b1 = e2 f2^-1\nimage b2 = f2\n"
        "image c1 = f2 e2^-1 e1 f1^-1 f4^-1 f3^-1\nimage c2 = f3\nimage c3 = f4\n",
        false);
  if (id == "thm2")
    return detail::make_entry("thm2", "commutator cell closed by a monogon; the group is Z^2", {"a", "b", "c"},
                              {"a b A B c", "c"},
                              "abelian_rank 2\nfree_rank 0\nimage a = e1\nimage b = e2\nimage c = 1\n", true);
  if (id == "eq1")
    return detail::make_entry("eq1", "two triangles-with-path over Z^2 * F_2", {"a1", "b1", "c1", "c2", "c3"},
                              {"b1 A1 c1 c2 c3", "A1 b1 c1 c2 c3"},
                              "abelian_rank 2\nfree_rank 2\n"
                              "image a1 = e1\nimage b1 = e2\nimage c1 = e1 e2^-1 f2^-1 f1^-1\n"
                              "image c2 = f1\nimage c3 = f2\n",
                              false);
  if (id == "eq2")
    return detail::make_entry(
        "eq2", "subdivision of thm1 without big pieces; the group is Z^2 * F_4",
        {"a1", "a2", "b1", "b2", "c1", "c2", "c3", "d1", "d2"},
        {"a2 b1 b2 A2 A1 B2 c1 c2 c3", "b1 c1 D1", "d1 c2 D2", "d2 c3 A1"},
        "abelian_rank 2\nfree_rank 4\n"
        "image a1 = e1 f1^-1\nimage a2 = f1\nimage b1 = e2 f2^-1\nimage b2 = f2\n"
        "image c1 = f2 e2^-1 e1 f1^-1 f4^-1 f3^-1\nimage c2 = f3\nimage c3 = f4\n"
        "image d1 = e1 f1^-1 f4^-1 f3^-1\nimage d2 = e1 f1^-1 f4^-1\n",
        false);
  if (id == "torusT")
    return detail::make_entry("torusT", "torus as a square grid cut into two triangles", {"a1", "b1", "c1"},
                              {"b1 A1 c1", "A1 b1 c1"},
                              "abelian_rank 2\nfree_rank 0\nimage a1 = e1\nimage b1 = e2\nimage c1 = e1 e2^-1\n",
                              true);
  throw Error("unknown gallery id: " + id);
}

/// n x n grid families. Figure 1: pentagons over thm2, each enclosing a
/// c-monogon at its lower-left corner; boundary [a^n, b^n]. Figure 3: squares
/// over eq1 split by a diagonal path c1 c2 c3; boundary [a1^n, b1^n].
inline DiskDiagram figure_diagram(int fig, int n) {
  if (n < 1) throw Error("figure_diagram needs n >= 1");
  if (fig != 1 && fig != 3) throw Error("figure_diagram: figure must be 1 or 3");
  PlanarBuilder B;
  std::vector<int> id(static_cast<std::size_t>((n + 1) * (n + 1)));
  for (auto& v : id) v = B.add_vertex();
  auto V = [&](int x, int y) { return id[static_cast<std::size_t>(y * (n + 1) + x)]; };
  auto pt = [](double x, double y) { return std::make_pair(x, y); };
  int outer = -1;
  for (int y = 0; y <= n; ++y)
    for (int x = 0; x <= n; ++x) {
      if (x < n) {
        int d = B.add_segment(V(x, y), V(x + 1, y), Letter{0, 1}, pt(x, y), pt(x + 1, y));
        if (x == 0 && y == 0) outer = d;
      }
      if (y < n) B.add_segment(V(x, y), V(x, y + 1), Letter{1, 1}, pt(x, y), pt(x, y + 1));
      if (x == n || y == n) continue;
      if (fig == 1) {
        B.add_edge(V(x, y), V(x, y), Letter{2, -1}, 0.5, 1.0);
      } else {
        int p1 = B.add_vertex(), p2 = B.add_vertex();
        auto q1 = pt(x + 1.0 / 3, y + 2.0 / 3), q2 = pt(x + 2.0 / 3, y + 1.0 / 3);
        B.add_segment(V(x, y + 1), p1, Letter{2, 1}, pt(x, y + 1), q1);
        B.add_segment(p1, p2, Letter{3, 1}, q1, q2);
        B.add_segment(p2, V(x + 1, y), Letter{4, 1}, q2, pt(x + 1, y));
      }
    }
  return B.build(outer);
}

/// Lattice point of every vertex under the projection killing the free
/// factor, based at the tail of the outer dart.
inline std::vector<LatticeVector> torus_coordinates(const DiskDiagram& d, const FreeProductModel& m) {
  if (m.abelian_rank() != 2) throw Error("torus_coordinates needs a model with abelian rank 2");
  std::vector<LatticeVector> out;
  for (const GroupElement& g : vertex_lift(d, m)) out.push_back(m.project_z2(g));
  return out;
}

/// Upper-right triangle of the bottom-left square of figure_diagram(3, n):
/// the face whose corners lie in the unit square and include (1,1).
inline int figure3_face_r(const DiskDiagram& d) {
  const GalleryEntry g = gallery("eq1");
  MapView v(d);
  auto coords = torus_coordinates(d, g.model);
  for (int f : v.inner_faces()) {
    bool inside = true, corner = false;
    for (int x : v.faces[static_cast<std::size_t>(f)]) {
      LatticeVector c = coords[static_cast<std::size_t>(v.tail(x))];
      inside = inside && c.x >= 0 && c.x <= 1 && c.y >= 0 && c.y <= 1;
      corner = corner || (c.x == 1 && c.y == 1);
    }
    if (inside && corner) return f;
  }
  throw Error("no face R in this diagram");
}

enum class CornerPrediction { Shell, StrongCutcell, None };

struct CornerClassification {
  CornerPrediction kind = CornerPrediction::None;
  LatticeVector p;
  int owner_face = -1;    // face whose triangle contains p
  int witness_face = -1;  // predicted shell or def-3 cutcell (MapView index)
};

/// Which triangle of which grid square a face of a thm1 diagram covers.
struct FaceTriangle {
  bool upper = false;  // pentagon: upper-right triangle; short cell: lower-left
  LatticeVector square;
  std::vector<LatticeVector> corners() const {
    const long long x = square.x, y = square.y;
    if (upper) return {{x + 1, y}, {x + 1, y + 1}, {x, y + 1}};
    return {{x, y}, {x + 1, y}, {x, y + 1}};
  }
};

inline std::vector<std::optional<FaceTriangle>> face_triangles(const DiskDiagram& d, const MapView& v,
                                                              const Presentation& p, const FreeProductModel& m) {
  auto coords = torus_coordinates(d, m);
  std::vector<std::optional<FaceTriangle>> out(v.faces.size());
  for (int f : v.inner_faces()) {
    auto tag = match_relator(p, v.face_word(d, f));
    if (!tag) throw Error("face does not read a relator");
    FaceTriangle t;
    t.upper = p.relators()[static_cast<std::size_t>(tag->relator)].size() > 5;
    bool first = true;
    for (int x : v.faces[static_cast<std::size_t>(f)]) {
      LatticeVector c = coords[static_cast<std::size_t>(v.tail(x))];
      if (first || c.x < t.square.x) t.square.x = c.x;
      if (first || c.y < t.square.y) t.square.y = c.y;
      first = false;
    }
    out[static_cast<std::size_t>(f)] = t;
  }
  return out;
}

/// Finds the lowest, then leftmost, point p of the image in the plane grid,
/// takes a face whose closed triangle contains p (pentagons first) and
/// predicts the feature that face forces: a pentagon there is a shell; a
/// short cell there is a shell when its diagonal c1 c2 c3 is free, and
/// otherwise the pentagon across the diagonal is a def-3 cutcell.
inline CornerClassification corner_classification(const DiskDiagram& d, const Presentation& p,
                                                  const FreeProductModel& m) {
  if (!is_topological_disk(d)) throw Error("corner_classification needs a topological disk");
  if (area(d) < 2) throw Error("corner_classification needs at least two cells");
  if (!is_reduced(d, p)) throw Error("corner_classification needs a reduced diagram");
  MapView v(d);
  auto tri = face_triangles(d, v, p, m);
  CornerClassification c;
  bool first = true;
  for (int f : v.inner_faces())
    for (LatticeVector q : tri[static_cast<std::size_t>(f)]->corners())
      if (first || q.y < c.p.y || (q.y == c.p.y && q.x < c.p.x)) {
        c.p = q;
        first = false;
      }
  for (bool upper : {true, false}) {
    for (int f : v.inner_faces()) {
      const auto& t = *tri[static_cast<std::size_t>(f)];
      auto cs = t.corners();
      if (t.upper == upper && std::find(cs.begin(), cs.end(), c.p) != cs.end()) {
        c.owner_face = f;
        break;
      }
    }
    if (c.owner_face >= 0) break;
  }
  const auto& owner = *tri[static_cast<std::size_t>(c.owner_face)];
  if (owner.upper) {
    c.kind = CornerPrediction::Shell;
    c.witness_face = c.owner_face;
    return c;
  }
  const int c1 = p.alphabet().find("c1");
  for (int x : v.faces[static_cast<std::size_t>(c.owner_face)]) {
    if (d.label(x).gen != c1) continue;
    int g = v.face_of[static_cast<std::size_t>(d.opposite(x))];
    if (g == v.outer_face) {
      c.kind = CornerPrediction::Shell;
      c.witness_face = c.owner_face;
    } else if (tri[static_cast<std::size_t>(g)]->upper) {
      c.kind = CornerPrediction::StrongCutcell;
      c.witness_face = g;
    }
    break;
  }
  return c;
}

/// True iff the detectors report the predicted feature on the predicted face.
inline bool corner_prediction_confirmed(const DiskDiagram& d, const CornerClassification& c) {
  if (c.kind == CornerPrediction::None) return false;
  auto found = c.kind == CornerPrediction::Shell ? find_shells(d) : find_cutcells(d, 3);
  return std::any_of(found.begin(), found.end(), [&](const FeatureWitness& w) { return w.face == c.witness_face; });
}

}  // namespace dehn
