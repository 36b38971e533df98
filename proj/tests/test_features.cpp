#include <catch_amalgamated.hpp>

#include <algorithm>

#include "dehn/enumerate.hpp"
#include "dehn/features.hpp"
#include "dehn/gallery.hpp"
#include "support.hpp"

using namespace dehn;
using test_support::single_cell;

namespace {

DiskDiagram single_edge(Letter l) { return DiskDiagram({1, 0}, {0, 1}, {l, l.inverse()}, 0); }

std::vector<int> faces_of(const std::vector<FeatureWitness>& ws) {
  std::vector<int> f;
  for (const auto& w : ws) f.push_back(w.face);
  std::sort(f.begin(), f.end());
  return f;
}

std::vector<int> pentagons(const DiskDiagram& d) {
  MapView v(d);
  std::vector<int> out;
  for (int f : v.inner_faces())
    if (v.faces[static_cast<std::size_t>(f)].size() == 5) out.push_back(f);
  return out;
}

DiskDiagram wedge_of_pentagons(const Presentation& p) {
  PlanarBuilder b;
  std::vector<test_support::Point> pts{{0, 0}, {1, 0}, {1.3, 0.8}, {0.5, 1.3}, {-0.3, 0.8}};
  std::vector<int> va{b.add_vertex()}, vb;
  for (int i = 1; i < 5; ++i) va.push_back(b.add_vertex());
  vb.push_back(va[0]);
  for (int i = 1; i < 5; ++i) vb.push_back(b.add_vertex());
  auto da = test_support::polygon(b, va, pts, p.relators()[0]);
  for (auto& q : pts) q = {-q.first, -q.second};
  test_support::polygon(b, vb, pts, p.relators()[0]);
  return b.build(da[0]);
}

}  // namespace

TEST_CASE("spurs") {
  DiskDiagram e = single_edge({0, 1});
  CHECK(find_spurs(e).size() == 2);
  DiskDiagram v = remove_spur(e, 0);
  CHECK(v.dart_count() == 0);

  DiskDiagram path = attach_spur(e, 0, {1, 1});
  GalleryEntry g = gallery("thm2");
  CHECK(validate(path, g.presentation).ok());
  CHECK(find_spurs(path).size() == 2);
  CHECK(perimeter(path) == 4);
  auto sp = find_spurs(path);
  DiskDiagram shorter = remove_spur(path, sp[0].dart);
  CHECK(validate(shorter, g.presentation).ok());
  CHECK(shorter.edge_count() == 1);
  CHECK(perimeter(shorter) == 2);

  CHECK(find_spurs(figure_diagram(1, 2)).empty());
  CHECK(find_spurs(figure_diagram(3, 2)).empty());
  DiskDiagram f3 = figure_diagram(3, 2);
  CHECK_THROWS_AS(remove_spur(f3, 0), Error);
}

TEST_CASE("shells") {
  GalleryEntry g = gallery("thm2");
  DiskDiagram f1 = figure_diagram(1, 1);  // pentagon around a monogon, boundary [a,b]
  MapView v(f1);
  auto shells = find_shells(f1);
  REQUIRE(shells.size() == 1);
  CHECK(v.faces[static_cast<std::size_t>(shells[0].face)].size() == 5);
  CHECK(shells[0].arc_length == 4);
  DiskDiagram rest = remove_shell(f1, shells[0].dart);
  CHECK(validate(rest, g.presentation).ok());
  CHECK(area(rest) == 1);
  CHECK(perimeter(rest) == 1);

  CHECK(find_shells(figure_diagram(1, 2)).empty());
  CHECK(find_shells(figure_diagram(3, 2)).empty());
  DiskDiagram f12 = figure_diagram(1, 2);
  for (int x = 0; x < f12.dart_count(); ++x)
    if (!MapView(f12).is_outer(x)) CHECK_THROWS_AS(remove_shell(f12, x), Error);
}

TEST_CASE("shell removal on a lone cell leaves an arc") {
  GalleryEntry g = gallery("thm2");
  DiskDiagram d = single_cell(g.presentation.relators()[0]);
  auto shells = find_shells(d);
  REQUIRE(shells.size() == 1);
  DiskDiagram rest = remove_shell(d, shells[0].dart);
  CHECK(validate(rest, g.presentation).ok());
  CHECK(area(rest) == 0);
  CHECK(perimeter(rest) < 5);
}

TEST_CASE("cutcells in the pentagon grid are def 1 only") {
  DiskDiagram f = figure_diagram(1, 2);
  CHECK(faces_of(find_cutcells(f, 1)) == pentagons(f));
  CHECK(pentagons(f).size() == 4);
  CHECK(find_cutcells(f, 2).empty());
  CHECK(find_cutcells(f, 3).empty());
}

TEST_CASE("cutcells in the split-square grid: face R is def 1 and 2, nothing is def 3") {
  DiskDiagram f = figure_diagram(3, 2);
  int r = figure3_face_r(f);
  auto c1 = faces_of(find_cutcells(f, 1)), c2 = faces_of(find_cutcells(f, 2));
  CHECK(std::count(c1.begin(), c1.end(), r) == 1);
  CHECK(std::count(c2.begin(), c2.end(), r) == 1);
  CHECK(find_cutcells(f, 3).empty());
  CHECK_THROWS_AS(find_cutcells(f, 4), Error);
}

TEST_CASE("def-3 cutcells are def-2 cutcells on an enumerated corpus") {
  for (const char* id : {"thm1", "eq1", "eq2"}) {
    GalleryEntry g = gallery(id);
    EnumerationConfig cfg;
    cfg.max_area = 3;
    for (const DiskDiagram& d : Enumeration(g.presentation, cfg).disks()) {
      auto c2 = faces_of(find_cutcells(d, 2)), c3 = faces_of(find_cutcells(d, 3));
      CHECK(std::includes(c2.begin(), c2.end(), c3.begin(), c3.end()));
    }
  }
}

TEST_CASE("topological disks and disk pieces") {
  GalleryEntry g = gallery("thm2");
  DiskDiagram w = wedge_of_pentagons(g.presentation);
  REQUIRE(validate(w, g.presentation).ok());
  CHECK_FALSE(is_topological_disk(w));
  auto pieces = disk_pieces(w);
  REQUIRE(pieces.size() == 2);
  for (const auto& p : pieces) {
    CHECK(area(p) == 1);
    CHECK(is_topological_disk(p));
  }
  DiskDiagram f = figure_diagram(1, 2);
  CHECK(disk_pieces(f).size() == 1);
  CHECK(disk_pieces(attach_spur(single_edge({0, 1}), 0, {1, 1})).empty());
  CHECK_FALSE(is_topological_disk(single_edge({0, 1})));
  CHECK_FALSE(is_topological_disk(DiskDiagram::single_vertex()));
}

TEST_CASE("vertex lift") {
  GalleryEntry e = gallery("eq1");
  DiskDiagram f = figure_diagram(3, 2);
  auto coords = torus_coordinates(f, e.model);
  auto b = boundary_path(f);
  MapView v(f);
  std::vector<LatticeVector> corners;
  for (std::size_t i = 0; i < b.darts.size(); i += 2) corners.push_back(coords[static_cast<std::size_t>(v.tail(b.darts[i]))]);
  CHECK(corners[0] == LatticeVector{0, 0});
  CHECK(corners[1] == LatticeVector{2, 0});
  CHECK(corners[2] == LatticeVector{2, 2});
  CHECK(corners[3] == LatticeVector{0, 2});

  GalleryEntry t = gallery("thm2");
  DiskDiagram d = single_cell(t.presentation.relators()[0]);
  CHECK(vertex_lift(d, t.model).size() == 5);
  auto lab = d.labels();
  for (int x = 0; x < d.dart_count(); ++x)
    if (lab[static_cast<std::size_t>(x)].gen == 2) lab[static_cast<std::size_t>(x)].gen = 0;
  CHECK_THROWS_AS(vertex_lift(DiskDiagram(d.opposite_map(), d.sigma_map(), lab, d.outer_dart()), t.model), Error);
}

TEST_CASE("attached spurs come off again") {
  for (const char* id : {"thm2", "eq1"}) {
    GalleryEntry g = gallery(id);
    EnumerationConfig cfg;
    cfg.max_area = 2;
    for (const DiskDiagram& d : Enumeration(g.presentation, cfg).disks())
      for (int x : boundary_path(d).darts) {
        DiskDiagram s = attach_spur(d, x, {0, 1});
        REQUIRE(validate(s, g.presentation).ok());
        CHECK(perimeter(s) == perimeter(d) + 2);
        auto sp = find_spurs(s);
        REQUIRE(sp.size() == 1);
        DiskDiagram back = remove_spur(s, sp[0].dart);
        CHECK(isomorphic(back, d));
      }
  }
}
