#include <catch_amalgamated.hpp>

#include "dehn/area.hpp"
#include "dehn/diagram.hpp"
#include "dehn/gallery.hpp"
#include "support.hpp"

using namespace dehn;
using test_support::single_cell;

namespace {

// Pentagon [a,b]c and its reflection across the shared a edge.
DiskDiagram back_to_back(const Presentation& p) {
  PlanarBuilder b;
  int v0 = b.add_vertex(), v1 = b.add_vertex();
  int up[3], dn[3];
  for (int& v : up) v = b.add_vertex();
  for (int& v : dn) v = b.add_vertex();
  Word w = p.relators()[0];
  b.add_segment(v0, v1, w[0], {0, 0}, {1, 0});
  std::vector<test_support::Point> pu{{1, 0}, {1.3, 0.8}, {0.5, 1.3}, {-0.3, 0.8}, {0, 0}};
  std::vector<int> vu{v1, up[0], up[1], up[2], v0};
  int outer = -1;
  for (int s : {1, -1}) {
    const auto& vs = s > 0 ? vu : std::vector<int>{v1, dn[0], dn[1], dn[2], v0};
    for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
      auto a = pu[i], c = pu[i + 1];
      a.second *= s;
      c.second *= s;
      int d = b.add_segment(vs[i], vs[i + 1], w[i + 1], a, c);
      if (s > 0 && i == 0) outer = d;
    }
  }
  return b.build(outer);
}

}  // namespace

TEST_CASE("single pentagon is a valid diagram with V=5, E=5, F=2") {
  GalleryEntry g = gallery("thm2");
  DiskDiagram d = single_cell(g.presentation.relators()[0]);
  auto rep = validate(d, g.presentation);
  CHECK(rep.ok());
  CHECK(rep.vertices == 5);
  CHECK(rep.edges == 5);
  CHECK(rep.faces == 2);
  CHECK(area(d) == 1);
  CHECK(CyclicWord(boundary_path(d).word).unoriented() ==
        CyclicWord(g.presentation.parse("a b A B c")).unoriented());
  CHECK(perimeter(d) == 5);
  CHECK(is_reduced(d, g.presentation));
  CHECK(is_topological_disk(d));
}

TEST_CASE("monogon is valid") {
  GalleryEntry g = gallery("thm2");
  DiskDiagram d = single_cell(g.presentation.parse("c"));
  CHECK(validate(d, g.presentation).ok());
  CHECK(area(d) == 1);
  CHECK(perimeter(d) == 1);
}

TEST_CASE("single vertex diagram") {
  GalleryEntry g = gallery("thm2");
  DiskDiagram d = DiskDiagram::single_vertex();
  CHECK(validate(d, g.presentation).ok());
  CHECK(area(d) == 0);
  CHECK(perimeter(d) == 0);
  CHECK(boundary_path(d).word.empty());
}

TEST_CASE("grid figures are valid and have the expected boundary") {
  for (int n = 1; n <= 4; ++n) {
    GalleryEntry t2 = gallery("thm2"), e1 = gallery("eq1");
    DiskDiagram f1 = figure_diagram(1, n), f3 = figure_diagram(3, n);
    CHECK(validate(f1, t2.presentation).ok());
    CHECK(validate(f3, e1.presentation).ok());
    CHECK(area(f1) == 2 * n * n);
    CHECK(area(f3) == 2 * n * n);
    CHECK(boundary_path(f1).word == power_commutator(Letter{0, 1}, Letter{1, 1}, n));
    CHECK(boundary_path(f3).word == power_commutator(Letter{0, 1}, Letter{1, 1}, n));
    CHECK(is_reduced(f1, t2.presentation));
    CHECK(is_reduced(f3, e1.presentation));
    CHECK(is_topological_disk(f1));
    CHECK(is_topological_disk(f3));
  }
}

TEST_CASE("back-to-back pentagons are not reduced") {
  GalleryEntry g = gallery("thm2");
  DiskDiagram d = back_to_back(g.presentation);
  REQUIRE(validate(d, g.presentation).ok());
  auto pair = find_reduction_pair(d, g.presentation);
  REQUIRE(pair);
  CHECK_FALSE(is_reduced(d, g.presentation));
}

TEST_CASE("validate reports broken maps") {
  GalleryEntry g = gallery("thm2");
  DiskDiagram d = single_cell(g.presentation.relators()[0]);

  auto opp = d.opposite_map();
  std::swap(opp[0], opp[2]);
  CHECK_FALSE(validate(DiskDiagram(opp, d.sigma_map(), d.labels(), d.outer_dart()), g.presentation).ok());

  auto lab = d.labels();
  lab[0] = Letter{2, 1};
  lab[1] = Letter{2, -1};
  CHECK_FALSE(validate(DiskDiagram(d.opposite_map(), d.sigma_map(), lab, d.outer_dart()), g.presentation).ok());

  auto lab2 = d.labels();
  lab2[0] = lab2[0].inverse();
  CHECK_FALSE(validate(DiskDiagram(d.opposite_map(), d.sigma_map(), lab2, d.outer_dart()), g.presentation).ok());

  // Two disjoint pentagons: not connected, two outer-looking faces.
  DiskDiagram two = single_cell(g.presentation.relators()[0]);
  const int n = d.dart_count();
  auto o2 = d.opposite_map(), s2 = d.sigma_map();
  auto l2 = d.labels();
  for (int x = 0; x < n; ++x) {
    o2.push_back(two.opposite(x) + n);
    s2.push_back(two.sigma(x) + n);
    l2.push_back(two.label(x));
  }
  auto rep = validate(DiskDiagram(o2, s2, l2, d.outer_dart()), g.presentation);
  CHECK_FALSE(rep.ok());
}

TEST_CASE("isomorphism ignores dart numbering and optionally mirror image") {
  DiskDiagram f = figure_diagram(3, 2);
  DiskDiagram c = canonical_form(f);
  CHECK(isomorphic(f, c));
  CHECK(isomorphic(f, f.mirror()));
  CHECK(canonical_code(f, false) != canonical_code(f.mirror(), false));
  CHECK_FALSE(isomorphic(f, figure_diagram(3, 1)));
}
