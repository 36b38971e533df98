#include <catch_amalgamated.hpp>

#include <algorithm>
#include <functional>

#include "dehn/dehn_props.hpp"
#include "dehn/gallery.hpp"

using namespace dehn;

namespace {

// f(n) straight from the definition: walk every multiset of parts below n
// whose sum stays within n + c.
long long f_brute(int c, int n, std::vector<long long>& memo) {
  if (n == 0) return 0;
  if (memo[static_cast<std::size_t>(n)] >= 0) return memo[static_cast<std::size_t>(n)];
  long long best = 0;
  std::function<void(int, int, long long)> walk = [&](int max_part, int room, long long acc) {
    best = std::max(best, acc);
    for (int part = std::min(max_part, room); part >= 1; --part)
      walk(part, room - part, acc + f_brute(c, part, memo));
  };
  walk(n - 1, n + c, 0);
  return memo[static_cast<std::size_t>(n)] = 1 + best;
}

}  // namespace

TEST_CASE("f(n): definition by brute force matches the knapsack") {
  for (int c = 1; c <= 6; ++c) {
    FSequence s = f_values(c, 12);
    std::vector<long long> memo(13, -1);
    for (int n = 0; n <= 12; ++n) CHECK(s.values[static_cast<std::size_t>(n)] == f_brute(c, n, memo));
  }
}

TEST_CASE("f(n): arithmetic tail with slope f(c+2) - f(c+1)") {
  for (int c = 1; c <= 6; ++c) {
    FSequence s = f_values(c, 30);
    CHECK(s.values[0] == 0);
    CHECK(s.values[1] == 1);
    PropositionReport r = verify_proposition_bound(c, 30);
    CHECK(r.increments_nondecreasing);
    CHECK(r.arithmetic_tail);
    CHECK(r.ok());
    CHECK(r.slope == s.values[static_cast<std::size_t>(c + 2)] - s.values[static_cast<std::size_t>(c + 1)]);
    CHECK(r.K == r.slope - 1);
  }
  CHECK(f_values(1, 6).values == std::vector<long long>{0, 1, 4, 9, 14, 19, 24});
  CHECK_THROWS_AS(f_values(0, 5), Error);
  CHECK_THROWS_AS(verify_proposition_bound(5, 6), Error);
}

TEST_CASE("pieces") {
  GalleryEntry t1 = gallery("thm1"), e2 = gallery("eq2"), e1 = gallery("eq1");
  auto big = big_piece(t1.presentation);
  REQUIRE(big);
  CHECK(t1.presentation.format(big->word) == "c1c2c3");
  CHECK(has_big_pieces(t1.presentation));
  CHECK_FALSE(has_big_pieces(e2.presentation));
  for (const Piece& x : pieces(e2.presentation)) CHECK(2 * x.word.size() < 3);
  CHECK(has_big_pieces(e1.presentation));
  Presentation free_group({"a", "b"}, {"a a b b b"});
  for (const Piece& x : pieces(free_group)) CHECK(x.word.size() <= 2);
}

TEST_CASE("cells embed") {
  CHECK(check_cells_embed(gallery("thm1").presentation, gallery("thm1").model).holds());
  CHECK(check_cells_embed(gallery("eq1").presentation, gallery("eq1").model).holds());
  CHECK(check_cells_embed(gallery("eq2").presentation, gallery("eq2").model).holds());
  auto r = check_cells_embed(gallery("thm2").presentation, gallery("thm2").model);
  CHECK(r.violations.size() == 1);
}

TEST_CASE("Z^2 presentation: generalized Dehn with def-1 cutcells but not Dehn") {
  GalleryEntry g = gallery("thm2");
  PropertyReport gd = check_generalized_dehn(g.presentation, 1, 5);
  CHECK(gd.holds());
  CHECK(gd.unknown == 0);
  CHECK(gd.exempt == 2);
  PropertyReport d = check_dehn(g.presentation, 5);
  CHECK_FALSE(d.holds());
  for (const auto& v : d.violations) {
    CHECK(find_spurs(v.diagram).empty());
    CHECK(find_shells(v.diagram).empty());
  }
  DiskDiagram f = figure_diagram(1, 2);
  CHECK(find_shells(f).empty());
  CHECK(find_cutcells(f, 2).empty());
}

TEST_CASE("scans with the relator search cross-check agree") {
  GalleryEntry g = gallery("thm2");
  LatticeFillingBound lb(g.presentation, g.model);
  CorpusOptions opt;
  opt.cross_check_relator_search = true;
  opt.lattice = &lb;
  PropertyReport r = check_generalized_dehn(g.presentation, 1, 4, opt);
  CHECK(r.holds());
  CHECK(r.unknown == 0);
}

TEST_CASE("Z^2 * F_2 presentation: commutator cell pair lacks spurs, shells and cutcells") {
  GalleryEntry g = gallery("eq1");
  EnumerationConfig cfg;
  cfg.max_area = 4;
  MinimalCorpus c = minimal_corpus(Enumeration(g.presentation, cfg));
  for (int def : {1, 2}) {
    PropertyReport r = check_property(c, def);
    REQUIRE_FALSE(r.holds());
    std::size_t embedded = 0;
    for (const auto& v : r.violations) {
      CHECK(CyclicWord(boundary_path(v.diagram).word).unoriented().size() % 4 == 0);
      if (lift_is_injective(v.diagram, g.model)) {
        ++embedded;
        CHECK(area(v.diagram) == 2);
        CHECK(CyclicWord(boundary_path(v.diagram).word).unoriented() ==
              CyclicWord(g.presentation.parse("a1 b1 A1 B1")).unoriented());
      } else {
        // wraps twice around one square of the plane
        CHECK(area(v.diagram) == 4);
        CHECK(CyclicWord(boundary_path(v.diagram).word).unoriented() ==
              CyclicWord(g.presentation.parse("a1 b1 A1 B1 a1 b1 A1 B1")).unoriented());
      }
    }
    CHECK(embedded == 1);
  }
  PropertyReport r3 = check_property(c, 3);
  CHECK(r3.violations.size() > check_property(c, 1).violations.size());
}

TEST_CASE("property argument checks") {
  GalleryEntry g = gallery("thm2");
  CHECK_THROWS_AS(check_generalized_dehn(g.presentation, 4, 2), Error);
  CHECK_THROWS_AS(check_generalized_dehn(g.presentation, 0, 2), Error);
}
