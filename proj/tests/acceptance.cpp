// Exhaustive desk-scale checks. One PASS/FAIL line per check; the exit status
// counts only failures that are not listed in known_red.
#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "dehn/area.hpp"
#include "dehn/dehn_props.hpp"
#include "dehn/gallery.hpp"

using namespace dehn;

namespace {

const std::set<int> known_red{3, 9};

struct Outcome {
  bool pass = false;
  std::string detail;
};

int unexpected = 0;

void run(int n, const std::string& title, const std::function<Outcome()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << n << ": " << title << " -- " << o.detail << " ("
            << static_cast<int>(s * 10) / 10.0 << "s)";
  if (!o.pass && known_red.count(n)) std::cout << " [known]";
  std::cout << std::endl;
  if (!o.pass && !known_red.count(n)) ++unexpected;
}

std::string summary(const PropertyReport& r) {
  std::ostringstream o;
  o << "scanned " << r.scanned << ", exempt " << r.exempt << ", not minimal " << r.not_minimal << ", unknown "
    << r.unknown << ", violations " << r.violations.size();
  return o.str();
}

bool has_face(const std::vector<FeatureWitness>& ws, int f) {
  for (const auto& w : ws)
    if (w.face == f) return true;
  return false;
}

Outcome generalized_scan(const char* id, int def, int max_area) {
  GalleryEntry g = gallery(id);
  PropertyReport r = check_generalized_dehn(g.presentation, def, max_area);
  return {r.holds() && r.unknown == 0, summary(r)};
}

Outcome lone_commutator_pair() {
  GalleryEntry g = gallery("eq1");
  EnumerationConfig cfg;
  cfg.max_area = 4;
  Enumeration e(g.presentation, cfg);
  MinimalCorpus c = minimal_corpus(e);
  const CyclicWord target = CyclicWord(g.presentation.parse("a1 b1 A1 B1")).unoriented();
  std::ostringstream o;
  bool pass = c.unknown == 0;
  for (int def : {1, 2}) {
    PropertyReport r = check_property(c, def);
    std::size_t embedded = 0;
    bool only = r.violations.size() == 1;
    for (const auto& v : r.violations) {
      if (lift_is_injective(v.diagram, g.model)) ++embedded;
      if (only)
        only = area(v.diagram) == 2 && CyclicWord(boundary_path(v.diagram).word).unoriented() == target;
    }
    pass = pass && only;
    o << "def" << def << ": " << r.violations.size() << " violations (" << embedded
      << " with injective lift); ";
  }
  o << "non-embedded violations wrap twice around one square";
  return {pass, o.str()};
}

Outcome figures() {
  std::ostringstream o;
  bool pass = true;
  {
    DiskDiagram f = figure_diagram(1, 2);
    MapView v(f);
    std::size_t pentagon_cuts = 0, pentagon_strong = 0, pentagons = 0;
    auto c1 = find_cutcells(f, 1), c2 = find_cutcells(f, 2), c3 = find_cutcells(f, 3);
    for (int x : v.inner_faces()) {
      if (v.faces[static_cast<std::size_t>(x)].size() != 5) continue;
      ++pentagons;
      pentagon_cuts += has_face(c1, x);
      pentagon_strong += has_face(c2, x) + has_face(c3, x);
    }
    bool ok = find_spurs(f).empty() && find_shells(f).empty() && pentagons == 4 && c1.size() == 4 &&
              pentagon_cuts == 4 && pentagon_strong == 0;
    pass = pass && ok;
    o << "pentagon grid: " << find_spurs(f).size() << " spurs, " << find_shells(f).size() << " shells, " << c1.size()
      << " def-1 cutcells (" << pentagon_cuts << " pentagons), " << pentagon_strong << " def-2/3 on pentagons; ";
  }
  {
    DiskDiagram f = figure_diagram(3, 2);
    int r = figure3_face_r(f);
    auto c1 = find_cutcells(f, 1), c2 = find_cutcells(f, 2), c3 = find_cutcells(f, 3);
    bool ok = find_spurs(f).empty() && find_shells(f).empty() && has_face(c1, r) && has_face(c2, r) && c3.empty();
    pass = pass && ok;
    o << "split-square grid: " << find_spurs(f).size() << " spurs, " << find_shells(f).size() << " shells, "
      << c1.size() << " def-1 / " << c2.size() << " def-2 / " << c3.size() << " def-3 cutcells, R is "
      << (has_face(c1, r) && has_face(c2, r) ? "" : "not ") << "a def-1 and def-2 cutcell";
  }
  return {pass, o.str()};
}

Outcome embedding() {
  std::ostringstream o;
  bool pass = true;
  for (const char* id : {"thm1", "eq1", "thm2"}) {
    GalleryEntry g = gallery(id);
    o << id << ":";
    for (std::size_t i = 0; i < g.presentation.relators().size(); ++i) {
      const Word& r = g.presentation.relators()[i];
      bool e = g.model.cell_embeds(r);
      bool want = std::string(id) != "thm2" || i != 0;
      pass = pass && e == want;
      o << " " << (e ? "embeds" : "no");
    }
    o << "; ";
  }
  return {pass, o.str()};
}

Outcome big_pieces() {
  GalleryEntry t1 = gallery("thm1"), e2 = gallery("eq2");
  auto w = big_piece(t1.presentation);
  bool pass = !has_big_pieces(e2.presentation) && w && t1.presentation.format(w->word) == "c1c2c3";
  std::ostringstream o;
  o << "eq2 big pieces: " << (has_big_pieces(e2.presentation) ? "yes" : "no") << "; thm1 witness: "
    << (w ? t1.presentation.format(w->word) : std::string("none"));
  return {pass, o.str()};
}

Outcome area_growth() {
  GalleryEntry g = gallery("thm2");
  LatticeFillingBound lb(g.presentation, g.model);
  AreaOracleOptions opt;
  opt.bound = 32;
  opt.lattice = &lb;
  auto rows = dehn_table(g.presentation, [](int n) { return power_commutator(Letter{0, 1}, Letter{1, 1}, n); }, 1,
                         3, opt);
  bool pass = true;
  double last = 0;
  std::ostringstream o;
  for (const auto& r : rows) {
    bool ok = r.result.certified_exact && r.result.value && *r.result.value == 2 * r.n * r.n;
    double ratio = r.result.value ? static_cast<double>(*r.result.value) / static_cast<double>(r.length) : 0;
    ok = ok && ratio > last;
    last = ratio;
    pass = pass && ok;
    o << "n=" << r.n << " area " << (r.result.value ? std::to_string(*r.result.value) : "?")
      << (r.result.certified_exact ? "" : " uncertified") << " ratio " << ratio << "; ";
  }
  return {pass, o.str()};
}

long long f_brute(int c, int n, std::vector<long long>& memo) {
  if (n == 0) return 0;
  if (memo[static_cast<std::size_t>(n)] >= 0) return memo[static_cast<std::size_t>(n)];
  long long best = 0;
  std::function<void(int, int, long long)> walk = [&](int max_part, int room, long long acc) {
    best = std::max(best, acc);
    for (int part = std::min(max_part, room); part >= 1; --part) walk(part, room - part, acc + f_brute(c, part, memo));
  };
  walk(n - 1, n + c, 0);
  return memo[static_cast<std::size_t>(n)] = 1 + best;
}

Outcome f_recursion() {
  bool pass = true;
  std::ostringstream o;
  for (int c = 1; c <= 6; ++c) {
    FSequence s = f_values(c, 30);
    PropositionReport r = verify_proposition_bound(c, 30);
    bool ok = s.values[0] == 0 && s.values[1] == 1 && r.ok() &&
              r.slope == s.values[static_cast<std::size_t>(c + 2)] - s.values[static_cast<std::size_t>(c + 1)];
    std::vector<long long> memo(13, -1);
    for (int n = 0; n <= 12; ++n) ok = ok && s.values[static_cast<std::size_t>(n)] == f_brute(c, n, memo);
    pass = pass && ok;
    o << "c=" << c << " slope " << r.slope << (ok ? "" : " BAD") << "; ";
  }
  return {pass, o.str()};
}

Outcome corners() {
  GalleryEntry g = gallery("thm1");
  EnumerationConfig cfg;
  cfg.max_area = 5;
  Enumeration e(g.presentation, cfg);
  std::size_t checked = 0, mismatched = 0;
  std::map<int, std::pair<std::size_t, std::size_t>> by_area;
  for (const DiskDiagram& d : e.disks()) {
    int a = area(d);
    if (a < 2 || !is_topological_disk(d)) continue;
    ++checked;
    ++by_area[a].second;
    if (!corner_prediction_confirmed(d, corner_classification(d, g.presentation, g.model))) {
      ++mismatched;
      ++by_area[a].first;
    }
  }
  std::ostringstream o;
  o << mismatched << " mismatches in " << checked << " disks (";
  for (auto [a, k] : by_area) o << "area " << a << ": " << k.first << "/" << k.second << " ";
  o << ")";
  return {mismatched == 0, o.str()};
}

Outcome local_moves() {
  std::size_t shells = 0, spurs = 0, bad = 0;
  std::ostringstream o;
  for (const char* id : {"thm1", "thm2", "eq1", "eq2"}) {
    GalleryEntry g = gallery(id);
    EnumerationConfig cfg;
    cfg.max_area = 4;
    Enumeration e(g.presentation, cfg);
    for (const DiskDiagram& d : e.disks()) {
      const int a = area(d), per = perimeter(d);
      for (const auto& w : find_shells(d)) {
        ++shells;
        DiskDiagram r = remove_shell(d, w.dart);
        if (area(r) != a - 1 || perimeter(r) > per - 1 || !validate(r, g.presentation).ok()) ++bad;
      }
      for (const auto& w : find_spurs(d)) {
        ++spurs;
        DiskDiagram r = remove_spur(d, w.dart);
        if (perimeter(r) != per - 2 || !validate(r, g.presentation).ok()) ++bad;
      }
      // enumerated disks carry no spurs; hang one at every boundary corner
      for (int x : boundary_path(d).darts) {
        DiskDiagram s = attach_spur(d, x, Letter{0, 1});
        for (const auto& w : find_spurs(s)) {
          ++spurs;
          DiskDiagram r = remove_spur(s, w.dart);
          if (perimeter(r) != perimeter(s) - 2 || area(r) != area(s) || !validate(r, g.presentation).ok() ||
              !isomorphic(r, d))
            ++bad;
        }
      }
    }
  }
  o << shells << " shell removals, " << spurs << " spur removals, " << bad << " contract violations";
  return {bad == 0 && shells > 0 && spurs > 0, o.str()};
}

}  // namespace

int main() {
  run(1, "Z^2 presentation, def-1 cutcells, area <= 6", [] { return generalized_scan("thm2", 1, 6); });
  run(2, "Z^2 * F_4 presentation, def-3 cutcells, area <= 5", [] { return generalized_scan("thm1", 3, 5); });
  run(3, "Z^2 * F_2 commutator pair is the only violation at area <= 4", lone_commutator_pair);
  run(4, "grid figure classifications", figures);
  run(5, "cell embedding", embedding);
  run(6, "big pieces", big_pieces);
  run(7, "area of [a^n, b^n] is 2n^2 for n <= 3", area_growth);
  run(8, "f(n) recursion", f_recursion);
  run(9, "corner classifier concordance, area 2..5", corners);
  run(10, "local move contracts, area <= 4", local_moves);
  std::cout << unexpected << " unexpected failure(s)" << std::endl;
  return unexpected == 0 ? 0 : 1;
}
