#pragma once

// Finite presentations, their text file format, and 2-complexes.

#include <cstddef>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "dehn/word.hpp"

namespace dehn {

class Presentation {
 public:
  Presentation() = default;

  /// Relators must be nonempty and cyclically reduced; they are kept exactly
  /// as given (perimeters count).
  Presentation(Alphabet alphabet, std::vector<Word> relators)
      : alphabet_(std::move(alphabet)), relators_(std::move(relators)) {
    for (const Word& r : relators_) {
      if (r.empty()) throw Error("relators must be nonempty");
      for (Letter x : r)
        if (x.gen < 0 || static_cast<std::size_t>(x.gen) >= alphabet_.size() || (x.sign != 1 && x.sign != -1))
          throw Error("relator letter outside the generator set");
      if (!is_cyclically_reduced(r))
        throw Error("relator is not cyclically reduced: " + alphabet_.format(r));
    }
  }

  Presentation(std::vector<std::string> gens, const std::vector<std::string>& relators) {
    Alphabet a(std::move(gens));
    std::vector<Word> rs;
    for (const auto& r : relators) rs.push_back(a.parse(r));
    *this = Presentation(std::move(a), std::move(rs));
  }

  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<Word>& relators() const { return relators_; }
  std::size_t generator_count() const { return alphabet_.size(); }

  std::size_t max_relator_length() const {
    std::size_t m = 0;
    for (const auto& r : relators_) m = std::max(m, r.size());
    return m;
  }

  std::string format(const Word& w) const { return alphabet_.format(w); }
  Word parse(std::string_view s) const { return alphabet_.parse(s); }

  std::string to_text() const {
    std::string s = "gens:";
    for (const auto& n : alphabet_.names()) s += " " + n;
    s += "\n";
    for (const auto& r : relators_) s += "rel: " + alphabet_.format(r) + "\n";
    return s;
  }

 private:
  Alphabet alphabet_;
  std::vector<Word> relators_;
};

/// Reads `gens: a b c` followed by `rel: <word>` lines. `#` starts a comment.
inline Presentation parse_presentation(std::istream& in) {
  std::vector<std::string> gens;
  std::vector<std::string> rels;
  bool have_gens = false;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    line = line.substr(first);
    auto colon = line.find(':');
    if (colon == std::string::npos) throw ParseError("line " + std::to_string(lineno) + ": expected 'key: value'");
    std::string key = line.substr(0, colon);
    std::string value = line.substr(colon + 1);
    if (key == "gens") {
      if (have_gens) throw ParseError("duplicate gens line");
      std::istringstream ss(value);
      for (std::string g; ss >> g;) gens.push_back(g);
      have_gens = true;
    } else if (key == "rel") {
      rels.push_back(value);
    } else {
      throw ParseError("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }
  if (!have_gens) throw ParseError("missing gens line");
  return Presentation(std::move(gens), rels);
}

inline Presentation parse_presentation(const std::string& text) {
  std::istringstream in(text);
  return parse_presentation(in);
}

/// A combinatorial 2-complex: oriented edges carry generator labels, faces
/// carry closed boundary circuits.
struct TwoComplex {
  struct Edge {
    int from = 0;
    int to = 0;
    int gen = 0;
  };
  struct Step {
    int edge = 0;
    int sign = 1;  // +1 traverses from -> to
  };

  int vertex_count = 0;
  std::vector<Edge> edges;
  std::vector<std::vector<Step>> faces;

  int step_tail(Step s) const { return s.sign > 0 ? edges[s.edge].from : edges[s.edge].to; }
  int step_head(Step s) const { return s.sign > 0 ? edges[s.edge].to : edges[s.edge].from; }

  bool circuits_closed() const {
    for (const auto& f : faces) {
      if (f.empty()) return false;
      for (std::size_t i = 0; i < f.size(); ++i)
        if (step_head(f[i]) != step_tail(f[(i + 1) % f.size()])) return false;
    }
    return true;
  }

  int euler_characteristic() const {
    return vertex_count - static_cast<int>(edges.size()) + static_cast<int>(faces.size());
  }
};

/// One vertex, one loop per generator, one face per relator.
inline TwoComplex presentation_complex(const Presentation& p) {
  TwoComplex x;
  x.vertex_count = 1;
  for (std::size_t g = 0; g < p.generator_count(); ++g) x.edges.push_back({0, 0, static_cast<int>(g)});
  for (const Word& r : p.relators()) {
    std::vector<TwoComplex::Step> circuit;
    for (Letter l : r) circuit.push_back({l.gen, l.sign});
    x.faces.push_back(std::move(circuit));
  }
  return x;
}

}  // namespace dehn
