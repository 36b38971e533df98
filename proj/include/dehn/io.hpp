#pragma once

// JSON and DOT serialization of disk diagrams.

#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "dehn/diagram.hpp"
#include "dehn/features.hpp"
#include "dehn/presentation.hpp"

namespace dehn {

/// {"darts": N, "opposite": [...], "sigma": [...], "labels": ["a1", "b1^-1", ...], "outer_face_dart": i}
inline nlohmann::json diagram_to_json(const DiskDiagram& d, const Alphabet& a) {
  nlohmann::json j;
  j["darts"] = d.dart_count();
  j["opposite"] = d.opposite_map();
  j["sigma"] = d.sigma_map();
  auto labels = nlohmann::json::array();
  for (Letter l : d.labels()) labels.push_back(a.format_letter(l));
  j["labels"] = labels;
  j["outer_face_dart"] = d.outer_dart();
  return j;
}

inline DiskDiagram diagram_from_json(const nlohmann::json& j, const Alphabet& a) {
  try {
    const int n = j.at("darts").get<int>();
    auto opp = j.at("opposite").get<std::vector<int>>();
    auto sig = j.at("sigma").get<std::vector<int>>();
    std::vector<Letter> lab;
    for (const auto& s : j.at("labels")) {
      Word w = a.parse(s.get<std::string>());
      if (w.size() != 1) throw ParseError("label is not a single letter: " + s.get<std::string>());
      lab.push_back(w[0]);
    }
    const int outer = j.at("outer_face_dart").get<int>();
    if (n < 0 || static_cast<int>(opp.size()) != n || static_cast<int>(sig.size()) != n ||
        static_cast<int>(lab.size()) != n)
      throw ParseError("diagram arrays do not match the dart count");
    if (n == 0 && outer != -1) throw ParseError("single-vertex diagram must have outer_face_dart -1");
    if (n > 0 && (outer < 0 || outer >= n)) throw ParseError("outer_face_dart out of range");
    for (int x = 0; x < n; ++x)
      if (opp[static_cast<std::size_t>(x)] < 0 || opp[static_cast<std::size_t>(x)] >= n ||
          sig[static_cast<std::size_t>(x)] < 0 || sig[static_cast<std::size_t>(x)] >= n)
        throw ParseError("dart index out of range");
    return DiskDiagram(std::move(opp), std::move(sig), std::move(lab), outer);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad diagram JSON: ") + e.what());
  }
}

inline DiskDiagram diagram_from_json(const std::string& text, const Alphabet& a) {
  try {
    return diagram_from_json(nlohmann::json::parse(text), a);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("bad diagram JSON: ") + e.what());
  }
}

struct DotOptions {
  std::string name = "diagram";
  int cutcell_def = 1;
  std::vector<int> highlight_faces;  // MapView face indices, drawn red
};

/// Vertices, labelled directed edges, and one box per 2-cell carrying its
/// word and detected features. Shells green, cutcells orange.
inline std::string diagram_to_dot(const DiskDiagram& d, const Alphabet& a, const DotOptions& opt = {}) {
  MapView v(d);
  std::set<int> shells, cuts, spur_vertices;
  for (const auto& w : find_shells(d)) shells.insert(w.face);
  for (const auto& w : find_cutcells(d, opt.cutcell_def)) cuts.insert(w.face);
  for (const auto& w : find_spurs(d)) spur_vertices.insert(w.vertex);
  std::set<int> hi(opt.highlight_faces.begin(), opt.highlight_faces.end());

  std::ostringstream o;
  o << "digraph " << opt.name << " {\n  node [shape=point];\n";
  for (int x = 0; x < v.vertex_count; ++x) {
    o << "  v" << x;
    if (spur_vertices.count(x)) o << " [color=blue]";
    o << ";\n";
  }
  for (int x = 0; x < d.dart_count(); ++x) {
    Letter l = d.label(x);
    if (l.sign < 0) continue;
    o << "  v" << v.tail(x) << " -> v" << v.head(d, x) << " [label=\"" << a.name(l.gen) << "\"";
    if (v.is_outer(x) || v.is_outer(d.opposite(x))) o << ", penwidth=2";
    o << "];\n";
  }
  for (int f : v.inner_faces()) {
    std::string fill = hi.count(f) ? "red" : shells.count(f) ? "green" : cuts.count(f) ? "orange" : "white";
    std::string tags;
    if (hi.count(f)) tags += " R";
    if (shells.count(f)) tags += " shell";
    if (cuts.count(f)) tags += " cutcell" + std::to_string(opt.cutcell_def);
    o << "  f" << f << " [shape=box, style=filled, fillcolor=" << fill << ", label=\"" << a.format(v.face_word(d, f))
      << tags << "\"];\n";
    std::set<int> verts;
    for (int x : v.faces[static_cast<std::size_t>(f)]) verts.insert(v.tail(x));
    for (int u : verts) o << "  f" << f << " -> v" << u << " [style=dotted, arrowhead=none];\n";
  }
  o << "}\n";
  return o.str();
}

}  // namespace dehn
