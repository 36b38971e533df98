#pragma once

// Local features of disk diagrams (spurs, shells, cutcells), reducedness,
// the removal moves, the topological-disk decomposition and vertex lifts.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "dehn/diagram.hpp"
#include "dehn/group_model.hpp"

namespace dehn {

enum class FeatureKind { Spur, Shell, Cutcell };

struct FeatureWitness {
  FeatureKind kind = FeatureKind::Spur;
  int cutcell_def = 0;  // 1, 2 or 3 for cutcells
  int vertex = -1;      // spurs
  int dart = -1;        // spur: the edge leading to the spur; faces: first dart of the face cycle
  int face = -1;        // MapView face index
  int arc_start = -1;   // shells: index into the face cycle
  int arc_length = 0;   // shells: edges of the free arc
  int components = 0;   // cutcells: pieces counted by the definition
};

namespace detail {

struct OuterIndex {
  std::vector<int> pos;  // dart -> position on the boundary circuit, or -1
  int perimeter = 0;

  OuterIndex(const DiskDiagram& d) : pos(static_cast<std::size_t>(d.dart_count()), -1) {
    auto b = boundary_path(d);
    perimeter = static_cast<int>(b.darts.size());
    for (int i = 0; i < perimeter; ++i) pos[static_cast<std::size_t>(b.darts[static_cast<std::size_t>(i)])] = i;
  }
  bool on(int dart) const { return pos[static_cast<std::size_t>(dart)] >= 0; }
};

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

/// Maximal arc of a face that runs along the boundary circuit consistently.
struct FreeArc {
  int start = -1;
  int length = 0;
  bool full_circle = false;
};

inline FreeArc longest_free_arc(const DiskDiagram& d, const MapView& v, const OuterIndex& oi, int f) {
  const auto& cyc = v.faces[static_cast<std::size_t>(f)];
  const int L = static_cast<int>(cyc.size());
  auto free_at = [&](int j) { return oi.on(d.opposite(cyc[static_cast<std::size_t>(j % L)])); };
  // the boundary runs along the face backwards: opp(r_{j+1}) then opp(r_j)
  auto linked = [&](int j) {
    int a = d.opposite(cyc[static_cast<std::size_t>(j % L)]);
    int b = d.opposite(cyc[static_cast<std::size_t>((j + 1) % L)]);
    return oi.on(a) && oi.on(b) &&
           oi.pos[static_cast<std::size_t>(a)] == (oi.pos[static_cast<std::size_t>(b)] + 1) % oi.perimeter;
  };
  FreeArc best;
  bool all = true;
  for (int j = 0; j < L && all; ++j) all = free_at(j) && linked(j);
  if (all) return {0, L, true};
  for (int j = 0; j < L; ++j) {
    if (!free_at(j)) continue;
    int prev = (j + L - 1) % L;
    if (free_at(prev) && linked(prev)) continue;  // not the start of a run
    int len = 1;
    while (len < L && linked(j + len - 1)) ++len;
    if (len > best.length) best = {j, len, false};
  }
  return best;
}

/// Rebuilds the diagram keeping only darts with keep[d] (closed under
/// opposite). The new outer face is the one containing `outer_hint`'s image.
inline DiskDiagram restrict_darts(const DiskDiagram& d, const std::vector<char>& keep, int outer_hint) {
  const int n = d.dart_count();
  std::vector<int> id(static_cast<std::size_t>(n), -1);
  int m = 0;
  for (int x = 0; x < n; ++x)
    if (keep[static_cast<std::size_t>(x)]) id[static_cast<std::size_t>(x)] = m++;
  if (m == 0) return DiskDiagram::single_vertex();
  std::vector<int> opp(static_cast<std::size_t>(m)), sig(static_cast<std::size_t>(m));
  std::vector<Letter> lab(static_cast<std::size_t>(m));
  for (int x = 0; x < n; ++x) {
    if (!keep[static_cast<std::size_t>(x)]) continue;
    auto i = static_cast<std::size_t>(id[static_cast<std::size_t>(x)]);
    opp[i] = id[static_cast<std::size_t>(d.opposite(x))];
    int y = d.sigma(x);
    while (!keep[static_cast<std::size_t>(y)]) y = d.sigma(y);
    sig[i] = id[static_cast<std::size_t>(y)];
    lab[i] = d.label(x);
  }
  return DiskDiagram(std::move(opp), std::move(sig), std::move(lab), id[static_cast<std::size_t>(outer_hint)]);
}

}  // namespace detail

/// A back-to-back pair of faces across the edge of `dart`.
struct ReductionPair {
  int face_a = -1;
  int face_b = -1;
  int dart = -1;
};

/// Looks for adjacent faces mapping to the same relator cell with mirrored
/// edge sequences starting from a shared edge.
inline std::optional<ReductionPair> find_reduction_pair(const DiskDiagram& d, const Presentation& p) {
  if (d.dart_count() == 0) return std::nullopt;
  MapView v(d);
  auto tags = face_tags(d, v, p);
  std::vector<int> index_in_face(static_cast<std::size_t>(d.dart_count()));
  for (const auto& cyc : v.faces)
    for (std::size_t i = 0; i < cyc.size(); ++i) index_in_face[static_cast<std::size_t>(cyc[i])] = static_cast<int>(i);
  for (int x = 0; x < d.dart_count(); ++x) {
    int y = d.opposite(x);
    int fa = v.face_of[static_cast<std::size_t>(x)], fb = v.face_of[static_cast<std::size_t>(y)];
    if (fa == v.outer_face || fb == v.outer_face || fa >= fb) continue;
    const auto& ta = tags[static_cast<std::size_t>(fa)];
    const auto& tb = tags[static_cast<std::size_t>(fb)];
    if (!ta || !tb || ta->relator != tb->relator) continue;
    const auto& ca = v.faces[static_cast<std::size_t>(fa)];
    const auto& cb = v.faces[static_cast<std::size_t>(fb)];
    if (ca.size() != cb.size()) continue;
    const int L = static_cast<int>(ca.size());
    int ia = index_in_face[static_cast<std::size_t>(x)], ib = index_in_face[static_cast<std::size_t>(y)];
    bool mirror = true;
    for (int j = 0; j < L && mirror; ++j) {
      Letter la = d.label(ca[static_cast<std::size_t>((ia + j) % L)]);
      Letter lb = d.label(cb[static_cast<std::size_t>(((ib - j) % L + L) % L)]);
      mirror = la == lb.inverse();
    }
    if (mirror) return ReductionPair{fa, fb, x};
  }
  return std::nullopt;
}

inline bool is_reduced(const DiskDiagram& d, const Presentation& p) { return !find_reduction_pair(d, p); }

/// Valence-1 vertices, each with the dart leaving it.
inline std::vector<FeatureWitness> find_spurs(const DiskDiagram& d) {
  std::vector<FeatureWitness> out;
  if (d.dart_count() == 0) return out;
  MapView v(d);
  for (int u = 0; u < v.vertex_count; ++u)
    if (v.degree(u) == 1) {
      FeatureWitness w;
      w.kind = FeatureKind::Spur;
      w.vertex = u;
      w.dart = v.rotation[static_cast<std::size_t>(u)][0];
      out.push_back(w);
    }
  return out;
}

/// Inner faces with a contiguous arc of more than half their perimeter that
/// is also a contiguous stretch of the boundary circuit.
inline std::vector<FeatureWitness> find_shells(const DiskDiagram& d) {
  std::vector<FeatureWitness> out;
  if (d.dart_count() == 0) return out;
  MapView v(d);
  detail::OuterIndex oi(d);
  for (int f : v.inner_faces()) {
    auto arc = detail::longest_free_arc(d, v, oi, f);
    const int L = static_cast<int>(v.faces[static_cast<std::size_t>(f)].size());
    if (2 * arc.length > L) {
      FeatureWitness w;
      w.kind = FeatureKind::Shell;
      w.face = f;
      w.dart = v.faces[static_cast<std::size_t>(f)][0];
      w.arc_start = arc.start;
      w.arc_length = arc.length;
      out.push_back(w);
    }
  }
  return out;
}

namespace detail {

// Components of D - closure(R).
inline int complement_components(const DiskDiagram& d, const MapView& v, int f) {
  const int n = d.dart_count();
  const int V = v.vertex_count;
  const int F = static_cast<int>(v.faces.size());
  std::vector<char> vin(static_cast<std::size_t>(V), 0), ein(static_cast<std::size_t>(n), 0);
  for (int x : v.faces[static_cast<std::size_t>(f)]) {
    vin[static_cast<std::size_t>(v.tail(x))] = 1;
    ein[static_cast<std::size_t>(x)] = ein[static_cast<std::size_t>(d.opposite(x))] = 1;
  }
  // elements: vertices [0,V), darts as edges [V, V+n), faces [V+n, V+n+F)
  UnionFind uf(static_cast<std::size_t>(V + n + F));
  std::vector<char> present(static_cast<std::size_t>(V + n + F), 0);
  for (int u = 0; u < V; ++u) present[static_cast<std::size_t>(u)] = !vin[static_cast<std::size_t>(u)];
  for (int x = 0; x < n; ++x) {
    if (ein[static_cast<std::size_t>(x)] || x > d.opposite(x)) continue;
    present[static_cast<std::size_t>(V + x)] = 1;
    for (int end : {v.tail(x), v.head(d, x)})
      if (!vin[static_cast<std::size_t>(end)]) uf.unite(V + x, end);
  }
  for (int g : v.inner_faces()) {
    if (g == f) continue;
    present[static_cast<std::size_t>(V + n + g)] = 1;
    for (int x : v.faces[static_cast<std::size_t>(g)]) {
      int e = std::min(x, d.opposite(x));
      if (!ein[static_cast<std::size_t>(e)]) uf.unite(V + n + g, V + e);
      if (!vin[static_cast<std::size_t>(v.tail(x))]) uf.unite(V + n + g, v.tail(x));
    }
  }
  std::vector<char> root(static_cast<std::size_t>(V + n + F), 0);
  int count = 0;
  for (int i = 0; i < V + n + F; ++i)
    if (present[static_cast<std::size_t>(i)] && !root[static_cast<std::size_t>(uf.find(i))]++) ++count;
  return count;
}

// Components of the preimage of closure(R) on the boundary circle; `all_nontrivial`
// reports whether each component contains an edge.
inline std::pair<int, bool> boundary_preimage(const DiskDiagram& d, const MapView& v, int f) {
  auto b = boundary_path(d);
  const int P = static_cast<int>(b.darts.size());
  std::vector<char> vin(static_cast<std::size_t>(v.vertex_count), 0);
  for (int x : v.faces[static_cast<std::size_t>(f)]) vin[static_cast<std::size_t>(v.tail(x))] = 1;
  // circle points: 2i = tail vertex of dart i, 2i+1 = the edge of dart i
  std::vector<char> mark(static_cast<std::size_t>(2 * P), 0);
  for (int i = 0; i < P; ++i) {
    int x = b.darts[static_cast<std::size_t>(i)];
    mark[static_cast<std::size_t>(2 * i)] = vin[static_cast<std::size_t>(v.tail(x))];
    mark[static_cast<std::size_t>(2 * i + 1)] = v.face_of[static_cast<std::size_t>(d.opposite(x))] == f;
  }
  const int M = 2 * P;
  int first_gap = -1;
  for (int i = 0; i < M; ++i)
    if (!mark[static_cast<std::size_t>(i)]) {
      first_gap = i;
      break;
    }
  if (first_gap < 0) return {1, true};
  int comps = 0;
  bool all_nontrivial = true;
  for (int k = 1; k <= M; ++k) {
    int i = (first_gap + k) % M;
    if (!mark[static_cast<std::size_t>(i)]) continue;
    int prev = (i + M - 1) % M;
    if (mark[static_cast<std::size_t>(prev)]) continue;
    ++comps;
    bool has_edge = false;
    for (int j = i; mark[static_cast<std::size_t>(j % M)]; ++j)
      if (j % 2 == 1) has_edge = true;
    all_nontrivial = all_nontrivial && has_edge;
  }
  return {comps, all_nontrivial};
}

}  // namespace detail

/// Cutcells under definition 1 (D - closure(R) disconnected), 2 (boundary
/// preimage of dR has several components) or 3 (as 2, each component a
/// nontrivial path).
inline std::vector<FeatureWitness> find_cutcells(const DiskDiagram& d, int def) {
  if (def < 1 || def > 3) throw Error("cutcell definition must be 1, 2 or 3");
  std::vector<FeatureWitness> out;
  if (d.dart_count() == 0) return out;
  MapView v(d);
  for (int f : v.inner_faces()) {
    int comps = 0;
    bool hit = false;
    if (def == 1) {
      comps = detail::complement_components(d, v, f);
      hit = comps > 1;
    } else {
      auto [c, nontrivial] = detail::boundary_preimage(d, v, f);
      comps = c;
      hit = c > 1 && (def == 2 || nontrivial);
    }
    if (hit) {
      FeatureWitness w;
      w.kind = FeatureKind::Cutcell;
      w.cutcell_def = def;
      w.face = f;
      w.dart = v.faces[static_cast<std::size_t>(f)][0];
      w.components = comps;
      out.push_back(w);
    }
  }
  return out;
}

/// Removes the open cell of a shell and the longer part of its boundary
/// (the free arc). When the whole circuit is free and has at least three
/// edges one edge is kept, leaving a 1-skeleton arc.
inline DiskDiagram remove_shell(const DiskDiagram& d, int face_dart) {
  if (d.dart_count() == 0) throw Error("diagram has no faces");
  MapView v(d);
  int f = v.face_of.at(static_cast<std::size_t>(face_dart));
  if (f == v.outer_face) throw Error("outer face is not a shell");
  detail::OuterIndex oi(d);
  auto arc = detail::longest_free_arc(d, v, oi, f);
  const auto& cyc = v.faces[static_cast<std::size_t>(f)];
  const int L = static_cast<int>(cyc.size());
  if (2 * arc.length <= L) throw Error("face is not a shell");
  int remove = arc.length;
  if (arc.full_circle && L >= 3) remove = L - 1;
  std::vector<char> keep(static_cast<std::size_t>(d.dart_count()), 1);
  for (int j = 0; j < remove; ++j) {
    int x = cyc[static_cast<std::size_t>((arc.start + j) % L)];
    keep[static_cast<std::size_t>(x)] = keep[static_cast<std::size_t>(d.opposite(x))] = 0;
  }
  int hint = -1;
  for (int x : cyc)
    if (keep[static_cast<std::size_t>(x)]) {
      hint = x;
      break;
    }
  if (hint < 0)
    for (int x : v.faces[static_cast<std::size_t>(v.outer_face)])
      if (keep[static_cast<std::size_t>(x)]) {
        hint = x;
        break;
      }
  if (hint < 0) return DiskDiagram::single_vertex();
  return detail::restrict_darts(d, keep, hint);
}

/// Removes the edge of `dart` together with its valence-1 endpoint.
inline DiskDiagram remove_spur(const DiskDiagram& d, int dart) {
  if (dart < 0 || dart >= d.dart_count()) throw Error("dart out of range");
  MapView v(d);
  int o = d.opposite(dart);
  if (v.degree(v.tail(dart)) != 1 && v.degree(v.tail(o)) != 1) throw Error("edge does not lead to a spur");
  std::vector<char> keep(static_cast<std::size_t>(d.dart_count()), 1);
  keep[static_cast<std::size_t>(dart)] = keep[static_cast<std::size_t>(o)] = 0;
  int hint = -1;
  for (int x : v.faces[static_cast<std::size_t>(v.outer_face)])
    if (keep[static_cast<std::size_t>(x)]) {
      hint = x;
      break;
    }
  if (hint < 0) return DiskDiagram::single_vertex();
  return detail::restrict_darts(d, keep, hint);
}

/// Hangs a new edge labelled `label` into the outer corner at the tail of
/// boundary dart `outer_dart`; the new far endpoint is a spur.
inline DiskDiagram attach_spur(const DiskDiagram& d, int outer_dart, Letter label) {
  if (d.dart_count() == 0) {
    return DiskDiagram({1, 0}, {0, 1}, {label, label.inverse()}, 0);
  }
  MapView v(d);
  if (!v.is_outer(outer_dart)) throw Error("dart is not on the boundary");
  const int n = d.dart_count();
  std::vector<int> opp = d.opposite_map(), sig = d.sigma_map();
  std::vector<Letter> lab = d.labels();
  int before = -1;
  for (int x = 0; x < n; ++x)
    if (d.sigma(x) == outer_dart) before = x;
  opp.push_back(n + 1);
  opp.push_back(n);
  sig.push_back(outer_dart);
  sig.push_back(n + 1);
  sig[static_cast<std::size_t>(before)] = n;
  lab.push_back(label);
  lab.push_back(label.inverse());
  return DiskDiagram(std::move(opp), std::move(sig), std::move(lab), outer_dart);
}

/// Maximal topological-disk subdiagrams: classes of faces connected through
/// shared edges.
inline std::vector<DiskDiagram> disk_pieces(const DiskDiagram& d) {
  std::vector<DiskDiagram> out;
  if (d.dart_count() == 0) return out;
  MapView v(d);
  const int F = static_cast<int>(v.faces.size());
  detail::UnionFind uf(static_cast<std::size_t>(F));
  for (int x = 0; x < d.dart_count(); ++x) {
    int a = v.face_of[static_cast<std::size_t>(x)], b = v.face_of[static_cast<std::size_t>(d.opposite(x))];
    if (a != v.outer_face && b != v.outer_face) uf.unite(a, b);
  }
  std::vector<int> roots;
  for (int f : v.inner_faces())
    if (std::find(roots.begin(), roots.end(), uf.find(f)) == roots.end()) roots.push_back(uf.find(f));
  for (int r : roots) {
    std::vector<char> keep(static_cast<std::size_t>(d.dart_count()), 0);
    for (int f : v.inner_faces())
      if (uf.find(f) == r)
        for (int x : v.faces[static_cast<std::size_t>(f)])
          keep[static_cast<std::size_t>(x)] = keep[static_cast<std::size_t>(d.opposite(x))] = 1;
    int hint = -1;
    for (int x = 0; x < d.dart_count() && hint < 0; ++x) {
      int fx = v.face_of[static_cast<std::size_t>(x)];
      if (keep[static_cast<std::size_t>(x)] && (fx == v.outer_face || uf.find(fx) != r)) hint = x;
    }
    out.push_back(detail::restrict_darts(d, keep, hint));
  }
  return out;
}

/// A closed 2-cell: at least one face, every edge on an inner face, and a
/// boundary circuit visiting each vertex once.
inline bool is_topological_disk(const DiskDiagram& d) {
  if (d.dart_count() == 0) return false;
  MapView v(d);
  if (v.inner_face_count() == 0) return false;
  std::vector<char> seen(static_cast<std::size_t>(v.vertex_count), 0);
  for (int x : v.faces[static_cast<std::size_t>(v.outer_face)]) {
    if (v.is_outer(d.opposite(x))) return false;
    if (seen[static_cast<std::size_t>(v.tail(x))]++) return false;
  }
  return true;
}

/// Assigns group elements to vertices so that every dart multiplies by its
/// label. Throws if some cycle reads a nontrivial element.
inline std::vector<GroupElement> vertex_lift(const DiskDiagram& d, const FreeProductModel& m, int base_vertex = -1) {
  MapView v(d);
  if (d.dart_count() == 0) return {GroupElement()};
  if (base_vertex < 0) base_vertex = v.tail(d.outer_dart());
  std::vector<std::optional<GroupElement>> g(static_cast<std::size_t>(v.vertex_count));
  g[static_cast<std::size_t>(base_vertex)] = GroupElement();
  std::queue<int> q;
  q.push(base_vertex);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int x : v.rotation[static_cast<std::size_t>(u)]) {
      Letter l = d.label(x);
      GroupElement next = *g[static_cast<std::size_t>(u)] * (l.sign > 0 ? m.image(l) : m.image(l).inverse());
      int w = v.head(d, x);
      if (!g[static_cast<std::size_t>(w)]) {
        g[static_cast<std::size_t>(w)] = next;
        q.push(w);
      } else if (!(*g[static_cast<std::size_t>(w)] == next)) {
        throw Error("inconsistent vertex lift along dart " + std::to_string(x));
      }
    }
  }
  std::vector<GroupElement> out;
  for (auto& e : g) {
    if (!e) throw Error("diagram is not connected");
    out.push_back(*e);
  }
  return out;
}

/// True iff distinct vertices lift to distinct group elements.
inline bool lift_is_injective(const DiskDiagram& d, const FreeProductModel& m) {
  auto g = vertex_lift(d, m);
  std::sort(g.begin(), g.end());
  for (std::size_t i = 1; i < g.size(); ++i)
    if (g[i - 1] == g[i]) return false;
  return true;
}

}  // namespace dehn
