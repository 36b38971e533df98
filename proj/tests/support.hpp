#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "dehn/diagram.hpp"

namespace test_support {

using Point = std::pair<double, double>;

/// Lays `w` counter-clockwise around a convex polygon through `pts`
/// (vertex ids `vs`). Returns the forward darts.
inline std::vector<int> polygon(dehn::PlanarBuilder& b, const std::vector<int>& vs, const std::vector<Point>& pts,
                                const dehn::Word& w) {
  std::vector<int> out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    std::size_t j = (i + 1) % w.size();
    out.push_back(b.add_segment(vs[i], vs[j], w[i], pts[i], pts[j]));
  }
  return out;
}

inline std::vector<Point> regular(std::size_t n, double cx = 0, double cy = 0, double phase = 0) {
  std::vector<Point> pts;
  const double pi = std::acos(-1.0);
  for (std::size_t i = 0; i < n; ++i) {
    double t = phase - pi / 2 - pi / static_cast<double>(n) + 2 * pi * static_cast<double>(i) / static_cast<double>(n);
    pts.push_back({cx + std::cos(t), cy + std::sin(t)});
  }
  return pts;
}

/// One 2-cell whose boundary path reads `w`.
inline dehn::DiskDiagram single_cell(const dehn::Word& w) {
  dehn::PlanarBuilder b;
  std::vector<int> vs;
  for (std::size_t i = 0; i < w.size(); ++i) vs.push_back(b.add_vertex());
  auto darts = polygon(b, vs, regular(w.size()), w);
  return b.build(darts[0]);
}

}  // namespace test_support
