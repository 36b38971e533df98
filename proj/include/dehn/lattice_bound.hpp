#pragma once

// Lower bound for Area(w) from cellular 2-chains in the Z^2 cover.
//
// Any diagram for w lifts to the cover determined by a rank-2 lattice model;
// its faces give an integer 2-chain whose boundary is the lifted loop. When
// the cover is contractible that chain is unique, so its l1 norm bounds the
// area from below. Only meaningful for models flagged as such.

#include <cmath>
#include <cstddef>
#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "dehn/group_model.hpp"
#include "dehn/presentation.hpp"

namespace dehn {

class LatticeFillingBound {
 public:
  LatticeFillingBound(const Presentation& p, const FreeProductModel& m) : p_(&p) {
    if (m.free_rank() != 0 || m.abelian_rank() != 2) throw Error("lattice filling bound needs a model Z^2");
    for (std::size_t g = 0; g < p.generator_count(); ++g) {
      Lattice v = m.images()[g].lattice_part(2);
      step_.push_back({v[0], v[1]});
    }
    for (const Word& r : p.relators()) {
      long long x = 0, y = 0, x0 = 0, x1 = 0, y0 = 0, y1 = 0;
      for (Letter l : r) {
        auto s = step_[static_cast<std::size_t>(l.gen)];
        x += l.sign * s.x;
        y += l.sign * s.y;
        x0 = std::min(x0, x);
        x1 = std::max(x1, x);
        y0 = std::min(y0, y);
        y1 = std::max(y1, y);
      }
      extent_.push_back({x0, x1, y0, y1});
    }
  }

  /// l1 norm of the unique filling chain, or nothing when the chain is not
  /// determined inside the search box.
  std::optional<long long> operator()(const Word& w) const {
    if (w.empty()) return 0;
    EdgeChain z;
    long long x0 = 0, x1 = 0, y0 = 0, y1 = 0;
    add_path(z, w, 0, 0, &x0, &x1, &y0, &y1);
    bool zero = true;
    for (auto& [k, c] : z)
      if (c != 0) zero = false;
    if (zero) return 0;
    // candidate cells
    std::vector<std::tuple<long long, long long, std::size_t>> cells;
    for (std::size_t r = 0; r < p_->relators().size(); ++r) {
      const auto& e = extent_[r];
      for (long long qx = x0 - e.x1; qx <= x1 - e.x0; ++qx)
        for (long long qy = y0 - e.y1; qy <= y1 - e.y0; ++qy) cells.emplace_back(qx, qy, r);
    }
    std::map<EdgeKey, std::size_t> row_of;
    std::vector<EdgeChain> cols;
    for (auto& [qx, qy, r] : cells) {
      EdgeChain c;
      add_path(c, p_->relators()[r], qx, qy, nullptr, nullptr, nullptr, nullptr);
      for (auto& [k, v] : c)
        if (v != 0) row_of.try_emplace(k, row_of.size());
      cols.push_back(std::move(c));
    }
    for (auto& [k, v] : z)
      if (v != 0 && !row_of.count(k)) return std::nullopt;
    const std::size_t R = row_of.size(), C = cols.size();
    if (C == 0 || R < C) return std::nullopt;
    std::vector<std::vector<double>> a(R, std::vector<double>(C + 1, 0.0));
    for (std::size_t j = 0; j < C; ++j)
      for (auto& [k, v] : cols[j])
        if (v != 0) a[row_of[k]][j] = static_cast<double>(v);
    for (auto& [k, v] : z)
      if (v != 0) a[row_of[k]][C] = static_cast<double>(v);
    // Gaussian elimination with partial pivoting
    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < C && row < R; ++col) {
      std::size_t best = row;
      for (std::size_t i = row + 1; i < R; ++i)
        if (std::fabs(a[i][col]) > std::fabs(a[best][col])) best = i;
      if (std::fabs(a[best][col]) < 1e-9) return std::nullopt;  // not unique
      std::swap(a[best], a[row]);
      for (std::size_t i = 0; i < R; ++i) {
        if (i == row || a[i][col] == 0.0) continue;
        double f = a[i][col] / a[row][col];
        for (std::size_t j = col; j <= C; ++j) a[i][j] -= f * a[row][j];
      }
      pivot_col.push_back(col);
      ++row;
    }
    for (std::size_t i = row; i < R; ++i)
      if (std::fabs(a[i][C]) > 1e-6) return std::nullopt;  // no filling in the box
    std::vector<long long> coef(C, 0);
    for (std::size_t i = 0; i < row; ++i) {
      double v = a[i][C] / a[i][pivot_col[i]];
      long long rv = std::llround(v);
      if (std::fabs(v - static_cast<double>(rv)) > 1e-6) return std::nullopt;
      coef[pivot_col[i]] = rv;
    }
    // exact verification
    EdgeChain check;
    for (std::size_t j = 0; j < C; ++j)
      if (coef[j] != 0)
        for (auto& [k, v] : cols[j]) check[k] += coef[j] * v;
    for (auto& [k, v] : z) check[k] -= v;
    for (auto& [k, v] : check)
      if (v != 0) return std::nullopt;
    long long norm = 0;
    for (auto c : coef) norm += c < 0 ? -c : c;
    return norm;
  }

 private:
  using EdgeKey = std::tuple<long long, long long, int>;
  using EdgeChain = std::map<EdgeKey, long long>;
  struct Extent {
    long long x0, x1, y0, y1;
  };

  void add_path(EdgeChain& c, const Word& w, long long x, long long y, long long* x0, long long* x1, long long* y0,
                long long* y1) const {
    for (Letter l : w) {
      auto s = step_[static_cast<std::size_t>(l.gen)];
      if (l.sign > 0) {
        c[{x, y, l.gen}] += 1;
        x += s.x;
        y += s.y;
      } else {
        x -= s.x;
        y -= s.y;
        c[{x, y, l.gen}] -= 1;
      }
      if (x0) {
        *x0 = std::min(*x0, x);
        *x1 = std::max(*x1, x);
        *y0 = std::min(*y0, y);
        *y1 = std::max(*y1, y);
      }
    }
  }

  const Presentation* p_;
  std::vector<LatticeVector> step_;
  std::vector<Extent> extent_;
};

}  // namespace dehn
