#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <vector>

#include "gex/errors.hpp"

namespace gex {

// A lattice point in Z^d, d small (1..3 supported throughout).
using Point = std::vector<int>;

inline int linf_norm(const Point& p) {
  int m = 0;
  for (int c : p) m = std::max(m, std::abs(c));
  return m;
}

inline int l1_norm(const Point& p) {
  int s = 0;
  for (int c : p) s += std::abs(c);
  return s;
}

inline int linf_dist(const Point& a, const Point& b) {
  int m = 0;
  for (size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

inline int l1_dist(const Point& a, const Point& b) {
  int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += std::abs(a[i] - b[i]);
  return s;
}

inline bool lex_less(const Point& a, const Point& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// Cubic window {t in Z^d : ||t||_inf <= radius} with row-major indexing.
struct Window {
  int d = 1;
  int radius = 0;

  int side() const { return 2 * radius + 1; }

  std::int64_t size() const {
    std::int64_t s = 1;
    for (int i = 0; i < d; ++i) s *= side();
    return s;
  }

  bool contains(const Point& p) const { return linf_norm(p) <= radius; }

  std::int64_t index(const Point& p) const {
    std::int64_t idx = 0;
    for (int i = 0; i < d; ++i) idx = idx * side() + (p[i] + radius);
    return idx;
  }

  Point point(std::int64_t idx) const {
    Point p(d);
    for (int i = d - 1; i >= 0; --i) {
      p[i] = static_cast<int>(idx % side()) - radius;
      idx /= side();
    }
    return p;
  }
};

// All nonzero offsets in {-1,0,1}^d; a lattice point has at most 3^d - 1
// L-inf neighbours.
inline std::vector<Point> unit_ball_offsets(int d) {
  std::vector<Point> offs;
  Point cur(d, -1);
  while (true) {
    if (linf_norm(cur) == 1) offs.push_back(cur);
    int i = d - 1;
    while (i >= 0 && cur[i] == 1) cur[i--] = -1;
    if (i < 0) break;
    ++cur[i];
  }
  return offs;
}

// Enumerates all points of a window in lexicographic (= row-major) order.
inline std::vector<Point> window_points(const Window& w) {
  std::vector<Point> pts;
  pts.reserve(static_cast<size_t>(w.size()));
  for (std::int64_t i = 0; i < w.size(); ++i) pts.push_back(w.point(i));
  return pts;
}

inline Point add(const Point& a, const Point& b) {
  Point r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Point sub(const Point& a, const Point& b) {
  Point r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

}  // namespace gex
