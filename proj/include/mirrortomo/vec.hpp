#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "mirrortomo/errors.hpp"

namespace mtomo {

// Point/vector in 2, 3 or 4 dimensions. Unused trailing components stay zero,
// which lets mixed-dimension code share one type.
struct Vec {
  std::array<double, 4> c{0.0, 0.0, 0.0, 0.0};
  int dim = 3;

  Vec() = default;
  Vec(double x, double y) : c{x, y, 0.0, 0.0}, dim(2) {}
  Vec(double x, double y, double z) : c{x, y, z, 0.0}, dim(3) {}
  Vec(double x, double y, double z, double w) : c{x, y, z, w}, dim(4) {}

  static Vec zero(int dim) {
    Vec v;
    v.dim = dim;
    return v;
  }
  static Vec axis(int k, int dim) {
    Vec v = zero(dim);
    v.c[static_cast<size_t>(k)] = 1.0;
    return v;
  }

  double operator[](int i) const { return c[static_cast<size_t>(i)]; }
  double& operator[](int i) { return c[static_cast<size_t>(i)]; }

  double x() const { return c[0]; }
  double y() const { return c[1]; }
  double z() const { return c[2]; }

  Vec& operator+=(const Vec& o) {
    for (int i = 0; i < dim; ++i) c[static_cast<size_t>(i)] += o[i];
    return *this;
  }
  Vec& operator-=(const Vec& o) {
    for (int i = 0; i < dim; ++i) c[static_cast<size_t>(i)] -= o[i];
    return *this;
  }
  Vec& operator*=(double s) {
    for (int i = 0; i < dim; ++i) c[static_cast<size_t>(i)] *= s;
    return *this;
  }

  friend Vec operator+(Vec a, const Vec& b) { return a += b; }
  friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
  friend Vec operator*(Vec a, double s) { return a *= s; }
  friend Vec operator*(double s, Vec a) { return a *= s; }
  friend Vec operator/(Vec a, double s) { return a *= (1.0 / s); }
  friend Vec operator-(Vec a) {
    for (int i = 0; i < a.dim; ++i) a[i] = -a[i];
    return a;
  }
};

inline double dot(const Vec& a, const Vec& b) {
  double s = 0.0;
  for (int i = 0; i < a.dim; ++i) s += a[i] * b[i];
  return s;
}

inline double norm2(const Vec& a) { return dot(a, a); }
inline double norm(const Vec& a) { return std::sqrt(norm2(a)); }
inline double distance(const Vec& a, const Vec& b) { return norm(a - b); }

inline Vec normalized(const Vec& a) {
  double n = norm(a);
  require(n > 0.0, errc::degenerate_input, "cannot normalize zero vector");
  return a / n;
}

inline Vec cross(const Vec& a, const Vec& b) {
  Vec r = Vec::zero(3);
  r[0] = a[1] * b[2] - a[2] * b[1];
  r[1] = a[2] * b[0] - a[0] * b[2];
  r[2] = a[0] * b[1] - a[1] * b[0];
  return r;
}

// z-component of the 2D cross product (a x b).
inline double cross2(const Vec& a, const Vec& b) { return a[0] * b[1] - a[1] * b[0]; }

inline Vec perp2(const Vec& a) { return Vec(-a[1], a[0]); }

using Points = std::vector<Vec>;

inline Vec centroid(const Points& pts) {
  Vec s = Vec::zero(pts.empty() ? 3 : pts.front().dim);
  for (const Vec& p : pts) s += p;
  return pts.empty() ? s : s / static_cast<double>(pts.size());
}

// Largest coordinate spread over all axes; scale reference for tolerances.
inline double bbox_diagonal(const Points& pts) {
  if (pts.empty()) return 0.0;
  int dim = pts.front().dim;
  double s = 0.0;
  for (int k = 0; k < dim; ++k) {
    double lo = pts.front()[k], hi = lo;
    for (const Vec& p : pts) {
      lo = std::min(lo, p[k]);
      hi = std::max(hi, p[k]);
    }
    s += (hi - lo) * (hi - lo);
  }
  return std::sqrt(s);
}

inline double diameter(const Points& pts) {
  double best = 0.0;
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i + 1; j < pts.size(); ++j) best = std::max(best, norm2(pts[i] - pts[j]));
  return std::sqrt(best);
}

}  // namespace mtomo
