#pragma once

// Rational cones in a rank-2 lattice, stored by primitive ray generators.

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "toricmon/lattice.hpp"

namespace toricmon {

/// Strongly convex rational cone in a rank-2 lattice.
///
/// Rays are primitive and sorted, so two Cone2 values compare equal exactly
/// when they describe the same cone. A one-dimensional cone (a single ray)
/// stores the ray twice and has full_dim == false.
class Cone2 {
public:
  Cone2(const LatticePoint &r0, const LatticePoint &r1) {
    if (r0.ambient != r1.ambient)
      throw invalid_argument("cone rays live in different lattices");
    LatticePoint p0 = primitive(r0), p1 = primitive(r1);
    if (det(p0, p1) == 0) {
      if (p0 != p1)
        throw degenerate_cone("rays " + to_string(p0) + " and " + to_string(p1) +
                              " span a line, the cone is not strongly convex");
      full_dim_ = false;
    } else {
      full_dim_ = true;
    }
    if (p1 < p0)
      std::swap(p0, p1);
    rays_ = {std::move(p0), std::move(p1)};
  }

  /// One-dimensional cone spanned by a single ray.
  static Cone2 ray(const LatticePoint &r) { return Cone2(r, r); }

  const std::pair<LatticePoint, LatticePoint> &rays() const { return rays_; }
  const LatticePoint &ray(int index) const {
    return index == 0 ? rays_.first : rays_.second;
  }
  Ambient ambient() const { return rays_.first.ambient; }
  bool full_dim() const { return full_dim_; }

  /// Index (0 or 1) of the given primitive ray, if it is one of the rays.
  std::optional<int> ray_index_of(const LatticePoint &r) const {
    if (r == rays_.first)
      return 0;
    if (r == rays_.second)
      return 1;
    return std::nullopt;
  }

  friend bool operator==(const Cone2 &, const Cone2 &) = default;

private:
  std::pair<LatticePoint, LatticePoint> rays_;
  bool full_dim_ = true;
};

/// The closed half-plane {u : u.x >= 0} of M; the dual cone of the group G_n.
/// It is not strongly convex, so it is not a Cone2.
struct HalfPlane {
  friend bool operator==(const HalfPlane &, const HalfPlane &) = default;
};

inline bool cone_contains(const Cone2 &c, const RationalPoint &q) {
  if (q.ambient != c.ambient())
    throw invalid_argument("point and cone live in different lattices");
  RationalPoint r0(c.ray(0)), r1(c.ray(1));
  if (!c.full_dim()) {
    // q = t r with t >= 0
    return det(r0, q) == 0 && r0.x * q.x + r0.y * q.y >= 0;
  }
  Rational d = det(r0, r1);
  // q = alpha r0 + beta r1
  Rational alpha = det(q, r1) / d;
  Rational beta = det(r0, q) / d;
  return alpha >= 0 && beta >= 0;
}

inline bool cone_contains(const Cone2 &c, const LatticePoint &q) {
  return cone_contains(c, RationalPoint(q));
}

inline bool cone_contains(const HalfPlane &, const LatticePoint &q) {
  return q.x >= 0;
}

inline Cone2 dual_cone(const Cone2 &c) {
  if (!c.full_dim())
    throw unsupported_input("dual of a one-dimensional cone is a half-plane, "
                            "not a strongly convex cone");
  const LatticePoint &r0 = c.ray(0);
  const LatticePoint &r1 = c.ray(1);
  Ambient target = dual(c.ambient());
  // Perpendicular to one ray, nonnegative on the other.
  auto perp = [&](const LatticePoint &r, const LatticePoint &other) {
    LatticePoint w(-r.y, r.x, target);
    if (w.x * other.x + w.y * other.y < 0)
      w = -w;
    return w;
  };
  return Cone2(perp(r0, r1), perp(r1, r0));
}

inline Cone2 map_image_cone(const LatticeMap &m, const Cone2 &c) {
  LatticePoint i0 = m(c.ray(0)), i1 = m(c.ray(1));
  if (i0.is_zero() || i1.is_zero() || (c.full_dim() && det(i0, i1) == 0))
    throw degenerate_cone("image cone is degenerate (det " +
                          m.determinant().str() + ")");
  return Cone2(i0, i1);
}

/// All lattice points q of c with |q.x|, |q.y| <= box, in the fixed total order.
inline std::vector<LatticePoint> lattice_points(const Cone2 &c, long box) {
  std::vector<LatticePoint> out;
  for (long x = -box; x <= box; ++x)
    for (long y = -box; y <= box; ++y) {
      LatticePoint q(x, y, c.ambient());
      if (cone_contains(c, q))
        out.push_back(std::move(q));
    }
  return out;
}

inline std::vector<LatticePoint> lattice_points(const HalfPlane &, long box) {
  std::vector<LatticePoint> out;
  for (long x = 0; x <= box; ++x)
    for (long y = -box; y <= box; ++y)
      out.emplace_back(x, y, Ambient::M);
  return out;
}

/// Minimal generating set (Hilbert basis) of the semigroup c ∩ lattice.
///
/// Every irreducible element lies in the closed parallelogram spanned by the
/// two rays, so the candidates are the lattice points there. Candidates are
/// sieved in increasing order of a functional that is positive on c \ {0}.
inline std::vector<LatticePoint> semigroup_generators(const Cone2 &c) {
  if (!c.full_dim())
    return {c.ray(0)};
  const LatticePoint &r0 = c.ray(0);
  const LatticePoint &r1 = c.ray(1);
  const Integer d = det(r0, r1);

  Integer xs[] = {Integer(0), r0.x, r1.x, r0.x + r1.x};
  Integer ys[] = {Integer(0), r0.y, r1.y, r0.y + r1.y};
  long x_lo = to_long(*std::min_element(std::begin(xs), std::end(xs)));
  long x_hi = to_long(*std::max_element(std::begin(xs), std::end(xs)));
  long y_lo = to_long(*std::min_element(std::begin(ys), std::end(ys)));
  long y_hi = to_long(*std::max_element(std::begin(ys), std::end(ys)));

  Cone2 dual = dual_cone(c);
  LatticePoint height_dir = dual.ray(0) + dual.ray(1);
  auto height = [&](const LatticePoint &q) {
    return q.x * height_dir.x + q.y * height_dir.y;
  };

  std::vector<LatticePoint> candidates;
  for (long x = x_lo; x <= x_hi; ++x)
    for (long y = y_lo; y <= y_hi; ++y) {
      LatticePoint q(x, y, c.ambient());
      if (q.is_zero())
        continue;
      // q = alpha r0 + beta r1 with alpha, beta in [0, 1]
      Integer alpha_num = det(q, r1), beta_num = det(r0, q);
      if (d < 0) {
        alpha_num = -alpha_num;
        beta_num = -beta_num;
      }
      Integer ad = abs(d);
      if (alpha_num < 0 || beta_num < 0 || alpha_num > ad || beta_num > ad)
        continue;
      candidates.push_back(std::move(q));
    }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [&](const LatticePoint &a, const LatticePoint &b) {
                     return height(a) < height(b);
                   });

  std::vector<LatticePoint> basis;
  for (const auto &q : candidates) {
    bool reducible = std::any_of(basis.begin(), basis.end(), [&](const auto &g) {
      return cone_contains(c, q - g);
    });
    if (!reducible)
      basis.push_back(q);
  }
  std::sort(basis.begin(), basis.end());
  return basis;
}

} // namespace toricmon
