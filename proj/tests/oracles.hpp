#pragma once

// Brute-force reference computations for the test suites. Nothing here calls
// the library routine it is used to check.

#include <algorithm>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "toricmon/toricmon.hpp"

namespace toricmon::oracle {

inline Integer dot(const LatticePoint &a, const LatticePoint &b) { return a.x * b.x + a.y * b.y; }

/// Membership by the defining inequalities of the dual: q lies in the cone
/// spanned by rays r0, r1 iff it pairs nonnegatively with both edge normals.
/// Uses only sign tests, no linear solve.
inline bool in_cone(const LatticePoint &r0, const LatticePoint &r1, const LatticePoint &q) {
  Integer orient = r0.x * r1.y - r0.y * r1.x;
  if (orient == 0)
    return (r0.x * q.y - r0.y * q.x) == 0 && dot(r0, q) >= 0;
  // q is between r0 and r1 on the same side as the cone interior
  Integer s0 = r0.x * q.y - r0.y * q.x; // sign relative to r0
  Integer s1 = q.x * r1.y - q.y * r1.x; // sign relative to r1
  if (orient > 0)
    return s0 >= 0 && s1 >= 0;
  return s0 <= 0 && s1 <= 0;
}

/// Dual cone by scanning the box for lattice points that pair nonnegatively
/// with both rays and lie on an edge; returns the two primitive edge points,
/// sorted.
inline std::vector<LatticePoint> dual_rays_by_scan(const LatticePoint &r0, const LatticePoint &r1,
                                                   long box) {
  std::vector<LatticePoint> edge;
  for (long x = -box; x <= box; ++x)
    for (long y = -box; y <= box; ++y) {
      LatticePoint w(x, y);
      if (w.is_zero())
        continue;
      Integer p0 = dot(w, r0), p1 = dot(w, r1);
      if (p0 < 0 || p1 < 0)
        continue;
      if ((p0 == 0 || p1 == 0) && gcd(w.x, w.y) == 1)
        edge.push_back(w);
    }
  std::sort(edge.begin(), edge.end());
  return edge;
}

/// Hilbert basis by enumeration: points of the cone with |coordinates| <= box
/// that are not a sum of two nonzero cone points from the doubled box.
inline std::vector<LatticePoint> hilbert_basis_by_scan(const LatticePoint &r0, const LatticePoint &r1,
                                                       long box) {
  std::vector<LatticePoint> pts;
  const long search = 2 * box;
  for (long x = -search; x <= search; ++x)
    for (long y = -search; y <= search; ++y) {
      LatticePoint q(x, y);
      if (!q.is_zero() && in_cone(r0, r1, q))
        pts.push_back(q);
    }
  std::vector<LatticePoint> out;
  for (const auto &p : pts) {
    if (abs(p.x) > box || abs(p.y) > box)
      continue;
    bool sum = std::any_of(pts.begin(), pts.end(), [&](const LatticePoint &v) {
      LatticePoint rest = p - v;
      return !rest.is_zero() && in_cone(r0, r1, rest);
    });
    if (!sum)
      out.push_back(p);
  }
  return out;
}

/// Whether q is a nonnegative integer combination of gens (dynamic search over
/// q minus generators, all intermediate points kept inside the cone).
inline bool is_combination(const std::vector<LatticePoint> &gens, const LatticePoint &r0,
                           const LatticePoint &r1, const LatticePoint &q,
                           std::set<LatticePoint> &memo_yes, std::set<LatticePoint> &memo_no) {
  if (q.is_zero())
    return true;
  if (memo_yes.count(q))
    return true;
  if (memo_no.count(q))
    return false;
  for (const auto &g : gens) {
    LatticePoint rest = q - g;
    if (in_cone(r0, r1, rest) && is_combination(gens, r0, r1, rest, memo_yes, memo_no)) {
      memo_yes.insert(q);
      return true;
    }
  }
  memo_no.insert(q);
  return false;
}

/// Demazure roots by a direct double loop over the box.
inline std::vector<LatticePoint> roots_by_scan(const LatticePoint &p_i, const LatticePoint &p_j,
                                               long bound) {
  std::vector<LatticePoint> out;
  for (long x = -bound; x <= bound; ++x)
    for (long y = -bound; y <= bound; ++y) {
      LatticePoint e(x, y);
      if (dot(e, p_i) == -1 && dot(e, p_j) >= 0)
        out.push_back(e);
    }
  return out;
}

/// Restriction check over every lattice point of the cone in the box.
inline std::optional<LatticePoint> restriction_violation_by_scan(const LatticePoint &r0,
                                                                 const LatticePoint &r1,
                                                                 const Integer &n, long box) {
  for (long x = -box; x <= box; ++x)
    for (long y = -box; y <= box; ++y) {
      LatticePoint q(x, y);
      if (!in_cone(r0, r1, q))
        continue;
      if (!in_cone(r0, r1, LatticePoint(0, q.y)) || !in_cone(r0, r1, LatticePoint(0, q.y + n * q.x)))
        return q;
    }
  return std::nullopt;
}

/// (x⊗1 + s y^n⊗x)^a (y⊗y)^b multiplied out term by term, s = +1 or -1 for
/// the y or y^-1 chart.
inline TensorElement comult_by_expansion(const Integer &n, const LatticePoint &u, int s = 1) {
  TensorElement x_part = TensorElement::monomial({LatticePoint(1, 0), LatticePoint(0, 0)}) +
                         TensorElement::monomial({LatticePoint(0, s * n), LatticePoint(1, 0)});
  TensorElement result = TensorElement::one();
  for (Integer i = 0; i < u.x; ++i)
    result = result * x_part;
  return result * TensorElement::monomial({LatticePoint(0, u.y), LatticePoint(0, u.y)});
}

/// L_k straight from the definition: smallest b' >= 0 with (k, ±b') in the cone.
inline Integer lk_by_scan(const MonoidSpec &s, long k) {
  Cone2 c = cone2_of_spec(s);
  int dir = s.family() == Family::X ? 1 : -1;
  for (long b = 0;; ++b)
    if (in_cone(c.ray(0), c.ray(1), LatticePoint(k, dir * b)))
      return b;
}

class RandomRationals {
public:
  explicit RandomRationals(unsigned seed) : gen_(seed) {}

  Rational any(long range = 9) {
    std::uniform_int_distribution<long> num(-range, range), den(1, range);
    return ratio(num(gen_), den(gen_));
  }
  Rational nonzero(long range = 9) {
    Rational q;
    do
      q = any(range);
    while (q == 0);
    return q;
  }
  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }
  std::mt19937 &engine() { return gen_; }

private:
  std::mt19937 gen_;
};

inline LaurentElement random_laurent(RandomRationals &rng, int terms = 4, long exp_range = 3) {
  LaurentElement f;
  for (int i = 0; i < terms; ++i)
    f.add_term(LatticePoint(rng.integer(-exp_range, exp_range), rng.integer(-exp_range, exp_range)),
               rng.nonzero());
  return f;
}

} // namespace toricmon::oracle
