#pragma once

// Rank-2 lattices M (characters) and N (one-parameter subgroups) with the
// standard dual bases, so the pairing is the dot product.

#include <array>
#include <compare>
#include <ostream>
#include <string>

#include "toricmon/numeric.hpp"

namespace toricmon {

enum class Ambient { M, N };

inline Ambient dual(Ambient a) { return a == Ambient::M ? Ambient::N : Ambient::M; }

inline const char *to_string(Ambient a) { return a == Ambient::M ? "M" : "N"; }

struct LatticePoint {
  Integer x = 0;
  Integer y = 0;
  Ambient ambient = Ambient::M;

  LatticePoint() = default;
  LatticePoint(Integer x_, Integer y_, Ambient amb = Ambient::M)
      : x(std::move(x_)), y(std::move(y_)), ambient(amb) {}

  bool is_zero() const { return x == 0 && y == 0; }

  LatticePoint operator+(const LatticePoint &o) const {
    return {x + o.x, y + o.y, ambient};
  }
  LatticePoint operator-(const LatticePoint &o) const {
    return {x - o.x, y - o.y, ambient};
  }
  LatticePoint operator-() const { return {-x, -y, ambient}; }
  LatticePoint &operator+=(const LatticePoint &o) {
    x += o.x;
    y += o.y;
    return *this;
  }

  friend LatticePoint operator*(const Integer &k, const LatticePoint &p) {
    return {k * p.x, k * p.y, p.ambient};
  }

  // Lexicographic on (x, y), then ambient. This is the fixed total order used
  // for cone rays, Hilbert bases and Laurent terms.
  friend std::strong_ordering operator<=>(const LatticePoint &a,
                                          const LatticePoint &b) {
    if (a.x != b.x)
      return a.x < b.x ? std::strong_ordering::less : std::strong_ordering::greater;
    if (a.y != b.y)
      return a.y < b.y ? std::strong_ordering::less : std::strong_ordering::greater;
    return a.ambient <=> b.ambient;
  }
  friend bool operator==(const LatticePoint &a, const LatticePoint &b) {
    return a.x == b.x && a.y == b.y && a.ambient == b.ambient;
  }

  friend std::ostream &operator<<(std::ostream &os, const LatticePoint &p) {
    return os << "(" << p.x << "," << p.y << ")";
  }
};

inline std::string to_string(const LatticePoint &p) {
  return "(" + p.x.str() + "," + p.y.str() + ")";
}

struct RationalPoint {
  Rational x = 0;
  Rational y = 0;
  Ambient ambient = Ambient::M;

  RationalPoint() = default;
  RationalPoint(Rational x_, Rational y_, Ambient amb = Ambient::M)
      : x(std::move(x_)), y(std::move(y_)), ambient(amb) {}
  explicit RationalPoint(const LatticePoint &p)
      : x(p.x), y(p.y), ambient(p.ambient) {}

  friend bool operator==(const RationalPoint &, const RationalPoint &) = default;
};

/// <u, p> for u in M and p in N.
inline Integer pairing(const LatticePoint &u, const LatticePoint &p) {
  if (u.ambient != Ambient::M || p.ambient != Ambient::N)
    throw invalid_argument("pairing expects (M, N) arguments, got (" +
                           std::string(to_string(u.ambient)) + ", " +
                           to_string(p.ambient) + ")");
  return u.x * p.x + u.y * p.y;
}

/// Determinant of the 2x2 matrix with columns u, v (ambients must agree).
inline Integer det(const LatticePoint &u, const LatticePoint &v) {
  return u.x * v.y - u.y * v.x;
}

inline Rational det(const RationalPoint &u, const RationalPoint &v) {
  return u.x * v.y - u.y * v.x;
}

inline LatticePoint primitive(const LatticePoint &v) {
  if (v.is_zero())
    throw invalid_argument("primitive of the zero vector");
  Integer g = gcd(v.x, v.y);
  return {v.x / g, v.y / g, v.ambient};
}

inline bool is_primitive(const LatticePoint &v) {
  return !v.is_zero() && gcd(v.x, v.y) == 1;
}

/// Integer 2x2 matrix acting on column vectors: (x, y) -> (a x + b y, c x + d y).
struct LatticeMap {
  std::array<Integer, 4> m{1, 0, 0, 1}; // row-major a, b, c, d

  LatticeMap() = default;
  LatticeMap(Integer a, Integer b, Integer c, Integer d)
      : m{std::move(a), std::move(b), std::move(c), std::move(d)} {}

  static LatticeMap identity() { return {}; }

  /// Map sending the standard basis vectors to the given images.
  static LatticeMap from_columns(const LatticePoint &e1_image,
                                 const LatticePoint &e2_image) {
    return {e1_image.x, e2_image.x, e1_image.y, e2_image.y};
  }

  Integer determinant() const { return m[0] * m[3] - m[1] * m[2]; }
  bool is_unimodular() const {
    Integer d = determinant();
    return d == 1 || d == -1;
  }

  LatticePoint operator()(const LatticePoint &v) const {
    return {m[0] * v.x + m[1] * v.y, m[2] * v.x + m[3] * v.y, v.ambient};
  }
  RationalPoint operator()(const RationalPoint &v) const {
    return {m[0] * v.x + m[1] * v.y, m[2] * v.x + m[3] * v.y, v.ambient};
  }

  LatticeMap operator*(const LatticeMap &o) const {
    return {m[0] * o.m[0] + m[1] * o.m[2], m[0] * o.m[1] + m[1] * o.m[3],
            m[2] * o.m[0] + m[3] * o.m[2], m[2] * o.m[1] + m[3] * o.m[3]};
  }

  /// Inverse over Z; requires determinant +-1.
  LatticeMap inverse() const {
    Integer d = determinant();
    if (d != 1 && d != -1)
      throw invalid_argument("lattice map is not invertible over Z (det " +
                             d.str() + ")");
    return {m[3] * d, -m[1] * d, -m[2] * d, m[0] * d};
  }

  friend bool operator==(const LatticeMap &, const LatticeMap &) = default;
};

inline LatticePoint apply_map(const LatticeMap &map, const LatticePoint &v) {
  return map(v);
}

/// Rational 2x2 matrix; used where a map is defined over Q and its
/// integrality is what is being tested.
struct RationalMap {
  std::array<Rational, 4> m{1, 0, 0, 1};

  RationalPoint operator()(const RationalPoint &v) const {
    return {m[0] * v.x + m[1] * v.y, m[2] * v.x + m[3] * v.y, v.ambient};
  }

  bool is_integral() const {
    for (const auto &entry : m)
      if (!toricmon::is_integral(entry))
        return false;
    return true;
  }

  Rational determinant() const { return m[0] * m[3] - m[1] * m[2]; }

  /// Integer matrix; requires is_integral().
  LatticeMap to_lattice_map() const {
    if (!is_integral())
      throw invalid_argument("rational map has non-integral entries");
    return {numerator(m[0]), numerator(m[1]), numerator(m[2]), numerator(m[3])};
  }
};

/// The unique linear map with from[i] -> to[i]; from must be a Q-basis.
inline RationalMap solve_linear_map(const LatticePoint &from0,
                                    const LatticePoint &from1,
                                    const LatticePoint &to0,
                                    const LatticePoint &to1) {
  Integer d = det(from0, from1);
  if (d == 0)
    throw degenerate_cone("source vectors are linearly dependent");
  // T = [to0 to1] * [from0 from1]^{-1}
  Rational inv[4] = {ratio(from1.y, d), ratio(-from1.x, d), ratio(-from0.y, d),
                     ratio(from0.x, d)};
  RationalMap t;
  t.m[0] = to0.x * inv[0] + to1.x * inv[2];
  t.m[1] = to0.x * inv[1] + to1.x * inv[3];
  t.m[2] = to0.y * inv[0] + to1.y * inv[2];
  t.m[3] = to0.y * inv[1] + to1.y * inv[3];
  return t;
}

} // namespace toricmon
