#pragma once

// Point-level multiplication on the explicit charts:
//   X(n,1,b), Y(n,1,b)  -> A^2 with coordinates (χ^g1, χ^g2) for the free
//                          generators of the semigroup,
//   X(n,2,2k+1)         -> the quadric xz = y^2 in A^3.

#include <optional>
#include <utility>
#include <vector>

#include "toricmon/monoid.hpp"

namespace toricmon {

struct ChartPoint {
  std::vector<Rational> coords;

  ChartPoint() = default;
  ChartPoint(std::initializer_list<Rational> c) : coords(c) {}
  explicit ChartPoint(std::vector<Rational> c) : coords(std::move(c)) {}

  std::size_t size() const { return coords.size(); }
  const Rational &operator[](std::size_t i) const { return coords[i]; }

  friend bool operator==(const ChartPoint &, const ChartPoint &) = default;
};

enum class ChartKind { PlaneX, PlaneY, Quadric };

inline std::optional<ChartKind> chart_kind(const MonoidSpec &s) {
  if (s.is_group())
    return std::nullopt;
  if (s.a() == 1)
    return s.family() == Family::X ? ChartKind::PlaneX : ChartKind::PlaneY;
  if (s.a() == 2 && s.family() == Family::X)
    return ChartKind::Quadric; // b is odd since gcd(2, b) = 1
  return std::nullopt;
}

inline ChartKind require_chart(const MonoidSpec &s) {
  auto kind = chart_kind(s);
  if (!kind)
    throw not_implemented_chart("no explicit chart for " + to_string(s));
  return *kind;
}

/// Exponents of the monomials used as chart coordinates.
inline std::vector<LatticePoint> chart_generators(const MonoidSpec &s) {
  switch (require_chart(s)) {
  case ChartKind::PlaneX:
    return {LatticePoint(1, s.b()), LatticePoint(0, 1)};
  case ChartKind::PlaneY:
    return {LatticePoint(1, -s.b() - s.n()), LatticePoint(0, -1)};
  case ChartKind::Quadric: {
    Integer k = (s.b() - 1) / 2;
    return {LatticePoint(0, 1), LatticePoint(1, k + 1), LatticePoint(2, 2 * k + 1)};
  }
  }
  throw internal_consistency("unknown chart");
}

inline void require_on_chart(const MonoidSpec &s, const ChartPoint &p) {
  std::size_t expected = require_chart(s) == ChartKind::Quadric ? 3 : 2;
  if (p.size() != expected)
    throw invalid_argument("chart point for " + to_string(s) + " needs " +
                           std::to_string(expected) + " coordinates");
  if (expected == 3 && p[0] * p[2] != p[1] * p[1])
    throw invalid_argument("point is not on the quadric xz = y^2");
}

inline ChartPoint multiply_points(const MonoidSpec &s, const ChartPoint &p, const ChartPoint &q) {
  require_on_chart(s, p);
  require_on_chart(s, q);
  const Integer &n = s.n(), &b = s.b();
  switch (require_chart(s)) {
  case ChartKind::PlaneX:
    // (x1 y2^b + y1^(b+n) x2, y1 y2)
    return {p[0] * pow(q[1], b) + pow(p[1], b + n) * q[0], p[1] * q[1]};
  case ChartKind::PlaneY:
    // (x1 y2^(b+n) + y1^b x2, y1 y2)
    return {p[0] * pow(q[1], b + n) + pow(p[1], b) * q[0], p[1] * q[1]};
  case ChartKind::Quadric: {
    const Integer k = (b - 1) / 2;
    const Rational &x1 = p[0], &y1 = p[1], &z1 = p[2];
    const Rational &x2 = q[0], &y2 = q[1], &z2 = q[2];
    ChartPoint r{x1 * x2, y1 * pow(x2, k + 1) + pow(x1, n + k + 1) * y2,
                 z1 * pow(x2, 2 * k + 1) + 2 * pow(x1, n + k) * y1 * pow(x2, k) * y2 +
                     pow(x1, 2 * n + 2 * k + 1) * z2};
    if (r[0] * r[2] != r[1] * r[1])
      throw internal_consistency("quadric product left the quadric");
    return r;
  }
  }
  throw internal_consistency("unknown chart");
}

/// Chart coordinates of the torus point (x, y), x, y nonzero.
inline ChartPoint from_torus(const MonoidSpec &s, const Rational &x, const Rational &y) {
  std::vector<Rational> coords;
  for (const auto &g : chart_generators(s))
    coords.push_back(evaluate(chi(g), x, y));
  return ChartPoint(std::move(coords));
}

/// Torus coordinates (x, y) of an invertible chart point; empty on the boundary.
inline std::optional<std::pair<Rational, Rational>> to_torus(const MonoidSpec &s,
                                                             const ChartPoint &p) {
  require_on_chart(s, p);
  switch (require_chart(s)) {
  case ChartKind::PlaneX:
    if (p[1] == 0)
      return std::nullopt;
    return std::pair{p[0] / pow(p[1], s.b()), p[1]};
  case ChartKind::PlaneY:
    if (p[1] == 0)
      return std::nullopt;
    return std::pair{p[0] / pow(p[1], s.b() + s.n()), Rational(1) / p[1]};
  case ChartKind::Quadric: {
    if (p[0] == 0)
      return std::nullopt;
    Integer k = (s.b() - 1) / 2;
    return std::pair{p[1] / pow(p[0], k + 1), p[0]};
  }
  }
  throw internal_consistency("unknown chart");
}

/// The group element (α, τ) of G_n on the chart.
inline ChartPoint group_element(const MonoidSpec &s, const Rational &alpha, const Rational &tau) {
  if (tau == 0)
    throw invalid_argument("τ must be nonzero");
  // x = α, y = τ on G_n; χ^(a,b) has value α^a τ^b, with α^0 = 1 even for α = 0.
  std::vector<Rational> coords;
  for (const auto &g : chart_generators(s))
    coords.push_back((g.x == 0 ? Rational(1) : pow(alpha, g.x)) * pow(tau, g.y));
  return ChartPoint(std::move(coords));
}

inline ChartPoint unit_point(const MonoidSpec &s) { return group_element(s, 0, 1); }

/// The zero element: the chart origin.
inline ChartPoint zero_point(const MonoidSpec &s) {
  return ChartPoint(std::vector<Rational>(require_chart(s) == ChartKind::Quadric ? 3 : 2,
                                          Rational(0)));
}

} // namespace toricmon
