#pragma once

// Monoid structures on normal affine toric surfaces whose group of units is
// G_n = G_a ⋊ G_m, (α1, τ1)(α2, τ2) = (α1 + τ1^n α2, τ1 τ2).
//
// K[G_n] = K[x, y, y^-1] with x = χ^(1,0), y = χ^(0,1) and
//   x -> x⊗1 + y^n⊗x,   y -> y⊗y.
// The noncommutative non-group monoids are X(n,a,b), with cone generated by
// (0,1), (a,b), and Y(n,a,b), with cone generated by (0,-1), (a,-na-b).

#include <optional>
#include <variant>
#include <vector>

#include "toricmon/demazure.hpp"
#include "toricmon/laurent.hpp"

namespace toricmon {

enum class Family { Group, X, Y };

inline const char *to_string(Family f) {
  switch (f) {
  case Family::Group:
    return "Group";
  case Family::X:
    return "X";
  case Family::Y:
    return "Y";
  }
  return "?";
}

class MonoidSpec {
public:
  static MonoidSpec group(Integer n) { return MonoidSpec(Family::Group, std::move(n), 0, 0); }
  static MonoidSpec x(Integer n, Integer a, Integer b) {
    return MonoidSpec(Family::X, std::move(n), std::move(a), std::move(b));
  }
  static MonoidSpec y(Integer n, Integer a, Integer b) {
    return MonoidSpec(Family::Y, std::move(n), std::move(a), std::move(b));
  }
  static MonoidSpec make(Family f, Integer n, Integer a, Integer b) {
    return MonoidSpec(f, std::move(n), std::move(a), std::move(b));
  }

  Family family() const { return family_; }
  const Integer &n() const { return n_; }
  /// Zero for Group.
  const Integer &a() const { return a_; }
  const Integer &b() const { return b_; }
  bool is_group() const { return family_ == Family::Group; }

  friend bool operator==(const MonoidSpec &, const MonoidSpec &) = default;

private:
  MonoidSpec(Family f, Integer n, Integer a, Integer b)
      : family_(f), n_(std::move(n)), a_(std::move(a)), b_(std::move(b)) {
    if (n_ < 1)
      throw invalid_argument("n must be positive, got " + n_.str());
    if (family_ == Family::Group) {
      a_ = 0;
      b_ = 0;
      return;
    }
    if (a_ <= 0 || b_ < 0)
      throw invalid_argument("need a > 0 and b >= 0, got a=" + a_.str() + " b=" + b_.str());
    if (gcd(a_, b_) != 1)
      throw invalid_argument("need gcd(a, b) = 1, got a=" + a_.str() + " b=" + b_.str());
  }

  Family family_;
  Integer n_, a_, b_;
};

inline std::string to_string(const MonoidSpec &s) {
  if (s.is_group())
    return "Group(" + s.n().str() + ")";
  return std::string(to_string(s.family())) + "(" + s.n().str() + "," + s.a().str() +
         "," + s.b().str() + ")";
}

/// The dual cone of a monoid: a strongly convex Cone2, or the half-plane of G_n.
using DualShape = std::variant<Cone2, HalfPlane>;

inline bool contains(const DualShape &shape, const LatticePoint &u) {
  return std::visit([&](const auto &c) { return cone_contains(c, u); }, shape);
}

inline std::vector<LatticePoint> lattice_points(const DualShape &shape, long box) {
  return std::visit([&](const auto &c) { return lattice_points(c, box); }, shape);
}

inline DualShape cone_of_spec(const MonoidSpec &s) {
  switch (s.family()) {
  case Family::Group:
    return HalfPlane{};
  case Family::X:
    return Cone2(LatticePoint(0, 1), LatticePoint(s.a(), s.b()));
  case Family::Y:
    return Cone2(LatticePoint(0, -1), LatticePoint(s.a(), -s.n() * s.a() - s.b()));
  }
  throw internal_consistency("unknown family");
}

/// Cone2 of an X or Y spec.
inline Cone2 cone2_of_spec(const MonoidSpec &s) {
  if (s.is_group())
    throw not_applicable("the group G_n has a half-plane, not a strongly convex cone");
  return std::get<Cone2>(cone_of_spec(s));
}

enum class Orientation { Plus, Minus };

/// Comultiplication of G_n in the y chart (Plus) or the y^-1 chart (Minus).
struct ComultRule {
  Integer n;
  Orientation orientation = Orientation::Plus;

  ComultRule(Integer n_, Orientation o = Orientation::Plus) : n(std::move(n_)), orientation(o) {
    if (n < 1)
      throw invalid_argument("comultiplication exponent n must be positive");
  }
};

/// μ*(x^a y^b) = Σ_i C(a,i) x^(a-i) y^(b+ni) ⊗ x^i y^b  (Plus), and the same
/// with y replaced by y^-1 (Minus).
inline TensorElement comult(const ComultRule &rule, const LatticePoint &u) {
  if (u.x < 0)
    throw invalid_argument("comultiplication needs a nonnegative x-exponent, got " +
                           to_string(u));
  const long a = to_long(u.x);
  const Integer step = rule.orientation == Orientation::Plus ? rule.n : Integer(-rule.n);
  TensorElement out;
  for (long i = 0; i <= a; ++i)
    out.add_term({LatticePoint(a - i, u.y + step * i), LatticePoint(i, u.y)},
                 Rational(binomial(a, i)));
  return out;
}

inline TensorElement comult(const ComultRule &rule, const LaurentElement &f) {
  TensorElement out;
  for (const auto &[u, c] : f.terms())
    out += c * comult(rule, u);
  return out;
}

inline ComultRule rule_of_spec(const MonoidSpec &s) { return ComultRule(s.n()); }

inline TensorElement comult(const MonoidSpec &s, const LatticePoint &u) {
  if (!contains(cone_of_spec(s), u))
    throw invalid_argument(to_string(u) + " is not in the cone of " + to_string(s));
  return comult(rule_of_spec(s), u);
}

/// χ^u -> χ^u⊗χ^u (1⊗χ^e1 + χ^e2⊗1)^<p_i, u>. Every output exponent must lie
/// in σ^∨; otherwise the pair is inconsistent with the cone.
inline TensorElement comult_from_root_pair(const Cone2 &sigma, const RootPair &pair,
                                           const LatticePoint &u) {
  LatticePoint um(u.x, u.y, Ambient::M);
  Cone2 dual = dual_cone(sigma);
  if (!cone_contains(dual, um))
    throw invalid_argument(to_string(um) + " is not in the dual cone");
  Integer w = pairing(um, sigma.ray(pair.ray_index()));
  TensorElement factor = TensorElement::monomial({LatticePoint(0, 0), pair.e1().e()}) +
                         TensorElement::monomial({pair.e2().e(), LatticePoint(0, 0)});
  TensorElement out = TensorElement::monomial({um, um}) *
                      tensor_power(factor, static_cast<unsigned long>(to_long(w)));
  for (const auto &[k, c] : out.terms())
    if (!cone_contains(dual, k.first) || !cone_contains(dual, k.second))
      throw internal_consistency("comultiplication term " + to_string(k.first) + "⊗" +
                                 to_string(k.second) + " leaves the dual cone");
  return out;
}

/// The noncommutative structure given by a root pair, and the lattice basis in
/// which its comultiplication is the G_n rule of the classified spec:
/// comult_from_root_pair(u) = basis ⊗ basis applied to comult(spec, basis^-1 u).
struct RootPairClassification {
  MonoidSpec spec;
  LatticeMap basis;
};

/// Empty for e1 == e2 (the cocommutative case).
inline std::optional<RootPairClassification> classify_root_pair(const Cone2 &sigma,
                                                                const RootPair &pair) {
  if (pair.is_diagonal())
    return std::nullopt;
  auto [minus_e1, v] = root_basis(sigma, pair.e1());
  LatticeMap to_old = LatticeMap::from_columns(minus_e1, v);
  LatticeMap to_new = to_old.inverse();
  LatticePoint e2 = to_new(pair.e2().e());
  if (e2.x != -1)
    throw internal_consistency("second root does not have the form (-1, n)");
  const Integer n = e2.y;

  Cone2 dual_new = map_image_cone(to_new, dual_cone(sigma));
  LatticePoint other = dual_new.ray(0) == LatticePoint(0, 1) ? dual_new.ray(1) : dual_new.ray(0);
  if (other.x <= 0)
    throw internal_consistency("dual cone is not in the expected position");
  const Integer &a = other.x, &b = other.y;

  if (n > 0)
    return RootPairClassification{MonoidSpec::x(n, a, b), to_old};
  // y' = χ^(0,-1): flip the second basis vector.
  return RootPairClassification{MonoidSpec::y(-n, a, b + n * a),
                                LatticeMap::from_columns(minus_e1, -v)};
}

/// A point (a, b) of c together with the vertical point (0, b) or (0, b + na)
/// missing from c.
struct RestrictionFailure {
  LatticePoint point;
  LatticePoint missing;
};

/// Check of "(a,b) ∈ c implies (0,b), (0,b+na) ∈ c" on the ray generators.
/// Both maps (a,b) -> (0,b) and (a,b) -> (0,b+na) are linear, so the
/// condition on the rays implies it on all of c.
inline std::optional<RestrictionFailure> restriction_failure(const Cone2 &c, const Integer &n) {
  if (c.ambient() != Ambient::M)
    throw invalid_argument("restriction condition needs a cone in M");
  if (c.ray(0).x < 0 || c.ray(1).x < 0)
    throw invalid_argument("cone is not inside the half-plane x >= 0");
  for (int i = 0; i < 2; ++i) {
    const LatticePoint &r = c.ray(i);
    LatticePoint left(0, r.y), right(0, r.y + n * r.x);
    if (!cone_contains(c, left))
      return RestrictionFailure{r, left};
    if (!cone_contains(c, right))
      return RestrictionFailure{r, right};
  }
  return std::nullopt;
}

inline bool restriction_condition(const Cone2 &c, const Integer &n) {
  return !restriction_failure(c, n).has_value();
}

inline bool restriction_condition(const HalfPlane &, const Integer &) { return true; }

inline MonoidSpec classify_cone(const HalfPlane &, const Integer &n) {
  return MonoidSpec::group(n);
}

inline MonoidSpec classify_cone(const Cone2 &c, const Integer &n) {
  if (n < 1)
    throw invalid_argument("n must be positive");
  if (!c.full_dim())
    throw unsupported_input("monoid cones are two-dimensional");
  if (auto failure = restriction_failure(c, n))
    throw not_a_monoid("cone fails the restriction condition at " + to_string(failure->point) +
                           ": " + to_string(failure->missing) + " is not in the cone",
                       to_string(failure->point), to_string(failure->missing));
  const LatticePoint up(0, 1), down(0, -1);
  const bool has_up = cone_contains(c, up), has_down = cone_contains(c, down);
  if (has_up == has_down)
    throw internal_consistency("cone contains neither or both of (0, 1), (0, -1)");
  const LatticePoint &other = c.ray(0) == (has_up ? up : down) ? c.ray(1) : c.ray(0);
  if (gcd(other.x, other.y) != 1 || other.x <= 0)
    throw internal_consistency("non-vertical ray " + to_string(other) + " is malformed");
  if (has_up)
    return MonoidSpec::x(n, other.x, other.y);
  return MonoidSpec::y(n, other.x, -other.y - n * other.x);
}

inline MonoidSpec classify_cone(const DualShape &shape, const Integer &n) {
  return std::visit([&](const auto &c) { return classify_cone(c, n); }, shape);
}

inline void require_xy(const MonoidSpec &s, const char *what) {
  if (s.is_group())
    throw not_applicable(std::string(what) + " is not defined for the group G_n");
}

/// L_k: codimension of the k-th image ideal of δ_l = ∂_x, by the closed formula
/// ceil(kb/a) for X and ceil(k(b+na)/a) for Y.
inline Integer invariant_Lk_closed(const MonoidSpec &s, const Integer &k) {
  require_xy(s, "L_k");
  if (k < 1)
    throw invalid_argument("k must be positive");
  if (s.family() == Family::X)
    return ceil_div(k * s.b(), s.a());
  return ceil_div(k * (s.b() + s.n() * s.a()), s.a());
}

/// Codimension of ker(δ) ∩ δ^k(K[c ∩ M]) in ker(δ) ∩ K[c ∩ M] for δ = δ_l,
/// counted monomial by monomial.
///
/// The kernel is spanned by the vertical monomials χ^(0,c) of the cone, and
/// the only monomial whose k-th derivative is a multiple of χ^(0,c) is
/// χ^(k,c). Walks the vertical ray away from the origin and counts kernel
/// monomials not hit, stopping at the first one hit (everything beyond is
/// hit as well, because adding the vertical ray stays inside the cone).
inline Integer image_ideal_codimension(const Cone2 &c, unsigned long k,
                                       const Rational &scale = 1) {
  const DerivationRule delta_l(LatticePoint(-1, 0), LatticePoint(1, 0, Ambient::N), scale);
  const LatticePoint up(0, 1), down(0, -1);
  LatticePoint step;
  if (cone_contains(c, up))
    step = up;
  else if (cone_contains(c, down))
    step = down;
  else
    throw not_applicable("kernel of δ_l is trivial on this cone");

  constexpr long kSearchLimit = 1'000'000;
  Integer misses = 0;
  LatticePoint kernel(0, 0);
  for (long it = 0; it < kSearchLimit; ++it, kernel += step) {
    LatticePoint source(static_cast<long>(k), kernel.y);
    bool hit = false;
    if (cone_contains(c, source)) {
      LaurentElement image = derive_iterated(delta_l, chi(source), k);
      hit = image.size() == 1 && image.coefficient(kernel) != 0;
    }
    if (hit)
      return misses;
    ++misses;
  }
  throw internal_consistency("image ideal search did not terminate");
}

inline Integer invariant_Lk_oracle(const MonoidSpec &s, const Integer &k,
                                   const Rational &scale = 1) {
  require_xy(s, "L_k");
  if (k < 1)
    throw invalid_argument("k must be positive");
  return image_ideal_codimension(cone2_of_spec(s), static_cast<unsigned long>(to_long(k)), scale);
}

/// True when s1 and s2 are certified non-isomorphic; false means equal specs.
inline bool distinguish(const MonoidSpec &s1, const MonoidSpec &s2) {
  if (s1 == s2)
    return false;
  if (s1.n() != s2.n())
    return true; // groups of units G_n differ
  if (s1.family() != s2.family())
    return true; // group vs non-group, or δ_r = x^n δ_l only holds on X
  Integer k = s1.a() * s2.a();
  if (invariant_Lk_closed(s1, k) != invariant_Lk_closed(s2, k))
    return true;
  throw internal_consistency("distinct specs " + to_string(s1) + " and " + to_string(s2) +
                             " agree on L_" + k.str());
}

inline MonoidSpec opposite(const MonoidSpec &s) {
  switch (s.family()) {
  case Family::Group:
    return s;
  case Family::X:
    return MonoidSpec::y(s.n(), s.a(), s.b());
  case Family::Y:
    return MonoidSpec::x(s.n(), s.a(), s.b());
  }
  throw internal_consistency("unknown family");
}

/// Lattice automorphism (1,0) -> (1,-n), (0,1) -> (0,-1). It is an involution
/// exchanging the cones of X(n,a,b) and Y(n,a,b) and intertwines their
/// comultiplications up to the flip f⊗g -> g⊗f.
inline LatticeMap opposite_witness(const MonoidSpec &s) {
  require_xy(s, "opposite witness");
  return LatticeMap(1, 0, -s.n(), -1);
}

/// Quotient of X(mn, a, b) by the central subgroup C_m: X(n, a', b') with
/// a' = a m / gcd(m, b), b' = b / gcd(m, b). Y goes through the opposite.
inline MonoidSpec quotient_by_center(const MonoidSpec &s, const Integer &m) {
  if (m < 1)
    throw invalid_argument("m must be positive");
  if (s.n() % m != 0)
    throw invalid_argument("m = " + m.str() + " does not divide n = " + s.n().str());
  if (s.is_group())
    return MonoidSpec::group(s.n() / m);
  if (s.family() == Family::Y)
    return opposite(quotient_by_center(opposite(s), m));
  Integer g = gcd(m, s.b());
  Integer a2 = m / g * s.a(), b2 = s.b() / g;
  if (gcd(a2, b2) != 1)
    throw internal_consistency("quotient parameters are not coprime");
  return MonoidSpec::x(s.n() / m, a2, b2);
}

/// Lattice map (a', b') -> (a', m b') carrying the quotient's cone onto the
/// cone of the original X spec.
inline LatticeMap quotient_lattice_map(const Integer &m) { return LatticeMap(1, 0, 0, m); }

struct BoundaryInfo {
  Integer left_weight;  // (0,τ)·x = τ^left x
  Integer right_weight; // x·(0,τ) = τ^right x
  bool has_zero = false;
  bool idempotent_line = false;

  friend bool operator==(const BoundaryInfo &, const BoundaryInfo &) = default;
};

/// For Y the weights are read through the opposite isomorphism, i.e. in the
/// chart coordinate χ^(0,-1) = τ^-1.
inline BoundaryInfo boundary(const MonoidSpec &s) {
  require_xy(s, "boundary divisor");
  if (s.family() == Family::Y) {
    BoundaryInfo info = boundary(opposite(s));
    std::swap(info.left_weight, info.right_weight);
    return info;
  }
  BoundaryInfo info;
  info.left_weight = s.b() + s.a() * s.n();
  info.right_weight = s.b();
  // b = 0 forces a = 1: the idempotent line (x1,0)(x2,0) = (x1,0).
  info.has_zero = s.b() > 0;
  info.idempotent_line = s.b() == 0;
  return info;
}

/// Evaluation at the unit (0, 1) of G_n.
inline Rational counit(const LatticePoint &u) { return u.x == 0 ? Rational(1) : Rational(0); }

} // namespace toricmon
