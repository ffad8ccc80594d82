#pragma once

// Demazure roots of a two-dimensional cone σ ⊂ N and their pairs.
//
// Ray indices refer to the normalized (sorted) ray order of the Cone2.

#include <utility>
#include <vector>

#include "toricmon/cone.hpp"
#include "toricmon/derivation.hpp"

namespace toricmon {

inline void require_full_dim_n_cone(const Cone2 &sigma) {
  if (sigma.ambient() != Ambient::N)
    throw invalid_argument("Demazure roots need a cone in N");
  if (!sigma.full_dim())
    throw unsupported_input("Demazure roots need a two-dimensional cone");
}

inline void require_ray_index(int i) {
  if (i != 0 && i != 1)
    throw invalid_argument("ray index must be 0 or 1");
}

/// <e, p_i> = -1 and <e, p_j> >= 0 for the other ray j.
inline bool is_demazure_root(const Cone2 &sigma, int i, const LatticePoint &e) {
  require_full_dim_n_cone(sigma);
  require_ray_index(i);
  LatticePoint em(e.x, e.y, Ambient::M);
  return pairing(em, sigma.ray(i)) == -1 && pairing(em, sigma.ray(1 - i)) >= 0;
}

class DemazureRoot {
public:
  /// Validates the root conditions against sigma.
  DemazureRoot(const Cone2 &sigma, int ray_index, const LatticePoint &e)
      : e_(e.x, e.y, Ambient::M), ray_index_(ray_index) {
    if (!is_demazure_root(sigma, ray_index, e_))
      throw invalid_argument(to_string(e_) + " is not a Demazure root of ray " +
                             to_string(sigma.ray(ray_index)));
  }

  const LatticePoint &e() const { return e_; }
  int ray_index() const { return ray_index_; }

  friend bool operator==(const DemazureRoot &, const DemazureRoot &) = default;

private:
  LatticePoint e_;
  int ray_index_;
};

class RootPair {
public:
  RootPair(DemazureRoot e1, DemazureRoot e2) : e1_(std::move(e1)), e2_(std::move(e2)) {
    if (e1_.ray_index() != e2_.ray_index())
      throw invalid_argument("roots of a pair must share their ray");
  }

  const DemazureRoot &e1() const { return e1_; }
  const DemazureRoot &e2() const { return e2_; }
  int ray_index() const { return e1_.ray_index(); }
  bool is_diagonal() const { return e1_ == e2_; }

  friend bool operator==(const RootPair &, const RootPair &) = default;

private:
  DemazureRoot e1_;
  DemazureRoot e2_;
};

/// All roots of ray i with |coordinates| <= bound. The family is infinite, so
/// the bound is mandatory.
inline std::vector<DemazureRoot> roots_up_to(const Cone2 &sigma, int i, long bound) {
  require_full_dim_n_cone(sigma);
  require_ray_index(i);
  if (bound < 1)
    throw invalid_argument("root enumeration bound must be at least 1");
  std::vector<DemazureRoot> out;
  for (long x = -bound; x <= bound; ++x)
    for (long y = -bound; y <= bound; ++y) {
      LatticePoint e(x, y, Ambient::M);
      if (is_demazure_root(sigma, i, e))
        out.emplace_back(sigma, i, e);
    }
  return out;
}

/// The homogeneous LND δ_e(χ^u) = <u, p_i> χ^(u+e).
inline DerivationRule derivation_of(const Cone2 &sigma, const DemazureRoot &r) {
  return DerivationRule(r.e(), sigma.ray(r.ray_index()));
}

/// Ray of the dual cone orthogonal to p_i.
inline LatticePoint dual_ray_orthogonal_to(const Cone2 &sigma, int i) {
  Cone2 dual = dual_cone(sigma);
  for (int j = 0; j < 2; ++j)
    if (pairing(dual.ray(j), sigma.ray(i)) == 0)
      return dual.ray(j);
  throw internal_consistency("no dual ray orthogonal to " + to_string(sigma.ray(i)));
}

/// The lattice basis (-e, v), v the dual ray orthogonal to p_i. Always
/// unimodular; a non-unimodular result raises internal_consistency.
inline std::pair<LatticePoint, LatticePoint> root_basis(const Cone2 &sigma,
                                                        const DemazureRoot &r) {
  LatticePoint v = dual_ray_orthogonal_to(sigma, r.ray_index());
  LatticePoint minus_e = -r.e();
  Integer d = det(minus_e, v);
  if (d != 1 && d != -1)
    throw internal_consistency("root basis has determinant " + d.str());
  return {minus_e, v};
}

/// The linear map of M_Q exchanging the two rays of σ^∨.
inline RationalMap swap_map(const Cone2 &sigma) {
  require_full_dim_n_cone(sigma);
  Cone2 dual = dual_cone(sigma);
  return solve_linear_map(dual.ray(0), dual.ray(1), dual.ray(1), dual.ray(0));
}

/// Whether the monoid structures given by p and q are isomorphic: the pairs
/// coincide, or the ray swap is a lattice automorphism carrying q onto p.
inline bool pair_equivalence(const Cone2 &sigma, const RootPair &p, const RootPair &q) {
  if (p == q)
    return true;
  if (p.ray_index() == q.ray_index())
    return false;
  RationalMap tau = swap_map(sigma);
  if (!tau.is_integral())
    return false;
  LatticeMap t = tau.to_lattice_map();
  return t(q.e1().e()) == p.e1().e() && t(q.e2().e()) == p.e2().e();
}

} // namespace toricmon
