#pragma once

// Homogeneous derivations χ^u -> scale * <u, ray> * χ^(u + root).

#include "toricmon/cone.hpp"
#include "toricmon/laurent.hpp"

namespace toricmon {

struct DerivationRule {
  LatticePoint root; // degree, in M
  LatticePoint ray;  // in N
  Rational scale = 1;

  DerivationRule(LatticePoint root_, LatticePoint ray_, Rational scale_ = 1)
      : root(std::move(root_)), ray(std::move(ray_)), scale(std::move(scale_)) {
    if (scale == 0)
      throw invalid_argument("derivation scale must be nonzero");
    root.ambient = Ambient::M;
    ray.ambient = Ambient::N;
  }
};

inline LaurentElement derive(const DerivationRule &d, const LaurentElement &f) {
  LaurentElement out;
  for (const auto &[u, c] : f.terms()) {
    Integer w = pairing(u, d.ray);
    if (w != 0)
      out.add_term(u + d.root, d.scale * Rational(w) * c);
  }
  return out;
}

inline LaurentElement derive_iterated(const DerivationRule &d, LaurentElement f,
                                      unsigned long times) {
  for (unsigned long i = 0; i < times && !f.is_zero(); ++i)
    f = derive(d, f);
  return f;
}

/// Finite certificate of local nilpotency on K[c ∩ M].
///
/// For every lattice point u of c with |coordinates| <= probe_bound, the
/// iterates δ^k(χ^u) must stay inside c and vanish for some
/// k <= max(<u, ray>, 0) + 1.
inline bool is_locally_nilpotent_on(const DerivationRule &d, const Cone2 &c,
                                    long probe_bound) {
  if (probe_bound < 1)
    throw invalid_argument("probe bound must be at least 1");
  for (const auto &u : lattice_points(c, probe_bound)) {
    Integer w = pairing(u, d.ray);
    long limit = to_long(w > 0 ? w : Integer(0)) + 1;
    LaurentElement f = chi(u);
    long k = 0;
    while (!f.is_zero() && k < limit) {
      f = derive(d, f);
      ++k;
      for (const auto &[v, coef] : f.terms())
        if (!cone_contains(c, v))
          return false;
    }
    if (!f.is_zero())
      return false;
  }
  return true;
}

} // namespace toricmon
