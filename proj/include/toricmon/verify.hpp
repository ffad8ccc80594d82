#pragma once

// Symbolic checks of the bialgebra axioms on all cone monomials in a box.

#include <optional>
#include <string>
#include <vector>

#include "toricmon/monoid.hpp"

namespace toricmon {

struct CheckResult {
  std::string name;
  bool passed = true;
  /// Monomial exponents exhibiting the first failure.
  std::vector<LatticePoint> witness;

  friend bool operator==(const CheckResult &, const CheckResult &) = default;
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  bool passed() const {
    for (const auto &c : checks)
      if (!c.passed)
        return false;
    return true;
  }
  const CheckResult *find(const std::string &name) const {
    for (const auto &c : checks)
      if (c.name == name)
        return &c;
    return nullptr;
  }

  friend bool operator==(const VerificationReport &, const VerificationReport &) = default;
};

namespace detail {

inline void fail_once(CheckResult &check, std::vector<LatticePoint> witness) {
  if (check.passed) {
    check.passed = false;
    check.witness = std::move(witness);
  }
}

} // namespace detail

/// (μ*⊗id)∘μ* and (id⊗μ*)∘μ* as triple tensors.
inline TripleTensor comult_left(const ComultRule &rule, const TensorElement &t) {
  TripleTensor out;
  for (const auto &[k, c] : t.terms()) {
    const TensorElement image = comult(rule, k.first);
    for (const auto &[k2, c2] : image.terms())
      out.add_term({k2.first, k2.second, k.second}, c * c2);
  }
  return out;
}

inline TripleTensor comult_right(const ComultRule &rule, const TensorElement &t) {
  TripleTensor out;
  for (const auto &[k, c] : t.terms()) {
    const TensorElement image = comult(rule, k.second);
    for (const auto &[k2, c2] : image.terms())
      out.add_term({k.first, k2.first, k2.second}, c * c2);
  }
  return out;
}

/// Checks, for every monomial χ^u of the domain with |coordinates| <= box:
/// closure of μ*(χ^u) in the domain, coassociativity, both counit axioms, and
/// multiplicativity μ*(χ^u χ^v) = μ*(χ^u) μ*(χ^v) for all pairs u, v.
inline VerificationReport verify_bialgebra(const DualShape &domain, const ComultRule &rule,
                                           long box) {
  if (box < 1)
    throw invalid_argument("verification box must be at least 1");
  CheckResult closure{"closure"}, coassoc{"coassociativity"}, counit_left{"counit_left"},
      counit_right{"counit_right"}, multiplicative{"multiplicativity"};

  const std::vector<LatticePoint> monomials = lattice_points(domain, box);
  std::vector<TensorElement> images;
  images.reserve(monomials.size());

  for (const auto &u : monomials) {
    TensorElement image = comult(rule, u);
    for (const auto &[k, c] : image.terms())
      if (!contains(domain, k.first) || !contains(domain, k.second)) {
        detail::fail_once(closure, {u, contains(domain, k.first) ? k.second : k.first});
        break;
      }
    if (comult_left(rule, image) != comult_right(rule, image))
      detail::fail_once(coassoc, {u});

    LaurentElement left, right;
    for (const auto &[k, c] : image.terms()) {
      left.add_term(k.second, c * counit(k.first));
      right.add_term(k.first, c * counit(k.second));
    }
    if (left != chi(u))
      detail::fail_once(counit_left, {u});
    if (right != chi(u))
      detail::fail_once(counit_right, {u});
    images.push_back(std::move(image));
  }

  for (std::size_t i = 0; i < monomials.size() && multiplicative.passed; ++i)
    for (std::size_t j = i; j < monomials.size(); ++j)
      if (comult(rule, monomials[i] + monomials[j]) != images[i] * images[j]) {
        detail::fail_once(multiplicative, {monomials[i], monomials[j]});
        break;
      }

  return {{closure, coassoc, counit_left, counit_right, multiplicative}};
}

inline VerificationReport verify_bialgebra(const MonoidSpec &s, long box) {
  return verify_bialgebra(cone_of_spec(s), rule_of_spec(s), box);
}

/// flip(μ*_Y(φ(χ^u))) = (φ⊗φ)(μ*_X(χ^u)) for every monomial of the X cone in
/// the box, φ = opposite_witness.
inline VerificationReport check_opposite_intertwining(const MonoidSpec &s, long box) {
  require_xy(s, "opposite intertwining");
  const MonoidSpec x_spec = s.family() == Family::X ? s : opposite(s);
  const MonoidSpec y_spec = opposite(x_spec);
  const LatticeMap phi = opposite_witness(x_spec);
  CheckResult cone_match{"cone_image"}, intertwine{"intertwining"};
  const Cone2 x_cone = cone2_of_spec(x_spec);
  if (map_image_cone(phi, x_cone) != cone2_of_spec(y_spec))
    detail::fail_once(cone_match, {x_cone.ray(0), x_cone.ray(1)});
  for (const auto &u : lattice_points(x_cone, box)) {
    TensorElement lhs = flip(comult(y_spec, phi(u)));
    TensorElement rhs = map_exponents(phi, comult(x_spec, u));
    if (lhs != rhs) {
      detail::fail_once(intertwine, {u});
      break;
    }
  }
  return {{cone_match, intertwine}};
}

} // namespace toricmon
