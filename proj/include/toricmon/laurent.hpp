#pragma once

// Sparse exact-rational Laurent polynomials in two variables and their
// tensor powers. Exponents are points of M; x = χ^(1,0), y = χ^(0,1).

#include <array>
#include <functional>
#include <map>
#include <utility>

#include "toricmon/lattice.hpp"

namespace toricmon {

using TensorKey = std::pair<LatticePoint, LatticePoint>;
using TripleKey = std::array<LatticePoint, 3>;

inline LatticePoint key_add(const LatticePoint &a, const LatticePoint &b) {
  return a + b;
}
inline TensorKey key_add(const TensorKey &a, const TensorKey &b) {
  return {a.first + b.first, a.second + b.second};
}
inline TripleKey key_add(const TripleKey &a, const TripleKey &b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}

inline LatticePoint key_zero(const LatticePoint *) { return {0, 0}; }
inline TensorKey key_zero(const TensorKey *) { return {{0, 0}, {0, 0}}; }
inline TripleKey key_zero(const TripleKey *) {
  return {LatticePoint{0, 0}, LatticePoint{0, 0}, LatticePoint{0, 0}};
}

/// Finite sum of monomials indexed by Key with nonzero rational coefficients.
/// Terms are kept in key order, so == is semantic equality.
template <class Key> class SparseSum {
public:
  using key_type = Key;
  using container = std::map<Key, Rational>;

  SparseSum() = default;

  static SparseSum monomial(Key k, Rational coef = 1) {
    SparseSum s;
    s.add_term(std::move(k), std::move(coef));
    return s;
  }
  static SparseSum one() { return monomial(key_zero(static_cast<Key *>(nullptr))); }

  void add_term(const Key &k, const Rational &coef) {
    if (coef == 0)
      return;
    auto [it, inserted] = terms_.try_emplace(k, coef);
    if (!inserted) {
      it->second += coef;
      if (it->second == 0)
        terms_.erase(it);
    }
  }

  const container &terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(const Key &k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  SparseSum &operator+=(const SparseSum &o) {
    for (const auto &[k, c] : o.terms_)
      add_term(k, c);
    return *this;
  }
  SparseSum &operator-=(const SparseSum &o) {
    for (const auto &[k, c] : o.terms_)
      add_term(k, -c);
    return *this;
  }
  friend SparseSum operator+(SparseSum a, const SparseSum &b) { return a += b; }
  friend SparseSum operator-(SparseSum a, const SparseSum &b) { return a -= b; }

  friend SparseSum operator*(const Rational &s, const SparseSum &a) {
    SparseSum out;
    if (s == 0)
      return out;
    for (const auto &[k, c] : a.terms_)
      out.terms_.emplace(k, s * c);
    return out;
  }

  friend SparseSum operator*(const SparseSum &a, const SparseSum &b) {
    SparseSum out;
    for (const auto &[ka, ca] : a.terms_)
      for (const auto &[kb, cb] : b.terms_)
        out.add_term(key_add(ka, kb), ca * cb);
    return out;
  }

  friend bool operator==(const SparseSum &, const SparseSum &) = default;

  /// Applies f to every key; coefficients of colliding images are summed.
  template <class F> auto map_keys(F &&f) const {
    using Out = std::invoke_result_t<F, const Key &>;
    SparseSum<Out> out;
    for (const auto &[k, c] : terms_)
      out.add_term(f(k), c);
    return out;
  }

private:
  container terms_;
};

using LaurentElement = SparseSum<LatticePoint>;
using TensorElement = SparseSum<TensorKey>;
using TripleTensor = SparseSum<TripleKey>;

inline LaurentElement chi(const Integer &a, const Integer &b) {
  return LaurentElement::monomial(LatticePoint(a, b));
}
inline LaurentElement chi(const LatticePoint &u) {
  return LaurentElement::monomial(LatticePoint(u.x, u.y, Ambient::M));
}

inline LaurentElement multiply(const LaurentElement &f, const LaurentElement &g) {
  return f * g;
}

inline TensorElement tensor_multiply(const TensorElement &s, const TensorElement &t) {
  return s * t;
}

/// s^k by repeated squaring; s^0 = 1⊗1.
inline TensorElement tensor_power(const TensorElement &s, unsigned long k) {
  TensorElement result = TensorElement::one();
  TensorElement base = s;
  while (k > 0) {
    if (k & 1UL)
      result = result * base;
    k >>= 1;
    if (k > 0)
      base = base * base;
  }
  return result;
}

/// Pure tensor f ⊗ g.
inline TensorElement tensor(const LaurentElement &f, const LaurentElement &g) {
  TensorElement out;
  for (const auto &[u, cu] : f.terms())
    for (const auto &[v, cv] : g.terms())
      out.add_term({u, v}, cu * cv);
  return out;
}

/// The swap f⊗g -> g⊗f.
inline TensorElement flip(const TensorElement &t) {
  return t.map_keys([](const TensorKey &k) { return TensorKey{k.second, k.first}; });
}

inline LaurentElement map_exponents(const LatticeMap &m, const LaurentElement &f) {
  return f.map_keys([&](const LatticePoint &u) { return m(u); });
}

inline TensorElement map_exponents(const LatticeMap &m, const TensorElement &t) {
  return t.map_keys([&](const TensorKey &k) { return TensorKey{m(k.first), m(k.second)}; });
}

/// Exact value of f at the torus point (x, y).
inline Rational evaluate(const LaurentElement &f, const Rational &x, const Rational &y) {
  Rational total = 0;
  for (const auto &[u, c] : f.terms()) {
    if ((u.x < 0 && x == 0) || (u.y < 0 && y == 0))
      throw pole_error("evaluation at a pole of monomial " + to_string(u));
    total += c * pow(x, u.x) * pow(y, u.y);
  }
  return total;
}

/// Value of a tensor at a pair of torus points: sum of c f(P) g(Q).
inline Rational evaluate(const TensorElement &t, const std::pair<Rational, Rational> &p,
                         const std::pair<Rational, Rational> &q) {
  Rational total = 0;
  for (const auto &[k, c] : t.terms())
    total += c * evaluate(chi(k.first), p.first, p.second) *
             evaluate(chi(k.second), q.first, q.second);
  return total;
}

} // namespace toricmon
