#pragma once

#include <vector>

#include "toricmon/io.hpp"

namespace toricmon {

struct CatalogEntry {
  MonoidSpec spec;
  Cone2 cone;
  std::vector<LatticePoint> hilbert_basis;
  std::vector<Integer> invariants; // L_1 .. L_K
  BoundaryInfo boundary;

  friend bool operator==(const CatalogEntry &, const CatalogEntry &) = default;
};

inline CatalogEntry catalog_entry(const MonoidSpec &s, long k_max) {
  Cone2 cone = cone2_of_spec(s);
  std::vector<Integer> invariants;
  for (long k = 1; k <= k_max; ++k)
    invariants.push_back(invariant_Lk_closed(s, k));
  return {s, cone, semigroup_generators(cone), std::move(invariants), toricmon::boundary(s)};
}

/// Every X and Y spec with n <= n_max, a <= a_max, b <= b_max, gcd(a, b) = 1,
/// ordered by (n, family, a, b). Each isomorphism class appears once.
inline std::vector<CatalogEntry> make_catalog(long n_max, long a_max, long b_max, long k_max) {
  if (n_max < 1 || a_max < 1 || b_max < 1 || k_max < 1)
    throw invalid_argument("catalog bounds must be at least 1");
  std::vector<CatalogEntry> out;
  for (long n = 1; n <= n_max; ++n)
    for (Family f : {Family::X, Family::Y})
      for (long a = 1; a <= a_max; ++a)
        for (long b = 0; b <= b_max; ++b)
          if (gcd(a, b) == 1)
            out.push_back(catalog_entry(MonoidSpec::make(f, n, a, b), k_max));
  return out;
}

namespace io {

inline json to_json(const CatalogEntry &e) {
  json basis = json::array();
  for (const auto &g : e.hilbert_basis)
    basis.push_back(to_json(g));
  json invariants = json::array();
  for (const auto &v : e.invariants)
    invariants.push_back(integer_to_json(v));
  return json{{"spec", to_json(e.spec)},
              {"cone", to_json(e.cone)},
              {"hilbert_basis", basis},
              {"invariants", invariants},
              {"boundary", to_json(e.boundary)}};
}

inline CatalogEntry catalog_entry_from_json(const json &j) {
  CatalogEntry e{spec_from_json(j.at("spec")), cone_from_json(j.at("cone")), {}, {},
                 boundary_from_json(j.at("boundary"))};
  for (const auto &g : j.at("hilbert_basis"))
    e.hilbert_basis.push_back(point_from_json(g));
  for (const auto &v : j.at("invariants"))
    e.invariants.push_back(integer_from_json(v));
  return e;
}

} // namespace io

} // namespace toricmon
