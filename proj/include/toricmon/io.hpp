#pragma once

// JSON wire formats.
//
//   lattice point   [a, b]
//   cone            {"rays": [[..],[..]], "ambient": "M"|"N"}
//   half-plane      {"ambient": "M", "half_plane": true}
//   Laurent element [{"exp": [a,b], "coef": "p/q"}, ...]
//   tensor element  [{"left": [a,b], "right": [c,d], "coef": "p/q"}, ...]
//   Demazure root   {"e": [a,b], "ray_index": 0|1}
//   monoid spec     {"family": "Group"|"X"|"Y", "n": int, "a": int, "b": int}
//   report          {"checks": [{"name": .., "status": "pass"|"fail", "witness": ..}]}
//
// Coefficients are "p" for integers and "p/q" otherwise. Sparse sums are
// emitted in canonical term order, so equal values serialize identically.

#include <json.hpp>

#include <string>
#include <vector>

#include "toricmon/chart.hpp"
#include "toricmon/verify.hpp"

namespace toricmon::io {

using json = nlohmann::ordered_json;

inline json integer_to_json(const Integer &v) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min())
    return v.str(); // beyond int64: decimal string
  return v.convert_to<std::int64_t>();
}

inline Integer integer_from_json(const json &j) {
  if (j.is_number_integer())
    return Integer(j.get<std::int64_t>());
  if (j.is_string())
    return parse_integer(j.get<std::string>());
  throw invalid_argument("expected an integer, got " + j.dump());
}

inline json rational_to_json(const Rational &q) { return to_string(q); }

inline Rational rational_from_json(const json &j) {
  if (j.is_string())
    return parse_rational(j.get<std::string>());
  if (j.is_number_integer())
    return Rational(j.get<std::int64_t>());
  throw invalid_argument("expected a rational string \"p/q\", got " + j.dump());
}

inline json to_json(const LatticePoint &p) {
  return json::array({integer_to_json(p.x), integer_to_json(p.y)});
}

inline LatticePoint point_from_json(const json &j, Ambient ambient = Ambient::M) {
  if (!j.is_array() || j.size() != 2)
    throw invalid_argument("expected a lattice point [a, b], got " + j.dump());
  return {integer_from_json(j[0]), integer_from_json(j[1]), ambient};
}

inline Ambient ambient_from_json(const json &j) {
  if (j == "M")
    return Ambient::M;
  if (j == "N")
    return Ambient::N;
  throw invalid_argument("ambient must be \"M\" or \"N\", got " + j.dump());
}

inline json to_json(const Cone2 &c) {
  return json{{"rays", json::array({to_json(c.ray(0)), to_json(c.ray(1))})},
              {"ambient", to_string(c.ambient())}};
}

inline json to_json(const HalfPlane &) {
  return json{{"ambient", "M"}, {"half_plane", true}};
}

inline json to_json(const DualShape &shape) {
  return std::visit([](const auto &c) { return to_json(c); }, shape);
}

inline DualShape shape_from_json(const json &j) {
  if (!j.is_object())
    throw invalid_argument("expected a cone object, got " + j.dump());
  if (j.contains("half_plane")) {
    if (j.at("half_plane") != true)
      throw invalid_argument("half_plane must be true when present");
    if (j.contains("ambient") && ambient_from_json(j.at("ambient")) != Ambient::M)
      throw invalid_argument("the half-plane lives in M");
    return HalfPlane{};
  }
  if (!j.contains("rays") || !j.at("rays").is_array() || j.at("rays").size() != 2)
    throw invalid_argument("cone needs \"rays\": [[..],[..]]");
  Ambient amb = j.contains("ambient") ? ambient_from_json(j.at("ambient")) : Ambient::M;
  return Cone2(point_from_json(j.at("rays")[0], amb), point_from_json(j.at("rays")[1], amb));
}

inline Cone2 cone_from_json(const json &j) {
  DualShape shape = shape_from_json(j);
  if (auto *c = std::get_if<Cone2>(&shape))
    return *c;
  throw invalid_argument("expected a strongly convex cone, got the half-plane");
}

inline json to_json(const LaurentElement &f) {
  json out = json::array();
  for (const auto &[u, c] : f.terms())
    out.push_back(json{{"exp", to_json(u)}, {"coef", rational_to_json(c)}});
  return out;
}

inline LaurentElement laurent_from_json(const json &j) {
  if (!j.is_array())
    throw invalid_argument("expected a list of terms");
  LaurentElement f;
  for (const auto &t : j)
    f.add_term(point_from_json(t.at("exp")), rational_from_json(t.at("coef")));
  return f;
}

inline json to_json(const TensorElement &t) {
  json out = json::array();
  for (const auto &[k, c] : t.terms())
    out.push_back(json{{"left", to_json(k.first)},
                       {"right", to_json(k.second)},
                       {"coef", rational_to_json(c)}});
  return out;
}

inline TensorElement tensor_from_json(const json &j) {
  if (!j.is_array())
    throw invalid_argument("expected a list of tensor terms");
  TensorElement t;
  for (const auto &term : j)
    t.add_term({point_from_json(term.at("left")), point_from_json(term.at("right"))},
               rational_from_json(term.at("coef")));
  return t;
}

inline json to_json(const DemazureRoot &r) {
  return json{{"e", to_json(r.e())}, {"ray_index", r.ray_index()}};
}

inline DemazureRoot root_from_json(const json &j, const Cone2 &sigma) {
  if (!j.is_object() || !j.contains("e") || !j.contains("ray_index"))
    throw invalid_argument("root needs \"e\" and \"ray_index\"");
  return DemazureRoot(sigma, j.at("ray_index").get<int>(), point_from_json(j.at("e")));
}

inline json to_json(const MonoidSpec &s) {
  json out{{"family", to_string(s.family())}, {"n", integer_to_json(s.n())}};
  if (!s.is_group()) {
    out["a"] = integer_to_json(s.a());
    out["b"] = integer_to_json(s.b());
  }
  return out;
}

inline MonoidSpec spec_from_json(const json &j) {
  if (!j.is_object() || !j.contains("family") || !j.contains("n"))
    throw invalid_argument("monoid spec needs \"family\" and \"n\"");
  const auto &fam = j.at("family");
  Integer n = integer_from_json(j.at("n"));
  if (fam == "Group")
    return MonoidSpec::group(n);
  if (!j.contains("a") || !j.contains("b"))
    throw invalid_argument("X and Y specs need \"a\" and \"b\"");
  Integer a = integer_from_json(j.at("a")), b = integer_from_json(j.at("b"));
  if (fam == "X")
    return MonoidSpec::x(n, a, b);
  if (fam == "Y")
    return MonoidSpec::y(n, a, b);
  throw invalid_argument("family must be Group, X or Y, got " + fam.dump());
}

inline json to_json(const BoundaryInfo &info) {
  return json{{"left_weight", integer_to_json(info.left_weight)},
              {"right_weight", integer_to_json(info.right_weight)},
              {"has_zero", info.has_zero},
              {"idempotent_line", info.idempotent_line}};
}

inline BoundaryInfo boundary_from_json(const json &j) {
  BoundaryInfo info;
  info.left_weight = integer_from_json(j.at("left_weight"));
  info.right_weight = integer_from_json(j.at("right_weight"));
  info.has_zero = j.at("has_zero").get<bool>();
  info.idempotent_line = j.at("idempotent_line").get<bool>();
  return info;
}

inline json to_json(const ChartPoint &p) {
  json out = json::array();
  for (const auto &c : p.coords)
    out.push_back(rational_to_json(c));
  return out;
}

inline ChartPoint chart_point_from_json(const json &j) {
  if (!j.is_array())
    throw invalid_argument("expected a chart point [\"p/q\", ...]");
  std::vector<Rational> coords;
  for (const auto &c : j)
    coords.push_back(rational_from_json(c));
  return ChartPoint(std::move(coords));
}

inline json to_json(const VerificationReport &report) {
  json checks = json::array();
  for (const auto &c : report.checks) {
    json witness = nullptr;
    if (!c.passed) {
      witness = json::array();
      for (const auto &w : c.witness)
        witness.push_back(to_json(w));
    }
    checks.push_back(
        json{{"name", c.name}, {"status", c.passed ? "pass" : "fail"}, {"witness", witness}});
  }
  return json{{"checks", checks}};
}

inline VerificationReport report_from_json(const json &j) {
  VerificationReport report;
  for (const auto &c : j.at("checks")) {
    CheckResult check{c.at("name").get<std::string>()};
    const auto &status = c.at("status");
    if (status != "pass" && status != "fail")
      throw invalid_argument("check status must be pass or fail, got " + status.dump());
    check.passed = status == "pass";
    if (!c.at("witness").is_null())
      for (const auto &w : c.at("witness"))
        check.witness.push_back(point_from_json(w));
    report.checks.push_back(std::move(check));
  }
  return report;
}

} // namespace toricmon::io
