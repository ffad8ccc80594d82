#pragma once

// Command-line front-end. run() is the whole program minus main(), so tests
// can drive it with string streams.
//
// Exit codes: 0 success, 1 domain failure (not a monoid, verification
// failed), 2 usage or malformed input.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "toricmon/catalog.hpp"

namespace toricmon::cli {

constexpr int kSuccess = 0;
constexpr int kDomainFailure = 1;
constexpr int kUsage = 2;

constexpr long kDefaultRootBound = 10;
constexpr long kDefaultVerifyBox = 4;
constexpr long kDefaultKMax = 8;

namespace detail {

struct usage_error : error {
  using error::error;
};

inline io::json parse_json(const std::string &text, const char *what) {
  try {
    return io::json::parse(text);
  } catch (const io::json::exception &e) {
    throw usage_error(std::string("malformed ") + what + " JSON: " + e.what());
  }
}

/// Positional argument, else --json-in file, else standard input.
inline io::json read_input(const std::string &positional, const std::string &json_in,
                           std::istream &in) {
  if (!positional.empty())
    return parse_json(positional, "input");
  if (!json_in.empty()) {
    std::ifstream file(json_in);
    if (!file)
      throw usage_error("cannot open " + json_in);
    return parse_json(std::string(std::istreambuf_iterator<char>(file), {}), "input");
  }
  return parse_json(std::string(std::istreambuf_iterator<char>(in), {}), "input");
}

inline LatticePoint monomial_arg(const std::string &text) {
  return io::point_from_json(parse_json(text, "monomial"));
}

/// "0"/"1" or a ray vector "[a, b]" of the cone.
inline int ray_index_arg(const std::string &text, const Cone2 &sigma) {
  io::json j = parse_json(text, "ray");
  if (j.is_number_integer())
    return j.get<int>();
  LatticePoint r = primitive(io::point_from_json(j, sigma.ambient()));
  if (auto index = sigma.ray_index_of(r))
    return *index;
  throw usage_error(to_string(r) + " is not a ray of the cone");
}

} // namespace detail

inline int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out,
               std::ostream &err) {
  CLI::App app{"Noncommutative monoid structures on normal affine toric surfaces", "toricmon"};
  app.require_subcommand(1);

  std::string input, json_in, json_out;
  auto add_io = [&](CLI::App *sub, const char *input_help) {
    sub->add_option("input", input, input_help);
    sub->add_option("--json-in", json_in, "read the JSON input from a file");
    sub->add_option("--json-out", json_out, "write the JSON output to a file");
  };

  long n = 0, bound = kDefaultRootBound, box = kDefaultVerifyBox, k_max = kDefaultKMax, m = 0;
  std::string monomial, ray = "0", p_text, q_text;
  long n_max = 0, a_max = 0, b_max = 0;

  auto *classify = app.add_subcommand("classify", "classify a cone in M as a monoid");
  add_io(classify, "cone JSON");
  classify->add_option("--n", n, "exponent n of the group of units G_n")->required();

  auto *roots = app.add_subcommand("roots", "enumerate Demazure roots of a cone in N");
  add_io(roots, "cone JSON (ambient N)");
  roots->add_option("--ray", ray, "ray index 0/1 or ray vector [a,b]");
  roots->add_option("--bound", bound, "coordinate bound (default 10)");

  auto *comult_cmd = app.add_subcommand("comult", "comultiplication of a monomial");
  add_io(comult_cmd, "spec JSON, or {\"cone\":..,\"roots\":{\"e1\":..,\"e2\":..,\"ray_index\":..}}");
  comult_cmd->add_option("--monomial", monomial, "exponent [a,b]")->required();

  auto *invariants = app.add_subcommand("invariants", "L_1 .. L_K invariants");
  add_io(invariants, "spec JSON");
  invariants->add_option("--k-max", k_max, "largest k (default 8)");

  auto *quotient = app.add_subcommand("quotient", "quotient by the central subgroup C_m");
  add_io(quotient, "spec JSON");
  quotient->add_option("--m", m, "order of the central subgroup")->required();

  auto *opposite_cmd = app.add_subcommand("opposite", "opposite monoid");
  add_io(opposite_cmd, "spec JSON");

  auto *boundary_cmd = app.add_subcommand("boundary", "boundary divisor description");
  add_io(boundary_cmd, "spec JSON");

  auto *multiply = app.add_subcommand("multiply", "multiply two chart points");
  add_io(multiply, "spec JSON");
  multiply->add_option("--p", p_text, "left point [\"p/q\", ...]")->required();
  multiply->add_option("--q", q_text, "right point [\"p/q\", ...]")->required();

  auto *verify = app.add_subcommand("verify", "check the bialgebra axioms");
  add_io(verify, "spec JSON");
  verify->add_option("--box", box, "monomial coordinate bound (default 4)");

  auto *catalog = app.add_subcommand("catalog", "newline-delimited catalog of X and Y monoids");
  catalog->add_option("n-max", n_max, "largest n")->required();
  catalog->add_option("a-max", a_max, "largest a")->required();
  catalog->add_option("b-max", b_max, "largest b")->required();
  catalog->add_option("k", k_max, "number of L_k invariants (default 8)");
  catalog->add_option("--k-max", k_max, "number of L_k invariants (default 8)");
  catalog->add_option("--json-out", json_out, "write the output to a file");

  std::vector<std::string> argv_storage{"toricmon"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char *> argv;
  for (const auto &a : argv_storage)
    argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  std::ostringstream buffer;
  int code = kSuccess;
  auto emit = [&](const io::json &j) { buffer << j.dump() << '\n'; };

  try {
    if (classify->parsed()) {
      DualShape shape = io::shape_from_json(detail::read_input(input, json_in, in));
      if (const auto *cone = std::get_if<Cone2>(&shape)) {
        if (auto failure = restriction_failure(*cone, n)) {
          emit(io::json{{"error", "not-a-monoid"},
                        {"witness", io::to_json(failure->point)},
                        {"missing", io::to_json(failure->missing)}});
          code = kDomainFailure;
        } else {
          emit(io::to_json(classify_cone(*cone, n)));
        }
      } else {
        emit(io::to_json(classify_cone(shape, n)));
      }
    } else if (roots->parsed()) {
      Cone2 sigma = io::cone_from_json(detail::read_input(input, json_in, in));
      io::json list = io::json::array();
      for (const auto &r : roots_up_to(sigma, detail::ray_index_arg(ray, sigma), bound))
        list.push_back(io::to_json(r));
      emit(list);
    } else if (comult_cmd->parsed()) {
      io::json j = detail::read_input(input, json_in, in);
      LatticePoint u = detail::monomial_arg(monomial);
      if (j.is_object() && j.contains("roots")) {
        Cone2 sigma = io::cone_from_json(j.at("cone"));
        const auto &r = j.at("roots");
        int i = r.at("ray_index").get<int>();
        RootPair pair(DemazureRoot(sigma, i, io::point_from_json(r.at("e1"))),
                      DemazureRoot(sigma, i, io::point_from_json(r.at("e2"))));
        emit(io::to_json(comult_from_root_pair(sigma, pair, u)));
      } else {
        emit(io::to_json(comult(io::spec_from_json(j), u)));
      }
    } else if (invariants->parsed()) {
      MonoidSpec s = io::spec_from_json(detail::read_input(input, json_in, in));
      if (k_max < 1)
        throw detail::usage_error("--k-max must be at least 1");
      io::json list = io::json::array();
      for (long k = 1; k <= k_max; ++k)
        list.push_back(io::integer_to_json(invariant_Lk_closed(s, k)));
      emit(list);
    } else if (quotient->parsed()) {
      emit(io::to_json(
          quotient_by_center(io::spec_from_json(detail::read_input(input, json_in, in)), m)));
    } else if (opposite_cmd->parsed()) {
      emit(io::to_json(opposite(io::spec_from_json(detail::read_input(input, json_in, in)))));
    } else if (boundary_cmd->parsed()) {
      emit(io::to_json(boundary(io::spec_from_json(detail::read_input(input, json_in, in)))));
    } else if (multiply->parsed()) {
      MonoidSpec s = io::spec_from_json(detail::read_input(input, json_in, in));
      ChartPoint p = io::chart_point_from_json(detail::parse_json(p_text, "point"));
      ChartPoint q = io::chart_point_from_json(detail::parse_json(q_text, "point"));
      emit(io::to_json(multiply_points(s, p, q)));
    } else if (verify->parsed()) {
      VerificationReport report =
          verify_bialgebra(io::spec_from_json(detail::read_input(input, json_in, in)), box);
      emit(io::to_json(report));
      code = report.passed() ? kSuccess : kDomainFailure;
    } else if (catalog->parsed()) {
      for (const auto &entry : make_catalog(n_max, a_max, b_max, k_max))
        emit(io::to_json(entry));
    }
  } catch (const not_a_monoid &e) {
    err << "toricmon: " << e.what() << '\n';
    return kDomainFailure;
  } catch (const error &e) {
    err << "toricmon: " << e.what() << '\n';
    return kUsage;
  } catch (const io::json::exception &e) {
    err << "toricmon: malformed input: " << e.what() << '\n';
    return kUsage;
  }

  if (!json_out.empty()) {
    std::ofstream file(json_out);
    if (!file) {
      err << "toricmon: cannot write " << json_out << '\n';
      return kUsage;
    }
    file << buffer.str();
  } else {
    out << buffer.str();
  }
  return code;
}

} // namespace toricmon::cli
