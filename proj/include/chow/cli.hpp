#pragma once

// The `chow` command-line driver. run_cli() takes the argument list and the
// two output streams so it can be exercised in-process.
//
// Exit codes: 0 success, 2 input error, 3 mathematical degeneracy,
// 4 internal cross-check failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <tuple>
#include <vector>

#include "chow/cayley.hpp"
#include "chow/curve_file.hpp"
#include "chow/degeneration.hpp"
#include "chow/oracle.hpp"

namespace chow::cli {

enum ExitCode : int { kOk = 0, kInputError = 2, kDegenerate = 3, kCrossCheck = 4 };

namespace detail {

inline nlohmann::json report_json(const UReport& r, std::uint64_t seed) {
  nlohmann::json j;
  j["base_free"] = r.base_free;
  j["map_degree"] = r.map_degree ? nlohmann::json(*r.map_degree) : nlohmann::json(nullptr);
  j["image_degree"] = r.image_degree ? nlohmann::json(*r.image_degree) : nlohmann::json(nullptr);
  j["in_U"] = r.in_U;
  j["seed"] = seed;
  return j;
}

inline nlohmann::json biform_json(const CayleyBiform& ca) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : ca.form.terms()) {
    std::vector<int> u(m.exps.begin(), m.exps.begin() + ca.n + 1);
    std::vector<int> v(m.exps.begin() + ca.n + 1, m.exps.begin() + 2 * (ca.n + 1));
    terms.push_back({{"coeff", to_string(c)}, {"u", u}, {"v", v}});
  }
  return {{"n", ca.n}, {"d", ca.d}, {"terms", terms}};
}

inline std::string plucker_lines(const PluckerRep& rep) {
  return "# plucker: " + to_infix(rep.poly) + "\n# canonical: " + (rep.canonical ? "yes" : "no") + "\n";
}

/// Monomial of a term line without its coefficient, e.g. "u0^1 v1^1".
inline std::string monomial_text(const Monomial& m, const Ring& ring) {
  std::string s;
  for (std::size_t i = 0; i < m.exps.size(); ++i) {
    if (!m.exps[i]) continue;
    if (!s.empty()) s += ' ';
    s += ring[i].name + "^" + std::to_string(m.exps[i]);
  }
  return s.empty() ? "1" : s;
}

}  // namespace detail

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Chow forms of rational curves in P^n", "chow"};
  app.require_subcommand(1);
  std::uint64_t seed = kDefaultSeed;

  std::string curve_path, curve_path_g, plane_text, method = "chow", eps_table_path;
  bool want_plucker = false, want_json = false, normalize_attach = false;

  auto* compute = app.add_subcommand("compute", "Print the normalized Chow form of a curve");
  compute->add_option("curve", curve_path, "Curve file")->required();
  compute->add_flag("--plucker", want_plucker, "Also print a Pluecker-coordinate representative");
  compute->add_flag("--json", want_json, "Emit JSON");
  compute->add_option("--seed", seed, "Seed for the sampling in the U check");

  auto* plucker = app.add_subcommand("plucker", "Print the Chow form in Pluecker coordinates");
  plucker->add_option("curve", curve_path, "Curve file")->required();

  auto* incident_cmd = app.add_subcommand("incident", "Does the curve meet a codimension-2 plane?");
  incident_cmd->add_option("curve", curve_path, "Curve file")->required();
  incident_cmd->add_option("--plane", plane_text, "u0,...,un;v0,...,vn")->required();
  incident_cmd->add_option("--method", method, "chow | oracle | both")
      ->check(CLI::IsMember({"chow", "oracle", "both"}));

  auto* check = app.add_subcommand("check", "Report base points and map degree as JSON");
  check->add_option("curve", curve_path, "Curve file")->required();
  check->add_option("--seed", seed, "Sampling seed");

  auto* degenerate = app.add_subcommand("degenerate", "Join two curves and take the limit of the family");
  degenerate->add_option("f", curve_path, "First curve, attached at (1,0)")->required();
  degenerate->add_option("g", curve_path_g, "Second curve, attached at (0,1)")->required();
  degenerate->add_flag("--normalize-attachment", normalize_attach,
                       "Move a shared endpoint to (1,...,1) before joining");
  degenerate->add_option("--emit-eps-table", eps_table_path, "Write eps-order coefficient table (CSV)");

  auto* implicitize = app.add_subcommand("implicitize", "Implicit equation of a plane curve");
  implicitize->add_option("curve", curve_path, "Curve file")->required();
  implicitize->add_option("--seed", seed, "Sampling seed for the U check");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kInputError;
  }

  try {
    CurveMap f = read_curve_file(curve_path);

    if (compute->parsed()) {
      Sampler rng(seed);
      UReport rep = in_U(f, rng);
      if (!rep.in_U)
        err << "warning: parametrization is not in U: " << detail::report_json(rep, seed).dump() << "\n";
      CayleyBiform ca = cayley_biform(f);
      if (ca.is_zero()) {
        err << "zero Cayley form (the parametrization has a base point)\n";
        return kDegenerate;
      }
      ca = normalize(ca);
      if (want_json) {
        nlohmann::json j = detail::biform_json(ca);
        if (want_plucker) {
          PluckerRep pr = plucker_rewrite(ca);
          j["plucker"] = {{"poly", to_infix(pr.poly)}, {"canonical", pr.canonical}};
        }
        out << j.dump(2) << "\n";
      } else {
        out << to_term_lines(ca.form);
        if (want_plucker) out << detail::plucker_lines(plucker_rewrite(ca));
      }
      return kOk;
    }

    if (plucker->parsed()) {
      CayleyBiform ca = cayley_biform(f);
      if (ca.is_zero()) {
        err << "zero Cayley form (the parametrization has a base point)\n";
        return kDegenerate;
      }
      PluckerRep pr = plucker_rewrite(normalize(ca));
      out << to_infix(pr.poly) << "\ncanonical: " << (pr.canonical ? "yes" : "no") << "\n";
      return kOk;
    }

    if (incident_cmd->parsed()) {
      Plane plane = parse_plane(plane_text);
      if (plane.n() != f.n()) throw ParseError("plane has the wrong number of coordinates");
      auto word = [](bool b) { return b ? "INCIDENT" : "DISJOINT"; };
      std::optional<bool> by_chow, by_oracle;
      if (method != "oracle") {
        CayleyBiform ca = cayley_biform(f);
        if (ca.is_zero()) {
          err << "degenerate Cayley form\n";
          return kDegenerate;
        }
        by_chow = incident(ca, plane);
      }
      if (method != "chow") {
        if (!base_locus_free(f)) {
          err << "parametrization has base locus\n";
          return kDegenerate;
        }
        by_oracle = incident_oracle(f, plane);
      }
      if (method == "both") {
        out << "chow: " << word(*by_chow) << "\noracle: " << word(*by_oracle) << "\n";
        out << (*by_chow == *by_oracle ? "AGREE" : "DISAGREE") << "\n";
        return *by_chow == *by_oracle ? kOk : kCrossCheck;
      }
      out << word(by_chow ? *by_chow : *by_oracle) << "\n";
      return kOk;
    }

    if (check->parsed()) {
      Sampler rng(seed);
      out << detail::report_json(in_U(f, rng), seed).dump() << "\n";
      return kOk;
    }

    if (degenerate->parsed()) {
      CurveMap g = read_curve_file(curve_path_g);
      if (normalize_attach) std::tie(f, g) = attach_pair(f, g);
      DegenerationFamily fam = join_family(f, g);
      CayleyBiform family = family_biform(fam);
      if (family.is_zero()) {
        err << "family Chow form vanishes identically\n";
        return kDegenerate;
      }
      CayleyBiform ca_f = cayley_biform(f), ca_g = cayley_biform(g);
      if (ca_f.is_zero() || ca_g.is_zero()) {
        err << "a component has a zero Cayley form\n";
        return kDegenerate;
      }
      CayleyBiform limit = limit_direction(family);
      CayleyBiform product = normalize(biform_product({ca_f, ca_g}));
      bool factors = boundary_factor_check(limit, {ca_f, ca_g});
      out << "# limit\n" << to_term_lines(limit.form);
      out << "# product\n" << to_term_lines(product.form);
      out << "FACTORS:" << (factors ? "yes" : "no") << "\n";
      if (!eps_table_path.empty()) {
        std::ofstream table(eps_table_path);
        if (!table) throw ParseError("cannot write '" + eps_table_path + "'");
        table << "eps_order,coefficient,monomial\n";
        for (int k = 0; k <= eps_degree(family); ++k) {
          CayleyBiform ck = eps_coefficient(family, k);
          for (const auto& [m, c] : ck.form.terms())
            table << k << ',' << to_string(c) << ',' << detail::monomial_text(m, *ck.form.ring()) << "\n";
        }
      }
      return factors ? kOk : kCrossCheck;
    }

    if (implicitize->parsed()) {
      if (f.n() != 2) {
        err << "implicitize needs a plane curve (n = 2)\n";
        return kInputError;
      }
      Sampler rng(seed);
      UReport rep = in_U(f, rng);
      if (!rep.in_U) {
        err << "parametrization is not in U: " << detail::report_json(rep, seed).dump() << "\n";
        return kDegenerate;
      }
      Sampler again(seed);
      out << to_infix(implicitize_plane_curve(f, again)) << "\n";
      return kOk;
    }
  } catch (const ParseError& e) {
    err << e.what() << "\n";
    return kInputError;
  } catch (const Error& e) {
    // Remaining library errors at this level are input-shaped: dependent
    // covectors, violated attachment, mismatched dimensions.
    err << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace chow::cli
