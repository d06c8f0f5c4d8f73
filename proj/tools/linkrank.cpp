/*
 * Copyright 2026 The linkrank Authors.
 * SPDX-License-Identifier: Apache-2.0
 */
// linkrank: ranks and finiteness of groups of links in codimension > 2.
//
// Exit status: 0 success, 1 internal consistency failure, 2 invalid input,
// 3 oracle resource limit.

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "linkrank/linkrank.hpp"
#include "render.hpp"

namespace {

using namespace linkrank;
using cli::Format;
using cli::Json;

constexpr int kExitInternal = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitResource = 3;

const std::map<std::string, Format> kFormats = {
    {"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}};

void add_format(CLI::App* cmd, Format& f) {
  cmd->add_option("--format", f, "Output format: text, json or csv")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
}

Parity parse_parity(const std::string& s) {
  if (s == "even") return Parity::even;
  if (s == "odd") return Parity::odd;
  std::size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  detail::require(pos == s.size() && !s.empty(), "parity must be an integer, 'even' or 'odd', got '" + s + "'");
  return parity_of(v);
}

std::int64_t parse_int(const std::string& s, const std::string& what) {
  std::size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  detail::require(pos == s.size() && !s.empty(), what + ": expected an integer, got '" + s + "'");
  return v;
}

// "a" or "a/b".
ExactRat parse_rational(const std::string& s) {
  const std::size_t slash = s.find('/');
  if (slash == std::string::npos) return ExactRat(parse_int(s, "t"));
  const std::int64_t num = parse_int(s.substr(0, slash), "t numerator");
  const std::int64_t den = parse_int(s.substr(slash + 1), "t denominator");
  detail::require(den != 0, "t: zero denominator");
  return ExactRat(ExactInt(num), ExactInt(den));
}

FramedComponent parse_framed(const std::string& s) {
  const std::size_t colon = s.find(':');
  detail::require(colon != std::string::npos, "framed component must look like p:l, got '" + s + "'");
  return {parse_int(s.substr(0, colon), "p"), parse_int(s.substr(colon + 1), "l")};
}

std::int64_t oracle_budget() {
  const char* env = std::getenv("LINKRANK_ORACLE_BUDGET");
  if (env == nullptr || *env == '\0') return oracle::kDefaultLetterBudget;
  const std::int64_t b = parse_int(env, "LINKRANK_ORACLE_BUDGET");
  detail::require(b >= 1, "LINKRANK_ORACLE_BUDGET must be positive");
  return b;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ranks and finiteness of groups of links in codimension > 2"};
  app.require_subcommand(1);

  Format format = Format::text;

  // rank
  std::int64_t rank_m = 0;
  std::vector<std::int64_t> rank_p;
  bool rank_brunnian = false;
  bool rank_details = false;
  auto* rank = app.add_subcommand("rank", "Rank of the group of links S^p1 u ... u S^pr in S^m");
  rank->add_option("m", rank_m, "Ambient dimension")->required();
  rank->add_option("p", rank_p, "Component dimensions")->required();
  rank->add_flag("--brunnian", rank_brunnian, "Brunnian rank only (r >= 2)");
  rank->add_flag("--details", rank_details, "List contributions and the subset decomposition");
  add_format(rank, format);

  // framed
  std::int64_t framed_m = 0;
  std::vector<std::string> framed_pairs;
  bool framed_details = false;
  auto* framed = app.add_subcommand("framed", "Rank of the group of partially framed links");
  framed->add_option("m", framed_m, "Ambient dimension")->required();
  framed->add_option("components", framed_pairs, "Components as p:l")->required();
  framed->add_flag("--details", framed_details, "List contributions");
  add_format(framed, format);

  // tables
  std::string table_name;
  auto* tables = app.add_subcommand("tables", "Regenerate a reference table");
  tables->add_option("table", table_name, "table2 or table3")
      ->required()
      ->check(CLI::IsMember({"table2", "table3"}));
  add_format(tables, format);

  // fcs
  std::string fcs_i;
  std::string fcs_j;
  std::int64_t fcs_xmax = 12;
  std::int64_t fcs_ymax = 12;
  auto* fcs = app.add_subcommand("fcs", "Finiteness-checking set for parities of i and j");
  fcs->add_option("i", fcs_i, "i (integer, 'even' or 'odd')")->required();
  fcs->add_option("j", fcs_j, "j (integer, 'even' or 'odd')")->required();
  fcs->add_option("--xmax", fcs_xmax, "Largest x")->capture_default_str();
  fcs->add_option("--ymax", fcs_ymax, "Largest y")->capture_default_str();
  add_format(fcs, format);

  // witt
  std::string witt_t;
  std::int64_t witt_s = 0;
  std::int64_t witt_r = 0;
  auto* witt = app.add_subcommand("witt", "Super Witt polynomial w_{t,s}(r)");
  witt->add_option("t", witt_t, "t, an integer or a/b")->required();
  witt->add_option("s", witt_s, "s")->required();
  witt->add_option("r", witt_r, "r")->required();
  add_format(witt, format);

  // stiefel
  std::int64_t st_p = 0;
  std::int64_t st_q = 0;
  std::int64_t st_l = 0;
  auto* stiefel = app.add_subcommand("stiefel", "Rank of pi_p(V_{q,l})");
  stiefel->add_option("p", st_p, "Homotopy degree")->required();
  stiefel->add_option("q", st_q, "Ambient frame dimension")->required();
  stiefel->add_option("l", st_l, "Frame length")->required();
  add_format(stiefel, format);

  // oracle
  auto* orc = app.add_subcommand("oracle", "Brute-force free Lie superalgebra oracle");
  orc->require_subcommand(1);
  oracle::VerifyOptions vopt;
  auto* verify = orc->add_subcommand("verify", "Compare the oracle with the closed formulas over a range");
  verify->add_option("--min-r", vopt.min_r, "Smallest number of generators")->capture_default_str();
  verify->add_option("--max-r", vopt.max_r, "Largest number of generators")->capture_default_str();
  verify->add_option("--max-degree", vopt.max_degree, "Largest generator degree")->capture_default_str();
  verify->add_option("--max-letters", vopt.max_letters, "Largest multidegree total")->capture_default_str();
  verify->add_option("--threads", vopt.threads, "Worker threads")->capture_default_str();
  add_format(verify, format);
  std::vector<std::int64_t> dim_weights;
  std::vector<std::int64_t> dim_x;
  auto* odim = orc->add_subcommand("dim", "Dimension of one multigraded component");
  odim->add_option("--weights", dim_weights, "Generator degrees, comma separated")->required()->delimiter(',');
  odim->add_option("--multidegree", dim_x, "Multidegree, comma separated")->required()->delimiter(',');
  add_format(odim, format);

  // handlebody
  std::int64_t hb_m1 = 0;
  std::vector<std::int64_t> hb_dims;
  auto* handlebody = app.add_subcommand("handlebody", "Finiteness of thickenings and handlebodies");
  handlebody->add_option("m_plus_1", hb_m1, "Handlebody dimension m+1")->required();
  handlebody->add_option("handles", hb_dims, "Handle dimensions p_k+1")->required();
  add_format(handlebody, format);

  // mcg
  std::int64_t mcg_m = 0;
  std::vector<std::int64_t> mcg_p;
  auto* mcg = app.add_subcommand("mcg", "Finite-index test for the mapping class group restriction image");
  mcg->add_option("m", mcg_m, "Dimension of the connected sum")->required();
  mcg->add_option("p", mcg_p, "Dimensions p_k")->required();
  add_format(mcg, format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  try {
    std::string out;
    if (rank->parsed()) {
      const LinkProblem lp(rank_m, rank_p);
      if (rank_brunnian) {
        const BrunnianRank br = brunnian_rank(lp);
        out = cli::render_brunnian(lp, br, brunnian_is_infinite(lp), rank_details, format);
      } else {
        RankReport rep = link_rank(lp);
        detail::ensure(rep.infinite == link_is_infinite(lp), "finiteness verdicts disagree");
        out = cli::render_rank(lp, rep, rank_details, format);
      }
    } else if (framed->parsed()) {
      std::vector<FramedComponent> comps;
      for (const std::string& s : framed_pairs) comps.push_back(parse_framed(s));
      const FramedLinkProblem fp(framed_m, comps);
      out = cli::render_framed(fp, framed_rank(fp), framed_details, format);
    } else if (tables->parsed()) {
      out = table_name == "table2" ? cli::render_table2(format) : cli::render_table3(format);
    } else if (fcs->parsed()) {
      const ParityPair pp{parse_parity(fcs_i), parse_parity(fcs_j)};
      out = cli::render_fcs(pp, fcs_enumerate(pp, fcs_xmax, fcs_ymax), format);
    } else if (witt->parsed()) {
      const ExactRat t = parse_rational(witt_t);
      detail::require(witt_r >= 1, "witt: r must be positive");
      out = cli::render_scalar({{"t", to_string(t)}, {"s", witt_s}, {"r", witt_r}}, "value",
                               cli::to_json(witt_super(t, witt_s, witt_r)), format);
    } else if (stiefel->parsed()) {
      out = cli::render_scalar({{"p", st_p}, {"q", st_q}, {"l", st_l}}, "rank", stiefel_rank(st_p, st_q, st_l), format);
    } else if (verify->parsed()) {
      vopt.budget = oracle_budget();
      const oracle::VerifyReport rep = oracle::verify_range(vopt);
      std::cout << cli::render_verify(rep, format);
      return rep.all_pass() ? 0 : kExitInternal;
    } else if (odim->parsed()) {
      const GeneratorSystem gs(dim_weights);
      const MultiDegree x(dim_x);
      const std::int64_t dim = oracle::component_dim_bruteforce(gs, x, oracle_budget());
      out = cli::render_scalar({{"weights", cli::to_json(gs.weights())}, {"multidegree", cli::to_json(x.coords())},
                                {"formula", cli::to_json(lie_component_dim(gs, x))}},
                               "dim", dim, format);
    } else if (handlebody->parsed()) {
      out = cli::render_handlebody(handlebody_report(hb_m1, hb_dims), format);
    } else if (mcg->parsed()) {
      out = cli::render_scalar({{"m", mcg_m}, {"p", cli::to_json(mcg_p)}}, "verdict",
                               to_string(mcg_finite_index(mcg_m, mcg_p)), format);
    }
    std::cout << out;
    return 0;
  } catch (const invalid_input& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const resource_limit& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const internal_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
