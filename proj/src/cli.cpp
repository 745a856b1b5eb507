#include "trichow/cli.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "trichow/bounds.hpp"
#include "trichow/chow.hpp"
#include "trichow/modular.hpp"
#include "trichow/valuation.hpp"

namespace trichow {

using nlohmann::json;

SystemSize system_size(const SystemInput& sys) {
  SystemSize s;
  for (const auto& g : integral_generators(sys)) {
    auto flat = flatten(g, sys.vars);
    s.d = std::max<unsigned long>(s.d, static_cast<unsigned long>(std::max(0L, flat.total_degree())));
    s.h = std::max(s.h, height(flat));
  }
  // The double is exact as a rational; step up one ulp to cover rounding in log.
  s.h_upper = mpq_class(std::nextafter(s.h, std::numeric_limits<double>::infinity()));
  return s;
}

VerifyReport verify_system(const SystemInput& sys) {
  VerifyReport rep;
  auto t = triangularize(sys);
  auto red = reduce_tails(t);
  auto size = system_size(sys);
  auto bz = bezout_substitution(sys.m, sys.n, std::max(1UL, size.d), size.h_upper);
  mpq_class hv;
  mpfr_get_q(hv.get_mpq_t(), bz.height.raw());
  if (!bz.degree.fits_ulong_p()) throw Error(ErrorKind::Domain, "Bezout degree too large");
  const unsigned long dv = bz.degree.get_ui();

  auto prim = primitive_chow(monic_chow(red));
  auto dc = denominator_check(t, prim.leading, dv);
  rep.prop_dh = dc.pass();
  rep.details["propDH"] = {{"G_n", dc.g},
                           {"degree_bound", dv},
                           {"a_n", prim.leading.str()},
                           {"a_n_N_n_integral", dc.an_n_integral},
                           {"a_n_N_n_degree", dc.an_n_degree},
                           {"scaled_T_n_integral", dc.scaled_integral},
                           {"scaled_T_n_degree", dc.scaled_degree},
                           {"witness", dc.witness}};

  auto chain = regular_chain(red);
  rep.theorem1 = true;
  json levels = json::array();
  const long dvl = static_cast<long>(dv);
  for (std::size_t l = 0; l < red.size(); ++l) {
    auto on = observed_size(chain.polys[l]);
    auto ot = observed_size(red[l]);
    double bn = theorem1_N_bound(sys.m, l + 1, bz.degree, hv).upper();
    double bt = theorem1_T_bound(sys.m, l + 1, bz.degree, hv).upper();
    bool ok = on.height <= bn && ot.height <= bt && on.degree <= dvl && ot.degree <= 2 * dvl * dvl;
    rep.theorem1 = rep.theorem1 && ok;
    levels.push_back({{"level", l + 1},
                      {"N_height", on.height},
                      {"N_bound", bn},
                      {"N_degree", on.degree},
                      {"T_height", ot.height},
                      {"T_bound", bt},
                      {"T_degree", ot.degree},
                      {"pass", ok}});
  }
  rep.details["theorem1"] = {{"d", size.d}, {"h", size.h}, {"d_V", dv}, {"h_V", bz.height.upper()}, {"levels", levels}};
  return rep;
}

namespace {

void render_text(const json& j, const std::string& path, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) render_text(v, path.empty() ? k : path + "." + k, out);
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i) render_text(j[i], path + "[" + std::to_string(i) + "]", out);
  } else {
    out << path << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
  }
}

SystemInput load_system(const std::string& file) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot read " + file);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_system(ss.str());
}

json run_to_json(const ModularRun& run) {
  json j = {{"prime", run.p.get_str()}};
  if (run.ok()) {
    j["delta"] = *run.profile;
  } else {
    j["failure"] = std::string(to_string(run.failure));
    j["reason"] = run.reason;
  }
  return j;
}

int exit_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::Parse:
    case ErrorKind::UnknownVariable:
    case ErrorKind::ZeroPolynomial:
      return kParse;
    case ErrorKind::NotZeroDim:
    case ErrorKind::NotLazardShape:
    case ErrorKind::NonRadical:
      return kAssumption;
    default:
      return kOther;
  }
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Triangular sets, Chow forms and height bounds for parametric polynomial systems"};
  app.require_subcommand(1);
  std::string format = "json";
  unsigned long seed = 0;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--seed", seed, "Seed for every random choice");

  std::string file;
  auto* tri = app.add_subcommand("triangularize", "Triangular set of the system over Q(Y)");
  auto* chain = app.add_subcommand("chain", "Regular chain N_l and denominators D_l");
  auto* delta = app.add_subcommand("delta", "delta profile of the triangular set");
  auto* chow = app.add_subcommand("chow", "Monic and primitive Chow forms");
  auto* verify = app.add_subcommand("verify", "Integrality checks and height bound comparison");
  for (auto* sc : {tri, chain, delta, chow, verify}) sc->add_option("file", file, "System file")->required();

  unsigned m = 0, n = 0, level = 0;
  unsigned long d = 0;
  std::string h;
  auto* bounds = app.add_subcommand("bounds", "Closed-form bounds for n equations of degree d and height h");
  auto* prange = app.add_subcommand("prime-range", "Range [6 H_A, 12 H_A] for the modular prime");
  for (auto* sc : {bounds, prange}) {
    sc->set_help_flag("--help", "Print this help message and exit");  // frees -h for --h
    sc->add_option("--m", m, "Number of parameters")->required();
    sc->add_option("--n", n, "Number of unknowns")->required()->check(CLI::PositiveNumber);
    sc->add_option("--d", d, "Degree bound")->required()->check(CLI::PositiveNumber);
    sc->add_option("--h", h, "Height bound (integer or a/b)")->required();
  }
  bounds->add_option("--level", level, "Level l for the N_l and T_l bounds (default n)");

  std::string prime;
  bool automatic = false;
  unsigned trials = 1;
  auto* mod = app.add_subcommand("modular-delta", "delta profile modulo a prime");
  mod->add_option("file", file, "System file")->required();
  auto* popt = mod->add_option("--prime", prime, "Prime modulus");
  auto* aopt = mod->add_flag("--auto", automatic, "Draw primes from the range sized by the height bound");
  popt->excludes(aopt);
  mod->add_option("--seed", seed, "Seed for prime sampling");
  mod->add_option("--trials", trials, "Number of primes to draw with --auto")->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kParse;
  }
  if (mod->parsed() && prime.empty() && !automatic) {
    err << "modular-delta needs --prime or --auto\n";
    return kParse;
  }

  json report;
  int code = kOk;
  try {
    auto parse_h = [&] {
      mpq_class q;
      if (q.set_str(h, 10) != 0) throw Error(ErrorKind::Parse, "malformed height " + h);
      q.canonicalize();
      if (q < 0) throw Error(ErrorKind::Parse, "height must be nonnegative");
      return q;
    };
    if (tri->parsed()) {
      auto t = triangularize(load_system(file));
      json levels = json::array();
      for (std::size_t l = 0; l < t.size(); ++l) levels.push_back({{"poly", t[l].str()}, {"degree", t.degrees()[l]}});
      report = {{"levels", levels}};
    } else if (chain->parsed()) {
      auto t = triangularize(load_system(file));
      auto rc = regular_chain(t);
      json levels = json::array();
      for (std::size_t l = 0; l < t.size(); ++l)
        levels.push_back({{"D", rc.denoms[l].str()}, {"N", rc.polys[l].str()}});
      report = {{"levels", levels}};
    } else if (delta->parsed()) {
      report = {{"delta", exact_profile(load_system(file))}};
    } else if (chow->parsed()) {
      auto monic = monic_chow(triangularize(load_system(file)));
      auto prim = primitive_chow(monic);
      report = {{"degree", monic.degree},
                {"monic", monic.monic.str()},
                {"primitive", prim.primitive.str()},
                {"leading", prim.leading.str()}};
    } else if (verify->parsed()) {
      auto rep = verify_system(load_system(file));
      report = {{"propDH", rep.prop_dh ? "pass" : "fail"}, {"theorem1", rep.theorem1 ? "pass" : "fail"}};
      if (format == "text") report["details"] = rep.details;
      if (!rep.prop_dh || !rep.theorem1) code = kVerifyFailed;
    } else if (bounds->parsed()) {
      report = bound_report(m, n, d, parse_h(), level);
    } else if (prange->parsed()) {
      auto p = modular_prime_bound(m, n, d, parse_h());
      report = {{"H_A", p.h_a.upper()},
                {"hi_log2", std::log2(p.hi.get_d())},
                {"lo", p.lo.get_str()},
                {"hi", p.hi.get_str()},
                {"hi_bits", mpz_sizeinbase(p.hi.get_mpz_t(), 2)}};
    } else if (mod->parsed()) {
      auto sys = load_system(file);
      json runs = json::array();
      if (!prime.empty()) {
        mpz_class p;
        if (p.set_str(prime, 10) != 0) throw Error(ErrorKind::Parse, "malformed prime " + prime);
        runs.push_back(run_to_json(degree_profile(sys, p)));
      } else {
        auto size = system_size(sys);
        auto pb = modular_prime_bound(sys.m, sys.n, std::max(1UL, size.d), size.h_upper);
        PrimeSampler sampler(seed);
        for (unsigned k = 0; k < trials; ++k) runs.push_back(run_to_json(degree_profile(sys, sampler.next(pb.lo, pb.hi))));
        report["range"] = {{"lo", pb.lo.get_str()}, {"hi", pb.hi.get_str()}};
      }
      report["runs"] = runs;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const Error& e) {
    err << to_string(e.kind()) << ": " << e.what() << '\n';
    return exit_for(e.kind());
  } catch (const std::exception& e) {
    err << e.what() << '\n';
    return kOther;
  }

  if (format == "text")
    render_text(report, "", out);
  else
    out << report.dump() << '\n';
  return code;
}

}  // namespace trichow
