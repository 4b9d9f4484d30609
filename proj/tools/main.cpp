#include "run_config.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>

using cnf::cli::Format;
using cnf::cli::RunConfig;
using cnf::cli::Tier;

int main(int argc, char** argv) {
  CLI::App app{"Class number formulas: period sets, class numbers, resultant towers and 3-adic orbits"};
  app.require_subcommand(1);
  RunConfig cfg;

  const std::map<std::string, Format> formats{{"text", Format::Text}, {"json", Format::Json}, {"csv", Format::Csv}};
  const std::map<std::string, Tier> tiers{{"fast", Tier::Fast}, {"slow", Tier::Slow}};

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sub->add_option("--out", cfg.out, "Output file (make-tables: directory)");
    sub->add_option("--cache", cfg.cache, "Class number cache file (default: $CNF_CACHE or ./cnf_classnum.cache)");
    sub->add_option("--tier", cfg.tier, "Enable slow computations")->transform(CLI::CheckedTransformer(tiers, CLI::ignore_case));
  };
  auto prime = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--p", cfg.p, "Prime")->check(CLI::Range(2, 1000000));
    if (required) opt->required();
  };
  auto level = [&](CLI::App* sub) { sub->add_option("--n", cfg.n, "Period / tower level")->required()->check(CLI::Range(1, 64)); };

  auto* classnum = app.add_subcommand("classnum", "Print d,h for each discriminant -d");
  classnum->add_option("d", cfg.values, "Values d > 0 with -d = 0, 1 mod 4")->required();
  common(classnum);

  auto* verify = app.add_subcommand("verify", "Class number sum over the period-n set against the Moebius sum");
  prime(verify, true);
  level(verify);
  common(verify);

  auto* rn = app.add_subcommand("rn", "Build R_n (p = 3 or 7) and check its congruence");
  prime(rn, false);
  level(rn);
  rn->add_option("--dump", cfg.dump, "Write R_n in the polynomial line format");
  rn->add_option("--load", cfg.load, "Check a stored polynomial instead of building R_n");
  common(rn);

  auto* pn = app.add_subcommand("pn", "Build P_n and audit its degree against the period-n class numbers");
  prime(pn, false);
  level(pn);
  pn->add_option("--dump", cfg.dump, "Write P_n in the polynomial line format");
  common(pn);

  auto* identities = app.add_subcommand("identities", "Check the polynomial identities and congruences");
  common(identities);

  auto* orbits = app.add_subcommand("orbits", "Lift the period-n points 3-adically");
  level(orbits);
  orbits->add_option("--precision", cfg.precision, "Precision exponent k (modulus 3^k)")->check(CLI::Range(1, 4096));
  orbits->add_option("--dump", cfg.dump, "Write the orbit JSON to a file");
  common(orbits);

  auto* period = app.add_subcommand("period", "Minimal period of -d");
  prime(period, false);
  period->add_option("d", cfg.values, "Values d")->required();
  period->add_option("--n-max", cfg.n_max, "Largest period searched")->check(CLI::Range(1, 64));
  common(period);

  auto* tables = app.add_subcommand("make-tables", "Write one report per (p, n) of the published tables");
  common(tables);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cnf::cli::kExitUsage;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  try {
    return cnf::cli::run(cfg, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cnf::cli::kExitUsage;
  }
}
