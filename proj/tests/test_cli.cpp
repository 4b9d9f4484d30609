#include "run_config.hpp"

#include "cnf/dynamics3.hpp"
#include "cnf/polyio.hpp"
#include "cnf/report.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

namespace cnf::cli {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("cnf_cli_test_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir / name;
}

Outcome run_cfg(RunConfig cfg) {
  if (cfg.cache.empty()) cfg.cache = scratch("classnum.cache").string();
  std::ostringstream out, err;
  const int code = run(cfg, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

TEST(Cli, ClassnumPairs) {
  RunConfig cfg;
  cfg.command = "classnum";
  cfg.values = {35, 4, 507};
  const Outcome o = run_cfg(cfg);
  EXPECT_EQ(o.code, kExitOk);
  EXPECT_EQ(o.out, "35,2\n4,1\n507,4\n");
}

TEST(Cli, ClassnumRejectsNonDiscriminant) {
  RunConfig cfg;
  cfg.command = "classnum";
  cfg.values = {6};
  EXPECT_EQ(run_cfg(cfg).code, kExitUsage);
}

TEST(Cli, VerifyExitCodes) {
  RunConfig cfg;
  cfg.command = "verify";
  cfg.format = Format::Json;
  cfg.p = 11;
  cfg.n = 2;
  Outcome o = run_cfg(cfg);
  EXPECT_EQ(o.code, kExitOk);
  EXPECT_EQ(formula_report_from_json(o.out).diff, 0);

  cfg.p = 83;
  o = run_cfg(cfg);
  EXPECT_EQ(o.code, kExitOk) << "a nonzero diff is reported, not an error, for p = 83";
  EXPECT_EQ(formula_report_from_json(o.out).diff, -30);

  cfg.p = 3;
  cfg.n = 6;
  o = run_cfg(cfg);
  EXPECT_EQ(o.code, kExitOk);
  EXPECT_EQ(formula_report_from_json(o.out).lhs, 232);
}

TEST(Cli, ReportRoundTrips) {
  RunConfig cfg;
  cfg.command = "verify";
  cfg.p = 23;
  cfg.n = 2;
  cfg.format = Format::Json;
  const std::string json = run_cfg(cfg).out;
  const FormulaReport from_json = formula_report_from_json(json);
  EXPECT_EQ(to_json(from_json, 2) + "\n", json);
  cfg.format = Format::Csv;
  const std::string csv = run_cfg(cfg).out;
  EXPECT_EQ(to_csv(formula_report_from_csv(csv)), csv);
  EXPECT_EQ(to_json(formula_report_from_csv(csv)), to_json(from_json));
}

TEST(Cli, PeriodSearch) {
  RunConfig cfg;
  cfg.command = "period";
  cfg.values = {68};
  cfg.n_max = 20;
  Outcome o = run_cfg(cfg);
  EXPECT_EQ(o.code, kExitOk);
  EXPECT_EQ(o.out, "68,12,208,175\n");
  cfg.n_max = 11;
  EXPECT_EQ(run_cfg(cfg).out, "68,none\n");
}

TEST(Cli, SlowTierIsGated) {
  RunConfig cfg;
  cfg.command = "period";
  cfg.values = {356};
  cfg.n_max = 40;
  const Outcome o = run_cfg(cfg);
  EXPECT_EQ(o.code, kExitUsage);
  EXPECT_NE(o.err.find("--tier slow"), std::string::npos);

  RunConfig rn;
  rn.command = "rn";
  rn.p = 7;
  rn.n = 3;
  EXPECT_EQ(run_cfg(rn).code, kExitUsage);
}

TEST(Cli, RnDumpLoadAndCorruption) {
  const fs::path dump = scratch("r2.txt");
  RunConfig cfg;
  cfg.command = "rn";
  cfg.n = 2;
  cfg.dump = dump.string();
  EXPECT_EQ(run_cfg(cfg).code, kExitOk);

  RunConfig load;
  load.command = "rn";
  load.n = 2;
  load.load = dump.string();
  EXPECT_EQ(run_cfg(load).code, kExitOk);

  IntPoly corrupted = from_line(slurp(dump).substr(0, slurp(dump).find('\n')));
  EXPECT_EQ(corrupted, build_Rn(2));
  corrupted.set_coeff(3, corrupted.coeff(3) + 1);
  const fs::path bad = scratch("r2_bad.txt");
  {
    std::ofstream f(bad);
    write_polys(f, {corrupted});
  }
  load.load = bad.string();
  EXPECT_EQ(run_cfg(load).code, kExitMismatch);

  const fs::path garbage = scratch("r2_garbage.txt");
  {
    std::ofstream f(garbage);
    f << "1,2,x\n";
  }
  load.load = garbage.string();
  EXPECT_EQ(run_cfg(load).code, kExitUsage);
}

TEST(Cli, RnOnePrintsExpansion) {
  RunConfig cfg;
  cfg.command = "rn";
  cfg.n = 1;
  const Outcome o = run_cfg(cfg);
  EXPECT_EQ(o.code, kExitOk);
  EXPECT_EQ(o.out.rfind("R_1 = ", 0), 0u);
}

TEST(Cli, IdentitiesAllPass) {
  RunConfig cfg;
  cfg.command = "identities";
  cfg.format = Format::Json;
  const Outcome o = run_cfg(cfg);
  EXPECT_EQ(o.code, kExitOk);
  EXPECT_EQ(o.out.find("\"pass\": false"), std::string::npos);
}

TEST(Cli, OrbitsAndPn) {
  RunConfig cfg;
  cfg.command = "orbits";
  cfg.n = 3;
  EXPECT_EQ(run_cfg(cfg).code, kExitOk);
  cfg.command = "pn";
  EXPECT_EQ(run_cfg(cfg).code, kExitOk);
  cfg.p = 7;
  cfg.n = 2;
  EXPECT_EQ(run_cfg(cfg).code, kExitOk);
}

TEST(Cli, UsageErrors) {
  RunConfig cfg;
  cfg.command = "frobnicate";
  EXPECT_EQ(run_cfg(cfg).code, kExitUsage);
  cfg.command = "verify";
  cfg.p = 5;
  EXPECT_EQ(run_cfg(cfg).code, kExitUsage);
  cfg.command = "classnum";
  EXPECT_EQ(run_cfg(cfg).code, kExitUsage);
}

TEST(Cli, MakeTablesIsByteStable) {
  RunConfig cfg;
  cfg.command = "make-tables";
  cfg.format = Format::Csv;
  cfg.out = scratch("tables_a").string();
  const Outcome a = run_cfg(cfg);
  cfg.out = scratch("tables_b").string();
  cfg.cache = scratch("classnum_b.cache").string();
  const Outcome b = run_cfg(cfg);
  EXPECT_EQ(a.code, kExitOk) << a.out;
  EXPECT_EQ(b.code, kExitOk);
  std::size_t files = 0;
  for (const auto& entry : fs::directory_iterator(scratch("tables_a"))) {
    ++files;
    EXPECT_EQ(slurp(entry.path()), slurp(scratch("tables_b") / entry.path().filename())) << entry.path();
  }
  EXPECT_EQ(files, 17u);
}

}  // namespace
}  // namespace cnf::cli
