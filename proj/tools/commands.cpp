#include "run_config.hpp"

#include "cnf/dynamics3.hpp"
#include "cnf/error.hpp"
#include "cnf/p7ext.hpp"
#include "cnf/padic3.hpp"
#include "cnf/periods.hpp"
#include "cnf/polyio.hpp"
#include "cnf/quadforms.hpp"
#include "cnf/report.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace cnf::cli {

namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

void emit(const RunConfig& cfg, std::ostream& out, const std::string& text) {
  if (cfg.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.out);
  if (!file) throw UsageError("cannot open output file " + cfg.out);
  file << text;
}

Progress progress_lines(std::ostream& err, const std::string& label) {
  return [&err, label, last = std::size_t{0}](std::size_t done, std::size_t total) mutable {
    const std::size_t pct = done * 100 / total;
    if (pct >= last + 10 || done == total) {
      err << "[" << label << "] " << done << "/" << total << "\n" << std::flush;
      last = pct;
    }
  };
}

ClassNumberCache open_cache(const RunConfig& cfg) {
  return ClassNumberCache(cfg.cache.empty() ? ClassNumberCache::default_path() : std::filesystem::path(cfg.cache));
}

std::string render(const RunConfig& cfg, const CheckReport& r) {
  return cfg.format == Format::Json ? to_json(r, 2) + "\n" : to_text(r);
}

std::string render(const RunConfig& cfg, const FormulaReport& r) {
  switch (cfg.format) {
    case Format::Json:
      return to_json(r, 2) + "\n";
    case Format::Csv:
      return to_csv(r);
    case Format::Text:
      break;
  }
  return to_text(r);
}

bool diff_mandated(std::int64_t p) { return p == 3 || p == 7 || p == 11; }

void require_slow(const RunConfig& cfg, const std::string& what) {
  if (cfg.tier != Tier::Slow) throw UsageError(what + " is in the slow tier; pass --tier slow");
}

IntPoly load_first(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  auto polys = read_polys(in);
  if (polys.empty()) throw ParseError(path + " holds no polynomial");
  return polys.front();
}

void dump_poly(const std::string& path, const IntPoly& p) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot open " + path);
  write_polys(out, {p});
}

int cmd_classnum(const RunConfig& cfg, std::ostream& out) {
  if (cfg.values.empty()) throw UsageError("classnum needs at least one d");
  ClassNumberCache cache = open_cache(cfg);
  std::ostringstream s;
  for (auto d : cfg.values) {
    if (!is_valid_discriminant(d)) throw DomainError("-" + std::to_string(d) + " is not a discriminant");
    s << d << "," << cache.class_number(d) << "\n";
  }
  emit(cfg, out, s.str());
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  ClassNumberCache cache = open_cache(cfg);
  const FormulaReport r = verify_formula(cfg.p, cfg.n, cache);
  emit(cfg, out, render(cfg, r));
  if (diff_mandated(cfg.p) && (r.diff != 0 || !r.undetermined.empty())) return kExitMismatch;
  return kExitOk;
}

int cmd_rn(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.p != 3 && cfg.p != 7) throw UsageError("rn supports p = 3 and p = 7");
  if (cfg.p == 7 && cfg.n == 3 && cfg.load.empty()) require_slow(cfg, "R_3 for p = 7");
  const Progress progress = progress_lines(err, "rn");
  IntPoly rn;
  if (!cfg.load.empty()) {
    rn = load_first(cfg.load);
  } else {
    rn = cfg.p == 3 ? build_Rn(cfg.n, progress) : build_Rn7(cfg.n, progress);
  }
  CheckReport rep;
  const Int expected_degree = 2 * ipow(Int(static_cast<long>(cfg.p)), static_cast<unsigned long>(cfg.n)) - 1;
  rep.add("deg R_" + std::to_string(cfg.n) + " = 2 p^n - 1", Int(rn.degree()) == expected_degree,
          std::to_string(rn.degree()));
  rep.merge(cfg.p == 3 ? verify_prop1_for(rn, cfg.n) : verify_mod7_for(rn, cfg.n));
  if (!cfg.dump.empty()) dump_poly(cfg.dump, rn);
  std::string text = render(cfg, rep);
  if (cfg.format == Format::Text && cfg.n == 1) text = "R_1 = " + rn.to_string() + "\n" + text;
  emit(cfg, out, text);
  return rep.all_pass() ? kExitOk : kExitMismatch;
}

int cmd_pn(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  ClassNumberCache cache = open_cache(cfg);
  CheckReport rep;
  if (cfg.p == 3) {
    const IntPoly pn = build_Pn(cfg.n, progress_lines(err, "pn"));
    const DegreeAudit audit = factor_degree_audit(cfg.n, cache);
    rep = audit.report;
    if (!cfg.dump.empty()) dump_poly(cfg.dump, pn);
  } else if (cfg.p == 7) {
    const IntPoly* rn3 = nullptr;
    if (cfg.n == 3 && cfg.tier == Tier::Slow) rn3 = &build_Rn7(3, progress_lines(err, "rn"));
    rep = audit_p7(cfg.n, cache, rn3).report;
    if (!cfg.dump.empty()) {
      if (cfg.n == 4 || (cfg.n == 3 && !rn3)) throw UsageError("P_n for p = 7 can be dumped for n = 2, or n = 3 with --tier slow");
      dump_poly(cfg.dump, build_Pn7(cfg.n));
    }
  } else {
    throw UsageError("pn supports p = 3 and p = 7");
  }
  emit(cfg, out, render(cfg, rep));
  return rep.all_pass() ? kExitOk : kExitMismatch;
}

int cmd_identities(const RunConfig& cfg, std::ostream& out) {
  CheckReport rep = verify_identities();
  for (int n = 1; n <= kMaxBivariateLevel; ++n) rep.merge(verify_prop2(n));
  for (int n = 1; n <= kMaxTowerLevel; ++n) rep.merge(verify_prop1(n));
  emit(cfg, out, render(cfg, rep));
  return rep.all_pass() ? kExitOk : kExitMismatch;
}

int cmd_orbits(const RunConfig& cfg, std::ostream& out) {
  const auto orbits = lift_periodic(cfg.n, cfg.precision);
  CheckReport rep = verify_orbits(orbits, cfg.n);
  rep.merge(verify_units(orbits));
  const std::string dump = to_json(orbits, cfg.n, cfg.precision, 2) + "\n";
  if (!cfg.dump.empty()) {
    std::ofstream f(cfg.dump);
    if (!f) throw UsageError("cannot open " + cfg.dump);
    f << dump;
  }
  emit(cfg, out, cfg.format == Format::Json ? dump : to_text(rep));
  return rep.all_pass() ? kExitOk : kExitMismatch;
}

int cmd_period(const RunConfig& cfg, std::ostream& out) {
  if (cfg.values.empty()) throw UsageError("period needs at least one d");
  const Int reach = 4 * ipow(Int(static_cast<long>(cfg.p)), static_cast<unsigned long>(cfg.n_max));
  if (reach > ipow(Int(10), 15)) require_slow(cfg, "a period search with 4 p^n_max above 10^15");
  std::ostringstream s;
  for (auto d : cfg.values) {
    const auto w = find_period(cfg.p, d, cfg.n_max);
    if (w)
      s << d << "," << w->n << "," << w->x << "," << w->y << "\n";
    else
      s << d << ",none\n";
  }
  emit(cfg, out, s.str());
  return kExitOk;
}

struct TableSpec {
  std::int64_t p;
  int n;
};

const std::vector<TableSpec>& table_specs() {
  static const std::vector<TableSpec> specs = {
      {3, 2}, {3, 3}, {3, 4}, {3, 5}, {3, 6}, {7, 2}, {7, 3}, {7, 4}, {11, 2}, {11, 3}, {11, 4},
      {23, 2}, {23, 3}, {47, 2}, {59, 2}, {71, 2}, {83, 2},
  };
  return specs;
}

int cmd_make_tables(const RunConfig& cfg, std::ostream& out) {
  const std::filesystem::path dir = cfg.out.empty() ? std::filesystem::path("tables") : std::filesystem::path(cfg.out);
  std::filesystem::create_directories(dir);
  ClassNumberCache cache = open_cache(cfg);
  const char* ext = cfg.format == Format::Json ? ".json" : cfg.format == Format::Csv ? ".csv" : ".txt";
  int status = kExitOk;
  for (const auto& [p, n] : table_specs()) {
    const FormulaReport r = verify_formula(p, n, cache);
    const auto path = dir / ("p" + std::to_string(p) + "_n" + std::to_string(n) + ext);
    std::ofstream f(path);
    if (!f) throw UsageError("cannot open " + path.string());
    f << render(cfg, r);
    out << "p=" << p << " n=" << n << " lhs=" << r.lhs << " rhs=" << r.rhs << " diff=" << r.diff << "  -> "
        << path.string() << "\n";
    if (diff_mandated(p) && (r.diff != 0 || !r.undetermined.empty())) status = kExitMismatch;
  }
  return status;
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.command == "classnum") return cmd_classnum(cfg, out);
    if (cfg.command == "verify") return cmd_verify(cfg, out);
    if (cfg.command == "rn") return cmd_rn(cfg, out, err);
    if (cfg.command == "pn") return cmd_pn(cfg, out, err);
    if (cfg.command == "identities") return cmd_identities(cfg, out);
    if (cfg.command == "orbits") return cmd_orbits(cfg, out);
    if (cfg.command == "period") return cmd_period(cfg, out);
    if (cfg.command == "make-tables") return cmd_make_tables(cfg, out);
    err << "unknown command " << cfg.command << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace cnf::cli
