// ahrc: command-line front end for the workbench.
//
//   ahrc plan    --r 1/2 --r-prime 1/3 --d 1 --depth 4
//   ahrc verify  --r 1/2 --depth 6            (or --tables FILE, --certificate FILE)
//   ahrc witness [--crossed] --r 1/2 --rho 1/4
//   ahrc chern   --k 3
//   ahrc crossed --r 1/2 --r-prime 1/3 --depth 8
//   ahrc export  --format dot --depth 4
//
// Exit codes: 0 success, 2 usage or precondition, 3 verification failure.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ahrc/comparison.hpp"
#include "ahrc/crossed.hpp"
#include "ahrc/io.hpp"
#include "ahrc/sequences.hpp"
#include "ahrc/verify.hpp"

namespace {

using ahrc::io::Json;

constexpr int kExitPrecondition = 2;
constexpr int kExitVerification = 3;

struct RunConfig {
  std::string r = "1/2";
  std::string r_prime;  // defaults to r
  unsigned d = 1;
  unsigned depth = 6;
  unsigned from = 0;
  std::string c = "1/2";
  std::string h_seq;
  std::string rho;
  unsigned k = 0;
  bool crossed = false;
  bool verbose = false;
  std::string format = "json";
  std::string out;
  std::string tables_file;
  std::string certificate_file;
};

std::vector<std::uint64_t> parse_h_sequence(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const ahrc::Integer v = ahrc::parse_integer(item);
    if (v < 1 || !v.fits_ulong_p()) throw ahrc::PreconditionError("bad h-sequence entry '" + item + "'");
    out.push_back(v.get_ui());
  }
  if (out.empty()) throw ahrc::PreconditionError("empty h-sequence");
  return out;
}

ahrc::TargetParams params_of(const RunConfig& cfg) {
  ahrc::TargetParams p;
  p.r = ahrc::ExtendedRational::parse(cfg.r);
  p.r_prime = ahrc::ExtendedRational::parse(cfg.r_prime.empty() ? cfg.r : cfg.r_prime);
  p.d = cfg.d;
  p.c_infinite = ahrc::parse_rational(cfg.c);
  if (!cfg.h_seq.empty()) p.h_override = parse_h_sequence(cfg.h_seq);
  p.validate();
  return p;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ahrc::PreconditionError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ahrc::VerificationError(std::string("malformed document: ") + e.what());
  }
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.out);
  if (!out) throw ahrc::PreconditionError("cannot write '" + cfg.out + "'");
  out << text;
}

void emit(const RunConfig& cfg, const Json& j) { emit(cfg, j.dump(2) + "\n"); }

int report_outcome(const RunConfig& cfg, const ahrc::CheckReport& report) {
  if (cfg.verbose)
    for (const auto& line : report.lines) std::cout << line << "\n";
  if (!report.ok) {
    std::cerr << "invariant violated: " << report.first_failure << "\n";
    return kExitVerification;
  }
  std::cout << "all " << report.lines.size() << " checks passed\n";
  return 0;
}

int cmd_plan(const RunConfig& cfg) {
  emit(cfg, ahrc::io::tables_to_json(ahrc::build_tables(params_of(cfg), cfg.depth)));
  return 0;
}

int cmd_verify(const RunConfig& cfg) {
  if (!cfg.certificate_file.empty()) {
    const ahrc::WitnessReport w = ahrc::io::witness_from_json(read_json_file(cfg.certificate_file));
    return report_outcome(cfg, ahrc::verify_witness(w));
  }
  if (!cfg.tables_file.empty())
    return report_outcome(cfg, ahrc::verify_all(ahrc::io::tables_from_json(read_json_file(cfg.tables_file))));
  return report_outcome(cfg, ahrc::verify_all(ahrc::build_tables(params_of(cfg), cfg.depth)));
}

int cmd_witness(const RunConfig& cfg) {
  if (cfg.rho.empty()) throw ahrc::PreconditionError("--rho is required");
  const ahrc::Rational rho = ahrc::parse_rational(cfg.rho);
  const ahrc::GrowthTables t = ahrc::build_tables(params_of(cfg), cfg.depth);
  const ahrc::WitnessReport w =
      cfg.crossed ? ahrc::crossed_find_witness(rho, t) : ahrc::find_witness(rho, t);
  emit(cfg, ahrc::io::witness_to_json(w));
  return w.valid() ? 0 : kExitVerification;
}

int cmd_chern(const RunConfig& cfg) {
  if (cfg.k == 0) throw ahrc::PreconditionError("--k must be at least 1");
  Json rows = Json::array();
  for (unsigned k = 1; k <= cfg.k; ++k) rows.push_back(ahrc::io::chern_to_json(ahrc::chern_certificate(k)));
  emit(cfg, Json{{"formatVersion", ahrc::io::kFormatVersion}, {"kind", "chern"}, {"ranks", rows}});
  return 0;
}

int cmd_crossed(const RunConfig& cfg) {
  const ahrc::GrowthTables t = ahrc::build_tables(params_of(cfg), cfg.depth);
  ahrc::CheckReport identities;
  Json stages = Json::array();
  for (unsigned n = 0; n <= t.depth; ++n) {
    const ahrc::CrossedStageSpec s = ahrc::build_crossed_stage(n, t);
    const ahrc::CrossedBound b = ahrc::crossed_rc_upper(n, t);
    stages.push_back(Json{{"n", n},
                          {"cTildeMatrixSize", ahrc::io::to_json(s.c_tilde.matrix_size)},
                          {"bTildeMatrixSize", ahrc::io::to_json(s.b_tilde.matrix_size)},
                          {"cPart", ahrc::io::to_json(b.c_part)},
                          {"bPart", ahrc::io::to_json(b.b_part)},
                          {"rcUpper", ahrc::io::to_json(b.value)}});
    if (n < t.depth && static_cast<unsigned long>(t.params.d) * n <= ahrc::kArrowLevelBits)
      identities.merge(ahrc::crossed_connecting_map(n, t).size_identities);
  }
  Json j{{"formatVersion", ahrc::io::kFormatVersion},
         {"kind", "crossed-stages"},
         {"params", ahrc::io::params_to_json(t.params)},
         {"depth", t.depth},
         {"stages", stages},
         {"sizeIdentitiesHold", identities.ok}};
  emit(cfg, j);
  if (!identities.ok) {
    std::cerr << "invariant violated: " << identities.first_failure << "\n";
    return kExitVerification;
  }
  return 0;
}

int cmd_export(const RunConfig& cfg) {
  const ahrc::GrowthTables t = ahrc::build_tables(params_of(cfg), cfg.depth);
  emit(cfg, ahrc::io::export_diagram(t, cfg.from, cfg.depth, cfg.format));
  return 0;
}

void add_target_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--r", cfg.r, "target r (p/q or inf)")->capture_default_str();
  sub->add_option("--r-prime", cfg.r_prime, "target r' (p/q or inf; defaults to r)");
  sub->add_option("--d", cfg.d, "rank of Z^d")->capture_default_str();
  sub->add_option("--depth", cfg.depth, "table depth N")->capture_default_str();
  sub->add_option("--c", cfg.c, "constant used when r = r' = inf")->capture_default_str();
  sub->add_option("--h-seq", cfg.h_seq, "comma-separated h(0),h(1),... (r = inf only)");
  sub->add_option("--out", cfg.out, "write output here instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact workbench for the AH tower, its Z^d action, and comparison witnesses"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* plan = app.add_subcommand("plan", "print the growth tables as JSON");
  add_target_options(plan, cfg);

  auto* verify = app.add_subcommand("verify", "run every invariant suite");
  add_target_options(verify, cfg);
  verify->add_option("--tables", cfg.tables_file, "verify a tables JSON file instead");
  verify->add_option("--certificate", cfg.certificate_file, "replay a witness certificate");
  verify->add_flag("--verbose", cfg.verbose, "print every check");

  auto* witness = app.add_subcommand("witness", "search for a comparison witness");
  add_target_options(witness, cfg);
  witness->add_option("--rho", cfg.rho, "rho (p/q)")->required();
  witness->add_flag("--crossed", cfg.crossed, "use the crossed product stages");

  auto* chern = app.add_subcommand("chern", "minimal trivial embedding ranks of L^{xk}");
  chern->add_option("--k", cfg.k, "largest k")->required();
  chern->add_option("--out", cfg.out, "write output here instead of stdout");

  auto* crossed = app.add_subcommand("crossed", "crossed product stage sizes and rc bounds");
  add_target_options(crossed, cfg);

  auto* exporter = app.add_subcommand("export", "export the diagram");
  add_target_options(exporter, cfg);
  exporter->add_option("--format", cfg.format, "json or dot")->capture_default_str();
  exporter->add_option("--from", cfg.from, "first level")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitPrecondition;
  }

  try {
    if (*plan) return cmd_plan(cfg);
    if (*verify) return cmd_verify(cfg);
    if (*witness) return cmd_witness(cfg);
    if (*chern) return cmd_chern(cfg);
    if (*crossed) return cmd_crossed(cfg);
    if (*exporter) return cmd_export(cfg);
  } catch (const ahrc::PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const ahrc::VerificationError& e) {
    std::cerr << "invariant violated: " << e.what() << "\n";
    return kExitVerification;
  }
  return kExitPrecondition;
}
