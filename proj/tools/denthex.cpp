// denthex: exact lozenge-tiling counts for hexagons with boundary dents.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "denthex/oracle.hpp"
#include "denthex/render.hpp"
#include "denthex/runner.hpp"
#include "denthex/specio.hpp"

namespace {

using namespace denthex;

constexpr int kExitParse = 2;
constexpr int kExitInvalidSpec = 3;
constexpr int kExitInternal = 4;

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case Errc::ParseError: return kExitParse;
    case Errc::InvalidDent:
    case Errc::InvalidParams:
    case Errc::InvalidPositions:
    case Errc::InvalidCellPattern:
    case Errc::BetaOnForbiddenSide: return kExitInvalidSpec;
    case Errc::NonIntegerResult:
    case Errc::InternalZeroDenominator:
    case Errc::UnclassifiableResidual: return kExitInternal;
    default: return 1;
  }
}

void write_out(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw Error(Errc::ParseError, "cannot open output file " + out_path);
  f << text;
}

int cmd_count(const std::string& specfile, const std::string& method) {
  HexDentSpec spec = load_spec_file(specfile);
  Count v = count_with_method(spec, method_from_name(method));
  std::cout << v.get_str() << "\n";
  return 0;
}

int cmd_verify(const std::string& specfile) {
  HexDentSpec spec = load_spec_file(specfile);
  VerifyReport rep = run_verify(spec);
  std::printf("%-10s %-28s %10s\n", "method", "count", "seconds");
  for (const auto& row : rep.rows)
    std::printf("%-10s %-28s %10.4f\n", row.method.c_str(), row.value.get_str().c_str(),
                row.seconds);
  std::printf("%s\n", rep.all_agree ? "all methods agree" : "METHODS DISAGREE");
  return rep.all_agree ? 0 : 1;
}

int cmd_sweep(const SweepOptions& opt) {
  SweepReport rep = run_sweep(opt);
  std::printf("checked %ld configurations\n", rep.configs);
  for (const auto& f : rep.failures)
    std::printf("FAIL %s\n  reproducer: %s\n", f.detail.c_str(), f.spec_json.c_str());
  std::printf("%zu failures\n", rep.failures.size());
  return rep.failures.empty() ? 0 : 1;
}

int cmd_identities(long trials, uint64_t seed) {
  IdentityReport rep = run_identities(trials, seed);
  for (const auto& [name, ok] : rep.results)
    std::printf("%-18s %s\n", name.c_str(), ok ? "pass" : "FAIL");
  return rep.all_pass ? 0 : 1;
}

int cmd_render(const std::string& specfile, const std::string& format, bool with_tiling,
               const std::string& out_path) {
  HexDentSpec spec = load_spec_file(specfile);
  Region region = build_hexagon(spec);
  std::optional<std::vector<Lozenge>> tiling;
  if (with_tiling) {
    auto ts = enumerate_tilings(region, 1);
    if (ts.empty()) throw Error(Errc::InvalidParams, "region has no tiling to render");
    tiling = ts.front();
  }
  if (format == "ascii")
    write_out(render_ascii(region, tiling), out_path);
  else if (format == "svg")
    write_out(render_svg(region, tiling), out_path);
  else
    throw Error(Errc::ParseError, "format must be ascii or svg");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact lozenge-tiling counts for dented hexagons on the triangular lattice"};
  app.require_subcommand(1);

  std::string specfile, method = "auto", format = "ascii", out_path;
  bool with_tiling = false;
  long trials = 100;
  uint64_t seed = 1;
  SweepOptions sweep;

  auto* count = app.add_subcommand("count", "Print the exact tiling count");
  count->add_option("specfile", specfile, "JSON region spec")->required();
  count->add_option("--method", method, "auto|oracle|pfaffian|formula");

  auto* verify = app.add_subcommand("verify", "Cross-check all applicable methods");
  verify->add_option("specfile", specfile, "JSON region spec")->required();

  auto* sw = app.add_subcommand("sweep", "Cross-check oracle vs theorems over many configs");
  sw->add_option("--amax", sweep.amax, "max a");
  sw->add_option("--bmax", sweep.bmax, "max b");
  sw->add_option("--cmax", sweep.cmax, "max c");
  sw->add_option("--kmax", sweep.kmax, "max k");
  sw->add_option("--nmax", sweep.nmax, "max number of beta dents");
  sw->add_option("--seed", sweep.seed, "RNG seed");
  sw->add_option("--samples", sweep.samples, "0 = exhaustive, otherwise sample count");
  sw->add_option("--threads", sweep.threads, "0 = DENTHEX_THREADS or all cores");

  auto* ident = app.add_subcommand("identities", "Run the summation/condensation identity suite");
  ident->add_option("--trials", trials, "instances per identity");
  ident->add_option("--seed", seed, "RNG seed");

  auto* render = app.add_subcommand("render", "Render the region (and one tiling)");
  render->add_option("specfile", specfile, "JSON region spec")->required();
  render->add_option("--format", format, "ascii|svg");
  render->add_flag("--with-tiling", with_tiling, "overlay the first tiling");
  render->add_option("--out", out_path, "output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (count->parsed()) return cmd_count(specfile, method);
    if (verify->parsed()) return cmd_verify(specfile);
    if (sw->parsed()) return cmd_sweep(sweep);
    if (ident->parsed()) return cmd_identities(trials, seed);
    if (render->parsed()) return cmd_render(specfile, format, with_tiling, out_path);
  } catch (const denthex::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
