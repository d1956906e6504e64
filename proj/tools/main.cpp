// Command-line front end: lattice queries, curve generation, verification
// runs and batch sweeps. Exit codes: 0 pass, 1 verification failure, 2 usage
// error, 3 generation failure.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "trigdef/report.hpp"

namespace {

using namespace trigdef;

constexpr int kExitPass = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitGeneration = 3;

std::pair<long, long> parse_class_pair(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw std::invalid_argument("expected \"a,b\", got \"" + text + "\"");
  std::size_t pos1 = 0, pos2 = 0;
  const long a = std::stol(text.substr(0, comma), &pos1);
  const long b = std::stol(text.substr(comma + 1), &pos2);
  if (pos1 != comma || pos2 != text.size() - comma - 1)
    throw std::invalid_argument("expected \"a,b\", got \"" + text + "\"");
  return {a, b};
}

// Seed lists: comma-separated tokens, each "s" or "lo..hi".
std::vector<std::uint64_t> parse_seeds(const std::string& text) {
  std::vector<std::uint64_t> seeds;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (token.empty()) continue;
    const auto dots = token.find("..");
    if (dots == std::string::npos) {
      seeds.push_back(std::stoull(token));
    } else {
      const std::uint64_t lo = std::stoull(token.substr(0, dots));
      const std::uint64_t hi = std::stoull(token.substr(dots + 2));
      if (hi < lo) throw std::invalid_argument("empty seed range \"" + token + "\"");
      for (std::uint64_t s = lo; s <= hi; ++s) seeds.push_back(s);
    }
  }
  return seeds;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << content;
}

void print_report(const VerificationReport& report) {
  for (const auto& c : report.checks) {
    std::cout << (c.pass ? "[ok]   " : "[FAIL] ") << c.name << ": expected " << c.expected
              << "; computed " << c.computed << "\n";
  }
  std::cout << "g=" << report.g << " k=" << report.k << " seed=" << report.seed << " "
            << (report.pass ? "PASS" : "FAIL") << "\n";
}

int run_verify(int g, int k, std::uint64_t seed, const std::optional<std::string>& json_out,
               const std::optional<std::string>& curve_out) {
  VerificationReport report = verify_theorem(g, k, seed);
  if (curve_out) {
    const TrigonalCurve curve = random_curve(g, k, seed);
    write_file(*curve_out, curve_to_json(curve));
    report.curve_file = *curve_out;
  }
  print_report(report);
  if (json_out) write_file(*json_out, report_to_json(report));
  return report.pass ? kExitPass : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact divisor arithmetic and rank-one deformation checks for trigonal curves on Hirzebruch surfaces"};
  app.require_subcommand(1);

  int n = 0, g = 0, k = 0;
  std::uint64_t seed = 1;
  std::string d_text, d1_text, d2_text, seeds_text;
  int g_min = 6, g_max = 12;
  std::optional<std::string> out_path, json_out, curve_out;

  auto* cmd_intersect = app.add_subcommand("intersect", "Intersection number of two divisor classes");
  cmd_intersect->add_option("--n", n, "Hirzebruch index")->required();
  cmd_intersect->add_option("--d1", d1_text, "first class \"a,b\"")->required();
  cmd_intersect->add_option("--d2", d2_text, "second class \"a,b\"")->required();

  auto* cmd_cohomology = app.add_subcommand("cohomology", "Cohomology dimensions (h0,h1,h2,chi) of a divisor class");
  cmd_cohomology->add_option("--n", n, "Hirzebruch index")->required();
  cmd_cohomology->add_option("--d", d_text, "class \"a,b\"")->required();

  auto* cmd_maroni = app.add_subcommand("maroni", "Admissible Maroni degrees for a genus");
  cmd_maroni->add_option("--g", g, "genus (>= 6)")->required();

  auto* cmd_curve_gen = app.add_subcommand("curve-gen", "Generate a seeded trigonal curve and write its JSON");
  cmd_curve_gen->add_option("--g", g, "genus")->required();
  cmd_curve_gen->add_option("--k", k, "Maroni degree")->required();
  cmd_curve_gen->add_option("--seed", seed, "64-bit seed");
  cmd_curve_gen->add_option("--out", out_path, "output path (stdout when omitted)");

  auto* cmd_verify = app.add_subcommand("verify", "Run the full verification pipeline on one (g, k, seed)");
  cmd_verify->add_option("--g", g, "genus")->required();
  cmd_verify->add_option("--k", k, "Maroni degree")->required();
  cmd_verify->add_option("--seed", seed, "64-bit seed");
  cmd_verify->add_option("--json-out", json_out, "write the report JSON here");
  cmd_verify->add_option("--curve-out", curve_out, "also write the curve JSON here");

  auto* cmd_sweep = app.add_subcommand("sweep", "Verify every admissible (g, k) in a genus range over a seed list");
  cmd_sweep->add_option("--g-min", g_min, "lowest genus (>= 6)");
  cmd_sweep->add_option("--g-max", g_max, "highest genus");
  cmd_sweep->add_option("--seeds", seeds_text, "seed list, e.g. \"1,2,3\" or \"1..5\"")->required();
  cmd_sweep->add_option("--json-out", json_out, "write the aggregate JSON here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (cmd_intersect->parsed()) {
      const auto [a1, b1] = parse_class_pair(d1_text);
      const auto [a2, b2] = parse_class_pair(d2_text);
      std::cout << intersect({n, a1, b1}, {n, a2, b2}) << "\n";
      return kExitPass;
    }

    if (cmd_cohomology->parsed()) {
      const auto [a, b] = parse_class_pair(d_text);
      const DivisorClass d{n, a, b};
      const auto h = h012(d);
      std::cout << "(" << h.h0 << "," << h.h1 << "," << h.h2 << "," << chi(d) << ")\n";
      return kExitPass;
    }

    if (cmd_maroni->parsed()) {
      bool first = true;
      for (int kk : maroni_range(g)) {
        if (!first) std::cout << " ";
        std::cout << kk;
        first = false;
      }
      std::cout << "\n";
      return kExitPass;
    }

    if (cmd_curve_gen->parsed()) {
      const TrigonalCurve curve = random_curve(g, k, seed);
      const auto info = binary_form_analysis(curve.disc);
      const std::string json = curve_to_json(curve);
      if (out_path) {
        write_file(*out_path, json);
      } else {
        std::cout << json;
      }
      std::cout << "discriminant degree " << info.degree << ", "
                << (info.squarefree ? "squarefree" : "not squarefree") << "; accepted after "
                << curve.attempts << (curve.attempts == 1 ? " attempt" : " attempts") << "\n";
      return kExitPass;
    }

    if (cmd_verify->parsed()) {
      return run_verify(g, k, seed, json_out, curve_out);
    }

    if (cmd_sweep->parsed()) {
      SweepOptions options;
      options.g_min = g_min;
      options.g_max = g_max;
      options.seeds = parse_seeds(seeds_text);
      if (options.seeds.empty()) {
        std::cerr << "error: empty seed list\n";
        return kExitUsage;
      }
      if (g_min < 6 || g_max < g_min || g_max > 14) {
        std::cerr << "error: need 6 <= g-min <= g-max <= 14\n";
        return kExitUsage;
      }
      const SweepResult result = run_sweep(options);
      for (const auto& cell : result.cells) {
        std::cout << "g=" << cell.g << " k=" << cell.k << " seed=" << cell.seed << " "
                  << (cell.pass ? "PASS" : "FAIL") << "\n";
      }
      std::cout << (result.pass ? "sweep PASS" : "sweep FAIL") << " (" << result.cells.size()
                << " cells)\n";
      if (json_out) write_file(*json_out, sweep_to_json(result));
      return result.pass ? kExitPass : kExitVerifyFail;
    }
  } catch (const GenerationError& e) {
    std::cerr << "generation failure: " << e.what() << "\n";
    return kExitGeneration;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
