#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "trigdef/ivhs.hpp"

namespace trigdef {

struct Check {
  std::string name;
  std::string expected;
  std::string computed;
  bool pass = false;
};

struct VerificationReport {
  int g = 0;
  int k = 0;
  int n = 0;
  std::uint64_t seed = 0;
  std::string curve_file;  // path of the serialized curve, when one was written
  std::vector<Check> checks;
  bool pass = false;

  const Check* find(const std::string& name) const;
};

// Runs the full per-curve pipeline: generation, discriminant and Euler
// checks, Maroni recovery, the ramification-section non-membership, quadric
// and annihilator dimensions, rank-one spot checks, the base-locus dichotomy
// and (for Maroni degree 1, genus 6 or 7) the fixed-divisor structure.
// Throws GenerationError when no acceptable curve exists for the seed.
VerificationReport verify_theorem(int g, int k, std::uint64_t seed);

// Expected divisorial fixed part of the annihilator system: trivial except at
// Maroni degree 1 in genus 6 and 7, where it is the Q_V class.
DivisorClass expected_fixed_class(const SurfaceContext& ctx);

std::string report_to_json(const VerificationReport& report);
std::string format_class(const DivisorClass& d);  // "(a,b)"

struct SweepOptions {
  int g_min = 6;
  int g_max = 12;
  std::vector<std::uint64_t> seeds;
  int threads = 0;  // 0 = hardware concurrency
};

struct SweepResult {
  SweepOptions options;
  std::vector<VerificationReport> cells;  // sorted by (g, k, seed)
  bool pass = false;
};

// Every admissible (g, k) in range x every seed; cells run on a worker pool
// (TRIGONAL_THREADS caps it) and merge deterministically.
SweepResult run_sweep(const SweepOptions& options);
std::string sweep_to_json(const SweepResult& result);

}  // namespace trigdef
