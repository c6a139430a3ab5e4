#ifndef REES_HARNESS_HPP
#define REES_HARNESS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "rees/rees.hpp"

namespace rees {

// Parameters of one random batch.  The seed fully determines every
// generated matrix; instances are indexed 0..trials-1.
struct InstanceSpec {
  int d = 3;
  int m = 4;
  int n = 2;
  Field field = Field::prime(32003);
  std::uint64_t seed = 0;
  int trials = 0;
  // Where violating instances are dumped as matrix files; empty disables
  // dumping.
  std::string dump_dir;
  GbOptions gb;
};

void validate_spec(const InstanceSpec& spec);

struct BatchSummary {
  int trials_run = 0;
  int Gd_pass_count = 0;
  int forms_equal_count = 0;
  std::map<int, int> sat_index_histogram;
  int height_violation_count = 0;
  int law_violation_count = 0;    // sat-index / first-colon / thmandev1
  int budget_exceeded_count = 0;  // GB budget blowups, counted and skipped
  int generation_failures = 0;    // G_d retry budget exhausted
  std::vector<std::string> counterexample_dumps;
  std::vector<std::string> violation_messages;
};

// Counter-based generator: the value at (seed, index, attempt, position)
// is a pure hash, so instances can be produced in any order.
std::uint64_t harness_hash(std::uint64_t seed, std::uint64_t index,
                           std::uint64_t attempt, std::uint64_t position);

// Random almost-linear presentation: columns 1..m-2 uniform linear,
// last column uniform of degree n; resampled until check_Gd passes
// (at most 100 attempts, then DomainError).
PresentationInput generate_instance(const InstanceSpec& spec, int index);

// Runs the full report on every instance and asserts the height,
// saturation-index, and first-colon laws (plus the m = d+1 equalities).
BatchSummary run_batch(const InstanceSpec& spec, int workers = 0);

}  // namespace rees

#endif
