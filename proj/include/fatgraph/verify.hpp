#pragma once

// Batch verification suites.  Each suite runs a per-graph kernel over the
// enumerated classes (exhaustive) or over the states of a seeded flip walk.
// The serial and parallel runners produce identical reports.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fatgraph/enumerate.hpp"
#include "fatgraph/fatgraph.hpp"

namespace fg {

enum class Suite { Types, Marking, NonTrivial, Relations, DeltaXi, Gluing, TailSlide, Spin, Balanced, Primitivity };

const char* to_string(Suite s);
std::optional<Suite> parse_suite(const std::string& name);
std::vector<Suite> all_suites();

inline constexpr std::uint64_t kDefaultSeed = 20240601;

struct SuiteConfig {
  int genus = 2;
  bool exhaustive = false;
  std::uint64_t seed = kDefaultSeed;
  std::size_t steps = 200;
  std::size_t pentagon_budget = 0;  // per graph; 0 = all
};

struct CheckFailure {
  std::string check;
  std::string detail;
  std::string graph;        // fatgraph v1 text
  std::uint64_t seed = 0;   // kernel seed for replay
  std::size_t index = 0;    // input index
  bool operator==(const CheckFailure&) const = default;
};

struct GraphOutcome {
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::map<std::string, std::int64_t> counters;
  std::optional<CheckFailure> first_failure;
};

struct SuiteReport {
  std::string suite;
  int genus = 0;
  bool exhaustive = false;
  std::uint64_t seed = 0;
  std::size_t graphs = 0;
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::map<std::string, std::int64_t> counters;
  std::optional<CheckFailure> first_failure;
  bool ok() const { return failures == 0; }
  bool operator==(const SuiteReport&) const = default;
};

// Seed handed to the kernel for input `index`.
std::uint64_t kernel_seed(std::uint64_t seed, std::size_t index);

GraphOutcome run_kernel(Suite s, const Fatgraph& g, std::uint64_t seed, const SuiteConfig& cfg);
std::vector<Fatgraph> suite_inputs(Suite s, const SuiteConfig& cfg);
SuiteReport run_suite_on(Suite s, const std::vector<Fatgraph>& inputs, const SuiteConfig& cfg, Exec exec);
SuiteReport run_suite(Suite s, const SuiteConfig& cfg, Exec exec);

// Near-chord-diagram test and its distinguished tree edge.
bool first_preferred_then_reversed(const Fatgraph& g);
int extra_tree_edge(const Fatgraph& g);

}  // namespace fg
