#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "subspectra/digraph.hpp"

namespace subspectra {

enum class Family { ErDigraph, ROutRegular, ErGraph };

/// Random-instance recipe. p = p_num / p_den is exact; r is used by
/// ROutRegular only.
struct GenSpec {
  Family family = Family::ErDigraph;
  std::size_t n = 1;
  std::uint64_t p_num = 1;
  std::uint64_t p_den = 2;
  std::size_t r = 1;
  std::uint64_t seed = 0;
};

/// Deterministic in the seed. ErGraph yields a Graph, the others a Digraph.
/// Throws InvalidParams on n = 0, p ∉ [0, 1] or r ∉ [1, n − 1].
std::variant<Digraph, Graph> generate(const GenSpec& spec);
Digraph generate_digraph(const GenSpec& spec);
Graph generate_graph(const GenSpec& spec);

/// Uniform integer in [0, bound) by rejection; bound ≥ 1.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

/// splitmix64 finalizer; derives trial and attempt seeds from the master seed.
std::uint64_t mix_seed(std::uint64_t x);
std::uint64_t trial_seed(std::uint64_t master, std::size_t trial);

/// Strong connectivity from the full transitive closure; O(n³) reference
/// for is_strongly_connected.
bool strongly_connected_by_closure(const Digraph& d);

struct Bounds {
  std::size_t max_n1 = 5;
  std::size_t max_n2 = 4;
};

using Value = std::variant<IntPoly, RatFunc>;

struct Failure {
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  std::string d1;
  std::string d2;
  Value expected;
  Value actual;
  std::string error;  // set when the check threw instead of comparing
};

struct VerificationReport {
  std::string theorem;
  std::size_t trials = 0;
  std::size_t skipped = 0;
  std::uint64_t seed = 0;
  std::vector<Failure> failures;  // sorted by trial
  std::int64_t elapsed_ms = 0;

  bool passed() const { return failures.empty(); }
};

/// Every recognized theorem id, in sweep order.
const std::vector<std::string>& theorem_ids();

/// Outcome of one trial: hypothesis-violating draws re-drawn and counted.
struct TrialOutcome {
  std::size_t skipped = 0;
  std::optional<Failure> failure;
};

/// Runs the single trial whose seed is `seed` (a trial seed, as reported in
/// failures). Throws UnknownTheorem.
TrialOutcome run_trial(const std::string& theorem, std::uint64_t seed, const Bounds& bounds);

/// Worker count: `requested` if positive, else SUBSPECTRA_THREADS if set
/// and positive, else the hardware concurrency.
std::size_t resolve_threads(std::size_t requested);

/// Runs `trials` independent trials. Trial i uses
/// trial_seed(seed ^ hash(theorem), i) and nothing else, so the report is
/// independent of the thread count.
/// Throws UnknownTheorem or InvalidParams (bounds too small).
VerificationReport verify(const std::string& theorem, std::size_t trials, std::uint64_t seed,
                          const Bounds& bounds = {}, std::size_t threads = 0);

}  // namespace subspectra
