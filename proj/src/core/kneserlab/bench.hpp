#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kneserlab/chroma.hpp"
#include "kneserlab/setcore.hpp"

namespace kneserlab {

struct TopoSummary {
  int p = 0;
  int connectivity = 0;
  int bound = 0;
};

struct GoldenCheck {
  std::string name;
  bool pass = false;
};

/// Values and verdicts for one (T, r, s) instance. Verdicts are present only
/// when the quantities they compare were computed.
struct BoundReport {
  std::string instance;
  int n = 0;
  int m = 0;
  int r = 0;
  int s = 0;
  std::optional<int> cd;
  SubsetTuple defect_witness;
  std::optional<int> oracle_cd;
  std::optional<int> chi_kg;
  std::optional<int> chi_KG;
  Colouring colouring_kg;
  Colouring colouring_KG;
  std::optional<int> bound_comb;  // ceil(cd / (r-1))
  std::optional<TopoSummary> topo_kg;
  std::optional<TopoSummary> topo_KG;
  std::string topo_note;  // why the topological bound was skipped
  std::vector<GoldenCheck> golden;
  double seconds = 0;

  std::optional<bool> verdict_comb() const;    // bound_comb <= chi_KG
  std::optional<bool> verdict_mono() const;    // chi_kg <= chi_KG
  std::optional<bool> verdict_topo() const;    // each topo bound <= its own chi
  std::optional<bool> verdict_oracle() const;  // B&B == oracle
  bool all_pass() const;
};

struct BoundOptions {
  bool comb = true;
  bool topo = true;
  bool oracle = false;  // run the exhaustive defect oracle when n*r <= 20
  std::uint64_t node_budget = 0;  // 0: KNESERLAB_NODE_BUDGET or default
};

BoundReport bound_report(const std::string& instance, const SetSystem& system, int r, int s,
                         const BoundOptions& options = {});

std::string tsv_header(bool timings = false);
std::string tsv_row(const BoundReport& report, bool timings = false);
/// Header, one row per report, then `check` lines for golden assertions.
std::string format_reports(const std::vector<BoundReport>& reports, bool timings = false);

/// The three worked instances: Example 1 (r=3, s=2), Counterexample 1 at
/// (n=8, r=9, s=7) and Counterexample 2 at (n=6, r=4, s=3), each carrying its
/// golden assertions.
std::vector<BoundReport> reproduce_worked(std::uint64_t node_budget = 0);

/// Parameter caps for seeded random instance streams.
struct RandomSpec {
  std::uint64_t seed = 1;
  int n_max = 6;
  int m_max = 7;
  int max_set_size = 6;
  int r_min = 2;
  int r_max = 3;
  int s_max = 0;  // 0: up to r-1
};

/// m distinct nonempty subsets of [n] of size <= max_set_size, drawn without
/// replacement; the draw order fixes node ids. Deterministic in the seed.
SetSystem random_set_system(std::uint64_t seed, int n, int m, int max_set_size);

/// Per-instance parameters derived from the spec and instance number.
struct RandomInstance {
  std::string id;
  SetSystem system;
  int r;
  int s;
};
RandomInstance random_instance(const RandomSpec& spec, int index);

/// Runs `count` random instances with all bounds and the oracle.
std::vector<BoundReport> verify_bound_suite(const RandomSpec& spec, int count, std::uint64_t node_budget = 0);

}  // namespace kneserlab
