#include "kneserlab/bench.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <random>
#include <sstream>

#include "kneserlab/defect.hpp"
#include "kneserlab/error.hpp"
#include "kneserlab/kneser.hpp"
#include "kneserlab/topo.hpp"

namespace kneserlab {

namespace {

std::uint64_t resolve_budget(std::uint64_t budget) { return budget == 0 ? node_budget_from_env() : budget; }

int ceil_div(int a, int b) { return (a + b - 1) / b; }

std::string join_colours(const Colouring& c) {
  std::string out;
  for (std::size_t i = 0; i < c.colours.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(c.colours[i]);
  }
  return out.empty() ? "-" : out;
}

template <class T>
std::string cell(const std::optional<T>& v) {
  if (!v) return "-";
  std::ostringstream out;
  out << *v;
  return out.str();
}

std::string verdict_cell(const std::optional<bool>& v) { return !v ? "-" : (*v ? "pass" : "fail"); }

// Uniform integer in [lo, hi] by rejection; independent of the standard
// library's distribution implementation so streams match across platforms.
int uniform(std::mt19937_64& rng, int lo, int hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return lo + static_cast<int>(x % span);
}

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::optional<bool> BoundReport::verdict_comb() const {
  if (!bound_comb || !chi_KG) return std::nullopt;
  return *bound_comb <= *chi_KG;
}

std::optional<bool> BoundReport::verdict_mono() const {
  if (!chi_kg || !chi_KG) return std::nullopt;
  return *chi_kg <= *chi_KG;
}

std::optional<bool> BoundReport::verdict_topo() const {
  if (!topo_kg && !topo_KG) return std::nullopt;
  bool ok = true;
  if (topo_kg && chi_kg) ok = ok && topo_kg->bound <= *chi_kg;
  if (topo_KG && chi_KG) ok = ok && topo_KG->bound <= *chi_KG;
  return ok;
}

std::optional<bool> BoundReport::verdict_oracle() const {
  if (!oracle_cd || !cd) return std::nullopt;
  return *oracle_cd == *cd;
}

bool BoundReport::all_pass() const {
  for (const auto& v : {verdict_comb(), verdict_mono(), verdict_topo(), verdict_oracle()})
    if (v && !*v) return false;
  return std::all_of(golden.begin(), golden.end(), [](const GoldenCheck& g) { return g.pass; });
}

BoundReport bound_report(const std::string& instance, const SetSystem& system, int r, int s,
                         const BoundOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const std::uint64_t budget = resolve_budget(options.node_budget);
  BoundReport report;
  report.instance = instance;
  report.n = system.ground_size();
  report.m = system.size();
  report.r = r;
  report.s = s;

  const Hypergraph big = build_KG(system, r, s);
  std::optional<Hypergraph> small;
  if (r <= system.size()) small = build_kg(system, r, s);

  if (small) {
    auto chi = chromatic_number(*small, budget);
    report.chi_kg = chi.chi;
    report.colouring_kg = std::move(chi.witness);
  }
  auto chi = chromatic_number(big, budget);
  report.chi_KG = chi.chi;
  report.colouring_KG = std::move(chi.witness);

  if (options.comb) {
    auto defect = colourability_defect(system, r, s, budget);
    report.cd = defect.value;
    report.defect_witness = std::move(defect.witness);
    report.bound_comb = ceil_div(defect.value, r - 1);
    if (options.oracle && system.ground_size() * r <= kOracleMaxIncidences)
      report.oracle_cd = defect_oracle(system, r, s);
  }

  if (options.topo) {
    if (!prime_power(r)) {
      report.topo_note = "r=" + std::to_string(r) + " is not a prime power";
    } else {
      try {
        auto summarize = [](const TopoBound& t) { return TopoSummary{t.p, t.connectivity, t.bound}; };
        if (small) report.topo_kg = summarize(*topo_bound(*small));
        report.topo_KG = summarize(*topo_bound(big));
      } catch (const ResourceLimit& e) {
        report.topo_kg.reset();
        report.topo_KG.reset();
        report.topo_note = std::string("box complex skipped: ") + e.what();
      }
    }
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::string tsv_header(bool timings) {
  std::string h =
      "instance\tn\tm\tr\ts\tcd\tchi_kg\tchi_KG\tbound_comb\tell_kg\ttopo_kg\tell_KG\ttopo_KG\toracle_cd\t"
      "verdict_comb\tverdict_mono\tverdict_topo\tverdict_oracle\tdefect_witness\tcolouring_kg\tcolouring_KG";
  if (timings) h += "\tseconds";
  return h + "\n";
}

std::string tsv_row(const BoundReport& r, bool timings) {
  std::ostringstream out;
  auto topo = [&](const std::optional<TopoSummary>& t) {
    if (!t) return std::string("-\t-");
    return std::to_string(t->connectivity) + "\t" + std::to_string(t->bound);
  };
  out << r.instance << '\t' << r.n << '\t' << r.m << '\t' << r.r << '\t' << r.s << '\t' << cell(r.cd) << '\t'
      << cell(r.chi_kg) << '\t' << cell(r.chi_KG) << '\t' << cell(r.bound_comb) << '\t' << topo(r.topo_kg) << '\t'
      << topo(r.topo_KG) << '\t' << cell(r.oracle_cd) << '\t' << verdict_cell(r.verdict_comb()) << '\t'
      << verdict_cell(r.verdict_mono()) << '\t' << verdict_cell(r.verdict_topo()) << '\t'
      << verdict_cell(r.verdict_oracle()) << '\t' << (r.cd ? compact_witness(r.defect_witness) : "-") << '\t'
      << (r.chi_kg ? join_colours(r.colouring_kg) : "-") << '\t'
      << (r.chi_KG ? join_colours(r.colouring_KG) : "-");
  if (timings) out << '\t' << std::fixed << std::setprecision(3) << r.seconds;
  out << '\n';
  return out.str();
}

std::string format_reports(const std::vector<BoundReport>& reports, bool timings) {
  std::string out = tsv_header(timings);
  for (const auto& r : reports) out += tsv_row(r, timings);
  for (const auto& r : reports)
    for (const auto& g : r.golden) out += "check\t" + r.instance + "\t" + g.name + "\t" + (g.pass ? "pass" : "fail") + "\n";
  return out;
}

std::vector<BoundReport> reproduce_worked(std::uint64_t node_budget) {
  const std::uint64_t budget = resolve_budget(node_budget);
  BoundOptions options;
  options.oracle = true;
  options.node_budget = budget;
  std::vector<BoundReport> out;

  {
    const SetSystem t = worked_family(WorkedFamily::example1);
    auto rep = bound_report("example1", t, 3, 2, options);
    const SubsetTuple stated{{mask_of(std::vector{2, 4}), mask_of(std::vector{2, 5}), mask_of(std::vector{3, 4})}};
    bool stated_ok = is_s_disjoint(stated, 2);
    for (Mask part : stated.parts) stated_ok = stated_ok && is_template_free(part, t);
    rep.golden = {
        {"chi_kg=2", rep.chi_kg == 2},
        {"chi_KG=3", rep.chi_KG == 3},
        {"cd=4", rep.cd == 4},
        {"cd_oracle=4", rep.oracle_cd == 4},
        {"stated_tuple_gives_cd<=4", stated_ok && 10 - stated.total_size() == 4},
        {"ceil(cd/2)<=chi_kg<chi_KG", rep.bound_comb && rep.chi_kg && rep.chi_KG &&
                                          *rep.bound_comb <= *rep.chi_kg && *rep.chi_kg < *rep.chi_KG},
    };
    out.push_back(std::move(rep));
  }
  {
    const int n = 8;
    const int r = 9;
    const int s = 7;
    const SetSystem t = worked_family(WorkedFamily::counterexample1, n);
    auto rep = bound_report("counterexample1", t, r, s, options);
    rep.golden = {
        {"chi_kg=2", rep.chi_kg == 2},
        {"cd=17", rep.cd == 17},
        {"cd>=3r-10", rep.cd && *rep.cd >= 3 * r - 10},
        {"cd>(r-1)*chi_kg", rep.cd && rep.chi_kg && *rep.cd > (r - 1) * *rep.chi_kg},
        {"ceil(cd/(r-1))<=chi_KG", rep.verdict_comb() == true},
    };
    out.push_back(std::move(rep));
  }
  {
    const int n = 6;
    const int r = 4;
    const int s = 3;
    const SetSystem t = complete_k_subsets(n, 2);
    auto rep = bound_report("counterexample2", t, r, s, options);
    const Colouring greedy = greedy_pair_colouring(n);
    const bool greedy_proper = is_proper(build_kg(t, r, s), greedy);
    const int formula = std::max(n * s - r * (2 - 1), 0);
    rep.golden = {
        {"greedy_uses_n-2=4", greedy.k == n - 2},
        {"greedy_proper", greedy_proper},
        {"chi_kg<=4", rep.chi_kg && *rep.chi_kg <= 4},
        {"cd=14=max(ns-r,0)", rep.cd == 14 && formula == 14},
        {"(r-1)*chi_kg<cd", rep.cd && rep.chi_kg && (r - 1) * *rep.chi_kg < *rep.cd},
    };
    out.push_back(std::move(rep));
  }
  return out;
}

SetSystem random_set_system(std::uint64_t seed, int n, int m, int max_set_size) {
  if (n < 1 || n > 20) throw InvalidArgument("random set systems support 1 <= n <= 20");
  if (m < 0 || max_set_size < 1) throw InvalidArgument("m must be nonnegative and max_set_size positive");
  std::vector<Mask> candidates;
  for (Mask s = 1; s < (Mask{1} << n); ++s)
    if (cardinality(s) <= max_set_size) candidates.push_back(s);
  if (static_cast<std::size_t>(m) > candidates.size())
    throw InvalidArgument("m exceeds the number of available subsets");
  std::mt19937_64 rng(seed);
  for (int i = 0; i < m; ++i) {
    const int j = uniform(rng, i, static_cast<int>(candidates.size()) - 1);
    std::swap(candidates[static_cast<std::size_t>(i)], candidates[static_cast<std::size_t>(j)]);
  }
  candidates.resize(static_cast<std::size_t>(m));
  return SetSystem(n, std::move(candidates));
}

RandomInstance random_instance(const RandomSpec& spec, int index) {
  if (spec.r_min < 2 || spec.r_max < spec.r_min || spec.n_max < 2 || spec.m_max < spec.r_max ||
      spec.max_set_size < 1)
    throw InvalidArgument("invalid random spec caps");
  std::mt19937_64 rng(mix(spec.seed ^ mix(static_cast<std::uint64_t>(index))));
  const int r = uniform(rng, spec.r_min, spec.r_max);
  const int s_cap = spec.s_max > 0 ? std::min(spec.s_max, r - 1) : r - 1;
  const int s = uniform(rng, 1, s_cap);
  auto available = [&](int n) {
    int count = 0;
    for (Mask x = 1; x < (Mask{1} << n); ++x) count += cardinality(x) <= spec.max_set_size;
    return count;
  };
  int n_lo = 2;
  while (n_lo < spec.n_max && available(n_lo) < r) ++n_lo;
  const int n = uniform(rng, n_lo, spec.n_max);
  const int m_hi = std::min(spec.m_max, available(n));
  if (m_hi < r) throw InvalidArgument("caps leave fewer than r subsets");
  const int m = uniform(rng, r, m_hi);
  RandomInstance inst{"rand-" + std::to_string(spec.seed) + "-" + std::to_string(index),
                      random_set_system(rng(), n, m, spec.max_set_size), r, s};
  return inst;
}

std::vector<BoundReport> verify_bound_suite(const RandomSpec& spec, int count, std::uint64_t node_budget) {
  BoundOptions options;
  options.oracle = true;
  options.node_budget = resolve_budget(node_budget);
  std::vector<BoundReport> out;
  out.reserve(static_cast<std::size_t>(std::max(count, 0)));
  for (int i = 0; i < count; ++i) {
    const auto inst = random_instance(spec, i);
    out.push_back(bound_report(inst.id, inst.system, inst.r, inst.s, options));
  }
  return out;
}

}  // namespace kneserlab
