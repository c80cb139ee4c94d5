// Acceptance suite: one PASS/FAIL line per criterion, limits pinned below.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "../unit/oracles.hpp"
#include "kneserlab/bench.hpp"
#include "kneserlab/chroma.hpp"
#include "kneserlab/complex.hpp"
#include "kneserlab/defect.hpp"
#include "kneserlab/error.hpp"
#include "kneserlab/homology.hpp"
#include "kneserlab/kneser.hpp"
#include "kneserlab/topo.hpp"

using namespace kneserlab;

namespace {

// Wall-clock limits in seconds.
constexpr double kLimitExample = 5;
constexpr double kLimitCounterexample = 120;
constexpr double kLimitBoundSuite = 600;
constexpr double kLimitWedge = 300;

constexpr std::uint64_t kSuiteSeed = 1;
constexpr int kSuiteCount = 200;
constexpr int kMinColourMapInstances = 20;
constexpr int kDefectOracleMaxIncidences = 16;
constexpr int kChromaticOracleMaxNodes = 6;
constexpr int kWedgeMaxProduct = 9;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  std::vector<std::string> notes;

  void fail(const std::string& why) {
    if (pass) detail << why;
    pass = false;
  }
};

struct Infra {
  long complexes = 0;
  long boundary_failures = 0;
  long euler_failures = 0;
  long round_trips = 0;
  long round_trip_failures = 0;

  BettiTable homology_checked(const SimplicialComplex& k, int p) {
    ++complexes;
    const auto chain = chain_complex(k, p);
    if (!boundary_squares_to_zero(chain)) ++boundary_failures;
    auto b = betti_from_ranks(k, p, boundary_ranks(chain));
    if (!euler_identity_holds(k, b)) ++euler_failures;
    return b;
  }

  template <class T, class Parse>
  void round_trip(const T& value, Parse parse) {
    ++round_trips;
    const std::string text = serialize(value);
    if (serialize(parse(text)) != text) ++round_trip_failures;
  }
};

Infra infra;
int failed = 0;

double seconds_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

void report(int id, const std::string& name, double limit, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  const double secs = seconds_since(start);
  if (limit > 0 && secs > limit) {
    std::ostringstream why;
    why << "runtime " << secs << " s over limit " << limit << " s";
    o.fail(why.str());
  }
  if (!o.pass) ++failed;
  std::printf("criterion %d: %s  %s  [%.2f s", id, o.pass ? "PASS" : "FAIL", name.c_str(), secs);
  if (limit > 0) std::printf(" / limit %.0f s", limit);
  std::printf("]  %s\n", o.detail.str().c_str());
  for (const auto& n : o.notes) std::printf("    %s\n", n.c_str());
  std::fflush(stdout);
}

int ceil_div(int a, int b) { return (a + b - 1) / b; }

// ---------------------------------------------------------------------------

void example1(Outcome& o) {
  const auto t = worked_family(WorkedFamily::example1);
  const int chi_kg = chromatic_number(build_kg(t, 3, 2)).chi;
  const int chi_KG = chromatic_number(build_KG(t, 3, 2)).chi;
  const auto d = colourability_defect(t, 3, 2);
  const int oracle_cd = defect_oracle(t, 3, 2);
  o.detail << "chi_kg=" << chi_kg << " chi_KG=" << chi_KG << " cd=" << d.value << " oracle=" << oracle_cd
           << " bound=" << ceil_div(d.value, 2) << " ";
  if (chi_kg != 2) o.fail("chi_kg != 2");
  if (chi_KG != 3) o.fail("chi_KG != 3");
  if (d.value != 4 || oracle_cd != 4) o.fail("cd != 4");
  if (!(ceil_div(d.value, 2) == 2 && 2 <= chi_KG)) o.fail("bound chain");
}

void counterexample1(Outcome& o) {
  const int n = 8, r = 9, s = 7;
  const auto t = worked_family(WorkedFamily::counterexample1, n);
  const int chi_kg = chromatic_number(build_kg(t, r, s)).chi;
  const int cd = colourability_defect(t, r, s).value;
  const int chi_KG = chromatic_number(build_KG(t, r, s)).chi;
  o.detail << "chi_kg=" << chi_kg << " cd=" << cd << " 3r-10=" << 3 * r - 10 << " (r-1)chi_kg=" << (r - 1) * chi_kg
           << " ceil(cd/8)=" << ceil_div(cd, r - 1) << " chi_KG=" << chi_KG << " ";
  if (chi_kg != 2) o.fail("chi_kg != 2");
  if (cd != 17) o.fail("cd != 17");
  if (cd < 3 * r - 10) o.fail("cd < 3r-10");
  if (!(cd > (r - 1) * chi_kg)) o.fail("no failure of the multiplicity-free bound");
  if (ceil_div(cd, r - 1) != 3 || ceil_div(cd, r - 1) > chi_KG) o.fail("bound on KG");
}

void counterexample2(Outcome& o) {
  const int n = 6, r = 4, s = 3;
  const auto t = complete_k_subsets(n, 2);
  const auto kg = build_kg(t, r, s);
  const auto greedy = greedy_pair_colouring(n);
  const bool proper = is_proper(kg, greedy);
  const auto chi = chromatic_number(kg);
  const int cd = colourability_defect(t, r, s).value;
  o.detail << "greedy_colours=" << greedy.k << " greedy_proper=" << proper << " cd=" << cd
           << " chi_kg=" << chi.chi << " (r-1)chi_kg=" << (r - 1) * chi.chi << " ";
  if (greedy.k != n - 2 || !proper) o.fail("greedy colouring");
  if (cd != 14 || cd != std::max(n * s - r, 0)) o.fail("cd != 14");
  if (!chi.lower_exhausted && chi.chi > 1) o.fail("chi not certified");
  if (!((r - 1) * chi.chi < cd)) o.fail("(r-1)chi_kg >= cd");
}

// Criteria 4, 5, 8 share one instance stream.
struct SuiteTotals {
  int instances = 0;
  int comb_violations = 0;
  int mono_violations = 0;
  int comb_checked = 0;
  int topo_checked = 0;
  int topo_skipped = 0;
  int topo_violations = 0;
  int topo_acyclic = 0;
  int defect_oracle_checked = 0;
  int defect_oracle_mismatch = 0;
  int chi_oracle_checked = 0;
  int chi_oracle_mismatch = 0;
  double seconds = 0;
  std::string first_violation;
};

SuiteTotals suite;

void run_suite() {
  const auto start = std::chrono::steady_clock::now();
  RandomSpec spec;
  spec.seed = kSuiteSeed;
  for (int i = 0; i < kSuiteCount; ++i) {
    const auto inst = random_instance(spec, i);
    const auto& t = inst.system;
    const int r = inst.r;
    const int s = inst.s;
    ++suite.instances;
    infra.round_trip(t, [](const std::string& x) { return parse_instance(x); });

    const auto kg = build_kg(t, r, s);
    const auto KG = build_KG(t, r, s);
    infra.round_trip(kg, [](const std::string& x) { return parse_hypergraph(x); });
    infra.round_trip(KG, [](const std::string& x) { return parse_hypergraph(x); });
    const auto chi_kg = chromatic_number(kg);
    const auto chi_KG = chromatic_number(KG);
    const auto d = colourability_defect(t, r, s);
    ++suite.comb_checked;
    if (ceil_div(d.value, r - 1) > chi_KG.chi) {
      ++suite.comb_violations;
      if (suite.first_violation.empty()) suite.first_violation = inst.id + " comb";
    }
    if (chi_kg.chi > chi_KG.chi) {
      ++suite.mono_violations;
      if (suite.first_violation.empty()) suite.first_violation = inst.id + " mono";
    }

    if (t.ground_size() * r <= kDefectOracleMaxIncidences) {
      ++suite.defect_oracle_checked;
      if (defect_oracle(t, r, s) != d.value) ++suite.defect_oracle_mismatch;
    }
    for (const Hypergraph* h : {&kg, &KG}) {
      if (h->node_count() <= kChromaticOracleMaxNodes) {
        ++suite.chi_oracle_checked;
        const int expected = oracle::chromatic(h->node_count(), h->edges());
        if (expected != (h == &kg ? chi_kg.chi : chi_KG.chi)) ++suite.chi_oracle_mismatch;
      }
      // r is 2 or 3 here, so the field is Z_r.
      try {
        const auto box = box_complex(*h);
        const auto b = infra.homology_checked(box, r);
        infra.round_trip(box, [](const std::string& x) { return parse_complex(x); });
        ++suite.topo_checked;
        if (b.acyclic) {
          ++suite.topo_acyclic;
          continue;
        }
        const int bound = ceil_div(b.connectivity + 2, r - 1);
        if (bound > (h == &kg ? chi_kg.chi : chi_KG.chi)) {
          ++suite.topo_violations;
          if (suite.first_violation.empty()) suite.first_violation = inst.id + " topo";
        }
      } catch (const ResourceLimit&) {
        ++suite.topo_skipped;
      }
    }
  }
  suite.seconds = seconds_since(start);
}

void bound_suite(Outcome& o) {
  run_suite();
  o.detail << suite.instances << " instances, comb violations=" << suite.comb_violations
           << ", monotonicity violations=" << suite.mono_violations << " ";
  if (suite.instances != kSuiteCount) o.fail("instance count");
  if (suite.comb_violations || suite.mono_violations) o.fail("violation at " + suite.first_violation);
}

void topo_suite(Outcome& o) {
  const Hypergraph edge(2, 2, Variant::set_edges, {{1, 2}});
  const auto b = infra.homology_checked(box_complex(edge), 2);
  const int bound = ceil_div(b.connectivity + 2, 1);
  const int chi = chromatic_number(edge).chi;
  o.detail << "B(K_2): l=" << b.connectivity << " bound=" << bound << " chi=" << chi << "; suite: "
           << suite.topo_checked << " box complexes checked, " << suite.topo_skipped << " over guard, "
           << suite.topo_violations << " violations, " << suite.topo_acyclic << " acyclic ";
  if (b.connectivity != 0 || bound != 2 || chi != 2) o.fail("exact case");
  if (suite.topo_violations) o.fail("violation at " + suite.first_violation);
  if (suite.topo_acyclic) o.fail("acyclic box complex");
  if (suite.topo_checked == 0) o.fail("no instance fit the guards");
}

void wedge(Outcome& o) {
  int checked = 0;
  for (int n = 1; 2 * n <= kWedgeMaxProduct; ++n)
    for (int r = 2; r * n <= kWedgeMaxProduct; ++r)
      for (int s = 1; s < r; ++s) {
        const auto k = deleted_join_simplex(n, r, s + 1);
        infra.round_trip(k, [](const std::string& x) { return parse_complex(x); });
        for (int p : {2, 3}) {
          const auto b = infra.homology_checked(k, p);
          ++checked;
          bool ok = b.betti(n * s - 1) >= 1;
          for (int i = -1; i < n * s - 1; ++i) ok = ok && b.betti(i) == 0;
          if (!ok) {
            std::ostringstream why;
            why << "(n,r,s,p)=(" << n << "," << r << "," << s << "," << p << ") ";
            o.fail(why.str());
          }
        }
      }
  o.detail << checked << " (n,r,s,p) cases ";
}

std::vector<SetSystem> families_up_to_three() {
  std::vector<SetSystem> out;
  for (int n = 1; n <= 3; ++n) {
    const int subsets = (1 << n) - 1;
    for (int pick = 1; pick < (1 << subsets); ++pick) {
      std::vector<Mask> sets;
      for (int x = 1; x <= subsets; ++x)
        if (pick >> (x - 1) & 1) sets.push_back(static_cast<Mask>(x));
      out.emplace_back(n, sets);
    }
  }
  return out;
}

void proof_maps(Outcome& o) {
  // colouring map on every suite-style instance small enough for its box complex
  int colour_checked = 0;
  int colour_failed = 0;
  oracle::Rng rng(kSuiteSeed);
  RandomSpec spec;
  spec.seed = kSuiteSeed;
  for (int i = 0; colour_checked < 4 * kMinColourMapInstances && i < kSuiteCount; ++i) {
    const auto inst = random_instance(spec, i);
    for (bool multiset : {false, true}) {
      const auto h = multiset ? build_KG(inst.system, inst.r, inst.s) : build_kg(inst.system, inst.r, inst.s);
      try {
        const auto rep = verify_colour_map(h, chromatic_number(h).witness);
        ++colour_checked;
        if (!rep.all_pass()) ++colour_failed;
      } catch (const ResourceLimit&) {
      }
    }
  }
  {
    const auto h = build_KG(worked_family(WorkedFamily::example1), 3, 2);
    const auto rep = verify_colour_map(h, chromatic_number(h).witness);
    ++colour_checked;
    if (!rep.all_pass()) ++colour_failed;
  }

  // defect map on every family of nonempty subsets of [n], n <= 3
  struct Case {
    SetSystem t;
    int r;
    int s;
  };
  std::vector<Case> cases;
  for (auto& t : families_up_to_three())
    for (int r = 2; r <= 3; ++r)
      for (int s = 1; s < r; ++s) cases.push_back({t, r, s});
  cases.push_back({SetSystem(2, {element_bit(1), element_bit(2)}), 2, 1});

  int checked = 0, well_defined = 0, simplicial = 0, equivariant = 0, dim_ok = 0, containment = 0, surjective = 0;
  int argument_ok = 0;
  std::string first_non_surjective;
  std::string first_argument_failure;
  std::set<std::tuple<int, int, int>> orders;
  for (const auto& c : cases) {
    const auto rep = verify_defect_map(c.t, c.r, c.s);
    ++checked;
    well_defined += rep.well_defined;
    simplicial += rep.simplicial && rep.facewise_simplicial;
    equivariant += rep.equivariant;
    dim_ok += rep.dim_L_ok();
    containment += rep.containment && rep.facewise_containment;
    surjective += rep.surjective;
    const bool arg = rep.argument_pass() && rep.facewise_simplicial && rep.facewise_containment;
    argument_ok += arg;
    std::string label = "r=" + std::to_string(c.r) + " s=" + std::to_string(c.s) + " T=";
    for (Mask x : c.t.sets()) label += format_set(x);
    if (!rep.surjective && first_non_surjective.empty()) first_non_surjective = label;
    if (!arg && first_argument_failure.empty()) first_argument_failure = label;

    // complexes behind the check, for the infrastructure criterion
    if (orders.insert({c.t.ground_size(), c.r, c.s}).second) {
      const auto k = order_complex(tuple_poset(c.t.ground_size(), c.r, c.s));
      infra.homology_checked(k, c.r);
    }
    const auto box = box_complex(build_KG(c.t, c.r, c.s));
    infra.homology_checked(box, c.r);
    infra.round_trip(box, [](const std::string& x) { return parse_complex(x); });
  }

  o.detail << "colour map " << colour_checked - colour_failed << "/" << colour_checked << "; defect map all-pass "
           << std::min(surjective, argument_ok) << "/" << checked << " ";
  if (colour_checked < kMinColourMapInstances) o.fail("too few colour-map instances");
  if (colour_failed) o.fail("colour map failure");
  std::ostringstream line;
  line << "defect map over " << checked << " instances: well-defined " << well_defined << ", simplicial "
       << simplicial << ", equivariant " << equivariant << ", dim L <= ns-cd-1 " << dim_ok << ", join containment "
       << containment << ", surjective " << surjective;
  o.notes.push_back(line.str());
  o.notes.push_back("argument checks (all but surjectivity): " + std::to_string(argument_ok) + "/" +
                    std::to_string(checked) + (argument_ok == checked ? " PASS" : " FAIL"));
  if (argument_ok != checked) o.fail("argument check failed at " + first_argument_failure);
  if (surjective != checked) {
    o.notes.push_back("surjectivity onto the subdivided box complex fails first at " + first_non_surjective);
    o.fail("surjectivity fails on " + std::to_string(checked - surjective) + " instances");
  }
}

void oracles(Outcome& o) {
  o.detail << "defect B&B vs oracle: " << suite.defect_oracle_checked << " checked, " << suite.defect_oracle_mismatch
           << " mismatches; chromatic vs exhaustive: " << suite.chi_oracle_checked << " checked, "
           << suite.chi_oracle_mismatch << " mismatches ";
  if (suite.defect_oracle_checked == 0 || suite.chi_oracle_checked == 0) o.fail("nothing checked");
  if (suite.defect_oracle_mismatch || suite.chi_oracle_mismatch) o.fail("discrepancy");
}

void infrastructure(Outcome& o) {
  o.detail << infra.complexes << " complexes: boundary failures " << infra.boundary_failures << ", Euler failures "
           << infra.euler_failures << "; " << infra.round_trips << " round trips, " << infra.round_trip_failures
           << " mismatches ";
  if (infra.complexes == 0 || infra.round_trips == 0) o.fail("nothing checked");
  if (infra.boundary_failures || infra.euler_failures || infra.round_trip_failures) o.fail("infrastructure");
}

}  // namespace

int main() {
  report(1, "example 1 reproduction", kLimitExample, example1);
  report(2, "counterexample 1 (n=8, r=9, s=7)", kLimitCounterexample, counterexample1);
  report(3, "counterexample 2 (n=6, r=4, s=3)", kLimitCounterexample, counterexample2);
  report(4, "combinatorial bound suite", kLimitBoundSuite, bound_suite);
  report(5, "topological bound suite", 0, topo_suite);
  report(6, "deleted joins are wedges of spheres", kLimitWedge, wedge);
  report(7, "proof-step verifiers", 0, proof_maps);
  report(8, "oracle equivalence", 0, oracles);
  report(9, "infrastructure", 0, infrastructure);
  std::printf("%d of 9 criteria failed\n", failed);
  return failed ? 1 : 0;
}
