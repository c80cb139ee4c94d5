#pragma once

#include <cstdint>
#include <string>

#include "kneserlab/limits.hpp"
#include "kneserlab/setcore.hpp"

namespace kneserlab {

/// cd^r_s(S) together with an s-disjoint, template-free r-tuple attaining the
/// maximum cover. value == n*s - max_cover.
struct DefectResult {
  int value = 0;
  int max_cover = 0;
  SubsetTuple witness;
  std::uint64_t nodes = 0;  // branch nodes visited
};

/// True iff no member of `system` is a subset of `part`.
bool is_template_free(Mask part, const SetSystem& system);

/// Exact s-disjoint r-colourability defect by branch and bound over
/// element-to-part incidences. Throws ResourceLimit when the node budget is
/// exhausted; never returns a heuristic value.
DefectResult colourability_defect(const SetSystem& system, int r, int s,
                                  std::uint64_t node_budget = kDefaultNodeBudget);

inline constexpr int kOracleMaxIncidences = 20;

/// Exhaustive enumeration of all 2^(n*r) incidence patterns. Test oracle only.
int defect_oracle(const SetSystem& system, int r, int s);

/// `part <j>: <elements>` lines, one per part.
std::string format_witness(const SubsetTuple& witness);

/// Single-token form "2,4|2,5|3,4"; an empty part is an empty field.
std::string compact_witness(const SubsetTuple& witness);

}  // namespace kneserlab
