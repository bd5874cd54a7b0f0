#pragma once

#include <optional>

#include "ambix/perm_group.hpp"

namespace ambix {

/// Tuples (g_1, ..., g_n) with product 1, entries in the equipment
/// classes with prescribed multiplicities, generating the group.
struct TupleSet {
  std::vector<int> tau;                    // multiplicity per equipment class
  std::vector<std::vector<int>> tuples;    // element ids into `elements`
  std::vector<Permutation> elements;       // id -> permutation
};

struct OrbitReport {
  std::vector<int> tau;
  long long tuple_count = 0;
  long long orbit_count = 0;
  bool stabilized = false;
  bool budget_exceeded = false;
};

struct HurwitzBudget {
  long long raw_tuples = 10000000;   // enumeration nodes
  long long bfs_states = 10000000;   // orbit search states
};

/// Exact enumeration; throws LimitExceeded past the raw-tuple budget.
TupleSet enumerate_tuples(const PermGroup& G, const std::vector<ConjugacyClass>& equipment,
                          const std::vector<int>& tau, const HurwitzBudget& budget = {});

/// Orbit count under the moves (g_i, g_i+1) -> (g_i g_i+1 g_i^-1, g_i)
/// and inverses. With quotient_by_conjugation, orbits related by
/// simultaneous conjugation are merged (marked coverings keep it off).
OrbitReport braid_orbits(const TupleSet& tuples, bool quotient_by_conjugation = false,
                         const PermGroup* G = nullptr);

/// Runs braid_orbits over growing monodromy types: tau scaled by each
/// factor in `schedule`; stabilized when the last `window` counts agree.
/// A budget overflow mid-schedule yields the partial result, flagged.
std::vector<OrbitReport> stabilization_scan(const PermGroup& G,
                                            const std::vector<ConjugacyClass>& equipment,
                                            const std::vector<int>& tau_base,
                                            const std::vector<int>& schedule, int window = 2,
                                            const HurwitzBudget& budget = {},
                                            bool quotient_by_conjugation = false);

}  // namespace ambix
