#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "ambix/perm_group.hpp"

namespace ambix {

/// A finite group flattened to element ids 0..n-1 (id 0 = identity) with
/// fast multiplication, generator ids, and the data the cohomology engine
/// needs about H1 = G/[G,G]: per-element coordinates in the invariant
/// factor decomposition.
///
/// Element ids of permutation groups are positions in the sorted element
/// list, which keeps every downstream computation deterministic.
struct GroupTable;
using GroupTablePtr = std::shared_ptr<const GroupTable>;

struct GroupTable {
  int n = 0;
  std::vector<int> gens;                      // generator ids, identity dropped
  std::vector<int> inv;                       // inverse ids
  std::vector<std::vector<long long>> h1_coords;  // per element, one coord per divisor
  std::vector<long long> h1_divisors;             // invariant factors of G/[G,G]

  std::function<int(int, int)> mul;

  int multiply(int a, int b) const { return mul(a, b); }
  int inverse(int a) const { return inv[a]; }

  /// Order of element a (by repeated multiplication).
  int element_order(int a) const;
};

/// Flattens a permutation group; requires enumerability under `cap`.
/// The returned table owns a dense multiplication table when n is small
/// enough, otherwise multiplication goes through permutation arithmetic.
struct PermGroupTable {
  GroupTable table;
  std::vector<Permutation> elements;  // sorted; index = element id

  int id_of(const Permutation& p) const;
  const Permutation& perm_of(int id) const { return elements[id]; }

  static PermGroupTable build(const PermGroup& G, unsigned long long cap = 1000000);

 private:
  std::unordered_map<Permutation, int, PermHash> index_;
  std::shared_ptr<std::vector<std::uint16_t>> dense_;  // n*n when materialized
};

}  // namespace ambix
