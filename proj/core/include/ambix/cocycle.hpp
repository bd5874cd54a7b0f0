#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <vector>

#include "ambix/group_table.hpp"
#include "ambix/zmodlin.hpp"

namespace ambix {

/// Normalized 2-cocycle value table over Z/m: w(g,h) for g,h != 1,
/// w(1,.) = w(.,1) = 0 implicitly.
struct CocycleTable {
  GroupTablePtr group;
  std::uint32_t modulus = 0;
  std::vector<std::uint32_t> vals;  // (n-1) x (n-1)

  static CocycleTable zero(GroupTablePtr g, std::uint32_t m);
  std::uint32_t at(int g, int h) const {
    if (g == 0 || h == 0) return 0;
    int n1 = group->n - 1;
    return vals[static_cast<size_t>(g - 1) * n1 + (h - 1)];
  }
  void set(int g, int h, std::uint32_t v) {
    int n1 = group->n - 1;
    vals[static_cast<size_t>(g - 1) * n1 + (h - 1)] = v % modulus;
  }
  /// Checks w(g,h) + w(gh,k) == w(h,k) + w(g,hk) on all triples when
  /// n <= exhaustive_limit, else on `samples` deterministic samples.
  bool satisfies_cocycle_identity(int exhaustive_limit = 64, int samples = 1000000) const;
};

/// The p-primary part of H^2(G, Q/Z): cocycles over Z/m modulo
/// coboundaries and the carry (Bockstein) classes of Hom(G, Z/m).
struct CohomologyBasis {
  GroupTablePtr group;
  std::uint32_t p = 0;
  std::uint32_t modulus = 0;              // p^k actually used
  std::vector<long long> divisors;        // elementary divisors, d1 | d2 | ...
  std::vector<CocycleTable> basis;        // one class per divisor
  unsigned long long order() const {
    unsigned long long o = 1;
    for (auto d : divisors) o *= static_cast<unsigned long long>(d);
    return o;
  }
};

/// Engine entry point. By default m = p^(v_p(|G|)). Passing
/// modulus_override = p^j (j >= 1) computes Z^2(G,Z/p^j)/(B^2 + carries),
/// which equals the p-primary part of H^2(G,Q/Z) whenever p^j bounds the
/// exponents of both H1(G)_p and H2(G)_p; callers use small overrides for
/// extension construction where those bounds are known.
CohomologyBasis h2_primary(GroupTablePtr G, std::uint32_t p, int size_cap = 130,
                           std::uint32_t modulus_override = 0);

/// Elementary divisors of the full H^2(G,Q/Z) = H2(G,Z), combined over
/// all primes dividing |G|.
std::vector<long long> h2_divisors(GroupTablePtr G, int size_cap = 130);
unsigned long long h2_order(GroupTablePtr G, int size_cap = 130);

/// Antisymmetrization w(g,h) - w(h,g) on a commuting pair; invariant
/// under coboundary and carry perturbations of w.
std::uint32_t pairing(const CocycleTable& w, int g, int h);

enum class PairScan { Deduplicated, FullEnumeration };

/// Order of the subgroup of classes (across all given primes) whose
/// pairing vanishes on every commuting pair (g in O, h centralizing g).
/// o_classes lists the element ids of each class of O (sorted).
unsigned long long b_subgroup_order(const std::vector<CohomologyBasis>& bases,
                                    const std::vector<std::vector<int>>& o_classes,
                                    PairScan scan = PairScan::Deduplicated);

/// Membership of w in span(coboundaries + carry classes) over Z/m, i.e.
/// triviality of the class in H^2(G,Q/Z). Requires only |G| + rank
/// Hom(G,Z/m) unknowns and runs far beyond the full-H^2 cap.
bool is_trivial_class(const CocycleTable& w);

/// Pullback of a cocycle on Q along a surjection G -> Q given as an
/// element-id map (proj[g] = id of the image in Q).
CocycleTable inflate(const CocycleTable& w_on_quotient, GroupTablePtr G, const std::vector<int>& proj);

/// w plus a pseudorandom coboundary and a pseudorandom combination of
/// carry classes; same cohomology class, different table.
CocycleTable perturb_class(const CocycleTable& w, std::uint64_t seed);

/// The carry (Bockstein) cocycle of the j-th Hom(G,Z/m) generator.
CocycleTable carry_class(GroupTablePtr G, std::uint32_t m, int char_index);
int character_count(const GroupTable& G, std::uint32_t m);

}  // namespace ambix
