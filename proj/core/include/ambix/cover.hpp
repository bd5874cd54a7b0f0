#pragma once

#include <optional>

#include "ambix/cocycle.hpp"
#include "ambix/perm_group.hpp"

namespace ambix {

/// An explicit central extension f : cover -> base with kernel Z <= Z(cover).
struct CentralCover {
  GroupPtr cover;
  GroupPtr base;
  Homomorphism quotient;                     // the map f
  std::vector<Permutation> kernel_elements;  // all of Z, sorted
  unsigned long long kernel_order = 1;

  PermGroup derived;                                  // [cover, cover]
  std::vector<Permutation> kernel_in_derived;         // Z cap derived, sorted
  unsigned long long kernel_in_derived_order = 1;

  bool is_stem = false;                        // Z <= [cover,cover]
  std::optional<unsigned long long> known_h2;  // of the base group
  bool is_maximal = false;                     // |Z cap derived| == h2(base)
};

/// Validates centrality, well-definedness, surjectivity and that the
/// kernel is exactly the span of kernel_gens; computes the stem and
/// (when h2 is known) maximality flags.
CentralCover build_cover(GroupPtr cover, const std::vector<Permutation>& kernel_gens, GroupPtr base,
                         std::vector<Permutation> images,
                         std::optional<unsigned long long> known_h2 = std::nullopt);

CentralCover trivial_cover(GroupPtr G, std::optional<unsigned long long> known_h2 = std::nullopt);

/// [lift(h), lift(g)] for commuting g, h in the base; lift-independent.
Permutation lifted_commutator(const CentralCover& c, const Permutation& g, const Permutation& h);

/// Subgroup of the kernel generated by all lifted commutators
/// [lift(h), lift(g)] with g running over one representative per class of
/// O and h over its centralizer. Conjugation invariance makes one
/// representative per class sufficient (cross-checked in the test suite).
PermGroup k_subgroup(const CentralCover& c, const std::vector<ConjugacyClass>& o_classes,
                     bool allow_non_maximal = false);

/// (a, k) with k = |k_subgroup|, a = |Z cap derived| / k. Requires a
/// maximal cover: anything else would silently compute a wrong index.
std::pair<unsigned long long, unsigned long long> ambiguity_from_cover(
    const CentralCover& c, const std::vector<ConjugacyClass>& o_classes);

/// Number of cover classes over the base class C, counted directly from
/// the conjugation orbit of a lift; for maximal covers the identity
/// s_f(C) * k_C = |Z cap derived| is asserted as a cross-check.
unsigned long long splitting_number(const CentralCover& c, const ConjugacyClass& C);

/// Fibre product of two covers of the same base over paired generator
/// lifts, with both kernels embedded; stem when both inputs are stem
/// covers with coprime kernels.
CentralCover pullback(const CentralCover& c1, const CentralCover& c2,
                      std::optional<unsigned long long> known_h2 = std::nullopt);

/// The extension Z/m x_w base as a permutation group (right regular
/// action), returned as a validated central cover of the base.
CentralCover extension_cover(const CocycleTable& w, GroupPtr base, const PermGroupTable& ids,
                             std::optional<unsigned long long> known_h2 = std::nullopt);

/// Builds a maximal stem cover from the cocycle engine when every
/// p-primary part of H2 is cyclic (one extension per prime, composed by
/// pullback); throws ValidationError otherwise.
CentralCover stem_cover_from_cocycle(GroupPtr G, int cocycle_cap = 130,
                                     unsigned long long element_cap = 1000000);

}  // namespace ambix
