#pragma once

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ambix/perm.hpp"

namespace ambix {

class PermGroup;
using GroupPtr = std::shared_ptr<const PermGroup>;

struct ConjugacyClass {
  Permutation representative;  // lexicographically minimal member
  unsigned long long size = 0;
  std::vector<Permutation> members;  // sorted; empty only if not materialized
};

struct StructureReport {
  unsigned long long order = 0;
  std::vector<Permutation> center;
  std::vector<Permutation> derived;
  unsigned long long center_order = 0;
  unsigned long long derived_order = 0;
  std::vector<long long> abelian_invariants;  // of G/[G,G], each > 1, d1 | d2 | ...
};

/// Finite permutation group with a base and strong generating set.
/// Immutable after construction; all queries are const.
class PermGroup {
 public:
  PermGroup();  // trivial group on 0 points

  /// Builds a BSGS with the deterministic Schreier-Sims procedure.
  /// `forced_base` points are installed as the first base points, in
  /// order and unconditionally (possibly with trivial orbits); used to
  /// keep one block of points in front for homomorphism graphs.
  static PermGroup from_generators(std::vector<Permutation> gens, int degree,
                                   std::vector<int> forced_base = {});

  int degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return gens_; }
  unsigned long long order() const { return order_; }
  bool is_trivial() const { return order_ == 1; }
  bool contains(const Permutation& p) const;
  bool is_abelian() const;

  const std::vector<int>& base() const { return base_; }
  /// Strong generators fixing the first `prefix` base points.
  std::vector<Permutation> stabilizer_generators(int prefix) const;

  /// Finds g in the group with g[base(i)] = images[i] for the first
  /// `prefix` base points; nullopt when no such element exists.
  std::optional<Permutation> element_with_base_images(const std::vector<int>& images, int prefix) const;

  /// All elements, sorted lexicographically by image table.
  /// Throws LimitExceeded when order() > cap.
  std::vector<Permutation> elements(unsigned long long cap = 1000000) const;

  /// Classes partition the group; deterministic order (size, then rep).
  std::vector<ConjugacyClass> conjugacy_classes(unsigned long long cap = 1000000) const;

  PermGroup centralizer(const Permutation& g, unsigned long long cap = 1000000) const;
  std::vector<Permutation> center_elements(unsigned long long cap = 1000000) const;
  PermGroup derived_subgroup() const;
  PermGroup normal_closure(const std::vector<Permutation>& seed) const;
  /// Subgroup generated by the given elements (must lie in the group).
  PermGroup subgroup(const std::vector<Permutation>& gens) const;

  StructureReport structure_report(unsigned long long cap = 1000000) const;
  std::vector<long long> abelian_invariants() const;  // of G/[G,G]

  /// Invariant factors (> 1) of G/[G,G] together with the coordinates of
  /// each given element in them; feeds character construction.
  std::pair<std::vector<long long>, std::vector<std::vector<long long>>> abelianization_coordinates(
      const std::vector<Permutation>& xs) const;

  Permutation identity() const { return Permutation(degree_); }

 private:
  struct Level {
    int base = -1;
    std::vector<int> orbit;                       // BFS order, orbit[0] == base
    std::vector<Permutation> transversal;         // by point; empty degree() marker when absent
    std::vector<char> in_orbit;
  };

  void rebuild_orbit(int level);
  std::pair<int, Permutation> strip(Permutation g, int from) const;
  void schreier_sims(const std::vector<int>& forced_base);
  std::vector<int> level_gen_indices(int level) const;

  int degree_ = 0;
  std::vector<Permutation> gens_;        // the originally supplied generators
  std::vector<Permutation> sgens_;       // strong generator pool
  std::vector<int> base_;
  std::vector<Level> levels_;
  unsigned long long order_ = 1;
};

/// A verified homomorphism given on generators; evaluation and lifting
/// run by walking the BSGS of the graph subgroup of domain x codomain.
class Homomorphism {
 public:
  Homomorphism() = default;  // empty; assign from create() before use

  /// Throws ValidationError when the assignment does not extend to a
  /// homomorphism (graph subgroup order != |domain|).
  static Homomorphism create(GroupPtr domain, GroupPtr codomain, std::vector<Permutation> images);

  const GroupPtr& domain() const { return domain_; }
  const GroupPtr& codomain() const { return codomain_; }
  const std::vector<Permutation>& generator_images() const { return images_; }

  Permutation eval(const Permutation& x) const;
  /// Some preimage of y; y must lie in the image subgroup.
  Permutation lift(const Permutation& y) const;

  bool surjective() const { return image_order_ == codomain_->order(); }
  unsigned long long image_order() const { return image_order_; }
  unsigned long long kernel_order() const { return domain_->order() / image_order_; }
  /// Generators of the kernel as a subgroup of the domain.
  std::vector<Permutation> kernel_generators() const;

 private:
  GroupPtr domain_, codomain_;
  std::vector<Permutation> images_;
  PermGroup graph_dom_first_;  // base on the domain block, for eval
  PermGroup graph_cod_first_;  // base on the codomain block, for lift/kernel
  int dom_base_prefix_ = 0;    // levels of graph_dom_first_ with base in the domain block
  int cod_base_prefix_ = 0;
  unsigned long long image_order_ = 0;
};

Homomorphism hom_by_images(GroupPtr domain, GroupPtr codomain, std::vector<Permutation> images);

/// Faithful action of G/N on right cosets of N plus the quotient map.
/// N must be normal; quotient_by_central additionally insists N <= Z(G).
std::pair<GroupPtr, Homomorphism> quotient_by_normal(GroupPtr G, const std::vector<Permutation>& N_gens);
std::pair<GroupPtr, Homomorphism> quotient_by_central(GroupPtr G, const std::vector<Permutation>& Z_gens);

/// The conjugation graph of an equipment: one vertex per element of O,
/// an edge (tail, head, label) for every relation label^-1 tail label = head.
struct CGraph {
  std::vector<Permutation> vertices;           // sorted
  std::vector<std::array<int, 3>> edges;       // indices into vertices: tail, head, label
  std::vector<int> component;                  // per vertex
  int component_count = 0;
};

CGraph c_graph(const PermGroup& G, const std::vector<ConjugacyClass>& O);

}  // namespace ambix
