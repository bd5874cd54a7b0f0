#pragma once

#include <optional>
#include <string>

#include "ambix/group_table.hpp"
#include "ambix/perm_group.hpp"

namespace ambix {

/// Textual group constructors:
///   sym:d  alt:d  cyclic:n  dihedral:n  quaternion:8  elem_abelian:p^k
///   heisenberg:p  saltman:p  perm:[(..),(..)]  perm:d:[..]  fp:<...>
GroupPtr make_group(const std::string& spec);

/// Reference Schur multiplier orders for the benchmark families, used to
/// certify cover maximality beyond the cocycle-engine cap.
std::optional<unsigned long long> reference_h2(const std::string& spec);

/// Cycle type of a permutation class: lengths >= 2 plus the ambient degree.
struct CycleType {
  std::vector<int> lengths;  // ascending, each >= 2
  int degree = 0;

  static CycleType of(const Permutation& p);
  int fixed_points() const;
  bool is_even() const;
  /// includes fixed points as cycles of length 1
  bool all_lengths_distinct() const;
  bool has_even_length() const;
  std::string str() const;  // "2+2", "5", "" for identity
};

enum class CoverKind { Sym, Alt };

/// Whether the class of this cycle type splits in a maximal cover of
/// sym:d / alt:d (two classes of the cover over it instead of one).
bool split_predicate(CoverKind kind, const CycleType& t);

/// Classification of alt:6 / alt:7 classes for the exceptional multiplier:
/// 1 = cyclic-centralizer types (5),(2,4),(7); 2 = order-3 types (3),(3,3);
/// 3 = involution types (2,2),(2,2,3).
int d67_class_category(const CycleType& t);

/// Theorem-level expected ambiguity index for an equipment of sym:d or
/// alt:d, given the cycle types of the equipment classes. alt:6/alt:7 use
/// the four-case exceptional table (values 6, 2, 3, 1).
unsigned long long expected_ambiguity(CoverKind kind, int degree, const std::vector<CycleType>& types);

struct SaltmanPipelineResult {
  long long inflation_class_count = 0;
  long long inflation_kernel_order = 0;
  long long b0_lower_bound = 0;
};

/// Enumerates the p^6 inflated bicharacter classes of saltman:p, counts
/// the ones trivial on the covering group, and certifies the surviving
/// subgroup inside B0 by a scan over every commuting pair. Only p = 2
/// fits the desk-scale budget; p = 3 raises LimitExceeded.
SaltmanPipelineResult saltman_b0_pipeline(int p);

/// The order-p^9 group with center (Z/p)^5 generated by the pairwise
/// commutators of four generators subject to [x1,x2][x3,x4] = 1.
/// Elements are pairs (a, z), a in (Z/p)^4, z in (Z/p)^5 with z indexed
/// by (1,2),(1,3),(1,4),(2,3),(2,4); multiplication adds a bilinear
/// correction mu(a,b): coordinate (i,j) gains a_i b_j and coordinate
/// (1,2) additionally loses a_3 b_4.
class SaltmanGroup {
 public:
  explicit SaltmanGroup(int p);

  int p() const { return p_; }
  long long order() const;  // p^9

  struct Elem {
    std::array<int, 4> a{};
    std::array<int, 5> z{};
    bool operator==(const Elem&) const = default;
  };
  Elem identity() const { return {}; }
  Elem mul(const Elem& x, const Elem& y) const;
  Elem inv(const Elem& x) const;
  Elem generator(int i) const;  // x_i, i in 0..3

  long long index_of(const Elem& e) const;  // lexicographic id, identity = 0
  Elem elem_at(long long idx) const;

  /// z-part of the commutator [x, y]; depends only on the a-parts.
  std::array<int, 5> commutator_form(const std::array<int, 4>& a, const std::array<int, 4>& b) const;

  /// Flattened table-group view (ids as in index_of); h1 data is the
  /// projection onto (Z/p)^4.
  GroupTablePtr table() const;

  /// Faithful permutation representation as the disjoint union of the
  /// five coset actions that separate the center coordinates
  /// (degree 5 p^3), wrapped as a PermGroup on the four generators.
  GroupPtr perm_group() const;

 private:
  int p_;
};

}  // namespace ambix
