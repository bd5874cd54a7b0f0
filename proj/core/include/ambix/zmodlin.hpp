#pragma once

#include <cstdint>
#include <optional>
#include <tuple>
#include <vector>

#include "ambix/error.hpp"

namespace ambix {

/// Sparse vector over Z/m (or Z): sorted by index, no explicit zeros.
using SparseVec = std::vector<std::pair<int, std::uint32_t>>;

SparseVec sparse_from_dense(const std::vector<std::uint32_t>& dense, std::uint32_t m);
std::vector<std::uint32_t> sparse_to_dense(const SparseVec& v, int dim, std::uint32_t m);
/// dst += c * src over Z/m, keeping dst sorted and zero-free.
void sparse_axpy(SparseVec& dst, const SparseVec& src, std::uint32_t c, std::uint32_t m);

/// Integer matrix in coordinate form. Duplicate positions are rejected.
struct SparseIntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::tuple<int, int, long long>> entries;

  SparseIntMatrix() = default;
  SparseIntMatrix(int r, int c) : rows(r), cols(c) {}
  void set(int r, int c, long long v);
  static SparseIntMatrix from_dense(const std::vector<std::vector<long long>>& d);
};

/// U * M * V = diag(divisors), U and V unimodular. Divisors satisfy
/// d1 | d2 | ... ; zero diagonal entries are dropped from `divisors`.
struct SmithNF {
  std::vector<long long> divisors;
  std::vector<std::vector<long long>> U;  // rows x rows
  std::vector<std::vector<long long>> V;  // cols x cols
};

SmithNF smith_normal_form(const SparseIntMatrix& M);

/// Modulus p^k with p prime. Factoring helper rejects anything else.
struct PrimePower {
  std::uint32_t p = 0;
  int k = 0;
  std::uint32_t m = 0;
  static PrimePower of(std::uint32_t m);
};

std::uint32_t mod_inverse_unit(std::uint32_t a, std::uint32_t m);

/// Howell-form echelon over Z/p^k with optional combination tracking.
///
/// Rows are kept with leading coefficient exactly p^v (unit-normalized).
/// When a row with positive valuation is inserted, its torsion shadow
/// p^(k-v) * row is inserted as well, which is what upgrades plain
/// echelon form to Howell form: every element of the span whose leading
/// index is >= c lies in the span of the rows with pivot >= c. That
/// property makes greedy reduction a complete membership test and makes
/// the vanished combinations a generating set of the kernel.
class ModHowell {
 public:
  explicit ModHowell(PrimePower mod, bool track_aux = false, bool collect_kernel = false);

  /// Adds v to the span. `aux` is carried along passively (same row ops).
  /// Returns true when the span grew.
  bool add(SparseVec v, SparseVec aux = {});

  bool in_span(const SparseVec& v) const;

  /// If v is in the span, returns the tracked aux-combination that
  /// produces it (requires track_aux and aux seeds supplied by caller).
  std::optional<SparseVec> express(const SparseVec& v) const;

  /// Expresses v as sum coeff_i * row_i over the Howell rows themselves.
  /// Returns (row index, coefficient) pairs, or nullopt if not in span.
  std::optional<std::vector<std::pair<int, std::uint32_t>>> express_in_rows(const SparseVec& v) const;

  /// Aux parts of combinations that reduced to zero; spans the left
  /// kernel of the fed rows when aux was seeded with unit vectors.
  const std::vector<SparseVec>& kernel() const { return kernel_; }

  int row_count() const { return static_cast<int>(rows_.size()); }
  const SparseVec& row_main(int i) const { return rows_[i].main; }
  const SparseVec& row_aux(int i) const { return rows_[i].aux; }
  /// Filtration weight of row i: every span element has a unique
  /// representation sum c_i * row_i with c_i in [0, p^(k - val_i)), so the
  /// span order is the product of these. Not the additive order of the
  /// row itself, which can be larger when trailing entries carry smaller
  /// valuation than the pivot.
  std::uint32_t row_order(int i) const;
  /// Order of the spanned module; throws LimitExceeded past 2^63.
  unsigned long long span_order() const;

  PrimePower modulus() const { return mod_; }

 private:
  struct Row {
    SparseVec main;
    SparseVec aux;
    int lead;
    int val;  // leading coefficient is exactly p^val
  };

  int valuation(std::uint32_t a) const;
  void axpy(SparseVec& dst, const SparseVec& src, std::uint32_t c) const;

  PrimePower mod_;
  bool track_aux_;
  bool collect_kernel_;
  std::vector<Row> rows_;              // sorted by lead column
  std::vector<SparseVec> kernel_;
};

/// Elementary divisors of span(num)/span(den) over Z/m plus a coordinate
/// map onto the cyclic factors. Input vectors live in (Z/m)^dim. Since
/// the relation lattice always contains p^k Z^r, everything is computed
/// over the local ring Z/p^k (no integer blow-up).
struct SubquotientStructure {
  std::vector<long long> divisors;  // each > 1, d1 | d2 | ...
  unsigned long long order = 1;

  /// Coordinates of v (must lie in span(num)) in the divisor factors.
  std::vector<long long> coords(const SparseVec& v) const;
  /// Preimage of the i-th divisor generator in ambient coordinates.
  SparseVec generator(int i) const;

  // internals for the coordinate map
  PrimePower mod;
  std::vector<SparseVec> howell_rows;
  std::vector<std::vector<std::uint32_t>> vmat;   // column transform mod m
  std::vector<std::vector<std::uint32_t>> vinv;   // its inverse mod m
  std::vector<int> diag_val;                      // p-valuations on the diagonal
};

SubquotientStructure subquotient_structure(const std::vector<SparseVec>& num,
                                           const std::vector<SparseVec>& den,
                                           std::uint32_t m);

/// Coefficients c with sum c_i * span_i == target (mod m), if any.
std::optional<std::vector<std::uint32_t>> membership_solve(const SparseVec& target,
                                                           const std::vector<SparseVec>& span,
                                                           std::uint32_t m);

/// Right kernel { x : A x = 0 } of a sparse matrix over Z/p^k given by
/// rows; returns a generating set of column-index vectors.
std::vector<SparseVec> right_kernel(const std::vector<SparseVec>& rows, int ncols, std::uint32_t m);

}  // namespace ambix
