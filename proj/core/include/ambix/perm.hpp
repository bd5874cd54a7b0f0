#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ambix/error.hpp"

namespace ambix {

/// A permutation of {0, ..., degree-1} stored by its image table.
///
/// Products use the right-action convention: (a * b) means "apply a,
/// then b", i.e. (a*b)[x] == b[a[x]]. This matches coset tables, where
/// cosets are acted on from the right.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(int degree);  // identity
  explicit Permutation(std::vector<int> images);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator[](int p) const { return img_[p]; }
  const std::vector<int>& images() const { return img_; }

  bool is_identity() const;
  Permutation inverse() const;
  Permutation operator*(const Permutation& rhs) const;
  /// this^-1 * g * this
  Permutation conjugated_by(const Permutation& g) const;

  long long order() const;
  /// Lengths >= 2 of the disjoint cycles, ascending.
  std::vector<int> cycle_lengths() const;
  bool is_even() const;

  /// Smallest moved point, or -1 for the identity.
  int first_moved() const;

  auto operator<=>(const Permutation&) const = default;

  /// Canonical cycle notation, 1-based: "(1,2)(3,4,5)"; identity is "()".
  std::string cycles() const;

 private:
  std::vector<int> img_;
};

/// Parses 1-based cycle notation. With an explicit degree, points beyond
/// the cycles are fixed; otherwise the degree is the largest point named.
Permutation parse_cycles(const std::string& text, int degree);
Permutation parse_cycles(const std::string& text);

struct PermHash {
  std::size_t operator()(const Permutation& p) const {
    std::uint64_t h = 1469598103934665603ULL;
    for (int x : p.images()) {
      h ^= static_cast<std::uint64_t>(x);
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace ambix
