#pragma once

#include <vector>

#include "denthex/exact.hpp"

namespace denthex {

/// Skew-symmetric matrix of exact rationals. Only the strict upper triangle is
/// stored; a_ji = -a_ij and the diagonal is zero by construction.
class SkewMatrix {
 public:
  /// Zero matrix of even dimension n.
  explicit SkewMatrix(int n);

  int dim() const { return n_; }

  /// Entry a_ij for any i, j (signs handled here).
  Rat at(int i, int j) const;
  /// Sets a_ij (i < j) and implicitly a_ji = -v.
  void set(int i, int j, const Rat& v);

  /// Swaps rows-and-columns i and j (conjugation by a transposition).
  void swap_pair(int i, int j);

 private:
  int n_;
  std::vector<Rat> upper_;  // row-major strict upper triangle
  int idx(int i, int j) const;
};

/// Exact Pfaffian. Pf of the 0x0 matrix is 1; sign follows the standard
/// expansion over perfect pairings. Recursive expansion along the smallest
/// live index with memoization over index subsets (dimensions here stay small).
Rat pfaffian(const SkewMatrix& a);

}  // namespace denthex
