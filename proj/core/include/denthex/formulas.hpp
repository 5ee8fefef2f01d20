#pragma once

#include <vector>

#include "denthex/exact.hpp"
#include "denthex/lattice.hpp"

namespace denthex {

/// Cohn-Larsen-Propp: M(T_{m,n}(x_1..x_n)) = prod_{i<j} (x_j - x_i)/(j - i).
Count clp_trapezoid(long m, long n, const std::vector<long>& xs);

/// Hexagon a, b+k+1, c, a+k+1, b, c+k+1 minus a unit up-dent l units above the
/// western corner and a side-k up-notch on the northeastern side; variant A
/// places the notch one unit above the eastern corner, variant B one unit
/// below the northeastern corner.
struct NotchParams {
  long a = 0, b = 0, c = 0;
  long k = 0, l = 0;
  bool variant_b = false;
};

Count gk_notch(const NotchParams& p);

/// Hexagon H_{a,b,c} with dents on adjacent sides of lengths a and c at
/// positions j and k from their common vertex (1 <= j <= a, 1 <= k <= c).
Count adjacent_dents(long a, long b, long c, long j, long k);

/// Hexagon H_{a,b,c} with dents at positions i and j on the two sides of
/// length a; i counted from the b-corner of its side, j from the c-corner
/// (1 <= i, j <= a). b and c may be zero (not both, unless the region is empty).
Count opposite_dents(long a, long b, long c, long i, long j);

/// Kuo-derived recurrence for adjacent dents:
/// ADJ(a,b,c)ADJ(a-1,b,c-1) = ADJ(a,b,c-1)ADJ(a-1,b,c) + ADJ(a-1,b+1,c-1)ADJ(a,b-1,c).
/// Requires a,c >= 2, b >= 1, j < a, k < c.
bool check_rec_adjacent(long a, long b, long c, long j, long k);

/// Kuo-derived recurrence for opposite dents:
/// OPP(a,b,c)_{i,j} OPP(a-2,b,c)_{i-1,j-1} =
///   OPP(a-1,b,c)_{i-1,j-1} OPP(a-1,b,c)_{i,j}
///   - OPP(a-1,b-1,c+1)_{i,j-1} OPP(a-1,b+1,c-1)_{i-1,j}.
/// Requires a >= 3, 1 < i,j < a, b,c >= 1.
bool check_rec_opposite(long a, long b, long c, long i, long j);

/// Closed-form count for a classified region; 1 for Empty, 0 for Untileable,
/// throws UnclassifiableResidual on Unknown.
Count evaluate_class(const RegionClass& cls);

}  // namespace denthex
