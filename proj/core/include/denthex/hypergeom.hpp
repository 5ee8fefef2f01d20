#pragma once

#include <optional>
#include <vector>

#include "denthex/exact.hpp"

namespace denthex {

/// Terminating hypergeometric series rFs(upper; lower; z).
struct HypSeries {
  std::vector<Rat> upper;
  std::vector<Rat> lower;
  Rat z = 1;
};

/// Smallest n >= 0 with -n among the upper parameters, or nullopt.
std::optional<long> termination_index(const HypSeries& h);

/// Exact sum over k = 0..N (leading term 1). Throws NonTerminating if no upper
/// parameter is a non-positive integer, DivisionByZeroInLowerParameter if a
/// lower parameter's Pochhammer vanishes at or before the last term.
Rat hyp_eval(const HypSeries& h);

/// True iff 2F1(x, -n; y; 1) = (y-x)_n / (y)_n exactly.
bool check_chu_vandermonde(const Rat& x, const Rat& y, long n);

/// True iff 3F2(w, x, -n; y, 1+w+x-y-n; 1) = (y-w)_n (y-x)_n / ((y)_n (y-w-x)_n).
/// The second lower parameter is constructed from the Saalschuetzian balance.
bool check_pfaff_saalschutz(const Rat& w, const Rat& x, const Rat& y, long n);

enum class ContigRel { C30, C40, C42, C54, C55, C57 };

/// A contiguous-relation instance: the left-hand series plus the indices of the
/// designated parameters inside it. C30 designates two upper parameters (x, y);
/// C40/C42 one upper (x) and one lower (y); C54/C55 two upper (w, x) and one
/// lower (y); C57 one upper (w) and two lower (x, y).
struct ContigInstance {
  HypSeries series;
  int u0 = -1;  // first designated upper index (w for C54/C55/C57, x otherwise)
  int u1 = -1;  // second designated upper index (x for C54/C55, y for C30)
  int l0 = -1;  // first designated lower index (y, or x for C57)
  int l1 = -1;  // second designated lower index (y for C57)
};

/// True iff both sides of the named relation agree exactly at the instance.
/// Throws InstanceNotEvaluable when a series in the relation does not satisfy
/// hyp_eval's preconditions or a coefficient denominator vanishes.
bool check_contiguous(ContigRel rel, const ContigInstance& inst);

}  // namespace denthex
