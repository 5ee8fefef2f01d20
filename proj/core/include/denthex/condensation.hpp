#pragma once

#include <functional>
#include <vector>

#include "denthex/exact.hpp"
#include "denthex/lattice.hpp"

namespace denthex {

/// How the skew-matrix entries of the condensation theorems are produced:
/// ClosedForm dispatches each doubly-dented region to a product /
/// hypergeometric formula, Oracle counts it by brute force. Both modes must
/// agree entrywise.
enum class EntryMode { ClosedForm, Oracle };

/// Generic Pfaffian counting identity: for 2k cells on the outer face listed
/// in cyclic order, M(G \ cells) = Pf[(M(G \ {c_i, c_j}))_{i<j}] / M(G)^{k-1}.
/// `counter` supplies every matching count. Throws ZeroDenominator when
/// M(G) = 0 and NonIntegerResult if the quotient is not a non-negative integer.
Count pfaffian_count_generic(const Region& r, const std::vector<UnitTriangle>& removable,
                             const std::function<Count(const Region&)>& counter);

/// Number of tilings of H^k \ dents via the barred-region Pfaffian with
/// explicit entries. Requires a beta-free beta-side (the spec is rotated so
/// that side is the southwestern one); throws BetaOnForbiddenSide otherwise.
Count theorem1_count(const HexDentSpec& spec, EntryMode mode = EntryMode::ClosedForm);

/// One explicit entry M(barH \ {d1, d2}) by the case analysis: pairs of equal
/// type and (beta, gamma) pairs are 0; (alpha, beta) and (alpha, gamma) pairs
/// are forced-reduced, classified, and dispatched to a closed formula.
Count theorem1_entry(const HexDentSpec& barred_spec, const DentLabel& d1, const DentLabel& d2);

/// Nested Pfaffian for arbitrary dent placement (beta dents allowed on all
/// three sides); k >= 1. `carve` optionally selects which k alphas (indices
/// into the cyclic alpha order) are removed to form the inner region D.
Count theorem2_count(const HexDentSpec& spec, EntryMode mode = EntryMode::ClosedForm,
                     const std::vector<int>& carve = {});

/// k = 0 Pfaffian with adjacent/opposite-dent entries.
Count theorem3_count(const HexDentSpec& spec, EntryMode mode = EntryMode::ClosedForm);

/// Kuo's condensation, Theorem 2.1: w,y up-pointing and x,z down-pointing in
/// cyclic order on a face; M(G)M(G-wxyz) = M(G-wx)M(G-yz) + M(G-wz)M(G-xy).
bool check_kuo_four_one(const Region& r, const UnitTriangle& w, const UnitTriangle& x,
                        const UnitTriangle& y, const UnitTriangle& z);

/// Kuo's condensation, Theorem 2.3: w,x up-pointing and y,z down-pointing in
/// cyclic order; M(G)M(G-wxyz) = M(G-wz)M(G-xy) - M(G-wy)M(G-xz).
bool check_kuo_two_two(const Region& r, const UnitTriangle& w, const UnitTriangle& x,
                       const UnitTriangle& y, const UnitTriangle& z);

}  // namespace denthex
