#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace denthex {

/// Exact non-negative tiling count.
using Count = mpz_class;
/// Exact rational, always canonical (reduced, positive denominator).
using Rat = mpq_class;

enum class Errc {
  InvalidDent,
  InvalidParams,
  InvalidPositions,
  InvalidCellPattern,
  OddDimension,
  NonTerminating,
  DivisionByZeroInLowerParameter,
  InstanceNotEvaluable,
  InternalZeroDenominator,
  NotBipartite,
  ZeroDenominator,
  NonIntegerResult,
  BetaOnForbiddenSide,
  UnclassifiableResidual,
  ParseError,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

/// Canonical rational from a (num, den) pair; den may be negative or unreduced.
Rat make_rat(const mpz_class& num, const mpz_class& den);

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

/// Rising factorial x(x+1)...(x+n-1); 1 for n = 0.
Rat pochhammer(const Rat& x, long n);

mpz_class factorial(long n);
mpz_class binomial(long n, long k);

/// Integer power with exact arithmetic, e >= 0.
mpz_class ipow(const mpz_class& base, long e);

/// MacMahon's box product: number of lozenge tilings of the hexagon a,b,c,a,b,c.
Count macmahon(long a, long b, long c);

}  // namespace denthex
