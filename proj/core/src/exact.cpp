#include "denthex/exact.hpp"

namespace denthex {

Rat make_rat(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw Error(Errc::InternalZeroDenominator, "rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

Rat pochhammer(const Rat& x, long n) {
  Rat r = 1;
  Rat f = x;
  for (long i = 0; i < n; ++i) {
    r *= f;
    f += 1;
  }
  return r;
}

mpz_class factorial(long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

mpz_class binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

mpz_class ipow(const mpz_class& base, long e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

Count macmahon(long a, long b, long c) {
  Rat r = 1;
  for (long i = 1; i <= a; ++i)
    for (long j = 1; j <= b; ++j)
      for (long k = 1; k <= c; ++k) r *= make_rat(i + j + k - 1, i + j + k - 2);
  if (!is_integer(r)) throw Error(Errc::NonIntegerResult, "macmahon produced a non-integer");
  return r.get_num();
}

}  // namespace denthex
