#include "denthex/formulas.hpp"

#include <algorithm>

#include "denthex/hypergeom.hpp"

namespace denthex {

namespace {

Count to_count(const Rat& q, const char* what) {
  if (!is_integer(q) || q < 0) throw Error(Errc::NonIntegerResult, what);
  return q.get_num();
}

}  // namespace

Count clp_trapezoid(long m, long n, const std::vector<long>& xs) {
  if (static_cast<long>(xs.size()) != n)
    throw Error(Errc::InvalidPositions, "need exactly n positions");
  for (size_t i = 0; i < xs.size(); ++i)
    if (xs[i] < 1 || xs[i] > m + n || (i > 0 && xs[i] <= xs[i - 1]))
      throw Error(Errc::InvalidPositions, "positions must be strictly increasing in [1, m+n]");
  Rat r = 1;
  for (size_t i = 0; i < xs.size(); ++i)
    for (size_t j = i + 1; j < xs.size(); ++j)
      r *= make_rat(xs[j] - xs[i], static_cast<long>(j - i));
  return to_count(r, "CLP product is not a non-negative integer");
}

namespace {

// shared product blocks of p(c,l) and q(c,l):
// (c+k+2)^1 ... (c+k+m+1)^m, (c+k+m+2)^m ... (c+k+M+1)^m,
// (c+k+M+2)^{m-1} ... (c+k+M+m)^1 with m = min(a,b), M = max(a,b)
Rat notch_blocks(long a, long b, long c, long k) {
  const long m = std::min(a, b), M = std::max(a, b);
  Rat r = 1;
  for (long t = 1; t <= m; ++t) r *= ipow(mpz_class(c + k + 1 + t), t);
  for (long u = c + k + m + 2; u <= c + k + M + 1; ++u) r *= ipow(mpz_class(u), m);
  for (long t = 1; t <= m - 1; ++t) r *= ipow(mpz_class(c + k + M + 1 + t), m - t);
  return r;
}

Rat notch_sum_a(long b, long c, long k, long l) {
  Rat s = 0;
  for (long i = 1; i <= k + 1; ++i) {
    Rat term = make_rat((i - 1) % 2 == 0 ? 1 : -1, 1);
    term /= factorial(i - 1) * factorial(k - i + 1);
    term *= pochhammer(Rat(l - k + i), k - i + 1) * pochhammer(Rat(l + b + 1), i - 1) *
            pochhammer(Rat(c + 1), i - 1) * pochhammer(Rat(c + i + 1), k - i + 1);
    s += term;
  }
  return s;
}

Rat notch_sum_b(long b, long c, long k, long l) {
  Rat s = 0;
  for (long i = 1; i <= k + 1; ++i) {
    Rat term = make_rat((i - 1) % 2 == 0 ? 1 : -1, 1);
    term /= factorial(i - 1) * factorial(k - i + 1);
    term *= pochhammer(Rat(l - k + i), k - i + 1) * pochhammer(Rat(l + b + 1), i - 1) *
            pochhammer(Rat(l - k - c), i - 1) * pochhammer(Rat(l - k - c + i), k - i + 1);
    s += term;
  }
  return s;
}

Rat p_poly(long a, long b, long k, long c, long l) {
  return pochhammer(Rat(l + 1), b) * pochhammer(Rat(c + k - l + 1), a) * notch_blocks(a, b, c, k) *
         notch_sum_a(b, c, k, l);
}

// r(c) of the variant-B formula; rational in the nu = -1 (b = 0) branch
Rat r_poly(long b, long k, long c) {
  const long nu = std::min(b - 1, k);
  if (nu >= 1) {
    Rat r = 1;
    for (long t = 1; t <= b + k - 2; ++t)
      r *= ipow(mpz_class(c + 1 + t), std::min({t, nu, b + k - 1 - t}));
    return r;
  }
  if (nu == 0) return Rat(1);
  Rat den = pochhammer(Rat(c + 1), k);
  if (den == 0) throw Error(Errc::InternalZeroDenominator, "r(c) pole");
  return 1 / den;
}

Rat q_poly(long a, long b, long k, long c, long l) {
  // the undefined z in the displayed formula evaluates as c
  return r_poly(b, k, c) * pochhammer(Rat(l + 1), b) * pochhammer(Rat(c + k - l + 1), a) *
         notch_blocks(a, b, c, k) * notch_sum_b(b, c, k, l);
}

}  // namespace

Count gk_notch(const NotchParams& p) {
  if (p.a < 0 || p.b < 0 || p.c < 0 || p.k < 0 || p.l < 0 || p.l > p.c + p.k)
    throw Error(Errc::InvalidParams, "notch parameters out of range");
  if (!p.variant_b) {
    // the prefactor is MacMahon's count for the (a, b, k) box: the displayed
    // equation reuses k both as product bound and notch size
    Rat den = p_poly(p.a, p.b, p.k, 0, 0);
    if (den == 0) throw Error(Errc::InternalZeroDenominator, "p(0,0) = 0");
    Rat v = Rat(macmahon(p.a, p.b, p.k)) * p_poly(p.a, p.b, p.k, p.c, p.l) / den;
    return to_count(v, "notch-A value is not a non-negative integer");
  }
  Rat den = q_poly(p.a, p.b, p.k, 0, 0);
  if (den == 0) throw Error(Errc::InternalZeroDenominator, "q(0,0) = 0");
  Rat v = Rat(binomial(p.a + p.k, p.k)) * q_poly(p.a, p.b, p.k, p.c, p.l) / den;
  return to_count(v, "notch-B value is not a non-negative integer");
}

Count adjacent_dents(long a, long b, long c, long j, long k) {
  if (a < 0 || b < 0 || c < 0 || j < 1 || j > a || k < 1 || k > c)
    throw Error(Errc::InvalidParams, "adjacent-dent parameters out of range");
  Rat pre = 1;
  for (long i = 0; i < a; ++i) pre *= pochhammer(Rat(c + i), b) / pochhammer(Rat(1 + i), b);
  HypSeries h{{Rat(-a + j), Rat(b), Rat(-c + k)}, {Rat(1 - a - c), Rat(1 + b)}, Rat(1)};
  Rat f = hyp_eval(h);
  Rat quot = pochhammer(Rat(1 + b), a - j) * pochhammer(Rat(j), k - 1) *
             pochhammer(Rat(1 + c - k), k - 1) /
             (pochhammer(Rat(1), a - j) * pochhammer(Rat(1), k - 1) *
              pochhammer(Rat(1 + b + c - k), k - 1));
  return to_count(pre * f * quot, "adjacent-dents value is not a non-negative integer");
}

namespace {

// Combined prefactor-times-series evaluation: the (1+b-j)_t and (2+a-i-j)_t
// lower-parameter Pochhammers are cancelled against the matching prefactor
// factors, so parameter combos where the literal 4F3 has a vanishing lower
// parameter still evaluate (the prefactor vanishes there too).
Rat opposite_combined(long a, long b, long c, long i, long j) {
  Rat pre = 1;
  for (long t = 0; t <= a - 2; ++t)
    pre *= pochhammer(Rat(1 + c + t), b) / pochhammer(Rat(1 + t), b);
  Rat den = pochhammer(Rat(1), i - 1) * pochhammer(Rat(1), j - 1) *
            pochhammer(Rat(1 + a + c - i), i - 1) * pochhammer(Rat(1 + a + b - j), j - 1);
  pre *= pochhammer(Rat(c), j - 1) / den;
  const long N = std::min(i - 1, j - 1);
  Rat sum = 0;
  for (long t = 0; t <= N; ++t) {
    Rat num = pochhammer(Rat(1 - i), t) * pochhammer(Rat(1 - j), t) *
              pochhammer(Rat(1 - c - j), t) * pochhammer(Rat(1 + a + b - j), t);
    Rat d = pochhammer(Rat(2 - c - j), t) * pochhammer(Rat(1), t);
    if (d == 0) throw Error(Errc::DivisionByZeroInLowerParameter, "2-c-j Pochhammer vanishes");
    sum += num / d * pochhammer(Rat(1 + b - j + t), i - 1 - t) *
           pochhammer(Rat(2 + a - i - j + t), i + j - 2 - t);
  }
  return pre * sum;
}

}  // namespace

Count opposite_dents(long a, long b, long c, long i, long j) {
  if (a < 1 || b < 0 || c < 0 || i < 1 || i > a || j < 1 || j > a)
    throw Error(Errc::InvalidParams, "opposite-dent parameters out of range");
  if (c >= 1)
    return to_count(opposite_combined(a, b, c, i, j), "opposite-dents value not an integer");
  if (b >= 1)  // mirror symmetry of the region: OPP(a,b,c)_{i,j} = OPP(a,c,b)_{j,i}
    return to_count(opposite_combined(a, c, b, j, i), "opposite-dents value not an integer");
  throw Error(Errc::InvalidParams, "opposite dents on an empty hexagon");
}

bool check_rec_adjacent(long a, long b, long c, long j, long k) {
  if (a < 2 || c < 2 || b < 1 || j < 1 || j >= a || k < 1 || k >= c)
    throw Error(Errc::InvalidParams, "recurrence preconditions violated");
  auto A = [&](long aa, long bb, long cc) { return adjacent_dents(aa, bb, cc, j, k); };
  return A(a, b, c) * A(a - 1, b, c - 1) ==
         A(a, b, c - 1) * A(a - 1, b, c) + A(a - 1, b + 1, c - 1) * A(a, b - 1, c);
}

bool check_rec_opposite(long a, long b, long c, long i, long j) {
  if (a < 3 || i <= 1 || i >= a || j <= 1 || j >= a || b < 1 || c < 1)
    throw Error(Errc::InvalidParams, "recurrence preconditions violated");
  auto O = [&](long aa, long bb, long cc, long ii, long jj) {
    return opposite_dents(aa, bb, cc, ii, jj);
  };
  return O(a, b, c, i, j) * O(a - 2, b, c, i - 1, j - 1) ==
         O(a - 1, b, c, i - 1, j - 1) * O(a - 1, b, c, i, j) -
             O(a - 1, b - 1, c + 1, i, j - 1) * O(a - 1, b + 1, c - 1, i - 1, j);
}

Count evaluate_class(const RegionClass& cls) {
  switch (cls.tag) {
    case RegionTag::Empty: return 1;
    case RegionTag::Untileable: return 0;
    case RegionTag::PlainHexagon: return macmahon(cls.a, cls.b, cls.c);
    case RegionTag::TrapezoidTopDents: return clp_trapezoid(cls.m, cls.n, cls.xs);
    case RegionTag::NotchRegionA:
      return gk_notch({cls.a, cls.b, cls.c, cls.k, cls.l, false});
    case RegionTag::NotchRegionB:
      return gk_notch({cls.a, cls.b, cls.c, cls.k, cls.l, true});
    case RegionTag::HexTwoDentsAdjacent:
      return adjacent_dents(cls.a, cls.b, cls.c, cls.j, cls.k);
    case RegionTag::HexTwoDentsOpposite:
      return opposite_dents(cls.a, cls.b, cls.c, cls.i, cls.j);
    case RegionTag::Unknown: break;
  }
  throw Error(Errc::UnclassifiableResidual, "no closed form for this residual region");
}

}  // namespace denthex
