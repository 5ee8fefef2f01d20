#pragma once

// Shared test helpers. The determinant here is the independent oracle for
// Pf(A)^2 = det(A); it must not share code with the pfaffian implementation.

#include <random>
#include <vector>

#include "denthex/lattice.hpp"
#include "denthex/pfaffian.hpp"

namespace denthex::test {

// plain fraction-free Gaussian elimination
inline Rat dense_determinant(const SkewMatrix& a) {
  const int n = a.dim();
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = a.at(i, j);
  Rat det = 1;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (m[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return Rat(0);
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (int r = col + 1; r < n; ++r) {
      Rat f = m[r][col] / m[col][col];
      for (int cc = col; cc < n; ++cc) m[r][cc] -= f * m[col][cc];
    }
  }
  return det;
}

inline SkewMatrix random_skew(std::mt19937_64& rng, int n, long lo = -9, long hi = 9) {
  SkewMatrix a(n);
  std::uniform_int_distribution<long> d(lo, hi);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) a.set(i, j, Rat(d(rng)));
  return a;
}

// random valid dented hexagon spec within the given bounds
inline HexDentSpec random_spec(std::mt19937_64& rng, long maxside, long maxk, long maxn,
                               bool allow_sw_beta) {
  std::uniform_int_distribution<long> ds(0, maxside), dk(0, maxk), dn(0, maxn);
  while (true) {
    HexDentSpec s{ds(rng), ds(rng), ds(rng), dk(rng), {}, {}, false};
    std::vector<DentSpec> apool, bpool;
    for (Side sd : {Side::Bottom, Side::NorthEast, Side::NorthWest})
      for (long p = 1; p <= side_length(s, sd); ++p)
        apool.push_back({sd, static_cast<int>(p), DentKind::Alpha});
    for (Side sd : {Side::Top, Side::SouthEast, Side::SouthWest}) {
      if (!allow_sw_beta && sd == Side::SouthWest) continue;
      for (long p = 1; p <= side_length(s, sd); ++p)
        bpool.push_back({sd, static_cast<int>(p), DentKind::Beta});
    }
    long n = dn(rng);
    if (static_cast<long>(apool.size()) < n + s.k || static_cast<long>(bpool.size()) < n)
      continue;
    std::shuffle(apool.begin(), apool.end(), rng);
    std::shuffle(bpool.begin(), bpool.end(), rng);
    s.alphas.assign(apool.begin(), apool.begin() + n + s.k);
    s.betas.assign(bpool.begin(), bpool.begin() + n);
    try {
      validate(s);
      return s;
    } catch (const Error&) {
    }
  }
}

}  // namespace denthex::test
