#include "denthex/pfaffian.hpp"

#include <cstdint>
#include <unordered_map>
#include <utility>

namespace denthex {

SkewMatrix::SkewMatrix(int n) : n_(n) {
  if (n < 0 || n % 2 != 0) throw Error(Errc::OddDimension, "skew matrix dimension must be even");
  upper_.assign(static_cast<size_t>(n) * (n - 1) / 2, Rat(0));
}

int SkewMatrix::idx(int i, int j) const {
  // i < j; row-major over the strict upper triangle
  return i * (2 * n_ - i - 1) / 2 + (j - i - 1);
}

Rat SkewMatrix::at(int i, int j) const {
  if (i == j) return Rat(0);
  if (i < j) return upper_[idx(i, j)];
  return -upper_[idx(j, i)];
}

void SkewMatrix::set(int i, int j, const Rat& v) {
  if (i == j) throw Error(Errc::InvalidParams, "cannot set diagonal of a skew matrix");
  if (i < j)
    upper_[idx(i, j)] = v;
  else
    upper_[idx(j, i)] = -v;
}

void SkewMatrix::swap_pair(int i, int j) {
  if (i == j) return;
  SkewMatrix old = *this;
  auto m = [&](int r) { return r == i ? j : (r == j ? i : r); };
  for (int r = 0; r < n_; ++r)
    for (int c = r + 1; c < n_; ++c) set(r, c, old.at(m(r), m(c)));
}

namespace {

Rat pf_rec(const SkewMatrix& a, uint32_t live, std::unordered_map<uint32_t, Rat>& memo) {
  if (live == 0) return Rat(1);
  auto it = memo.find(live);
  if (it != memo.end()) return it->second;
  int i0 = __builtin_ctz(live);
  uint32_t rest = live & ~(1u << i0);
  Rat total(0);
  int t = 0;
  for (uint32_t r = rest; r != 0; r &= r - 1) {
    int j = __builtin_ctz(r);
    ++t;
    const Rat aij = a.at(i0, j);
    if (aij != 0) {
      Rat sub = pf_rec(a, rest & ~(1u << j), memo);
      if (t % 2 == 1)
        total += aij * sub;
      else
        total -= aij * sub;
    }
  }
  memo.emplace(live, total);
  return total;
}

}  // namespace

Rat pfaffian(const SkewMatrix& a) {
  const int n = a.dim();
  if (n == 0) return Rat(1);
  if (n > 30) throw Error(Errc::InvalidParams, "pfaffian dimension too large for subset expansion");
  std::unordered_map<uint32_t, Rat> memo;
  return pf_rec(a, (n == 32 ? ~0u : ((1u << n) - 1)), memo);
}

}  // namespace denthex
