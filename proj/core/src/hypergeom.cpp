#include "denthex/hypergeom.hpp"

namespace denthex {

namespace {

bool nonpositive_integer(const Rat& q) { return is_integer(q) && q <= 0; }

long as_long(const Rat& q) { return static_cast<long>(q.get_num().get_si()); }

}  // namespace

std::optional<long> termination_index(const HypSeries& h) {
  std::optional<long> best;
  for (const Rat& u : h.upper) {
    if (nonpositive_integer(u)) {
      long n = -as_long(u);
      if (!best || n < *best) best = n;
    }
  }
  return best;
}

Rat hyp_eval(const HypSeries& h) {
  auto N = termination_index(h);
  if (!N) throw Error(Errc::NonTerminating, "no non-positive integer upper parameter");
  for (const Rat& l : h.lower) {
    // (l)_t = 0 for some t <= N iff l in {0, -1, ..., -(N-1)}
    if (nonpositive_integer(l) && -as_long(l) < *N)
      throw Error(Errc::DivisionByZeroInLowerParameter, "lower-parameter Pochhammer vanishes");
  }
  Rat sum = 0;
  Rat term = 1;
  for (long t = 0; t <= *N; ++t) {
    sum += term;
    if (t == *N) break;
    Rat num = 1, den = 1;
    for (const Rat& u : h.upper) num *= u + t;
    for (const Rat& l : h.lower) den *= l + t;
    term *= num / den * h.z / (t + 1);
  }
  return sum;
}

bool check_chu_vandermonde(const Rat& x, const Rat& y, long n) {
  HypSeries h{{x, Rat(-n)}, {y}, Rat(1)};
  Rat rhs_den = pochhammer(y, n);
  if (rhs_den == 0) throw Error(Errc::DivisionByZeroInLowerParameter, "(y)_n vanishes");
  return hyp_eval(h) == pochhammer(y - x, n) / rhs_den;
}

bool check_pfaff_saalschutz(const Rat& w, const Rat& x, const Rat& y, long n) {
  Rat s = 1 + w + x - y - n;  // Saalschuetzian balance
  HypSeries h{{w, x, Rat(-n)}, {y, s}, Rat(1)};
  Rat rhs_den = pochhammer(y, n) * pochhammer(y - w - x, n);
  if (rhs_den == 0) throw Error(Errc::DivisionByZeroInLowerParameter, "RHS denominator vanishes");
  return hyp_eval(h) == pochhammer(y - w, n) * pochhammer(y - x, n) / rhs_den;
}

namespace {

Rat eval_or_fail(const HypSeries& h) {
  try {
    return hyp_eval(h);
  } catch (const Error&) {
    throw Error(Errc::InstanceNotEvaluable, "series in relation not evaluable");
  }
}

void require(bool cond) {
  if (!cond) throw Error(Errc::InstanceNotEvaluable, "coefficient denominator vanishes");
}

// Series with designated entries shifted by du and the non-designated upper /
// lower entries shifted by dA / dB.
HypSeries shifted(const HypSeries& h, std::vector<std::pair<bool, int>> designated,
                  std::vector<Rat> deltas, int dA, int dB) {
  HypSeries out = h;
  std::vector<bool> up_desig(h.upper.size(), false), lo_desig(h.lower.size(), false);
  for (size_t d = 0; d < designated.size(); ++d) {
    auto [in_upper, idx] = designated[d];
    if (in_upper) {
      out.upper[idx] += deltas[d];
      up_desig[idx] = true;
    } else {
      out.lower[idx] += deltas[d];
      lo_desig[idx] = true;
    }
  }
  for (size_t i = 0; i < out.upper.size(); ++i)
    if (!up_desig[i]) out.upper[i] += dA;
  for (size_t i = 0; i < out.lower.size(); ++i)
    if (!lo_desig[i]) out.lower[i] += dB;
  return out;
}

Rat prod_rest(const std::vector<Rat>& v, std::vector<int> skip, int delta = 0) {
  Rat r = 1;
  for (size_t i = 0; i < v.size(); ++i) {
    bool s = false;
    for (int k : skip)
      if (static_cast<int>(i) == k) s = true;
    if (!s) r *= v[i] + delta;
  }
  return r;
}

}  // namespace

bool check_contiguous(ContigRel rel, const ContigInstance& inst) {
  const HypSeries& h = inst.series;
  const Rat z = h.z;
  Rat lhs = eval_or_fail(h);
  switch (rel) {
    case ContigRel::C40: {
      const Rat x = h.upper[inst.u0], y = h.lower[inst.l0];
      require(y != 0 && y != 1);
      Rat coA = prod_rest(h.upper, {inst.u0});
      Rat coB = prod_rest(h.lower, {inst.l0});
      require(coB != 0);
      Rat t1 = eval_or_fail(shifted(h, {{true, inst.u0}, {false, inst.l0}}, {-1, -1}, 0, 0));
      Rat t2 = eval_or_fail(shifted(h, {{true, inst.u0}, {false, inst.l0}}, {0, 1}, 1, 1));
      return lhs == t1 + (y - x) * z / ((y - 1) * y) * coA / coB * t2;
    }
    case ContigRel::C42: {
      const Rat x = h.upper[inst.u0], y = h.lower[inst.l0];
      require(y - x - 1 != 0 && z != 0);
      Rat coA = prod_rest(h.upper, {inst.u0}, -1);
      Rat coB = prod_rest(h.lower, {inst.l0}, -1);
      require(coA != 0);
      Rat co = (y - 2) * (y - 1) / ((y - x - 1) * z) * coB / coA;
      Rat t1 = eval_or_fail(shifted(h, {{true, inst.u0}, {false, inst.l0}}, {0, -1}, -1, -1));
      Rat t2 = eval_or_fail(shifted(h, {{true, inst.u0}, {false, inst.l0}}, {-1, -2}, -1, -1));
      return lhs == co * t1 - co * t2;
    }
    case ContigRel::C54: {
      const Rat w = h.upper[inst.u0], x = h.upper[inst.u1], y = h.lower[inst.l0];
      require(x - w != 0 && y != 0);
      Rat t1 = eval_or_fail(
          shifted(h, {{true, inst.u0}, {true, inst.u1}, {false, inst.l0}}, {0, 1, 1}, 0, 0));
      Rat t2 = eval_or_fail(
          shifted(h, {{true, inst.u0}, {true, inst.u1}, {false, inst.l0}}, {1, 0, 1}, 0, 0));
      return lhs == x * (y - w) / ((x - w) * y) * t1 + w * (y - x) / ((w - x) * y) * t2;
    }
    case ContigRel::C55: {
      const Rat w = h.upper[inst.u0], x = h.upper[inst.u1], y = h.lower[inst.l0];
      require(w != 1 && 1 + x - y != 0 && y - x - 1 != 0);
      Rat t1 = eval_or_fail(
          shifted(h, {{true, inst.u0}, {true, inst.u1}, {false, inst.l0}}, {-1, 0, -1}, 0, 0));
      Rat t2 = eval_or_fail(
          shifted(h, {{true, inst.u0}, {true, inst.u1}, {false, inst.l0}}, {-1, 1, 0}, 0, 0));
      return lhs == (1 - w + x) * (y - 1) / ((w - 1) * (1 + x - y)) * t1 +
                        x * (y - w) / ((w - 1) * (y - x - 1)) * t2;
    }
    case ContigRel::C30: {
      const Rat x = h.upper[inst.u0], y = h.upper[inst.u1];
      Rat coA = prod_rest(h.upper, {inst.u0, inst.u1});
      Rat coB = prod_rest(h.lower, {});
      require(coB != 0);
      Rat t1 = eval_or_fail(shifted(h, {{true, inst.u0}, {true, inst.u1}}, {-1, 1}, 0, 0));
      Rat t2 = eval_or_fail(shifted(h, {{true, inst.u0}, {true, inst.u1}}, {0, 1}, 1, 1));
      // the z factor matters away from z = 1
      return lhs == t1 + (1 - x + y) * z * coA / coB * t2;
    }
    case ContigRel::C57: {
      const Rat w = h.upper[inst.u0], x = h.lower[inst.l0], y = h.lower[inst.l1];
      require(w != 1 && y - x != 0);
      Rat t1 = eval_or_fail(
          shifted(h, {{true, inst.u0}, {false, inst.l0}, {false, inst.l1}}, {-1, -1, 0}, 0, 0));
      Rat t2 = eval_or_fail(
          shifted(h, {{true, inst.u0}, {false, inst.l0}, {false, inst.l1}}, {-1, 0, -1}, 0, 0));
      return lhs == (x - 1) * (y - w) / ((w - 1) * (y - x)) * t1 +
                        (x - w) * (y - 1) / ((w - 1) * (x - y)) * t2;
    }
  }
  throw Error(Errc::InvalidParams, "unknown contiguous relation");
}

}  // namespace denthex
