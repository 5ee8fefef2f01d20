#include "denthex/condensation.hpp"

#include <algorithm>

#include "denthex/formulas.hpp"
#include "denthex/oracle.hpp"
#include "denthex/pfaffian.hpp"

namespace denthex {

namespace {

// undented hexagon (plus gamma strip when barred); bypasses the dent-balance
// invariant that build_hexagon enforces for user specs
Region undented_region(const HexDentSpec& spec) {
  std::vector<UnitTriangle> cells = hexagon_cells(spec.a, spec.b, spec.c, spec.k).cells();
  if (spec.barred) {
    HexDentSpec bare = spec;
    bare.alphas.clear();
    bare.betas.clear();
    for (int j = 1; j <= spec.k; ++j) cells.push_back(gamma_cell(bare, j));
  }
  return Region(std::move(cells));
}

Count quotient_count(const Rat& pf, const Count& denom_base, long exponent, const char* what) {
  Rat v = pf;
  if (exponent >= 0) {
    mpz_class d = ipow(denom_base, exponent);
    if (d == 0) throw Error(Errc::ZeroDenominator, what);
    v /= Rat(d);
  } else {
    v *= Rat(ipow(denom_base, -exponent));
  }
  if (!is_integer(v) || v < 0) throw Error(Errc::NonIntegerResult, what);
  return v.get_num();
}

Count closed_count_of(const Region& region) {
  // exact structural match first; fall back to the forced-reduced residual
  RegionClass cls = classify(region);
  if (cls.tag == RegionTag::Unknown) {
    ReduceResult rr = reduce_forced(region);
    if (rr.untileable) return 0;
    cls = classify(rr.residual);
  }
  return evaluate_class(cls);
}

// Hexagon box of the spec with the first `slabs` forced strips along the
// southwestern side removed (the s-halfplane moved inward), in the original
// coordinate frame.
Region slab_removed_box(const HexDentSpec& spec, long slabs) {
  const long a = spec.a, b = spec.b, c = spec.c, k = spec.k;
  std::vector<UnitTriangle> cells;
  for (long x = 0; x <= a + b + k - 1; ++x) {
    for (long y = -b; y <= c + k - 1; ++y) {
      long ss = x + y;
      if (slabs <= ss && ss <= a + c + k - 1)
        cells.push_back({static_cast<int>(x), static_cast<int>(y), true});
      if (slabs - 1 <= ss && ss <= a + c + k - 2)
        cells.push_back({static_cast<int>(x), static_cast<int>(y), false});
    }
  }
  return Region(std::move(cells));
}

bool has_beta_on(const HexDentSpec& spec, Side side) {
  for (const auto& d : spec.betas)
    if (d.side == side) return true;
  return false;
}

// Rotates until the southwestern side carries no beta dent (the theorem's
// "without loss of generality"); throws if no beta-free beta-side exists.
HexDentSpec rotate_sw_free(const HexDentSpec& spec) {
  HexDentSpec s = spec;
  for (int i = 0; i < 3; ++i) {
    if (!has_beta_on(s, Side::SouthWest)) return s;
    s = rotate_spec_120(s);
  }
  throw Error(Errc::BetaOnForbiddenSide, "every side that can carry beta dents has one");
}

}  // namespace

Count pfaffian_count_generic(const Region& r, const std::vector<UnitTriangle>& removable,
                             const std::function<Count(const Region&)>& counter) {
  if (removable.size() % 2 != 0)
    throw Error(Errc::OddDimension, "need an even number of removable cells");
  const long k = static_cast<long>(removable.size()) / 2;
  Count m = counter(r);
  if (m == 0) throw Error(Errc::ZeroDenominator, "M(G) = 0 in the generic Pfaffian identity");
  const int nn = static_cast<int>(removable.size());
  SkewMatrix mat(nn);
  for (int i = 0; i < nn; ++i)
    for (int j = i + 1; j < nn; ++j)
      mat.set(i, j, Rat(counter(r.without({removable[i], removable[j]}))));
  return quotient_count(pfaffian(mat), m, k - 1, "generic Pfaffian quotient not a count");
}

Count theorem1_entry(const HexDentSpec& barred_spec, const DentLabel& d1, const DentLabel& d2) {
  if (d1.kind == d2.kind) return 0;
  const DentLabel* alpha = nullptr;
  const DentLabel* other = nullptr;
  for (const DentLabel* d : {&d1, &d2})
    (d->kind == DentLabel::Alpha ? alpha : other) = d;
  if (!alpha) return 0;  // (beta, gamma) pair: unbalanced
  const long b = barred_spec.b, k = barred_spec.k;

  if (other->kind == DentLabel::Beta) {
    // all gammas present: k slabs along the southwestern side are forced
    Region box = slab_removed_box(barred_spec, k);
    if (!box.contains(alpha->cell)) return 0;  // statement (ii) zero conditions
    if (box.contains(other->cell))
      return closed_count_of(box.without({alpha->cell, other->cell}));
    // beta inside the slab region (degenerate sides): no structural shortcut
    Region bar = undented_region(barred_spec);
    return closed_count_of(bar.without({d1.cell, d2.cell}));
  }

  // (alpha, gamma_j): the gammas left of j force j-1 slabs, the run right of
  // j forces a side-(k-j) triangular bite one unit from the new corner
  const long j = other->index + 1;
  const long s = k - j;
  Region box = slab_removed_box(barred_spec, j - 1);
  std::vector<UnitTriangle> tri =
      up_triangle_cells(static_cast<int>(b + j), static_cast<int>(-b), s);
  for (const auto& t : tri)
    if (t == alpha->cell) return 0;  // statement (iii) zero conditions
  if (!box.contains(alpha->cell)) return 0;

  Region l_tri = box.without(tri).without({alpha->cell});
  RegionClass cls = classify(l_tri);
  if (cls.tag != RegionTag::Unknown) return evaluate_class(cls);
  // same count with the bite spelled as a run of unit dents
  std::vector<UnitTriangle> run;
  for (long t = 0; t < s; ++t)
    run.push_back({static_cast<int>(b + j + t), static_cast<int>(-b), true});
  Region l_run = box.without(run).without({alpha->cell});
  cls = classify(l_run);
  if (cls.tag != RegionTag::Unknown) return evaluate_class(cls);
  return closed_count_of(l_tri);
}

Count theorem1_count(const HexDentSpec& spec, EntryMode mode) {
  validate(spec);
  HexDentSpec s = rotate_sw_free(spec);
  s.barred = s.k > 0;
  Region bar = undented_region(s);

  std::vector<DentLabel> delta = cyclic_order(s);
  const int nn = static_cast<int>(delta.size());
  const long n = static_cast<long>(s.betas.size());

  Count m_bar = closed_count_of(bar);

  SkewMatrix mat(nn);
  for (int i = 0; i < nn; ++i) {
    for (int j = i + 1; j < nn; ++j) {
      Count v = mode == EntryMode::ClosedForm
                    ? theorem1_entry(s, delta[i], delta[j])
                    : count_tilings(bar.without({delta[i].cell, delta[j].cell}));
      mat.set(i, j, Rat(v));
    }
  }
  return quotient_count(pfaffian(mat), m_bar, n + s.k - 1, "theorem-1 quotient not a count");
}

Count theorem3_count(const HexDentSpec& spec, EntryMode mode) {
  if (spec.k != 0) throw Error(Errc::InvalidParams, "theorem 3 needs k = 0");
  validate(spec);
  HexDentSpec unb = spec;
  unb.barred = false;
  Region hex = undented_region(unb);

  std::vector<DentLabel> delta = cyclic_order(spec);
  const int nn = static_cast<int>(delta.size());
  const long n = static_cast<long>(spec.betas.size());

  Count m = closed_count_of(hex);
  if (m == 0) throw Error(Errc::ZeroDenominator, "M(H) = 0");

  SkewMatrix mat(nn);
  for (int i = 0; i < nn; ++i) {
    for (int j = i + 1; j < nn; ++j) {
      Count v = 0;
      if (delta[i].kind != delta[j].kind) {
        Region sub = hex.without({delta[i].cell, delta[j].cell});
        v = mode == EntryMode::ClosedForm ? closed_count_of(sub) : count_tilings(sub);
      }
      mat.set(i, j, Rat(v));
    }
  }
  return quotient_count(pfaffian(mat), m, n - 1, "theorem-3 quotient not a count");
}

namespace {

Count theorem2_with_carving(const HexDentSpec& spec, EntryMode mode,
                            const std::vector<DentLabel>& delta, const std::vector<int>& carve,
                            bool* zero_denominator) {
  std::vector<DentLabel> alphas;
  for (const auto& d : delta)
    if (d.kind == DentLabel::Alpha) alphas.push_back(d);

  std::vector<bool> carved(alphas.size(), false);
  for (int idx : carve) carved[idx] = true;

  auto inner_spec = [&](const DentLabel* extra_alpha, const DentLabel* beta) {
    HexDentSpec in = spec;
    in.alphas.clear();
    in.betas.clear();
    in.barred = false;
    for (size_t t = 0; t < alphas.size(); ++t)
      if (carved[t]) in.alphas.push_back(spec.alphas[alphas[t].index]);
    if (extra_alpha) in.alphas.push_back(spec.alphas[extra_alpha->index]);
    if (beta) in.betas.push_back(spec.betas[beta->index]);
    return in;
  };

  const long n = static_cast<long>(spec.betas.size());
  Count m_d = theorem1_count(inner_spec(nullptr, nullptr), mode);
  if (n == 0) return m_d;  // empty outer Pfaffian: the result is M(D) itself
  if (m_d == 0) {
    *zero_denominator = true;
    return 0;
  }

  std::vector<DentLabel> outer;
  for (size_t t = 0, ai = 0; t < delta.size(); ++t) {
    if (delta[t].kind == DentLabel::Alpha) {
      if (!carved[ai]) outer.push_back(delta[t]);
      ++ai;
    } else {
      outer.push_back(delta[t]);
    }
  }
  const int nn = static_cast<int>(outer.size());

  SkewMatrix mat(nn);
  for (int i = 0; i < nn; ++i) {
    for (int j = i + 1; j < nn; ++j) {
      Count v = 0;
      if (outer[i].kind != outer[j].kind) {
        const DentLabel& da = outer[i].kind == DentLabel::Alpha ? outer[i] : outer[j];
        const DentLabel& db = outer[i].kind == DentLabel::Alpha ? outer[j] : outer[i];
        v = theorem1_count(inner_spec(&da, &db), mode);
      }
      mat.set(i, j, Rat(v));
    }
  }
  return quotient_count(pfaffian(mat), m_d, n - 1, "theorem-2 quotient not a count");
}

}  // namespace

Count theorem2_count(const HexDentSpec& spec, EntryMode mode, const std::vector<int>& carve) {
  if (spec.k < 1) throw Error(Errc::InvalidParams, "theorem 2 needs k >= 1 (use theorem 3)");
  validate(spec);
  std::vector<DentLabel> delta = cyclic_order(spec);

  long n_alpha = static_cast<long>(spec.alphas.size());
  bool zero = false;
  if (!carve.empty()) {
    if (static_cast<long>(carve.size()) != spec.k)
      throw Error(Errc::InvalidParams, "carving must pick exactly k alphas");
    Count v = theorem2_with_carving(spec, mode, delta, carve, &zero);
    if (zero) throw Error(Errc::ZeroDenominator, "M(D) = 0 for the requested carving");
    return v;
  }
  // default: first k alphas in cyclic order; fall back to other carvings
  // when the carved region is untileable
  std::vector<int> idx(spec.k);
  for (long i = 0; i < spec.k; ++i) idx[i] = static_cast<int>(i);
  while (true) {
    zero = false;
    Count v = theorem2_with_carving(spec, mode, delta, idx, &zero);
    if (!zero) return v;
    // next k-combination of {0..n_alpha-1}
    long i = spec.k - 1;
    while (i >= 0 && idx[i] == n_alpha - (spec.k - i)) --i;
    if (i < 0) break;
    ++idx[i];
    for (long t = i + 1; t < spec.k; ++t) idx[t] = idx[t - 1] + 1;
  }
  // every carved region is untileable, so the nested identity is mute; when
  // some beta side is free the non-nested Pfaffian still applies directly
  try {
    return theorem1_count(spec, mode);
  } catch (const Error& e) {
    if (e.code() != Errc::BetaOnForbiddenSide) throw;
  }
  throw Error(Errc::ZeroDenominator, "every carving leaves an untileable region");
}

namespace {

void require_pattern(const Region& r, std::initializer_list<const UnitTriangle*> cells,
                     std::initializer_list<bool> ups) {
  auto cit = cells.begin();
  auto uit = ups.begin();
  for (; cit != cells.end(); ++cit, ++uit) {
    if ((*cit)->up != *uit)
      throw Error(Errc::InvalidCellPattern, "cell orientations do not match the theorem");
    if (!r.contains(**cit))
      throw Error(Errc::InvalidCellPattern, "cell not in the region");
  }
}

}  // namespace

bool check_kuo_four_one(const Region& r, const UnitTriangle& w, const UnitTriangle& x,
                        const UnitTriangle& y, const UnitTriangle& z) {
  require_pattern(r, {&w, &x, &y, &z}, {true, false, true, false});
  auto M = [&](const std::vector<UnitTriangle>& rm) { return count_tilings(r.without(rm)); };
  return M({}) * M({w, x, y, z}) == M({w, x}) * M({y, z}) + M({w, z}) * M({x, y});
}

bool check_kuo_two_two(const Region& r, const UnitTriangle& w, const UnitTriangle& x,
                       const UnitTriangle& y, const UnitTriangle& z) {
  require_pattern(r, {&w, &x, &y, &z}, {true, true, false, false});
  auto M = [&](const std::vector<UnitTriangle>& rm) { return count_tilings(r.without(rm)); };
  return M({}) * M({w, x, y, z}) == M({w, z}) * M({x, y}) - M({w, y}) * M({x, z});
}

}  // namespace denthex
