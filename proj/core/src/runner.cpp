#include "denthex/runner.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <random>
#include <thread>

#include "denthex/formulas.hpp"
#include "denthex/hypergeom.hpp"
#include "denthex/oracle.hpp"
#include "denthex/specio.hpp"

namespace denthex {

Method method_from_name(const std::string& name) {
  if (name == "auto") return Method::Auto;
  if (name == "oracle") return Method::Oracle;
  if (name == "pfaffian") return Method::Pfaffian;
  if (name == "formula") return Method::Formula;
  throw Error(Errc::ParseError, "unknown method " + name);
}

namespace {

bool sw_beta_free(const HexDentSpec& spec) {
  for (const auto& d : spec.betas)
    if (d.side == Side::SouthWest) return false;
  return true;
}

Count formula_count(const HexDentSpec& spec) {
  ReduceResult rr = reduce_forced(build_hexagon(spec));
  if (rr.untileable) return 0;
  RegionClass cls = classify(rr.residual);
  if (cls.tag == RegionTag::Unknown)
    throw Error(Errc::InvalidParams, "region does not classify to a direct closed form");
  return evaluate_class(cls);
}

bool formula_applies(const HexDentSpec& spec) {
  ReduceResult rr = reduce_forced(build_hexagon(spec));
  return rr.untileable || classify(rr.residual).tag != RegionTag::Unknown;
}

Count pfaffian_count(const HexDentSpec& spec) {
  if (spec.k == 0) return theorem3_count(spec);
  if (sw_beta_free(spec)) return theorem1_count(spec);
  return theorem2_count(spec);
}

}  // namespace

Count count_with_method(const HexDentSpec& spec, Method method) {
  validate(spec);
  switch (method) {
    case Method::Oracle: return count_tilings(build_hexagon(spec));
    case Method::Formula: return formula_count(spec);
    case Method::Pfaffian: return pfaffian_count(spec);
    case Method::Auto:
      if (formula_applies(spec)) return formula_count(spec);
      return pfaffian_count(spec);
  }
  throw Error(Errc::InvalidParams, "bad method");
}

VerifyReport run_verify(const HexDentSpec& spec) {
  validate(spec);
  VerifyReport rep;
  auto timed = [&](const std::string& name, auto&& fn) {
    auto t0 = std::chrono::steady_clock::now();
    Count v = fn();
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    rep.rows.push_back({name, v, dt});
  };
  timed("oracle", [&] { return count_tilings(build_hexagon(spec)); });
  if (formula_applies(spec)) timed("formula", [&] { return formula_count(spec); });
  if (spec.k == 0) {
    timed("theorem3", [&] { return theorem3_count(spec); });
  } else {
    try {
      auto t0 = std::chrono::steady_clock::now();
      Count v = theorem1_count(spec);
      double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      rep.rows.push_back({"theorem1", v, dt});
    } catch (const Error& e) {
      if (e.code() != Errc::BetaOnForbiddenSide) throw;
    }
    timed("theorem2", [&] { return theorem2_count(spec); });
  }
  rep.all_agree = true;
  for (const auto& row : rep.rows)
    if (row.value != rep.rows.front().value) rep.all_agree = false;
  return rep;
}

// ---------------------------------------------------------------------------
// sweep
// ---------------------------------------------------------------------------

namespace {

struct DentPool {
  std::vector<DentSpec> alphas;
  std::vector<DentSpec> betas;
};

DentPool dent_pool(const HexDentSpec& base) {
  DentPool pool;
  for (Side s : {Side::Bottom, Side::NorthEast, Side::NorthWest})
    for (long p = 1; p <= side_length(base, s); ++p)
      pool.alphas.push_back({s, static_cast<int>(p), DentKind::Alpha});
  for (Side s : {Side::Top, Side::SouthEast, Side::SouthWest})
    for (long p = 1; p <= side_length(base, s); ++p)
      pool.betas.push_back({s, static_cast<int>(p), DentKind::Beta});
  return pool;
}

bool spec_valid(const HexDentSpec& spec) {
  try {
    validate(spec);
    return true;
  } catch (const Error&) {
    return false;
  }
}

void enumerate_subsets(size_t n, size_t k, const std::function<void(const std::vector<size_t>&)>& f) {
  if (k > n) return;
  std::vector<size_t> idx(k);
  for (size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    f(idx);
    size_t i = k;
    while (i-- > 0) {
      if (idx[i] < n - (k - i)) {
        ++idx[i];
        for (size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        break;
      }
      if (i == 0) return;
    }
    if (k == 0) return;
  }
}

std::vector<HexDentSpec> sweep_configs(const SweepOptions& opt) {
  std::vector<HexDentSpec> configs;
  if (opt.samples == 0) {
    for (long a = 0; a <= opt.amax; ++a)
      for (long b = 0; b <= opt.bmax; ++b)
        for (long c = 0; c <= opt.cmax; ++c)
          for (long k = 0; k <= opt.kmax; ++k) {
            HexDentSpec base{a, b, c, k, {}, {}, false};
            DentPool pool = dent_pool(base);
            for (long n = 0; n <= opt.nmax; ++n) {
              if (static_cast<long>(pool.alphas.size()) < n + k ||
                  static_cast<long>(pool.betas.size()) < n)
                continue;
              enumerate_subsets(pool.alphas.size(), n + k, [&](const std::vector<size_t>& ai) {
                HexDentSpec s = base;
                for (size_t i : ai) s.alphas.push_back(pool.alphas[i]);
                enumerate_subsets(pool.betas.size(), n, [&](const std::vector<size_t>& bi) {
                  HexDentSpec s2 = s;
                  for (size_t i : bi) s2.betas.push_back(pool.betas[i]);
                  if (spec_valid(s2)) configs.push_back(s2);
                });
              });
            }
          }
    return configs;
  }
  std::mt19937_64 rng(opt.seed);
  auto uni = [&](long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
  };
  long guard = 0;
  while (static_cast<long>(configs.size()) < opt.samples && guard < opt.samples * 200) {
    ++guard;
    HexDentSpec s{uni(0, opt.amax), uni(0, opt.bmax), uni(0, opt.cmax), uni(0, opt.kmax),
                  {}, {}, false};
    DentPool pool = dent_pool(s);
    long n = uni(0, opt.nmax);
    if (static_cast<long>(pool.alphas.size()) < n + s.k ||
        static_cast<long>(pool.betas.size()) < n)
      continue;
    std::shuffle(pool.alphas.begin(), pool.alphas.end(), rng);
    std::shuffle(pool.betas.begin(), pool.betas.end(), rng);
    s.alphas.assign(pool.alphas.begin(), pool.alphas.begin() + n + s.k);
    s.betas.assign(pool.betas.begin(), pool.betas.begin() + n);
    if (spec_valid(s)) configs.push_back(s);
  }
  return configs;
}

int sweep_threads(const SweepOptions& opt) {
  if (opt.threads > 0) return opt.threads;
  if (const char* env = std::getenv("DENTHEX_THREADS")) {
    int t = std::atoi(env);
    if (t > 0) return t;
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

}  // namespace

SweepReport run_sweep(const SweepOptions& opt) {
  std::vector<HexDentSpec> configs = sweep_configs(opt);
  SweepReport rep;
  rep.configs = static_cast<long>(configs.size());

  std::atomic<size_t> next{0};
  std::mutex mu;
  auto worker = [&] {
    while (true) {
      size_t i = next.fetch_add(1);
      if (i >= configs.size()) break;
      const HexDentSpec& spec = configs[i];
      std::string detail;
      try {
        Count want = count_tilings(build_hexagon(spec));
        if (spec.k == 0) {
          Count got = theorem3_count(spec);
          if (got != want) detail = "theorem3 " + got.get_str() + " != oracle " + want.get_str();
        } else {
          if (sw_beta_free(spec)) {
            Count got = theorem1_count(spec);
            if (got != want)
              detail = "theorem1 " + got.get_str() + " != oracle " + want.get_str();
          }
          if (detail.empty()) {
            Count got = theorem2_count(spec);
            if (got != want)
              detail = "theorem2 " + got.get_str() + " != oracle " + want.get_str();
          }
        }
      } catch (const Error& e) {
        detail = std::string("error: ") + e.what();
      }
      if (!detail.empty()) {
        std::lock_guard<std::mutex> lk(mu);
        rep.failures.push_back({spec_to_json(spec), detail});
      }
    }
  };
  int nthreads = sweep_threads(opt);
  std::vector<std::thread> pool;
  for (int t = 1; t < nthreads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return rep;
}

// ---------------------------------------------------------------------------
// identity suite
// ---------------------------------------------------------------------------

namespace {

Rat random_rat(std::mt19937_64& rng, long lo, long hi) {
  std::uniform_int_distribution<long> num(lo, hi);
  std::uniform_int_distribution<int> pick(0, 4);
  int denoms[] = {1, 1, 1, 2, 3};
  return make_rat(num(rng), denoms[pick(rng)]);
}

bool evaluable(const std::vector<Rat>& upper, const std::vector<Rat>& lower) {
  try {
    hyp_eval({upper, lower, Rat(1)});
    return true;
  } catch (const Error&) {
    return false;
  }
}

long run_trials(long trials, const std::function<bool(std::mt19937_64&)>& one,
                std::mt19937_64& rng) {
  long passed = 0;
  for (long t = 0; t < trials; ++t)
    if (one(rng)) ++passed;
  return passed;
}

bool trial_chu_vandermonde(std::mt19937_64& rng) {
  for (int attempt = 0; attempt < 200; ++attempt) {
    long n = std::uniform_int_distribution<long>(0, 8)(rng);
    Rat x = random_rat(rng, -20, 20);
    Rat y = random_rat(rng, 1, 25);
    if (pochhammer(y, n) == 0) continue;
    if (!evaluable({x, Rat(-n)}, {y})) continue;
    return check_chu_vandermonde(x, y, n);
  }
  return false;
}

bool trial_pfaff_saalschutz(std::mt19937_64& rng) {
  for (int attempt = 0; attempt < 200; ++attempt) {
    long n = std::uniform_int_distribution<long>(0, 6)(rng);
    Rat w = random_rat(rng, -15, 15);
    Rat x = random_rat(rng, -15, 15);
    Rat y = random_rat(rng, 1, 20);
    Rat s = 1 + w + x - y - n;
    if (pochhammer(y, n) == 0 || pochhammer(y - w - x, n) == 0) continue;
    if (!evaluable({w, x, Rat(-n)}, {y, s})) continue;
    return check_pfaff_saalschutz(w, x, y, n);
  }
  return false;
}

bool trial_contiguous(ContigRel rel, std::mt19937_64& rng) {
  for (int attempt = 0; attempt < 500; ++attempt) {
    long n = std::uniform_int_distribution<long>(1, 5)(rng);
    // anchor the termination in a non-designated upper parameter
    ContigInstance inst;
    bool two_lower = rel == ContigRel::C57;
    bool two_upper_designated =
        rel == ContigRel::C54 || rel == ContigRel::C55 || rel == ContigRel::C30;
    inst.series.upper = {Rat(-n), random_rat(rng, -8, 8)};
    inst.series.lower = {random_rat(rng, 3, 14)};
    if (two_upper_designated) inst.series.upper.push_back(random_rat(rng, -8, 8));
    if (two_lower) inst.series.lower.push_back(random_rat(rng, 3, 14));
    inst.series.lower.push_back(random_rat(rng, 3, 14));
    // alternate between z = 1 (where these relations get applied) and a generic z
    inst.series.z = (attempt % 2 == 0) ? Rat(1) : make_rat(2, 3);

    switch (rel) {
      case ContigRel::C40:
      case ContigRel::C42:
        inst.u0 = 1;
        inst.l0 = 0;
        break;
      case ContigRel::C30:
        inst.u0 = 1;
        inst.u1 = 2;
        break;
      case ContigRel::C54:
      case ContigRel::C55:
        inst.u0 = 1;
        inst.u1 = 2;
        inst.l0 = 0;
        break;
      case ContigRel::C57:
        inst.u0 = 1;
        inst.l0 = 0;
        inst.l1 = 1;
        break;
    }
    try {
      return check_contiguous(rel, inst);
    } catch (const Error& e) {
      if (e.code() == Errc::InstanceNotEvaluable) continue;
      throw;
    }
  }
  return false;
}

// random valid dented hexagon: k and beta-count small, dents drawn from the
// side pools, rejected on duplicate cells
HexDentSpec random_dented_hexagon(std::mt19937_64& rng, long maxside, long maxk, long maxn) {
  std::uniform_int_distribution<long> d1(1, maxside), dk(0, maxk), dn(0, maxn);
  for (int attempt = 0; attempt < 200; ++attempt) {
    HexDentSpec s{d1(rng), d1(rng), d1(rng), dk(rng), {}, {}, false};
    DentPool pool = dent_pool(s);
    long n = dn(rng);
    if (static_cast<long>(pool.alphas.size()) < n + s.k ||
        static_cast<long>(pool.betas.size()) < n)
      continue;
    std::shuffle(pool.alphas.begin(), pool.alphas.end(), rng);
    std::shuffle(pool.betas.begin(), pool.betas.end(), rng);
    s.alphas.assign(pool.alphas.begin(), pool.alphas.begin() + n + s.k);
    s.betas.assign(pool.betas.begin(), pool.betas.begin() + n);
    if (spec_valid(s)) return s;
  }
  return {1, 1, 1, 0, {}, {}, false};
}

// boundary alpha/beta cells in counterclockwise walk order
std::vector<std::pair<bool, UnitTriangle>> boundary_cells_ccw(const HexDentSpec& spec) {
  std::vector<std::pair<bool, UnitTriangle>> out;
  std::vector<UnitTriangle> seen;
  auto emit = [&](bool up, const UnitTriangle& t) {
    for (const auto& s : seen)
      if (s == t) return;
    seen.push_back(t);
    out.push_back({up, t});
  };
  HexDentSpec base = spec;
  base.alphas.clear();
  base.betas.clear();
  for (Side s : {Side::SouthWest, Side::Bottom, Side::SouthEast, Side::NorthEast, Side::Top,
                 Side::NorthWest}) {
    bool up = s == Side::Bottom || s == Side::NorthEast || s == Side::NorthWest;
    for (long p = 1; p <= side_length(base, s); ++p) {
      try {
        emit(up, dent_to_cell(base, {s, static_cast<int>(p),
                                     up ? DentKind::Alpha : DentKind::Beta}));
      } catch (const Error&) {
      }
    }
  }
  return out;
}

bool trial_kuo(bool four_one, std::mt19937_64& rng) {
  for (int attempt = 0; attempt < 500; ++attempt) {
    HexDentSpec spec = random_dented_hexagon(rng, 2, 1, 1);
    Region region = build_hexagon(spec);
    auto all_bd = boundary_cells_ccw(spec);
    std::vector<std::pair<bool, UnitTriangle>> bd;
    for (const auto& e : all_bd)
      if (region.contains(e.second)) bd.push_back(e);
    if (bd.size() < 4) continue;
    std::vector<size_t> pick(4);
    std::uniform_int_distribution<size_t> di(0, bd.size() - 1);
    for (auto& p : pick) p = di(rng);
    std::sort(pick.begin(), pick.end());
    if (pick[0] == pick[1] || pick[1] == pick[2] || pick[2] == pick[3]) continue;
    std::vector<bool> pat;
    std::vector<UnitTriangle> cells;
    for (size_t p : pick) {
      pat.push_back(bd[p].first);
      cells.push_back(bd[p].second);
    }
    // rotate so the pattern starts with an up cell
    for (int r = 0; r < 4; ++r) {
      bool ok = four_one
                    ? (pat[0] && !pat[1] && pat[2] && !pat[3])
                    : (pat[0] && pat[1] && !pat[2] && !pat[3]);
      if (ok) {
        return four_one
                   ? check_kuo_four_one(region, cells[0], cells[1], cells[2], cells[3])
                   : check_kuo_two_two(region, cells[0], cells[1], cells[2], cells[3]);
      }
      std::rotate(pat.begin(), pat.begin() + 1, pat.end());
      std::rotate(cells.begin(), cells.begin() + 1, cells.end());
    }
  }
  return false;
}

bool trial_rec_adjacent(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> dac(2, 4), db(1, 3);
  long a = dac(rng), c = dac(rng), b = db(rng);
  long j = std::uniform_int_distribution<long>(1, a - 1)(rng);
  long k = std::uniform_int_distribution<long>(1, c - 1)(rng);
  return check_rec_adjacent(a, b, c, j, k);
}

bool trial_rec_opposite(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> da(3, 5), dbc(1, 3);
  long a = da(rng), b = dbc(rng), c = dbc(rng);
  std::uniform_int_distribution<long> dij(2, a - 1);
  return check_rec_opposite(a, b, c, dij(rng), dij(rng));
}

}  // namespace

IdentityReport run_identities(long trials, uint64_t seed) {
  IdentityReport rep;
  std::mt19937_64 rng(seed);
  auto add = [&](const std::string& name, const std::function<bool(std::mt19937_64&)>& one) {
    long passed = run_trials(trials, one, rng);
    rep.results.push_back({name, passed == trials});
  };
  add("chu-vandermonde", trial_chu_vandermonde);
  add("pfaff-saalschutz", trial_pfaff_saalschutz);
  add("C30", [](std::mt19937_64& r) { return trial_contiguous(ContigRel::C30, r); });
  add("C40", [](std::mt19937_64& r) { return trial_contiguous(ContigRel::C40, r); });
  add("C42", [](std::mt19937_64& r) { return trial_contiguous(ContigRel::C42, r); });
  add("C54", [](std::mt19937_64& r) { return trial_contiguous(ContigRel::C54, r); });
  add("C55", [](std::mt19937_64& r) { return trial_contiguous(ContigRel::C55, r); });
  add("C57", [](std::mt19937_64& r) { return trial_contiguous(ContigRel::C57, r); });
  add("kuo-2.1", [](std::mt19937_64& r) { return trial_kuo(true, r); });
  add("kuo-2.3", [](std::mt19937_64& r) { return trial_kuo(false, r); });
  add("rec-adjacent", trial_rec_adjacent);
  add("rec-opposite", trial_rec_opposite);
  rep.all_pass = true;
  for (const auto& [name, ok] : rep.results)
    if (!ok) rep.all_pass = false;
  return rep;
}

}  // namespace denthex
