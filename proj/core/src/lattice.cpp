#include "denthex/lattice.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace denthex {

std::array<UnitTriangle, 3> cell_neighbors(const UnitTriangle& t) {
  if (t.up)
    return {UnitTriangle{t.x, t.y, false}, UnitTriangle{t.x - 1, t.y, false},
            UnitTriangle{t.x, t.y - 1, false}};
  return {UnitTriangle{t.x, t.y, true}, UnitTriangle{t.x + 1, t.y, true},
          UnitTriangle{t.x, t.y + 1, true}};
}

Region::Region(std::vector<UnitTriangle> cells) : cells_(std::move(cells)) {
  std::sort(cells_.begin(), cells_.end());
  cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
}

bool Region::contains(const UnitTriangle& t) const {
  return std::binary_search(cells_.begin(), cells_.end(), t);
}

long Region::up_count() const {
  long n = 0;
  for (const auto& t : cells_)
    if (t.up) ++n;
  return n;
}

Region Region::without(const std::vector<UnitTriangle>& rm) const {
  std::vector<UnitTriangle> out = cells_;
  for (const auto& t : rm) {
    auto it = std::lower_bound(out.begin(), out.end(), t);
    if (it == out.end() || *it != t)
      throw Error(Errc::InvalidParams, "removing a cell that is not in the region");
    out.erase(it);
  }
  Region r;
  r.cells_ = std::move(out);
  return r;
}

long side_length(const HexDentSpec& s, Side side) {
  switch (side) {
    case Side::Top: return s.a;
    case Side::NorthEast: return s.b + s.k;
    case Side::SouthEast: return s.c;
    case Side::Bottom: return s.a + s.k;
    case Side::SouthWest: return s.b;
    case Side::NorthWest: return s.c + s.k;
  }
  throw Error(Errc::InvalidParams, "bad side");
}

namespace {

bool in_hexagon(long a, long b, long c, long k, const UnitTriangle& t) {
  long s = t.x + static_cast<long>(t.y);
  if (t.x < 0 || t.x > a + b + k - 1) return false;
  if (t.y < -b || t.y > c + k - 1) return false;
  if (t.up) return 0 <= s && s <= a + c + k - 1;
  return -1 <= s && s <= a + c + k - 2;
}

UnitTriangle side_cell_raw(const HexDentSpec& s, Side side, long p) {
  const long a = s.a, b = s.b, c = s.c, k = s.k;
  switch (side) {
    case Side::SouthWest: return {static_cast<int>(p - 1), static_cast<int>(-p), false};
    case Side::Bottom: return {static_cast<int>(b + p - 1), static_cast<int>(-b), true};
    case Side::SouthEast:
      return {static_cast<int>(a + b + k - 1), static_cast<int>(-b + p - 1), false};
    case Side::NorthEast:
      return {static_cast<int>(a + b + k - p), static_cast<int>(c - b + p - 1), true};
    case Side::Top: return {static_cast<int>(a - p), static_cast<int>(c + k - 1), false};
    case Side::NorthWest: return {0, static_cast<int>(c + k - p), true};
  }
  throw Error(Errc::InvalidParams, "bad side");
}

bool alpha_side(Side s) {
  return s == Side::Bottom || s == Side::NorthEast || s == Side::NorthWest;
}

}  // namespace

UnitTriangle dent_to_cell(const HexDentSpec& spec, const DentSpec& d) {
  if ((d.kind == DentKind::Alpha) != alpha_side(d.side))
    throw Error(Errc::InvalidDent, "dent kind inconsistent with side");
  if (d.pos < 1 || d.pos > side_length(spec, d.side))
    throw Error(Errc::InvalidDent, "dent position out of range");
  UnitTriangle t = side_cell_raw(spec, d.side, d.pos);
  if (!in_hexagon(spec.a, spec.b, spec.c, spec.k, t))
    throw Error(Errc::InvalidDent, "dent position names no cell of this hexagon");
  return t;
}

UnitTriangle gamma_cell(const HexDentSpec& spec, int j) {
  if (!spec.barred || j < 1 || j > spec.k)
    throw Error(Errc::InvalidParams, "gamma index out of range");
  return {static_cast<int>(spec.b + j - 1), static_cast<int>(-spec.b - 1), false};
}

Region hexagon_cells(long a, long b, long c, long k) {
  std::vector<UnitTriangle> cells;
  for (long x = 0; x <= a + b + k - 1; ++x) {
    for (long y = -b; y <= c + k - 1; ++y) {
      long s = x + y;
      if (0 <= s && s <= a + c + k - 1)
        cells.push_back({static_cast<int>(x), static_cast<int>(y), true});
      if (-1 <= s && s <= a + c + k - 2)
        cells.push_back({static_cast<int>(x), static_cast<int>(y), false});
    }
  }
  return Region(std::move(cells));
}

void validate(const HexDentSpec& spec) {
  if (spec.a < 0 || spec.b < 0 || spec.c < 0 || spec.k < 0)
    throw Error(Errc::InvalidParams, "negative hexagon parameter");
  if (static_cast<long>(spec.alphas.size()) - static_cast<long>(spec.betas.size()) != spec.k)
    throw Error(Errc::InvalidParams, "need |alphas| - |betas| = k");
  std::set<UnitTriangle> seen;
  for (const auto& d : spec.alphas) {
    if (d.kind != DentKind::Alpha) throw Error(Errc::InvalidDent, "beta dent in alpha list");
    if (!seen.insert(dent_to_cell(spec, d)).second)
      throw Error(Errc::InvalidDent, "duplicate dent cell");
  }
  for (const auto& d : spec.betas) {
    if (d.kind != DentKind::Beta) throw Error(Errc::InvalidDent, "alpha dent in beta list");
    if (!seen.insert(dent_to_cell(spec, d)).second)
      throw Error(Errc::InvalidDent, "duplicate dent cell");
  }
}

Region build_hexagon(const HexDentSpec& spec) {
  validate(spec);
  std::vector<UnitTriangle> cells = hexagon_cells(spec.a, spec.b, spec.c, spec.k).cells();
  if (spec.barred)
    for (int j = 1; j <= spec.k; ++j) cells.push_back(gamma_cell(spec, j));
  Region base(std::move(cells));
  std::vector<UnitTriangle> rm;
  for (const auto& d : spec.alphas) rm.push_back(dent_to_cell(spec, d));
  for (const auto& d : spec.betas) rm.push_back(dent_to_cell(spec, d));
  return base.without(rm);
}

std::vector<DentLabel> cyclic_order(const HexDentSpec& spec) {
  validate(spec);
  std::map<UnitTriangle, std::pair<DentLabel::Kind, int>> lookup;
  for (size_t i = 0; i < spec.alphas.size(); ++i)
    lookup[dent_to_cell(spec, spec.alphas[i])] = {DentLabel::Alpha, static_cast<int>(i)};
  for (size_t i = 0; i < spec.betas.size(); ++i)
    lookup[dent_to_cell(spec, spec.betas[i])] = {DentLabel::Beta, static_cast<int>(i)};

  std::vector<DentLabel> out;
  std::set<UnitTriangle> emitted;
  auto emit_dent = [&](const UnitTriangle& cell) {
    auto it = lookup.find(cell);
    if (it != lookup.end() && emitted.insert(cell).second)
      out.push_back({it->second.first, it->second.second, cell});
  };
  // counterclockwise walk from the western corner
  for (long p = 1; p <= side_length(spec, Side::SouthWest); ++p)
    emit_dent(side_cell_raw(spec, Side::SouthWest, p));
  for (long p = 1; p <= side_length(spec, Side::Bottom); ++p) {
    if (spec.barred && p <= spec.k) {
      UnitTriangle g = gamma_cell(spec, static_cast<int>(p));
      if (emitted.insert(g).second) out.push_back({DentLabel::Gamma, static_cast<int>(p - 1), g});
    }
    emit_dent(side_cell_raw(spec, Side::Bottom, p));
  }
  for (long p = 1; p <= side_length(spec, Side::SouthEast); ++p)
    emit_dent(side_cell_raw(spec, Side::SouthEast, p));
  for (long p = 1; p <= side_length(spec, Side::NorthEast); ++p)
    emit_dent(side_cell_raw(spec, Side::NorthEast, p));
  for (long p = 1; p <= side_length(spec, Side::Top); ++p)
    emit_dent(side_cell_raw(spec, Side::Top, p));
  for (long p = 1; p <= side_length(spec, Side::NorthWest); ++p)
    emit_dent(side_cell_raw(spec, Side::NorthWest, p));
  return out;
}

Graph dual_graph(const Region& r) {
  Graph g;
  g.verts = r.cells();
  g.adj.resize(g.verts.size());
  auto index_of = [&](const UnitTriangle& t) -> int {
    auto it = std::lower_bound(g.verts.begin(), g.verts.end(), t);
    if (it == g.verts.end() || *it != t) return -1;
    return static_cast<int>(it - g.verts.begin());
  };
  for (size_t i = 0; i < g.verts.size(); ++i) {
    for (const auto& nb : cell_neighbors(g.verts[i])) {
      int j = index_of(nb);
      if (j >= 0) g.adj[i].push_back(j);
    }
  }
  return g;
}

namespace {

ReduceResult reduce_impl(const Region& r, std::mt19937_64* rng) {
  Graph g = dual_graph(r);
  const int n = static_cast<int>(g.verts.size());
  std::vector<char> alive(n, 1);
  std::vector<int> deg(n, 0);
  for (int i = 0; i < n; ++i) deg[i] = static_cast<int>(g.adj[i].size());

  ReduceResult res;
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  if (rng) std::shuffle(order.begin(), order.end(), *rng);

  auto remove_vertex = [&](int v) {
    alive[v] = 0;
    for (int w : g.adj[v])
      if (alive[w]) --deg[w];
  };

  bool changed = true;
  while (changed) {
    changed = false;
    for (int v : order) {
      if (!alive[v]) continue;
      if (deg[v] == 0) {
        res.untileable = true;
        return res;
      }
      if (deg[v] == 1) {
        int w = -1;
        for (int u : g.adj[v])
          if (alive[u]) w = u;
        remove_vertex(v);
        remove_vertex(w);
        const UnitTriangle &tv = g.verts[v], &tw = g.verts[w];
        res.forced.push_back(tv.up ? Lozenge{tv, tw} : Lozenge{tw, tv});
        changed = true;
      }
    }
  }
  std::vector<UnitTriangle> residual;
  for (int i = 0; i < n; ++i)
    if (alive[i]) residual.push_back(g.verts[i]);
  res.residual = Region(std::move(residual));
  std::sort(res.forced.begin(), res.forced.end());
  return res;
}

}  // namespace

ReduceResult reduce_forced(const Region& r) { return reduce_impl(r, nullptr); }

ReduceResult reduce_forced(const Region& r, uint64_t shuffle_seed) {
  std::mt19937_64 rng(shuffle_seed);
  return reduce_impl(r, &rng);
}

namespace {

UnitTriangle rot60(const UnitTriangle& t) {
  if (t.up) return {-t.y - 1, t.x + t.y, false};
  return {-t.y - 1, t.x + t.y + 1, true};
}

}  // namespace

UnitTriangle Symmetry::apply(const UnitTriangle& t) const {
  UnitTriangle u = reflect ? UnitTriangle{t.y, t.x, t.up} : t;
  for (int i = 0; i < rot; ++i) u = rot60(u);
  return u;
}

const std::array<Symmetry, 12>& all_symmetries() {
  static const std::array<Symmetry, 12> syms = [] {
    std::array<Symmetry, 12> s{};
    for (int refl = 0; refl < 2; ++refl)
      for (int rot = 0; rot < 6; ++rot) s[refl * 6 + rot] = Symmetry{rot, refl == 1};
    return s;
  }();
  return syms;
}

Region apply_symmetry(const Region& r, const Symmetry& g) {
  std::vector<UnitTriangle> cells;
  cells.reserve(r.size());
  for (const auto& t : r.cells()) cells.push_back(g.apply(t));
  return Region(std::move(cells));
}

Region normalize_translation(const Region& r) {
  if (r.empty()) return r;
  int mx = r.cells()[0].x, my = r.cells()[0].y;
  for (const auto& t : r.cells()) {
    mx = std::min(mx, t.x);
    my = std::min(my, t.y);
  }
  std::vector<UnitTriangle> cells;
  cells.reserve(r.size());
  for (const auto& t : r.cells()) cells.push_back({t.x - mx, t.y - my, t.up});
  return Region(std::move(cells));
}

std::vector<UnitTriangle> canonical_signature(const Region& r) {
  std::vector<UnitTriangle> best;
  bool first = true;
  for (const auto& g : all_symmetries()) {
    auto img = normalize_translation(apply_symmetry(r, g)).cells();
    if (first || img < best) {
      best = std::move(img);
      first = false;
    }
  }
  return best;
}

std::vector<UnitTriangle> up_triangle_cells(int x, int y, long side) {
  std::vector<UnitTriangle> out;
  for (long i = 0; i < side; ++i)
    for (long j = 0; j < side - i; ++j)
      out.push_back({static_cast<int>(x + i), static_cast<int>(y + j), true});
  for (long i = 0; i + 1 < side; ++i)
    for (long j = 0; j < side - 1 - i; ++j)
      out.push_back({static_cast<int>(x + i), static_cast<int>(y + j), false});
  return out;
}

// ---------------------------------------------------------------------------
// classification
// ---------------------------------------------------------------------------

namespace {

struct Bounds {
  long x0, x1, y0, y1, s0, s1;
};

Bounds bounds_of(const Region& r) {
  Bounds b{};
  bool first = true;
  for (const auto& t : r.cells()) {
    std::array<std::pair<long, long>, 3> corners;
    if (t.up)
      corners = {{{t.x, t.y}, {t.x + 1, t.y}, {t.x, t.y + 1}}};
    else
      corners = {{{t.x + 1, t.y}, {t.x, t.y + 1}, {t.x + 1, t.y + 1}}};
    for (auto [px, py] : corners) {
      long s = px + py;
      if (first) {
        b = {px, px, py, py, s, s};
        first = false;
      } else {
        b.x0 = std::min(b.x0, px);
        b.x1 = std::max(b.x1, px);
        b.y0 = std::min(b.y0, py);
        b.y1 = std::max(b.y1, py);
        b.s0 = std::min(b.s0, s);
        b.s1 = std::max(b.s1, s);
      }
    }
  }
  return b;
}

Region box_region(const Bounds& b) {
  std::vector<UnitTriangle> cells;
  for (long x = b.x0; x <= b.x1 - 1; ++x) {
    for (long y = b.y0; y <= b.y1 - 1; ++y) {
      long s = x + y;
      if (b.s0 <= s && s <= b.s1 - 1)
        cells.push_back({static_cast<int>(x), static_cast<int>(y), true});
      if (b.s0 - 1 <= s && s <= b.s1 - 2)
        cells.push_back({static_cast<int>(x), static_cast<int>(y), false});
    }
  }
  return Region(std::move(cells));
}

bool matches(const Region& candidate, const Region& target) {
  if (candidate == target) return true;
  ReduceResult rr = reduce_forced(candidate);
  return !rr.untileable && rr.residual == target;
}

std::vector<long> clp_positions(long a, long b, long c, long K, const std::vector<long>& ps) {
  // hexagon-with-bottom-dents as a CLP trapezoid T_{a, b+c+K}: a run of c
  // dents on the left, the real dents mirrored, a run of b dents on the right
  std::vector<long> xs;
  for (long x = 1; x <= c; ++x) xs.push_back(x);
  std::vector<long> mid;
  for (long p : ps) mid.push_back(c + (a + K + 1 - p));
  std::sort(mid.begin(), mid.end());
  xs.insert(xs.end(), mid.begin(), mid.end());
  for (long x = a + c + K + 1; x <= a + b + c + K; ++x) xs.push_back(x);
  return xs;
}

// subset enumeration over small candidate lists
bool next_combination(std::vector<size_t>& idx, size_t n) {
  size_t k = idx.size();
  for (size_t i = k; i-- > 0;) {
    if (idx[i] < n - (k - i)) {
      ++idx[i];
      for (size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

RegionClass classify(const Region& r) {
  RegionClass out;
  if (r.empty()) {
    out.tag = RegionTag::Empty;
    return out;
  }
  if (r.up_count() != r.down_count()) {
    out.tag = RegionTag::Untileable;
    return out;
  }
  const auto& syms = all_symmetries();
  for (int gi = 0; gi < 12; ++gi) {
    Region img = apply_symmetry(r, syms[gi]);
    Bounds bd = bounds_of(img);
    const long top = bd.s1 - bd.y1 - bd.x0, ne = bd.x1 + bd.y1 - bd.s1;
    const long se = bd.s1 - bd.x1 - bd.y0, bot = bd.x1 + bd.y0 - bd.s0;
    const long sw = bd.s0 - bd.x0 - bd.y0, nw = bd.y1 + bd.x0 - bd.s0;
    if (std::min({top, ne, se, bot, sw, nw}) < 0) continue;
    const long K = bot - top;
    if (K != ne - sw || K != nw - se) continue;
    Region box = box_region(bd);
    std::vector<UnitTriangle> dset;
    std::set_difference(box.cells().begin(), box.cells().end(), img.cells().begin(),
                        img.cells().end(), std::back_inserter(dset));
    const long a = top, b = sw, c = se;

    if (K == 0 && dset.empty()) {
      out.tag = RegionTag::PlainHexagon;
      out.symmetry = gi;
      out.a = a;
      out.b = b;
      out.c = c;
      return out;
    }
    std::vector<UnitTriangle> dup, ddn;
    for (const auto& t : dset) (t.up ? dup : ddn).push_back(t);

    if (K >= 1) {
      // trapezoid family: K up dents on the bottom side
      std::vector<UnitTriangle> bot_cands;
      for (const auto& t : dup)
        if (t.y == bd.y0) bot_cands.push_back(t);
      if (static_cast<long>(bot_cands.size()) >= K && bot_cands.size() <= 12) {
        std::vector<size_t> idx(K);
        for (long i = 0; i < K; ++i) idx[i] = i;
        bool more = true;
        while (more) {
          std::vector<UnitTriangle> dents;
          std::vector<long> ps;
          for (size_t ii : idx) {
            dents.push_back(bot_cands[ii]);
            ps.push_back(bot_cands[ii].x - (bd.s0 - bd.y0) + 1);
          }
          bool in_range = true;
          for (long p : ps)
            if (p < 1 || p > a + K) in_range = false;
          if (in_range && matches(box.without(dents), img)) {
            out.tag = RegionTag::TrapezoidTopDents;
            out.symmetry = gi;
            out.m = a;
            out.n = b + c + K;
            out.xs = clp_positions(a, b, c, K, ps);
            return out;
          }
          more = next_combination(idx, bot_cands.size());
        }
      }
      // notch family: one NW up dent plus a side-(K-1) triangle
      const long k = K - 1;
      const long tx = bd.x0, ty = bd.y0 + b;
      for (const auto& w : dup) {
        if (w.x != bd.x0) continue;
        long l = w.y - (bd.s0 - bd.x0);
        if (l < 0 || l > c + k) continue;
        for (int variant = 0; variant < 2; ++variant) {
          long ax = variant == 0 ? a + b + tx : a + 1 + tx;
          long ay = variant == 0 ? c - b + 1 + ty : c + ty;
          std::vector<UnitTriangle> nc = up_triangle_cells(static_cast<int>(ax), static_cast<int>(ay), k);
          bool ok = true;
          for (const auto& t : nc)
            if (t == w || !box.contains(t)) ok = false;
          if (!ok) continue;
          std::vector<UnitTriangle> dents = nc;
          dents.push_back(w);
          if (matches(box.without(dents), img)) {
            out.tag = variant == 0 ? RegionTag::NotchRegionA : RegionTag::NotchRegionB;
            out.symmetry = gi;
            out.a = a;
            out.b = b;
            out.c = c;
            out.k = k;
            out.l = l;
            return out;
          }
        }
      }
    }

    if (K == 0 && !dset.empty()) {
      for (const auto& u : dup) {
        if (u.y != bd.y0) continue;
        // adjacent: up on Bottom (position j from the east), down on SE
        for (const auto& d : ddn) {
          if (d.x != bd.x1 - 1) continue;
          long j = bd.x1 - u.x;
          long kk = d.y - bd.y0 + 1;
          if (j < 1 || j > a || kk < 1 || kk > c) continue;
          if (matches(box.without({u, d}), img)) {
            out.tag = RegionTag::HexTwoDentsAdjacent;
            out.symmetry = gi;
            out.a = a;
            out.b = b;
            out.c = c;
            out.j = j;
            out.k = kk;
            return out;
          }
        }
        // opposite: up on Bottom (i from the west), down on Top (j from the west)
        for (const auto& d : ddn) {
          if (d.y != bd.y1 - 1) continue;
          long i = u.x - (bd.s0 - bd.y0) + 1;
          long j = d.x - bd.x0 + 1;
          if (i < 1 || i > a || j < 1 || j > a) continue;
          if (matches(box.without({u, d}), img)) {
            out.tag = RegionTag::HexTwoDentsOpposite;
            out.symmetry = gi;
            out.a = a;
            out.b = b;
            out.c = c;
            out.i = i;
            out.j = j;
            return out;
          }
        }
      }
    }
  }
  out.tag = RegionTag::Unknown;
  return out;
}

// ---------------------------------------------------------------------------
// canonical template builders
// ---------------------------------------------------------------------------

Region build_hex_bottom_dents_region(long a, long b, long c, long K,
                                     const std::vector<long>& ps) {
  Region base = hexagon_cells(a, b, c, K);
  std::vector<UnitTriangle> rm;
  for (long p : ps) {
    if (p < 1 || p > a + K) throw Error(Errc::InvalidPositions, "bottom dent out of range");
    rm.push_back({static_cast<int>(b + p - 1), static_cast<int>(-b), true});
  }
  return base.without(rm);
}

Region build_clp_trapezoid_region(long m, long n, const std::vector<long>& xs) {
  if (static_cast<long>(xs.size()) != n)
    throw Error(Errc::InvalidPositions, "need exactly n positions");
  for (size_t i = 0; i < xs.size(); ++i) {
    if (xs[i] < 1 || xs[i] > m + n || (i > 0 && xs[i] <= xs[i - 1]))
      throw Error(Errc::InvalidPositions, "positions must be strictly increasing in [1, m+n]");
  }
  // stored as the half-turn image: position x from the left along the top
  // corresponds to from-west position m+n+1-x along this bottom
  std::vector<long> ps;
  for (long x : xs) ps.push_back(m + n + 1 - x);
  return build_hex_bottom_dents_region(m, 0, 0, n, ps);
}

Region build_notch_region(bool variant_b, long a, long b, long c, long k, long l) {
  if (a < 0 || b < 0 || c < 0 || k < 0 || l < 0 || l > c + k)
    throw Error(Errc::InvalidParams, "notch region parameters out of range");
  Region base = hexagon_cells(a, b, c, k + 1);
  UnitTriangle w{0, static_cast<int>(l), true};
  long ax = variant_b ? a + 1 : a + b;
  long ay = variant_b ? c : c - b + 1;
  std::vector<UnitTriangle> rm = up_triangle_cells(static_cast<int>(ax), static_cast<int>(ay), k);
  for (const auto& t : rm)
    if (t == w) throw Error(Errc::InvalidParams, "notch overlaps the northwestern dent");
  rm.push_back(w);
  try {
    return base.without(rm);
  } catch (const Error&) {
    throw Error(Errc::InvalidParams, "notch region removal outside the hexagon");
  }
}

Region build_adjacent_dents_region(long a, long b, long c, long j, long k) {
  if (j < 1 || j > a || k < 1 || k > c)
    throw Error(Errc::InvalidParams, "adjacent-dent positions out of range");
  HexDentSpec s{a, b, c, 0, {}, {}, false};
  UnitTriangle u = side_cell_raw(s, Side::Bottom, a - j + 1);  // j counted from the east
  UnitTriangle d = side_cell_raw(s, Side::SouthEast, k);
  return hexagon_cells(a, b, c, 0).without({u, d});
}

Region build_opposite_dents_region(long a, long b, long c, long i, long j) {
  if (i < 1 || i > a || j < 1 || j > a)
    throw Error(Errc::InvalidParams, "opposite-dent positions out of range");
  HexDentSpec s{a, b, c, 0, {}, {}, false};
  UnitTriangle u = side_cell_raw(s, Side::Bottom, i);
  UnitTriangle d = side_cell_raw(s, Side::Top, a - j + 1);  // j counted from the west
  return hexagon_cells(a, b, c, 0).without({u, d});
}

HexDentSpec rotate_spec_120(const HexDentSpec& spec) {
  if (spec.barred) throw Error(Errc::InvalidParams, "cannot rotate a barred spec");
  auto map_side = [](Side s) {
    switch (s) {
      case Side::Top: return Side::SouthWest;
      case Side::NorthEast: return Side::NorthWest;
      case Side::SouthEast: return Side::Top;
      case Side::Bottom: return Side::NorthEast;
      case Side::SouthWest: return Side::SouthEast;
      case Side::NorthWest: return Side::Bottom;
    }
    throw Error(Errc::InvalidParams, "bad side");
  };
  HexDentSpec out;
  out.a = spec.c;
  out.b = spec.a;
  out.c = spec.b;
  out.k = spec.k;
  out.barred = false;
  for (const auto& d : spec.alphas) out.alphas.push_back({map_side(d.side), d.pos, d.kind});
  for (const auto& d : spec.betas) out.betas.push_back({map_side(d.side), d.pos, d.kind});
  return out;
}

}  // namespace denthex
