#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

#include "denthex/exact.hpp"

namespace denthex {

/// A unit lattice triangle in axial coordinates. The up triangle (x,y) has
/// corners (x,y), (x+1,y), (x,y+1); the down triangle (x,y) has corners
/// (x+1,y), (x,y+1), (x+1,y+1). Down(x,y) shares edges with exactly
/// Up(x,y), Up(x+1,y) and Up(x,y+1).
struct UnitTriangle {
  int x = 0;
  int y = 0;
  bool up = true;
  auto operator<=>(const UnitTriangle&) const = default;
};

/// The three cells of opposite orientation sharing an edge with t (not all of
/// them need exist in a given region).
std::array<UnitTriangle, 3> cell_neighbors(const UnitTriangle& t);

/// Hexagon sides in clockwise order from the top. For H^k_{a,b,c} the lengths
/// are a, b+k, c, a+k, b, c+k.
enum class Side { Top, NorthEast, SouthEast, Bottom, SouthWest, NorthWest };

enum class DentKind { Alpha, Beta };

/// One removed boundary cell. Positions are 1-based along the counterclockwise
/// boundary walk that starts at the western corner: Bottom west->east, SE and
/// NE south->north, Top east->west, NW and SW north->south.
struct DentSpec {
  Side side;
  int pos;
  DentKind kind;
};

struct HexDentSpec {
  long a = 0, b = 0, c = 0;
  long k = 0;
  std::vector<DentSpec> alphas;
  std::vector<DentSpec> betas;
  bool barred = false;
};

/// Immutable cell set with set semantics (sorted, unique).
class Region {
 public:
  Region() = default;
  explicit Region(std::vector<UnitTriangle> cells);

  const std::vector<UnitTriangle>& cells() const { return cells_; }
  bool contains(const UnitTriangle& t) const;
  bool empty() const { return cells_.empty(); }
  size_t size() const { return cells_.size(); }
  long up_count() const;
  long down_count() const { return static_cast<long>(size()) - up_count(); }

  /// Copy with the given cells removed; throws InvalidParams if one is absent.
  Region without(const std::vector<UnitTriangle>& rm) const;

  bool operator==(const Region&) const = default;

 private:
  std::vector<UnitTriangle> cells_;
};

long side_length(const HexDentSpec& spec, Side side);

/// The boundary cell at 1-based position pos along side (counterclockwise
/// convention above). Throws InvalidDent when out of range or when the cell is
/// not an actual cell of the (possibly degenerate) hexagon.
UnitTriangle dent_to_cell(const HexDentSpec& spec, const DentSpec& d);

/// gamma_j, 1-based: the j-th appended down-pointing cell below the bottom
/// side, counted from the west. Requires barred and 1 <= j <= k.
UnitTriangle gamma_cell(const HexDentSpec& spec, int j);

/// Cell set of the undented hexagon H^k_{a,b,c} in canonical position
/// (western corner at the origin).
Region hexagon_cells(long a, long b, long c, long k);

/// Checks all HexDentSpec invariants; throws InvalidDent / InvalidParams.
void validate(const HexDentSpec& spec);

/// H^k_{a,b,c} (plus gamma strip if barred) minus all dent cells.
Region build_hexagon(const HexDentSpec& spec);

struct DentLabel {
  enum Kind { Alpha, Beta, Gamma } kind;
  int index;  // 0-based into spec.alphas / spec.betas, or gamma number - 1
  UnitTriangle cell;
};

/// delta_1..delta_{2n+2k}: all alpha, beta (and gamma when barred) cells in
/// the fixed counterclockwise boundary walk from the western corner. Ties
/// (gamma and alpha over the same bottom interval) break gamma before alpha;
/// cells shared by two degenerate sides are emitted once.
std::vector<DentLabel> cyclic_order(const HexDentSpec& spec);

/// Planar dual restricted to the region: one vertex per cell, edges between
/// edge-sharing cells of opposite orientation. Vertex order is the region's
/// canonical cell order.
struct Graph {
  std::vector<UnitTriangle> verts;
  std::vector<std::vector<int>> adj;
};
Graph dual_graph(const Region& r);

/// A lozenge as its (up, down) cell pair.
using Lozenge = std::pair<UnitTriangle, UnitTriangle>;

struct ReduceResult {
  bool untileable = false;
  Region residual;
  std::vector<Lozenge> forced;
};

/// Repeatedly removes cells with a unique live neighbor (recording the forced
/// lozenge); a cell with no live neighbor marks the region untileable. The
/// residual is order-independent; the deterministic overload processes cells
/// in canonical order, the seeded one in shuffled order (for confluence tests).
ReduceResult reduce_forced(const Region& r);
ReduceResult reduce_forced(const Region& r, uint64_t shuffle_seed);

/// One of the 12 dihedral symmetries of the triangular lattice: an optional
/// reflection (swap of axial coordinates) followed by rot sixth-turns.
struct Symmetry {
  int rot = 0;
  bool reflect = false;
  UnitTriangle apply(const UnitTriangle& t) const;
};
const std::array<Symmetry, 12>& all_symmetries();

Region apply_symmetry(const Region& r, const Symmetry& g);

/// Translates so the minimal x and y cell coordinates are zero.
Region normalize_translation(const Region& r);

/// Lexicographically smallest normalized image over the 12 symmetries;
/// regions equal up to symmetry and translation share this signature.
std::vector<UnitTriangle> canonical_signature(const Region& r);

enum class RegionTag {
  Empty,
  Untileable,
  PlainHexagon,
  TrapezoidTopDents,
  NotchRegionA,
  NotchRegionB,
  HexTwoDentsAdjacent,
  HexTwoDentsOpposite,
  Unknown,
};

/// Classification result with extracted formula parameters.
///   PlainHexagon: a,b,c.   TrapezoidTopDents: m,n,xs (CLP positions).
///   NotchRegionA/B: a,b,c,k,l.   HexTwoDentsAdjacent: a,b,c,j,k.
///   HexTwoDentsOpposite: a,b,c,i,j.
/// symmetry records which of all_symmetries() mapped the input onto the
/// canonical template orientation.
struct RegionClass {
  RegionTag tag = RegionTag::Unknown;
  int symmetry = -1;
  long a = 0, b = 0, c = 0;
  long k = 0, l = 0;
  long i = 0, j = 0;
  long m = 0, n = 0;
  std::vector<long> xs;
};

/// Recognizes, up to translation and the 12 dihedral symmetries, the region
/// families with known product/hypergeometric formulas. A candidate template
/// region is rebuilt from the extracted parameters and accepted when it equals
/// the input cell-for-cell, or when its forced reduction does (so both
/// structural regions and forced-reduced residuals match).
RegionClass classify(const Region& r);

/// Cells of the up-pointing lattice triangle of the given side whose
/// bottom-left unit cell is Up(x, y).
std::vector<UnitTriangle> up_triangle_cells(int x, int y, long side);

// Canonical template builders (also used by tests and the formula module).

/// The CLP region T_{m,n}(x_1..x_n) (trapezoid m, n, m+n, n with the top
/// down-cells at positions xs removed), stored as its half-turn image in
/// canonical coordinates.
Region build_clp_trapezoid_region(long m, long n, const std::vector<long>& xs);

/// H_{a,b,c}(k,l) (variant A, notch one unit above the eastern corner) or
/// H'_{a,b,c}(k,l) (variant B, one unit below the northeastern corner).
Region build_notch_region(bool variant_b, long a, long b, long c, long k, long l);

/// H_{a,b,c} with an up dent on the bottom at position j and a down dent on
/// the southeastern side at position k, both counted from their common vertex.
Region build_adjacent_dents_region(long a, long b, long c, long j, long k);

/// H_{a,b,c} with an up dent on the bottom at position i from the southwestern
/// corner and a down dent on the top at position j from the northwestern one.
Region build_opposite_dents_region(long a, long b, long c, long i, long j);

/// H^K_{a,b,c} minus K bottom up-cells at from-west positions ps.
Region build_hex_bottom_dents_region(long a, long b, long c, long K,
                                     const std::vector<long>& ps);

/// The 120-degree rotation image of a spec: (a,b,c) -> (c,a,b), sides
/// Top->SW, NE->NW, SE->Top, Bottom->NE, SW->SE, NW->Bottom, positions kept.
HexDentSpec rotate_spec_120(const HexDentSpec& spec);

}  // namespace denthex
