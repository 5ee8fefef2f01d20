#include <doctest.h>

#include <random>
#include <set>

#include "denthex/exact.hpp"
#include "denthex/oracle.hpp"
#include "support.hpp"

using namespace denthex;

TEST_CASE("count_tilings basics") {
  CHECK(count_tilings(Region{}) == 1);
  CHECK(count_tilings(hexagon_cells(1, 1, 1, 0)) == 2);
  CHECK(count_tilings(hexagon_cells(2, 2, 2, 0)) == macmahon(2, 2, 2));
  // unbalanced regions have no tilings
  CHECK(count_tilings(hexagon_cells(2, 2, 2, 1)) == 0);
  Region lone(std::vector<UnitTriangle>{{0, 0, true}});
  CHECK(count_tilings(lone) == 0);
}

TEST_CASE("enumerate_tilings") {
  Region unit = hexagon_cells(1, 1, 1, 0);
  auto all = enumerate_tilings(unit, 10);
  REQUIRE(all.size() == 2);
  CHECK(all[0] != all[1]);
  for (const auto& tiling : all) CHECK(tiling.size() == 3);

  CHECK(enumerate_tilings(hexagon_cells(1, 1, 1, 1), 10).empty());
  CHECK(enumerate_tilings(unit, 1).size() == 1);
  CHECK(enumerate_tilings(Region{}, 5).size() == 1);

  // lozenges partition the region
  Region r = hexagon_cells(2, 1, 2, 0);
  for (const auto& tiling : enumerate_tilings(r, 1000)) {
    std::set<UnitTriangle> covered;
    for (const auto& [u, d] : tiling) {
      CHECK(u.up);
      CHECK(!d.up);
      covered.insert(u);
      covered.insert(d);
    }
    CHECK(covered.size() == r.size());
  }
}

TEST_CASE("enumeration count agrees with the counter") {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 25; ++t) {
    HexDentSpec s = test::random_spec(rng, 2, 1, 1, true);
    Region r = build_hexagon(s);
    Count c = count_tilings(r);
    if (c > 2000) continue;
    auto all = enumerate_tilings(r, 5000);
    CHECK(Count(static_cast<long>(all.size())) == c);
    std::set<std::vector<Lozenge>> uniq(all.begin(), all.end());
    CHECK(uniq.size() == all.size());
  }
}

TEST_CASE("count_matchings on explicit graphs") {
  auto cycle = [](int n) {
    Graph g;
    g.verts.resize(n);
    g.adj.resize(n);
    for (int i = 0; i < n; ++i) {
      g.adj[i].push_back((i + 1) % n);
      g.adj[i].push_back((i + n - 1) % n);
    }
    return g;
  };
  CHECK(count_matchings(cycle(6)) == 2);

  Graph edge;
  edge.verts.resize(2);
  edge.adj = {{1}, {0}};
  CHECK(count_matchings(edge) == 1);

  Graph path4;  // path on 4 vertices has a single perfect matching
  path4.verts.resize(4);
  path4.adj = {{1}, {0, 2}, {1, 3}, {2}};
  CHECK(count_matchings(path4) == 1);

  CHECK_THROWS_AS((void)count_matchings(cycle(3)), Error);
}

TEST_CASE("count_matchings agrees with count_tilings through the dual") {
  std::mt19937_64 rng(47);
  for (int t = 0; t < 30; ++t) {
    HexDentSpec s = test::random_spec(rng, 2, 1, 1, true);
    Region r = build_hexagon(s);
    CHECK(count_matchings(dual_graph(r)) == count_tilings(r));
  }
}

TEST_CASE("counts are invariant under the dihedral symmetries") {
  std::mt19937_64 rng(53);
  for (int t = 0; t < 8; ++t) {
    HexDentSpec s = test::random_spec(rng, 2, 1, 1, true);
    Region r = build_hexagon(s);
    Count base = count_tilings(r);
    for (const auto& g : all_symmetries())
      CHECK(count_tilings(apply_symmetry(r, g)) == base);
  }
}
