#include "doctest.h"

#include <set>

#include "gridcraft/errors.hpp"
#include "gridcraft/fixtures.hpp"
#include "gridcraft/rng.hpp"
#include "gridcraft/voxel_grid.hpp"
#include "oracles.hpp"

using namespace gridcraft;

TEST_SUITE("voxel") {
  TEST_CASE("block ids and color names") {
    CHECK(color_name(BlockId::Blue) == "blue");
    CHECK(color_name(BlockId::Yellow) == "yellow");
    CHECK(block_from_name("purple") == BlockId::Purple);
    CHECK_FALSE(block_from_name("white").has_value());
    CHECK(block_from_int(4) == BlockId::Orange);
    CHECK_THROWS_AS(block_from_int(7), std::out_of_range);
    CHECK_THROWS_AS(block_from_int(-1), std::out_of_range);
  }

  TEST_CASE("cell coordinates are bounded") {
    CHECK_NOTHROW(CellCoord(10, 10, 8));
    CHECK_THROWS_AS(CellCoord(11, 0, 0), std::out_of_range);
    CHECK_THROWS_AS(CellCoord(0, 0, 9), std::out_of_range);
    CHECK_FALSE(CellCoord::checked(0, -1, 0).has_value());
    std::set<std::size_t> seen;
    for (std::size_t i = 0; i < kCellCount; ++i) {
      const auto c = CellCoord::from_index(i);
      CHECK(c.index() == i);
      seen.insert(c.index());
    }
    CHECK(seen.size() == 1089);
  }

  TEST_CASE("place and break") {
    const VoxelGrid empty;
    const CellCoord p(5, 5, 0);
    const VoxelGrid one = place_block(empty, p, BlockId::Blue);
    CHECK(one.nonair() == 1);
    CHECK(one.at(p) == BlockId::Blue);
    CHECK(empty.nonair() == 0);
    CHECK_THROWS_AS(place_block(one, p, BlockId::Red), OccupiedCell);
    CHECK_THROWS_AS(place_block(empty, p, BlockId::Air), AirBlock);

    const auto [after, removed] = break_block(one, p);
    CHECK(after == empty);
    CHECK(removed == BlockId::Blue);
    CHECK(one.nonair() == 1);
    CHECK(place_block(after, p, removed) == one);
    CHECK_THROWS_AS(break_block(empty, p), AirCell);

    VoxelGrid l;
    for (const auto& b : l_shape_task().target.blocks()) l = place_block(l, b.cell, b.id);
    CHECK(l.nonair() == 5);
  }

  TEST_CASE("rotation") {
    VoxelGrid g;
    g.set(CellCoord(0, 0, 4), BlockId::Red);
    const VoxelGrid r = rotate_y(g, 1);
    CHECK(r.nonair() == 1);
    CHECK(r.at(CellCoord(0, 10, 4)) == BlockId::Red);

    Rng rng(3);
    for (int trial = 0; trial < 50; ++trial) {
      const VoxelGrid a = oracle::random_grid(rng, 30);
      CHECK(rotate_y(a, 0) == a);
      CHECK(rotate_y(rotate_y(a, 1), 3) == a);
      CHECK(rotate_y(a, 4) == a);
      CHECK(rotate_y(a, -1) == rotate_y(a, 3));
      for (int k = 0; k < 4; ++k) {
        const VoxelGrid b = rotate_y(a, k);
        CHECK(b.nonair() == a.nonair());
        CHECK(layer_counts(b) == layer_counts(a));
        VoxelGrid c = a;
        for (int i = 0; i < 4; ++i) c = rotate_y(c, k);
        CHECK(c == a);
        // Every cell against the hand-written inverse map.
        for (int x = 0; x < kZoneX; ++x) {
          for (int z = 0; z < kZoneZ; ++z) {
            const auto [ux, uz] = oracle::unrotate(x, z, k);
            for (int y = 0; y < kZoneY; ++y) CHECK(b.at(CellCoord(x, z, y)) == a.at(CellCoord(ux, uz, y)));
          }
        }
      }
    }
  }

  TEST_CASE("flat and text round trips") {
    Rng rng(9);
    for (int trial = 0; trial < 20; ++trial) {
      const VoxelGrid g = oracle::random_grid(rng, 40);
      const auto flat = g.to_flat();
      CHECK(flat.size() == kCellCount);
      CHECK(VoxelGrid::from_flat(flat) == g);
      CHECK(grid_from_text(to_text(g)) == g);
    }
    std::vector<int> bad(kCellCount, 0);
    bad[3] = 7;
    CHECK_THROWS_AS(VoxelGrid::from_flat(bad), std::invalid_argument);
    CHECK_THROWS_AS(VoxelGrid::from_flat(std::vector<int>(10, 0)), std::invalid_argument);
  }

  TEST_CASE("text literal layout") {
    VoxelGrid g;
    g.set(CellCoord(2, 1, 0), BlockId::Green);
    g.set(CellCoord(10, 10, 8), BlockId::Yellow);
    const std::string text = to_text(g);
    // Layer 0, row z=1, column x=2.
    CHECK(text.substr(12, 11) == "00300000000");
    CHECK(grid_from_text(text) == g);

    std::string broken = text;
    broken[12 * 3 + 4] = '9';
    try {
      grid_from_text(broken);
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 4);
    }
    CHECK_THROWS_AS(grid_from_text("0000"), ParseError);
  }
}
