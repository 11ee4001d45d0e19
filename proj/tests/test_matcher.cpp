#include "doctest.h"

#include "gridcraft/fixtures.hpp"
#include "gridcraft/matcher.hpp"
#include "gridcraft/rng.hpp"
#include "oracles.hpp"

using namespace gridcraft;

namespace {

void check_against_oracle(const VoxelGrid& built, const VoxelGrid& target) {
  const MatchResult m = max_intersection(built, target);
  const oracle::Match o = oracle::brute_force_match(built, target);
  CHECK(m.score == o.score);
  CHECK(m.rotation == o.rotation);
  CHECK(m.offset == Offset{o.dx, o.dz, o.dy});
}

}  // namespace

TEST_SUITE("matcher") {
  TEST_CASE("identity and empty") {
    const VoxelGrid t = eighteen_block_task().target;
    const MatchResult m = max_intersection(t, t);
    CHECK(m.score == 18);
    CHECK(m.rotation == 0);
    CHECK(m.offset == Offset{0, 0, 0});

    const MatchResult e = max_intersection(VoxelGrid{}, t);
    CHECK(e.score == 0);
    CHECK(e.rotation == 0);
    CHECK(e.offset == Offset{-kMaxShiftX, -kMaxShiftZ, -kMaxShiftY});
  }

  TEST_CASE("rotated and shifted copy matches fully") {
    const VoxelGrid t = l_shape_task().target;
    const VoxelGrid built = transform(t, 1, {2, 0, 0});
    CHECK(built.nonair() == 5);
    CHECK(max_intersection(built, t).score == 5);
    check_against_oracle(built, t);
  }

  TEST_CASE("twelve of eighteen") {
    const VoxelGrid t = eighteen_block_task().target;
    VoxelGrid built;
    const auto order = build_order(t);
    for (int i = 0; i < 12; ++i) built.set(order[static_cast<std::size_t>(i)].cell, order[static_cast<std::size_t>(i)].id);
    CHECK(max_intersection(built, t).score == 12);
  }

  TEST_CASE("transform reproduces the score") {
    Rng rng(21);
    for (int trial = 0; trial < 40; ++trial) {
      const VoxelGrid a = oracle::random_cluster(rng, 10);
      const VoxelGrid b = oracle::random_cluster(rng, 10);
      const MatchResult m = max_intersection(a, b);
      const VoxelGrid moved = transform(a, m.rotation, m.offset);
      int same = 0;
      for (const auto& [cell, id] : b.blocks()) same += moved.at(cell) == id ? 1 : 0;
      CHECK(same == m.score);
    }
  }

  TEST_CASE("agrees with the brute force oracle") {
    Rng rng(5);
    for (int trial = 0; trial < 30; ++trial) {
      check_against_oracle(oracle::random_cluster(rng, 8), oracle::random_cluster(rng, 8));
      check_against_oracle(oracle::random_grid(rng, 6, 2), oracle::random_grid(rng, 6, 2));
    }
  }

  TEST_CASE("symmetry, invariance and single-block edits") {
    Rng rng(8);
    for (int trial = 0; trial < 40; ++trial) {
      const VoxelGrid a = oracle::random_cluster(rng, 9);
      const VoxelGrid b = oracle::random_cluster(rng, 9);
      const int s = max_intersection(a, b).score;
      CHECK(s == max_intersection(b, a).score);
      CHECK(s <= std::min(a.nonair(), b.nonair()));
      CHECK(max_intersection(rotate_y(a, 2), b).score == s);

      const CellCoord c(static_cast<int>(rng.below(11)), static_cast<int>(rng.below(11)), static_cast<int>(rng.below(9)));
      VoxelGrid edited = a;
      edited.set(c, a.at(c) == BlockId::Air ? BlockId::Blue : BlockId::Air);
      CHECK(std::abs(max_intersection(edited, b).score - s) <= 1);
    }
  }

  TEST_CASE("closest alignment prefers overlap among best scores") {
    VoxelGrid a;
    a.set(CellCoord(3, 3, 0), BlockId::Blue);
    a.set(CellCoord(4, 3, 0), BlockId::Red);
    VoxelGrid b;
    b.set(CellCoord(6, 6, 0), BlockId::Blue);
    b.set(CellCoord(7, 6, 0), BlockId::Green);
    const Alignment al = closest_alignment(a, b);
    CHECK(al.score == 1);
    CHECK(al.overlap == 2);
    const Alignment back = closest_alignment(b, a);
    CHECK(back.score == 1);
    CHECK(back.overlap == 2);
  }
}
