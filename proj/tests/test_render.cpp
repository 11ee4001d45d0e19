#include "doctest.h"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>

#include "gridcraft/render.hpp"

using namespace gridcraft;

namespace {

Rgb pixel(const PovImage& img, int row, int col) {
  const auto o = (static_cast<std::size_t>(row) * kPovWidth + static_cast<std::size_t>(col)) * 3;
  return {img[o], img[o + 1], img[o + 2]};
}

}  // namespace

TEST_SUITE("render") {
  TEST_CASE("empty world shows only sky and border markers") {
    const VoxelGrid empty;
    for (const double yaw : {0.0, 90.0, -135.0}) {
      const PovImage img = render_pov(empty, AgentPose{5.5, 0, 5.5, 0, yaw});
      int border = 0;
      for (int r = 0; r < kPovHeight; ++r) {
        for (int c = 0; c < kPovWidth; ++c) {
          const Rgb p = pixel(img, r, c);
          const bool ok = p == kSkyColor || p == kBorderColor || p == shade(kBorderColor, kSideShade) ||
                          p == shade(kBorderColor, kBottomShade);
          CHECK(ok);
          border += p == kSkyColor ? 0 : 1;
        }
      }
      CHECK(border > 0);
      // The markers sit below the horizon: the top half is pure sky.
      for (int r = 0; r < kPovHeight / 2; ++r) {
        for (int c = 0; c < kPovWidth; ++c) CHECK(pixel(img, r, c) == kSkyColor);
      }
    }
  }

  TEST_CASE("deterministic") {
    VoxelGrid g;
    g.set(CellCoord(5, 7, 0), BlockId::Orange);
    const AgentPose p{5.5, 0, 5.5, 20, 10};
    CHECK(render_pov(g, p) == render_pov(g, p));
  }

  TEST_CASE("single block projects to the analytic position") {
    VoxelGrid g;
    g.set(CellCoord(5, 5, 1), BlockId::Blue);
    const AgentPose pose{5.5, 0, 2.5, 0, 0};
    const PovImage img = render_pov(g, pose);

    double sum_r = 0;
    double sum_c = 0;
    int n = 0;
    std::set<Rgb> colors;
    for (int r = 0; r < kPovHeight; ++r) {
      for (int c = 0; c < kPovWidth; ++c) {
        const Rgb p = pixel(img, r, c);
        if (p == kSkyColor || p == kBorderColor || p == shade(kBorderColor, kSideShade)) continue;
        colors.insert(p);
        sum_r += r;
        sum_c += c;
        ++n;
      }
    }
    REQUIRE(n > 0);
    // Only the near face (x 5..6, y 1..2, z = 5) is visible, at depth 2.5 from the eye.
    CHECK(colors == std::set<Rgb>{shade(block_color(BlockId::Blue), kSideShade)});
    const double half = std::tan(35.0 * 3.14159265358979323846 / 180.0);
    auto to_col = [&](double u) { return (u / half + 1.0) * kPovWidth / 2.0 - 0.5; };
    auto to_row = [&](double v) { return (1.0 - v / half) * kPovHeight / 2.0 - 0.5; };
    // Right is -x when facing +z.
    const double c0 = to_col(-(6.0 - 5.5) / 2.5);
    const double c1 = to_col(-(5.0 - 5.5) / 2.5);
    const double r0 = to_row((2.0 - 1.6) / 2.5);
    const double r1 = to_row((1.0 - 1.6) / 2.5);
    const double expected_c = (c0 + c1) / 2.0;
    const double expected_r = (r0 + r1) / 2.0;
    const double expected_n = (c1 - c0) * (r1 - r0);
    CHECK(std::abs(sum_c / n - expected_c) < 0.5);
    CHECK(std::abs(sum_r / n - expected_r) < 0.5);
    CHECK(std::abs(n - expected_n) < 2.0 * ((c1 - c0) + (r1 - r0)));
  }

  TEST_CASE("face shading") {
    VoxelGrid g;
    g.set(CellCoord(5, 5, 0), BlockId::Red);
    const PovImage down = render_pov(g, AgentPose{5.5, 1.0, 5.5, 90, 0});
    CHECK(pixel(down, 32, 32) == block_color(BlockId::Red));

    VoxelGrid roof;
    roof.set(CellCoord(5, 5, 4), BlockId::Green);
    const PovImage up = render_pov(roof, AgentPose{5.5, 0.0, 5.5, -90, 0});
    CHECK(pixel(up, 32, 32) == shade(block_color(BlockId::Green), kBottomShade));

    CHECK(shade(Rgb{100, 200, 255}, 0.8) == Rgb{80, 160, 204});
  }

  TEST_CASE("ppm output") {
    const auto path = std::filesystem::temp_directory_path() / "gridcraft_render_test.ppm";
    const PovImage img = render_pov(VoxelGrid{}, AgentPose{});
    write_ppm(path, img);
    std::ifstream in(path, std::ios::binary);
    std::string magic;
    int w = 0;
    int h = 0;
    int max = 0;
    in >> magic >> w >> h >> max;
    in.get();
    CHECK(magic == "P6");
    CHECK(w == 64);
    CHECK(h == 64);
    CHECK(max == 255);
    PovImage back{};
    in.read(reinterpret_cast<char*>(back.data()), static_cast<std::streamsize>(back.size()));
    CHECK(in.gcount() == static_cast<std::streamsize>(back.size()));
    CHECK(back == img);
    std::filesystem::remove(path);
  }
}
