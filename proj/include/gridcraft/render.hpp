#pragma once

#include <array>
#include <cstdint>
#include <filesystem>

#include "gridcraft/dynamics.hpp"
#include "gridcraft/voxel_grid.hpp"

namespace gridcraft {

inline constexpr int kPovWidth = 64;
inline constexpr int kPovHeight = 64;
inline constexpr int kPovChannels = 3;

/// Row-major (row, column, channel) RGB image.
using PovImage = std::array<std::uint8_t, static_cast<std::size_t>(kPovWidth) * kPovHeight * kPovChannels>;
using Rgb = std::array<std::uint8_t, 3>;

struct RenderConfig {
  double fov_degrees = 70.0;
  double eye_height = 1.6;
  double max_distance = 48.0;
};

Rgb block_color(BlockId id);
inline constexpr Rgb kSkyColor = {150, 200, 240};
inline constexpr Rgb kBorderColor = {245, 245, 245};

inline constexpr double kTopShade = 1.0;
inline constexpr double kSideShade = 0.8;
inline constexpr double kBottomShade = 0.6;

Rgb shade(Rgb color, double factor);

/// One ray per pixel through the zone. Blocks are flat colored with per-face shading;
/// white markers ring the footprint one cell outside it, just below the ground plane.
/// Everything else is sky.
PovImage render_pov(const VoxelGrid& world, const AgentPose& pose, const RenderConfig& cfg = {});

/// Binary PPM (P6). Throws std::runtime_error on I/O failure.
void write_ppm(const std::filesystem::path& path, const PovImage& image);

}  // namespace gridcraft
