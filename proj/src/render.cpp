#include "gridcraft/render.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <stdexcept>

#include "gridcraft/geometry.hpp"

namespace gridcraft {

namespace {

constexpr int kBorderMaterial = 7;

constexpr std::array<Rgb, kNumColors + 1> kPalette = {{
    {0, 0, 0},        // air, never drawn
    {40, 80, 220},    // blue
    {220, 40, 40},    // red
    {40, 180, 60},    // green
    {240, 140, 20},   // orange
    {140, 50, 190},   // purple
    {240, 220, 40},   // yellow
}};

// Everything drawable lives inside [-1, 12) x [-1, 9) x [-1, 12).
constexpr double kBoxLo[3] = {-1.0, -1.0, -1.0};
constexpr double kBoxHi[3] = {kZoneX + 1.0, static_cast<double>(kZoneY), kZoneZ + 1.0};

int material_at(const VoxelGrid& world, const LatticeCell& c) {
  if (c.y == -1) {
    const bool ring_x = (c.x == -1 || c.x == kZoneX) && c.z >= -1 && c.z <= kZoneZ;
    const bool ring_z = (c.z == -1 || c.z == kZoneZ) && c.x >= -1 && c.x <= kZoneX;
    return ring_x || ring_z ? kBorderMaterial : 0;
  }
  const auto cell = CellCoord::checked(c.x, c.z, c.y);
  return cell ? to_int(world.at(*cell)) : 0;
}

// Parametric exit distance from the drawable box, or a negative value when the ray misses it.
double box_exit(Vec3 origin, Vec3 dir) {
  const double o[3] = {origin.x, origin.y, origin.z};
  const double d[3] = {dir.x, dir.y, dir.z};
  double t_enter = 0.0;
  double t_exit = std::numeric_limits<double>::infinity();
  for (int a = 0; a < 3; ++a) {
    if (d[a] == 0.0) {
      if (o[a] < kBoxLo[a] || o[a] > kBoxHi[a]) return -1.0;
      continue;
    }
    double t0 = (kBoxLo[a] - o[a]) / d[a];
    double t1 = (kBoxHi[a] - o[a]) / d[a];
    if (t0 > t1) std::swap(t0, t1);
    t_enter = std::max(t_enter, t0);
    t_exit = std::min(t_exit, t1);
  }
  return t_enter <= t_exit ? t_exit : -1.0;
}

}  // namespace

Rgb block_color(BlockId id) { return kPalette[static_cast<std::size_t>(id)]; }

Rgb shade(Rgb color, double factor) {
  Rgb out{};
  for (std::size_t i = 0; i < 3; ++i) {
    out[i] = static_cast<std::uint8_t>(std::lround(static_cast<double>(color[i]) * factor));
  }
  return out;
}

PovImage render_pov(const VoxelGrid& world, const AgentPose& pose, const RenderConfig& cfg) {
  PovImage image{};
  const Vec3 eye{pose.x, pose.y + cfg.eye_height, pose.z};
  const Vec3 forward = view_direction(pose.pitch, pose.yaw);
  const auto [sy, cy] = sin_cos_deg(pose.yaw);
  const Vec3 right{-cy, 0.0, -sy};
  const Vec3 up = cross(right, forward);
  const double half = std::tan(cfg.fov_degrees * std::numbers::pi / 360.0);

  for (int row = 0; row < kPovHeight; ++row) {
    const double v = (1.0 - 2.0 * (row + 0.5) / kPovHeight) * half;
    for (int col = 0; col < kPovWidth; ++col) {
      const double u = (2.0 * (col + 0.5) / kPovWidth - 1.0) * half;
      const Vec3 dir = normalized(forward + u * right + v * up);

      Rgb color = kSkyColor;
      const double exit = box_exit(eye, dir);
      if (exit >= 0.0) {
        const auto hit = march(eye, dir, std::min(exit, cfg.max_distance),
                               [&world](const LatticeCell& c) { return material_at(world, c); });
        if (hit) {
          const Rgb base = hit->material == kBorderMaterial ? kBorderColor
                                                            : block_color(static_cast<BlockId>(hit->material));
          double factor = kTopShade;
          if (hit->face == Face::Side) factor = kSideShade;
          if (hit->face == Face::Bottom) factor = kBottomShade;
          color = shade(base, factor);
        }
      }
      const auto offset = (static_cast<std::size_t>(row) * kPovWidth + static_cast<std::size_t>(col)) * 3;
      std::copy(color.begin(), color.end(), image.begin() + static_cast<std::ptrdiff_t>(offset));
    }
  }
  return image;
}

void write_ppm(const std::filesystem::path& path, const PovImage& image) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << "P6\n" << kPovWidth << ' ' << kPovHeight << "\n255\n";
  out.write(reinterpret_cast<const char*>(image.data()), static_cast<std::streamsize>(image.size()));
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

}  // namespace gridcraft
