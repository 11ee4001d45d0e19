#pragma once

#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <utility>

namespace gridcraft {

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  friend constexpr Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend constexpr Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend constexpr Vec3 operator*(double s, Vec3 v) { return {s * v.x, s * v.y, s * v.z}; }
  friend constexpr bool operator==(const Vec3&, const Vec3&) = default;
};

inline double norm(Vec3 v) { return std::sqrt(v.x * v.x + v.y * v.y + v.z * v.z); }
inline Vec3 normalized(Vec3 v) { return (1.0 / norm(v)) * v; }
constexpr Vec3 cross(Vec3 a, Vec3 b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

/// (sin, cos) of an angle in degrees, exact at multiples of 90.
inline std::pair<double, double> sin_cos_deg(double degrees) {
  double r = std::fmod(degrees, 360.0);
  if (r < 0.0) r += 360.0;
  if (r == 0.0) return {0.0, 1.0};
  if (r == 90.0) return {1.0, 0.0};
  if (r == 180.0) return {0.0, -1.0};
  if (r == 270.0) return {-1.0, 0.0};
  const double rad = r * (std::numbers::pi / 180.0);
  return {std::sin(rad), std::cos(rad)};
}

/// View direction. Yaw 0 faces +z, yaw 90 faces -x; positive pitch looks down.
inline Vec3 view_direction(double pitch_deg, double yaw_deg) {
  const auto [sp, cp] = sin_cos_deg(pitch_deg);
  const auto [sy, cy] = sin_cos_deg(yaw_deg);
  return {-sy * cp, -sp, cy * cp};
}

/// Integer lattice cell in world (x, y, z) order.
struct LatticeCell {
  int x = 0;
  int y = 0;
  int z = 0;

  friend constexpr bool operator==(const LatticeCell&, const LatticeCell&) = default;
};

/// Which face of the hit cell the ray came through.
enum class Face { Inside, Top, Bottom, Side };

struct RayHit {
  LatticeCell cell;
  LatticeCell previous;
  Face face = Face::Inside;
  double distance = 0.0;
  int material = 0;
};

/// Grid traversal (Amanatides & Woo) over unit cells. `material(cell)` returns 0 for empty
/// space; the first non-empty cell within `max_distance` is returned. `dir` must be unit length.
template <class MaterialFn>
std::optional<RayHit> march(Vec3 origin, Vec3 dir, double max_distance, MaterialFn&& material) {
  constexpr double kInf = std::numeric_limits<double>::infinity();
  LatticeCell cell{static_cast<int>(std::floor(origin.x)), static_cast<int>(std::floor(origin.y)),
                   static_cast<int>(std::floor(origin.z))};
  if (const int m = material(cell); m != 0) return RayHit{cell, cell, Face::Inside, 0.0, m};

  const double o[3] = {origin.x, origin.y, origin.z};
  const double d[3] = {dir.x, dir.y, dir.z};
  int step[3];
  double t_max[3];
  double t_delta[3];
  const int base[3] = {cell.x, cell.y, cell.z};
  for (int a = 0; a < 3; ++a) {
    if (d[a] > 0.0) {
      step[a] = 1;
      t_delta[a] = 1.0 / d[a];
      t_max[a] = (static_cast<double>(base[a]) + 1.0 - o[a]) * t_delta[a];
    } else if (d[a] < 0.0) {
      step[a] = -1;
      t_delta[a] = -1.0 / d[a];
      t_max[a] = (o[a] - static_cast<double>(base[a])) * t_delta[a];
    } else {
      step[a] = 0;
      t_delta[a] = kInf;
      t_max[a] = kInf;
    }
  }

  int* coords[3] = {&cell.x, &cell.y, &cell.z};
  while (true) {
    int axis = 0;
    if (t_max[1] < t_max[axis]) axis = 1;
    if (t_max[2] < t_max[axis]) axis = 2;
    const double t = t_max[axis];
    if (!(t <= max_distance)) return std::nullopt;
    const LatticeCell previous = cell;
    *coords[axis] += step[axis];
    t_max[axis] += t_delta[axis];
    if (const int m = material(cell); m != 0) {
      Face face = Face::Side;
      if (axis == 1) face = step[1] < 0 ? Face::Top : Face::Bottom;
      return RayHit{cell, previous, face, t, m};
    }
  }
}

}  // namespace gridcraft
