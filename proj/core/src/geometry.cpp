#include "exemplar/geometry.hpp"

#include <cmath>
#include <limits>

#include "exemplar/error.hpp"
#include "exemplar/rng.hpp"

namespace exemplar {

namespace {

void require_nonempty(const PointCloud& cloud) {
  if (cloud.empty()) throw Error("data", "point cloud is empty");
}

void require_landmarks(const LandmarkSet& lm) {
  if (!lm.finite()) throw Error("data", "landmarks contain non-finite coordinates");
  if (lm.tragion_left == lm.tragion_right)
    throw Error("data", "left and right tragion coincide");
}

// Yaw about the vertical axis through `pivot` with given cos/sin.
Point3 yaw_about(const Point3& p, const Point3& pivot, double c, double s) {
  const double dx = p.x - pivot.x;
  const double dy = p.y - pivot.y;
  return {pivot.x + dx * c - dy * s, pivot.y + dx * s + dy * c, p.z};
}

// 180-degree yaw, exact arithmetic (no trig).
Point3 flip_about(const Point3& p, const Point3& pivot) {
  return {2.0 * pivot.x - p.x, 2.0 * pivot.y - p.y, p.z};
}

}  // namespace

Point3 centroid(const PointCloud& cloud) {
  require_nonempty(cloud);
  double sx = 0.0, sy = 0.0, sz = 0.0;
  for (const Point3& p : cloud.points) {
    sx += p.x;
    sy += p.y;
    sz += p.z;
  }
  const double inv = 1.0 / static_cast<double>(cloud.size());
  return {sx * inv, sy * inv, sz * inv};
}

std::pair<PointCloud, LandmarkSet> align_tragions(const PointCloud& cloud,
                                                  const LandmarkSet& lm) {
  require_nonempty(cloud);
  require_landmarks(lm);

  const Point3 v = lm.tragion_right - lm.tragion_left;
  const double h = std::hypot(v.x, v.y);
  if (h == 0.0)
    throw Error("data", "tragion xy-projections coincide; yaw alignment undefined");

  // Rotation taking (v.x, v.y) onto (0, h): cos/sin taken directly from the
  // components, no intermediate angle.
  const double c = v.y / h;
  const double s = v.x / h;
  const Point3 pivot = lm.tragion_midpoint();

  PointCloud out;
  out.points.reserve(cloud.size());
  for (const Point3& p : cloud.points) out.points.push_back(yaw_about(p, pivot, c, s));

  LandmarkSet lm_out;
  lm_out.cervicale = yaw_about(lm.cervicale, pivot, c, s);
  lm_out.tragion_left = yaw_about(lm.tragion_left, pivot, c, s);
  lm_out.tragion_right = yaw_about(lm.tragion_right, pivot, c, s);
  return {std::move(out), lm_out};
}

std::pair<PointCloud, LandmarkSet> orient_forward(const PointCloud& cloud,
                                                  const LandmarkSet& lm) {
  require_nonempty(cloud);
  require_landmarks(lm);

  const Point3 mid = lm.tragion_midpoint();
  double sum_x = 0.0;
  std::size_t above = 0;
  for (const Point3& p : cloud.points) {
    if (p.z > lm.cervicale.z) {
      sum_x += p.x;
      ++above;
    }
  }
  if (above == 0 || sum_x / static_cast<double>(above) >= mid.x) return {cloud, lm};

  PointCloud out;
  out.points.reserve(cloud.size());
  for (const Point3& p : cloud.points) out.points.push_back(flip_about(p, mid));

  LandmarkSet lm_out;
  lm_out.cervicale = flip_about(lm.cervicale, mid);
  lm_out.tragion_left = flip_about(lm.tragion_left, mid);
  lm_out.tragion_right = flip_about(lm.tragion_right, mid);
  return {std::move(out), lm_out};
}

PointCloud crop_face(const PointCloud& cloud, const LandmarkSet& lm, double chin_margin) {
  require_nonempty(cloud);
  require_landmarks(lm);
  if (!(chin_margin >= 0.0)) throw Error("config", "chin_margin must be >= 0");

  const double plane_x = lm.tragion_midpoint().x;
  const double floor_z = lm.cervicale.z - chin_margin;

  PointCloud out;
  for (const Point3& p : cloud.points) {
    if (p.x > plane_x && p.z > floor_z) out.points.push_back(p);
  }
  if (out.empty())
    throw Error("data", "face crop is empty: no points forward of the tragion plane "
                        "and above the cervicale margin");
  return out;
}

PointCloud center(const PointCloud& cloud) {
  const Point3 c = centroid(cloud);
  PointCloud out;
  out.points.reserve(cloud.size());
  for (const Point3& p : cloud.points) out.points.push_back(p - c);
  return out;
}

PointCloud resample(const PointCloud& cloud, std::size_t n, std::uint64_t seed) {
  require_nonempty(cloud);
  if (n == 0) throw Error("config", "resample target must be >= 1");

  Rng rng(seed);
  PointCloud out;
  out.points.reserve(n);
  const std::size_t N = cloud.size();
  if (N >= n) {
    for (std::size_t i : rng.sample_without_replacement(N, n)) out.points.push_back(cloud[i]);
  } else {
    for (std::size_t i = 0; i < n; ++i)
      out.points.push_back(cloud[static_cast<std::size_t>(rng.uniform_below(N))]);
  }
  return out;
}

std::vector<double> nearest_distances(const PointCloud& a, const PointCloud& b) {
  require_nonempty(a);
  require_nonempty(b);
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    double best = std::numeric_limits<double>::infinity();
    for (const Point3& q : b.points) {
      const double d2 = squared_distance(a[i], q);
      if (d2 < best) best = d2;
    }
    out[i] = std::sqrt(best);
  }
  return out;
}

}  // namespace exemplar
