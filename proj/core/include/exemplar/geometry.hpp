#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "exemplar/types.hpp"

namespace exemplar {

Point3 centroid(const PointCloud& cloud);

/// Yaw the cloud about the vertical axis through the tragion midpoint so the
/// tragion-to-tragion vector's xy-projection lies along +y. z is untouched,
/// pairwise distances are preserved. Fails if the tragions' xy-projections
/// coincide (the yaw is undefined).
std::pair<PointCloud, LandmarkSet> align_tragions(const PointCloud& cloud,
                                                  const LandmarkSet& lm);

/// Make the face point toward +x: if the centroid of points above the
/// cervicale lies behind the tragion midpoint, rotate 180 degrees about the
/// vertical axis through the midpoint. No points above the cervicale: no-op.
/// Expects tragions already aligned to y.
std::pair<PointCloud, LandmarkSet> orient_forward(const PointCloud& cloud,
                                                  const LandmarkSet& lm);

/// Keep exactly the points strictly forward of the vertical tragion plane and
/// strictly above cervicale.z - chin_margin; relative order preserved.
/// Fails if nothing survives.
PointCloud crop_face(const PointCloud& cloud, const LandmarkSet& lm,
                     double chin_margin = 0.04);

/// Translate so the centroid sits at the origin.
PointCloud center(const PointCloud& cloud);

/// Exactly n points: drawn uniformly without replacement when the cloud has
/// at least n, with replacement otherwise. Pure function of (cloud, n, seed).
PointCloud resample(const PointCloud& cloud, std::size_t n, std::uint64_t seed);

/// For each point of a: Euclidean distance to the nearest point of b.
/// Brute force; fine at the <= 10^4 points this project works with.
std::vector<double> nearest_distances(const PointCloud& a, const PointCloud& b);

}  // namespace exemplar
