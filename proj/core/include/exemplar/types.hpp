#pragma once

#include <cmath>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "exemplar/error.hpp"

namespace exemplar {

/// Coordinates in meters. Convention: z is vertical (height above the floor),
/// y is the left-right axis after tragion alignment, x points forward
/// (nose direction).
struct Point3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  friend Point3 operator+(const Point3& a, const Point3& b) {
    return {a.x + b.x, a.y + b.y, a.z + b.z};
  }
  friend Point3 operator-(const Point3& a, const Point3& b) {
    return {a.x - b.x, a.y - b.y, a.z - b.z};
  }
  friend Point3 operator*(double s, const Point3& p) { return {s * p.x, s * p.y, s * p.z}; }
  friend bool operator==(const Point3& a, const Point3& b) {
    return a.x == b.x && a.y == b.y && a.z == b.z;
  }

  bool finite() const { return std::isfinite(x) && std::isfinite(y) && std::isfinite(z); }
};

inline double dot(const Point3& a, const Point3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline double norm(const Point3& p) { return std::sqrt(dot(p, p)); }
inline double squared_distance(const Point3& a, const Point3& b) { return dot(a - b, a - b); }
inline double distance(const Point3& a, const Point3& b) { return std::sqrt(squared_distance(a, b)); }

/// Ordered list of points. Order carries no semantic meaning; operations that
/// consume a cloud as a set are permutation-invariant.
struct PointCloud {
  std::vector<Point3> points;

  PointCloud() = default;
  explicit PointCloud(std::vector<Point3> p) : points(std::move(p)) {}

  std::size_t size() const { return points.size(); }
  bool empty() const { return points.empty(); }
  const Point3& operator[](std::size_t i) const { return points[i]; }
  Point3& operator[](std::size_t i) { return points[i]; }

  friend bool operator==(const PointCloud& a, const PointCloud& b) {
    return a.points == b.points;
  }
};

/// The three CAESAR-style landmarks the face pipeline relies on.
struct LandmarkSet {
  Point3 cervicale;      // base of the neck, lower crop reference
  Point3 tragion_left;   // on/near the left ear
  Point3 tragion_right;  // on/near the right ear

  bool finite() const {
    return cervicale.finite() && tragion_left.finite() && tragion_right.finite();
  }
  Point3 tragion_midpoint() const { return 0.5 * (tragion_left + tragion_right); }
};

enum class Gender { Female, Male };
enum class Race { AfricanAmerican, Asian, Spanish, White };

inline constexpr Gender kAllGenders[] = {Gender::Female, Gender::Male};
inline constexpr Race kAllRaces[] = {Race::AfricanAmerican, Race::Asian, Race::Spanish,
                                     Race::White};

inline const char* to_string(Gender g) {
  switch (g) {
    case Gender::Female: return "Female";
    case Gender::Male: return "Male";
  }
  return "?";
}

inline const char* to_string(Race r) {
  switch (r) {
    case Race::AfricanAmerican: return "AfricanAmerican";
    case Race::Asian: return "Asian";
    case Race::Spanish: return "Spanish";
    case Race::White: return "White";
  }
  return "?";
}

inline Gender gender_from_string(const std::string& s) {
  for (Gender g : kAllGenders)
    if (s == to_string(g)) return g;
  throw Error("data", "unknown gender value \"" + s + "\"");
}

inline Race race_from_string(const std::string& s) {
  for (Race r : kAllRaces)
    if (s == to_string(r)) return r;
  throw Error("data", "unknown race value \"" + s + "\"");
}

/// One scan: point cloud plus landmarks, demographic labels and (for
/// synthetic data) the generative factors that produced it.
struct ScanRecord {
  std::string id;
  PointCloud cloud;
  std::optional<LandmarkSet> landmarks;
  Gender gender = Gender::Female;
  Race race = Race::White;
  std::map<std::string, double> factors;  // synthetic ground truth; empty otherwise
};

}  // namespace exemplar
