#ifndef CHIRAL_KERNELS_HPP
#define CHIRAL_KERNELS_HPP

#include <span>
#include <vector>

#include "chiral/element.hpp"

namespace chiral::kernels {

/// Images of one seed under every element: out[i] = g_i(seed).
std::vector<Vec3> apply_all_serial(std::span<const ElementD> group, const Vec3& seed);
std::vector<Vec3> apply_all(std::span<const ElementD> group, const Vec3& seed);

/// Images of many points under one element: out[j] = g(points[j]).
std::vector<Vec3> map_points_serial(const ElementD& g, std::span<const Vec3> points);
std::vector<Vec3> map_points(const ElementD& g, std::span<const Vec3> points);

/// Greedy bijective matching of two point sets within tol.
/// Returns the max matched distance, or a negative value when no bijection
/// under tol exists. Sets of different sizes never match.
double match_residual(std::span<const Vec3> a, std::span<const Vec3> b, double tol);

struct WitnessScan {
  int index = -1;            // smallest index g with g(left) = right, -1 if none
  double residual = -1.0;    // match residual of the witness, or the best
                             // (smallest) failed residual bound seen
};

/// Scan rotations for one mapping left onto right as point sets.
WitnessScan witness_scan_serial(std::span<const ElementD> rotations,
                                std::span<const Vec3> left, std::span<const Vec3> right,
                                double tol);
WitnessScan witness_scan(std::span<const ElementD> rotations, std::span<const Vec3> left,
                         std::span<const Vec3> right, double tol);

/// One supporting plane of a point set: every point lies on the negative
/// side or on the plane; `members` are the on-plane points (a face).
struct PlaneFace {
  std::vector<int> members;  // sorted point indices
  Vec3 normal{};             // unit, outward
  double offset = 0.0;       // plane is normal . x = offset
};

/// All supporting planes spanned by point triples, deduplicated by member
/// set. Points within tol of a plane count as on it.
std::vector<PlaneFace> supporting_planes_serial(std::span<const Vec3> pts, double tol);
std::vector<PlaneFace> supporting_planes(std::span<const Vec3> pts, double tol);

}  // namespace chiral::kernels

#endif
