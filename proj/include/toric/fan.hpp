#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toric/polyhedra.hpp"

namespace toric {

// Complete simplicial fan: primitive ray generators plus maximal cones as
// sorted ray-index sets.  Lower-dimensional cones are subsets.
struct Fan {
  int rank = 0;
  std::vector<IntVec> rays;
  std::vector<std::vector<int>> max_cones;
  std::string name;

  bool operator==(const Fan& other) const {
    return rank == other.rank && rays == other.rays && max_cones == other.max_cones;
  }
};

struct ValidationReport {
  bool rays_primitive = true;
  bool simplicial = true;
  bool compatible = true;
  bool complete = true;
  std::vector<std::string> problems;
  bool ok() const { return rays_primitive && simplicial && compatible && complete; }
};

ValidationReport validate_fan(const Fan& f);

// Insert the ray v; every cone containing v is replaced by the cones over its
// facets not containing v.  v is appended at the end of the ray list.
Fan star_subdivision(const Fan& f, const IntVec& v);

struct QuotientRayImage {
  int source_ray;  // ray of the original fan, adjacent to tau, not in tau
  int image_ray;   // index in the quotient fan
  IntVec w;        // primitive image
  Int m;           // positive integer with projection(v_i) = m * w
};

struct QuotientFanData {
  std::vector<int> base_cone;
  int quotient_rank = 0;
  IntMatrix projection;  // (n - dim tau) x n, surjective, kernel = span(tau) ∩ N
  Fan quotient_fan;
  std::vector<QuotientRayImage> ray_map;

  const QuotientRayImage* image_of(int source_ray) const;
};

QuotientFanData quotient_fan(const Fan& f, const std::vector<int>& tau);

// Rays lying in a common cone with tau (including the rays of tau), sorted.
std::vector<int> adjacent_rays(const Fan& f, const std::vector<int>& tau);

std::vector<std::vector<int>> cones_of_dim(const Fan& f, int d);

bool is_cone_of(const Fan& f, const std::vector<int>& tau);

bool simplicial_cone_contains(const Fan& f, const std::vector<int>& cone, const RatVec& x);
std::optional<int> find_containing_max_cone(const Fan& f, const RatVec& x);

// Wall = (n-1)-cone between two maximal cones of a complete fan.
struct Wall {
  std::vector<int> wall;
  int cone_a = 0, cone_b = 0;  // indices into max_cones
  int opp_a = 0, opp_b = 0;    // ray of each side not in the wall
};

std::vector<Wall> fan_walls(const Fan& f);

// Coefficients of the invariant curve class of a wall: supported on
// wall ∪ {opp_a, opp_b}, positive on both opposite rays, sum a_i v_i = 0.
RatVec wall_curve_class(const Fan& f, const Wall& w);

}  // namespace toric
