#pragma once

#include <vector>

#include "toric/ratlinalg.hpp"

namespace toric {

// Both sides of a dual description: extremal rays plus a lineality basis.
struct DualDescription {
  std::vector<IntVec> rays;
  std::vector<IntVec> lineality;
};

// Motzkin double description: generators of
//   { x : <a,x> >= 0 for a in ineqs, <e,x> = 0 for e in eqs }.
// Ray representatives are reduced modulo the lineality space (orthogonal
// projection), made primitive and sorted, so the output is canonical.
DualDescription dual_description(int dim, std::vector<IntVec> ineqs, std::vector<IntVec> eqs);

// Rational polyhedral cone carrying both canonical descriptions.  Cones inside
// a proper subspace keep ambient coordinates; the subspace shows up as the
// facet_lineality equality normals (reported as +/- pairs by facet_normals()).
class PolyCone {
 public:
  PolyCone() : ambient_dim_(0) {}

  static PolyCone from_generators(int dim, const std::vector<RatVec>& gens);
  static PolyCone from_generators(int dim, const std::vector<IntVec>& gens,
                                  const std::vector<IntVec>& lineality = {});
  static PolyCone from_inequalities(int dim, const std::vector<IntVec>& normals,
                                    const std::vector<IntVec>& equalities = {});

  int ambient_dim() const { return ambient_dim_; }
  const std::vector<IntVec>& generators() const { return generators_; }
  const std::vector<IntVec>& lineality_basis() const { return lineality_; }
  const std::vector<IntVec>& facet_rays() const { return facet_rays_; }
  const std::vector<IntVec>& facet_lineality() const { return facet_lineality_; }
  // Inequality normals including +/- pairs for the equality constraints.
  std::vector<IntVec> facet_normals() const;

  bool contains(const RatVec& x) const;
  bool contains(const IntVec& x) const;
  bool is_strongly_convex() const { return lineality_.empty(); }
  int dim() const;
  bool is_zero_cone() const { return generators_.empty() && lineality_.empty(); }

  // Primitive generators of the 1-dimensional faces, sorted; requires a
  // strongly convex cone.
  std::vector<IntVec> extremal_rays() const;

  bool operator==(const PolyCone& other) const = default;

 private:
  int ambient_dim_;
  std::vector<IntVec> generators_;
  std::vector<IntVec> lineality_;
  std::vector<IntVec> facet_rays_;
  std::vector<IntVec> facet_lineality_;
};

PolyCone dual_cone(const PolyCone& c);
PolyCone cone_intersection(const PolyCone& c1, const PolyCone& c2);
PolyCone conical_hull_sum(const PolyCone& c1, const PolyCone& c2);
bool cone_equals(const PolyCone& c1, const PolyCone& c2);  // mutual containment
bool cone_contains_cone(const PolyCone& outer, const PolyCone& inner);
// x in C, nonzero, spanning a 1-dimensional face of C.
bool is_extremal_ray(const PolyCone& c, const RatVec& x);

struct PolytopeFace {
  std::vector<int> vertex_indices;  // sorted
  IntVec normal;                    // supporting hyperplane <normal,x> + offset >= 0
  Int offset;
  int dim;
};

struct Polytope {
  int ambient_dim = 0;
  std::vector<RatVec> vertices;     // sorted lexicographically
  std::vector<PolytopeFace> faces;  // proper nonempty faces, facets first

  bool empty() const { return vertices.empty(); }
  int dim() const;
  bool has_face_with_vertices(const std::vector<int>& idx) const;
  const PolytopeFace* find_face(const std::vector<int>& idx) const;
};

// Convex hull with complete face lattice; redundant points dropped.
Polytope polytope_faces(const std::vector<RatVec>& points);

// Bounded solution set of { x : <a,x> + c >= 0 }; throws if unbounded.
Polytope polytope_from_inequalities(int dim, const std::vector<std::pair<IntVec, Int>>& ineqs);

}  // namespace toric
