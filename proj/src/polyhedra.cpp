#include "toric/polyhedra.hpp"

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <map>
#include <set>

namespace toric {

namespace {

using Bits = boost::dynamic_bitset<>;

struct Ray {
  IntVec v;   // primitive
  Bits zero;  // processed constraints this ray lies on
};

IntVec combine(const Int& wp, const IntVec& p, const Int& wm, const IntVec& m) {
  // wp * m - wm * p with wp = <a,p> > 0, wm = <a,m> < 0; positive combination
  IntVec out(p.size());
  for (size_t i = 0; i < p.size(); ++i) out[i] = wp * m[i] - wm * p[i];
  return primitive_vector(out);
}

std::vector<IntVec> canonical_constraints(std::vector<IntVec> list) {
  std::vector<IntVec> out;
  for (auto& a : list) {
    if (is_zero_vec(a)) continue;
    out.push_back(primitive_vector(a));
  }
  std::sort(out.begin(), out.end(), [](const IntVec& a, const IntVec& b) { return lex_less(a, b); });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Orthogonal reduction of ray representatives modulo the lineality space.
std::vector<IntVec> reduce_mod_lineality(const std::vector<IntVec>& rays,
                                         const std::vector<IntVec>& lin) {
  if (lin.empty()) {
    std::vector<IntVec> out = rays;
    std::sort(out.begin(), out.end(), [](const IntVec& a, const IntVec& b) { return lex_less(a, b); });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }
  std::vector<RatVec> orth;
  for (const auto& b : lin) {
    RatVec o = to_rat(b);
    for (const auto& prev : orth) {
      Rat num = dot(o, prev), den = dot(prev, prev);
      if (num == 0) continue;
      Rat f = num / den;
      for (size_t i = 0; i < o.size(); ++i) o[i] -= f * prev[i];
    }
    orth.push_back(std::move(o));
  }
  std::vector<IntVec> out;
  for (const auto& r : rays) {
    RatVec x = to_rat(r);
    for (const auto& o : orth) {
      Rat num = dot(x, o), den = dot(o, o);
      if (num == 0) continue;
      Rat f = num / den;
      for (size_t i = 0; i < x.size(); ++i) x[i] -= f * o[i];
    }
    out.push_back(primitive_vector(x));
  }
  std::sort(out.begin(), out.end(), [](const IntVec& a, const IntVec& b) { return lex_less(a, b); });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

DualDescription dual_description(int dim, std::vector<IntVec> ineqs_in, std::vector<IntVec> eqs_in) {
  std::vector<IntVec> eqs = canonical_constraints(std::move(eqs_in));
  std::vector<IntVec> ineqs = canonical_constraints(std::move(ineqs_in));
  const size_t total = eqs.size() + ineqs.size();

  std::vector<RatVec> lin;
  for (int i = 0; i < dim; ++i) {
    RatVec e(dim, Rat(0));
    e[i] = 1;
    lin.push_back(std::move(e));
  }
  std::vector<Ray> rays;

  size_t cidx = 0;
  auto process = [&](const IntVec& a, bool is_eq) {
    // try to reduce the lineality space first
    size_t b0 = lin.size();
    for (size_t i = 0; i < lin.size(); ++i)
      if (dot(a, lin[i]) != 0) {
        b0 = i;
        break;
      }
    if (b0 < lin.size()) {
      RatVec pivot = lin[b0];
      Rat pv = dot(a, pivot);
      std::vector<RatVec> newlin;
      for (size_t i = 0; i < lin.size(); ++i) {
        if (i == b0) continue;
        Rat f = dot(a, lin[i]) / pv;
        RatVec b = lin[i];
        if (f != 0)
          for (size_t k = 0; k < b.size(); ++k) b[k] -= f * pivot[k];
        newlin.push_back(std::move(b));
      }
      lin = std::move(newlin);
      for (auto& r : rays) {
        Rat f = dot(a, to_rat(r.v)) / pv;
        if (f != 0) {
          RatVec x = to_rat(r.v);
          for (size_t k = 0; k < x.size(); ++k) x[k] -= f * pivot[k];
          r.v = primitive_vector(x);
        }
        r.zero.set(cidx);  // every old ray now lies on the hyperplane
      }
      if (!is_eq) {
        Ray r0;
        RatVec v0 = pivot;
        if (pv < 0)
          for (auto& x : v0) x = -x;
        r0.v = primitive_vector(v0);
        r0.zero.resize(total);
        for (size_t k = 0; k < cidx; ++k) r0.zero.set(k);  // pivot was orthogonal to all before
        rays.push_back(std::move(r0));
      }
      ++cidx;
      return;
    }

    // lineality orthogonal to a: split the rays
    std::vector<Int> val(rays.size());
    for (size_t i = 0; i < rays.size(); ++i) val[i] = dot(a, rays[i].v);
    bool any_neg = false;
    for (const auto& x : val) any_neg |= (x < 0);
    if (!is_eq && !any_neg) {
      for (size_t i = 0; i < rays.size(); ++i)
        if (val[i] == 0) rays[i].zero.set(cidx);
      ++cidx;
      return;
    }
    std::vector<Ray> next;
    for (size_t i = 0; i < rays.size(); ++i) {
      if (val[i] == 0) {
        next.push_back(rays[i]);
        next.back().zero.set(cidx);
      } else if (val[i] > 0 && !is_eq) {
        next.push_back(rays[i]);
      }
    }
    // adjacent (+,-) pairs combine onto the hyperplane
    for (size_t p = 0; p < rays.size(); ++p) {
      if (val[p] <= 0) continue;
      for (size_t m = 0; m < rays.size(); ++m) {
        if (val[m] >= 0) continue;
        Bits z = rays[p].zero & rays[m].zero;
        bool adjacent = true;
        for (size_t o = 0; o < rays.size() && adjacent; ++o) {
          if (o == p || o == m) continue;
          if (z.is_subset_of(rays[o].zero)) adjacent = false;
        }
        if (!adjacent) continue;
        Ray nr;
        nr.v = combine(val[p], rays[p].v, val[m], rays[m].v);
        nr.zero = z;
        nr.zero.set(cidx);
        next.push_back(std::move(nr));
      }
    }
    // defensive dedupe by value
    std::sort(next.begin(), next.end(), [](const Ray& a, const Ray& b) { return lex_less(a.v, b.v); });
    next.erase(std::unique(next.begin(), next.end(),
                           [](const Ray& a, const Ray& b) { return a.v == b.v; }),
               next.end());
    rays = std::move(next);
    ++cidx;
  };

  for (auto& r : rays) r.zero.resize(total);
  for (const auto& a : eqs) process(a, true);
  for (const auto& a : ineqs) process(a, false);

  DualDescription out;
  std::vector<RatVec> linvecs = lin;
  out.lineality = lattice_rref(linvecs);
  std::vector<IntVec> rawrays;
  rawrays.reserve(rays.size());
  for (auto& r : rays) rawrays.push_back(std::move(r.v));
  out.rays = reduce_mod_lineality(rawrays, out.lineality);
  return out;
}

std::vector<IntVec> PolyCone::facet_normals() const {
  std::vector<IntVec> out = facet_rays_;
  for (const auto& e : facet_lineality_) {
    out.push_back(e);
    out.push_back(vec_neg(e));
  }
  std::sort(out.begin(), out.end(), [](const IntVec& a, const IntVec& b) { return lex_less(a, b); });
  return out;
}

PolyCone PolyCone::from_generators(int dim, const std::vector<RatVec>& gens) {
  std::vector<IntVec> g;
  for (const auto& v : gens) {
    if (is_zero_vec(v)) continue;
    g.push_back(primitive_vector(v));
  }
  return from_generators(dim, g);
}

PolyCone PolyCone::from_generators(int dim, const std::vector<IntVec>& gens,
                                   const std::vector<IntVec>& lineality) {
  DualDescription dual = dual_description(dim, gens, lineality);
  DualDescription primal = dual_description(dim, dual.rays, dual.lineality);
  PolyCone c;
  c.ambient_dim_ = dim;
  c.generators_ = primal.rays;
  c.lineality_ = primal.lineality;
  c.facet_rays_ = dual.rays;
  c.facet_lineality_ = dual.lineality;
  return c;
}

PolyCone PolyCone::from_inequalities(int dim, const std::vector<IntVec>& normals,
                                     const std::vector<IntVec>& equalities) {
  DualDescription primal = dual_description(dim, normals, equalities);
  DualDescription dual = dual_description(dim, primal.rays, primal.lineality);
  PolyCone c;
  c.ambient_dim_ = dim;
  c.generators_ = primal.rays;
  c.lineality_ = primal.lineality;
  c.facet_rays_ = dual.rays;
  c.facet_lineality_ = dual.lineality;
  return c;
}

bool PolyCone::contains(const RatVec& x) const {
  if (static_cast<int>(x.size()) != ambient_dim_) throw Error("contains: dimension mismatch");
  for (const auto& n : facet_rays_)
    if (dot(n, x) < 0) return false;
  for (const auto& e : facet_lineality_)
    if (dot(e, x) != 0) return false;
  return true;
}

bool PolyCone::contains(const IntVec& x) const { return contains(to_rat(x)); }

int PolyCone::dim() const {
  std::vector<RatVec> rows;
  for (const auto& g : generators_) rows.push_back(to_rat(g));
  for (const auto& l : lineality_) rows.push_back(to_rat(l));
  return static_cast<int>(rat_rank(std::move(rows)));
}

std::vector<IntVec> PolyCone::extremal_rays() const {
  if (!lineality_.empty()) throw Error("cone not strongly convex");
  return generators_;
}

PolyCone dual_cone(const PolyCone& c) {
  // the facet description of C is the generator description of its dual
  return PolyCone::from_generators(c.ambient_dim(), c.facet_rays(), c.facet_lineality());
}

PolyCone cone_intersection(const PolyCone& c1, const PolyCone& c2) {
  if (c1.ambient_dim() != c2.ambient_dim()) throw Error("cone_intersection: dimension mismatch");
  std::vector<IntVec> normals = c1.facet_rays();
  normals.insert(normals.end(), c2.facet_rays().begin(), c2.facet_rays().end());
  std::vector<IntVec> eqs = c1.facet_lineality();
  eqs.insert(eqs.end(), c2.facet_lineality().begin(), c2.facet_lineality().end());
  return PolyCone::from_inequalities(c1.ambient_dim(), normals, eqs);
}

PolyCone conical_hull_sum(const PolyCone& c1, const PolyCone& c2) {
  if (c1.ambient_dim() != c2.ambient_dim()) throw Error("conical_hull_sum: dimension mismatch");
  std::vector<IntVec> gens = c1.generators();
  gens.insert(gens.end(), c2.generators().begin(), c2.generators().end());
  std::vector<IntVec> lin = c1.lineality_basis();
  lin.insert(lin.end(), c2.lineality_basis().begin(), c2.lineality_basis().end());
  return PolyCone::from_generators(c1.ambient_dim(), gens, lin);
}

bool cone_contains_cone(const PolyCone& outer, const PolyCone& inner) {
  for (const auto& g : inner.generators())
    if (!outer.contains(g)) return false;
  for (const auto& l : inner.lineality_basis()) {
    if (!outer.contains(l)) return false;
    if (!outer.contains(vec_neg(l))) return false;
  }
  return true;
}

bool cone_equals(const PolyCone& c1, const PolyCone& c2) {
  return cone_contains_cone(c1, c2) && cone_contains_cone(c2, c1);
}

bool is_extremal_ray(const PolyCone& c, const RatVec& x) {
  if (is_zero_vec(x)) return false;
  if (!c.lineality_basis().empty()) return false;
  if (!c.contains(x)) return false;
  std::vector<RatVec> active;
  for (const auto& e : c.facet_lineality()) active.push_back(to_rat(e));
  for (const auto& n : c.facet_rays())
    if (dot(n, x) == 0) active.push_back(to_rat(n));
  return rat_rank(std::move(active)) == static_cast<size_t>(c.ambient_dim()) - 1;
}

int Polytope::dim() const {
  if (vertices.empty()) return -1;
  std::vector<RatVec> rows;
  for (size_t i = 1; i < vertices.size(); ++i) {
    RatVec d(vertices[i].size());
    for (size_t k = 0; k < d.size(); ++k) d[k] = vertices[i][k] - vertices[0][k];
    rows.push_back(std::move(d));
  }
  return static_cast<int>(rat_rank(std::move(rows)));
}

const PolytopeFace* Polytope::find_face(const std::vector<int>& idx) const {
  std::vector<int> key = idx;
  std::sort(key.begin(), key.end());
  for (const auto& f : faces)
    if (f.vertex_indices == key) return &f;
  return nullptr;
}

bool Polytope::has_face_with_vertices(const std::vector<int>& idx) const {
  return find_face(idx) != nullptr;
}

Polytope polytope_faces(const std::vector<RatVec>& points) {
  if (points.empty()) throw Error("polytope_faces: at least one point required");
  const int dim = static_cast<int>(points[0].size());
  std::vector<IntVec> hom;
  for (const auto& p : points) {
    if (static_cast<int>(p.size()) != dim) throw Error("polytope_faces: ragged input");
    RatVec h = p;
    h.push_back(Rat(1));
    hom.push_back(primitive_vector(h));
  }
  DualDescription dual = dual_description(dim + 1, hom, {});
  DualDescription primal = dual_description(dim + 1, dual.rays, dual.lineality);

  Polytope poly;
  poly.ambient_dim = dim;
  for (const auto& r : primal.rays) {
    const Int& t = r[dim];
    if (t <= 0) throw Error("polytope_faces: internal: non-vertex ray");
    RatVec v(dim);
    for (int k = 0; k < dim; ++k) v[k] = Rat(r[k], t);
    poly.vertices.push_back(std::move(v));
  }
  std::sort(poly.vertices.begin(), poly.vertices.end(),
            [](const RatVec& a, const RatVec& b) { return lex_less(a, b); });

  const size_t nv = poly.vertices.size();
  // facet candidates from the dual rays; active sets identify the faces
  struct Facet {
    std::vector<int> active;
    IntVec normal;
    Int offset;
  };
  std::vector<Facet> facets;
  for (const auto& f : dual.rays) {
    Facet fc;
    fc.normal = IntVec(f.begin(), f.begin() + dim);
    fc.offset = f[dim];
    for (size_t j = 0; j < nv; ++j) {
      Rat val = dot(fc.normal, poly.vertices[j]) + Rat(fc.offset);
      if (val == 0) fc.active.push_back(static_cast<int>(j));
    }
    facets.push_back(std::move(fc));
  }

  // every proper face is an intersection of facets; close under intersections
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> queue;
  for (const auto& fc : facets)
    if (!fc.active.empty() && seen.insert(fc.active).second) queue.push_back(fc.active);
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    std::vector<int> cur = queue[qi];
    for (const auto& fc : facets) {
      std::vector<int> inter;
      std::set_intersection(cur.begin(), cur.end(), fc.active.begin(), fc.active.end(),
                            std::back_inserter(inter));
      if (inter.empty() || inter == cur) continue;
      if (seen.insert(inter).second) queue.push_back(inter);
    }
  }

  for (const auto& vs : seen) {
    PolytopeFace face;
    face.vertex_indices = vs;
    // supporting hyperplane: sum of the facet normals active on this face
    face.normal.assign(dim, Int(0));
    face.offset = 0;
    for (const auto& fc : facets) {
      if (!std::includes(fc.active.begin(), fc.active.end(), vs.begin(), vs.end())) continue;
      for (int k = 0; k < dim; ++k) face.normal[k] += fc.normal[k];
      face.offset += fc.offset;
    }
    std::vector<RatVec> rows;
    for (size_t i = 1; i < vs.size(); ++i) {
      RatVec d(dim);
      for (int k = 0; k < dim; ++k) d[k] = poly.vertices[vs[i]][k] - poly.vertices[vs[0]][k];
      rows.push_back(std::move(d));
    }
    face.dim = static_cast<int>(rat_rank(std::move(rows)));
    poly.faces.push_back(std::move(face));
  }
  std::sort(poly.faces.begin(), poly.faces.end(), [](const PolytopeFace& a, const PolytopeFace& b) {
    if (a.dim != b.dim) return a.dim > b.dim;
    return a.vertex_indices < b.vertex_indices;
  });
  return poly;
}

Polytope polytope_from_inequalities(int dim, const std::vector<std::pair<IntVec, Int>>& ineqs) {
  std::vector<IntVec> hom;
  for (const auto& [a, c] : ineqs) {
    IntVec h = a;
    h.push_back(c);
    hom.push_back(std::move(h));
  }
  {
    IntVec t(dim + 1, Int(0));
    t[dim] = 1;
    hom.push_back(std::move(t));
  }
  DualDescription primal = dual_description(dim + 1, hom, {});
  std::vector<RatVec> vertices;
  bool has_vertex = false, has_recession = false;
  for (const auto& l : primal.lineality)
    if (!is_zero_vec(IntVec(l.begin(), l.begin() + dim))) has_recession = true;
  for (const auto& r : primal.rays) {
    if (r[dim] == 0) {
      has_recession = true;
      continue;
    }
    has_vertex = true;
    RatVec v(dim);
    for (int k = 0; k < dim; ++k) v[k] = Rat(r[k], r[dim]);
    vertices.push_back(std::move(v));
  }
  if (!has_vertex) return Polytope{dim, {}, {}};
  if (has_recession) throw Error("polytope_from_inequalities: unbounded solution set");
  return polytope_faces(vertices);
}

}  // namespace toric
