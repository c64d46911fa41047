#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "oracle.hpp"
#include "toric/lp.hpp"
#include "toric/polyhedra.hpp"

using namespace toric;

namespace {

PolyCone orthant(int d) {
  std::vector<IntVec> gens;
  for (int i = 0; i < d; ++i) {
    IntVec e(d, Int(0));
    e[i] = 1;
    gens.push_back(std::move(e));
  }
  return PolyCone::from_generators(d, gens);
}

PolyCone random_cone(std::mt19937& rng, int maxdim, int maxgens, int bound) {
  std::uniform_int_distribution<int> dd(1, maxdim), gg(1, maxgens);
  int d = dd(rng), g = gg(rng);
  std::vector<IntVec> gens;
  for (int i = 0; i < g; ++i) {
    IntVec v = oracle::random_int_vec(rng, d, -bound, bound);
    if (!is_zero_vec(v)) gens.push_back(std::move(v));
  }
  if (gens.empty()) {
    gens.push_back(IntVec(d, Int(0)));
    gens.back()[0] = 1;
  }
  return PolyCone::from_generators(d, gens);
}

}  // namespace

TEST_CASE("dual cone: first orthant is self-dual") {
  PolyCone c = orthant(3);
  CHECK(cone_equals(dual_cone(c), c));
  CHECK(c.generators().size() == 3);
  CHECK(c.facet_rays().size() == 3);
}

TEST_CASE("dual cone: zero cone dualizes to everything") {
  PolyCone zero = PolyCone::from_generators(2, std::vector<IntVec>{});
  CHECK(zero.is_zero_cone());
  PolyCone all = dual_cone(zero);
  CHECK(all.lineality_basis().size() == 2);
  CHECK(all.generators().empty());
  CHECK(all.contains(RatVec{5, -7}));
}

TEST_CASE("dual cone: plane wedge") {
  PolyCone c = PolyCone::from_generators(2, std::vector<IntVec>{{1, 0}, {1, 1}});
  PolyCone d = dual_cone(c);
  CHECK(d.generators() == std::vector<IntVec>{{0, 1}, {1, -1}});
  for (const auto& g : c.generators())
    for (const auto& h : d.generators()) CHECK(dot(g, h) >= 0);
  CHECK(cone_equals(dual_cone(d), c));
}

TEST_CASE("extremal rays: orthant") {
  CHECK(orthant(3).extremal_rays() ==
        std::vector<IntVec>{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}});
}

TEST_CASE("extremal rays: interior generator dropped") {
  PolyCone c = PolyCone::from_generators(2, std::vector<IntVec>{{1, 0}, {1, 1}, {1, 2}});
  CHECK(c.extremal_rays() == std::vector<IntVec>{{1, 0}, {1, 2}});
}

TEST_CASE("extremal rays: rejects cones with lineality") {
  PolyCone line = PolyCone::from_generators(2, std::vector<IntVec>{{1, 0}, {-1, 0}});
  CHECK(line.lineality_basis().size() == 1);
  CHECK_THROWS_WITH(line.extremal_rays(), "cone not strongly convex");
}

TEST_CASE("cone intersection") {
  PolyCone c = PolyCone::from_generators(2, std::vector<IntVec>{{1, 0}, {0, 1}});
  CHECK(cone_equals(cone_intersection(c, c), c));

  PolyCone half = PolyCone::from_inequalities(2, {{-1, 0}});  // x1 <= 0
  PolyCone ray = cone_intersection(c, half);
  CHECK(ray.generators() == std::vector<IntVec>{{0, 1}});
  CHECK(ray.lineality_basis().empty());

  CHECK_THROWS(cone_intersection(c, orthant(3)));
}

TEST_CASE("conical hull sum") {
  PolyCone zero = PolyCone::from_generators(2, std::vector<IntVec>{});
  PolyCone c = PolyCone::from_generators(2, std::vector<IntVec>{{2, 1}});
  CHECK(cone_equals(conical_hull_sum(c, zero), c));

  PolyCone e1 = PolyCone::from_generators(2, std::vector<IntVec>{{1, 0}});
  PolyCone e2 = PolyCone::from_generators(2, std::vector<IntVec>{{0, 1}});
  CHECK(cone_equals(conical_hull_sum(e1, e2), orthant(2)));
}

TEST_CASE("contains") {
  PolyCone c = orthant(3);
  CHECK(c.contains(RatVec{1, 2, 3}));
  CHECK(!c.contains(RatVec{-1, 0, 0}));
  CHECK(c.contains(RatVec{0, 0, 0}));
  CHECK_THROWS(c.contains(RatVec{1, 2}));
}

TEST_CASE("is_extremal_ray") {
  PolyCone c = PolyCone::from_generators(2, std::vector<IntVec>{{1, 0}, {1, 2}});
  CHECK(is_extremal_ray(c, RatVec{1, 0}));
  CHECK(is_extremal_ray(c, RatVec{3, 0}));
  CHECK(!is_extremal_ray(c, RatVec{1, 1}));  // interior
  CHECK(!is_extremal_ray(c, RatVec{0, 0}));
  CHECK(!is_extremal_ray(c, RatVec{-1, 0}));  // outside
}

TEST_CASE("polytope: unit square") {
  std::vector<RatVec> pts = {{0, 0}, {1, 0}, {0, 1}, {1, 1}};
  Polytope p = polytope_faces(pts);
  REQUIRE(p.vertices.size() == 4);
  CHECK(p.dim() == 2);
  int edges = 0, verts = 0;
  for (const auto& f : p.faces) {
    if (f.dim == 1) ++edges;
    if (f.dim == 0) ++verts;
  }
  CHECK(edges == 4);
  CHECK(verts == 4);
  // supporting hyperplanes: face vertices on them, all others strictly positive
  for (const auto& f : p.faces) {
    for (size_t j = 0; j < p.vertices.size(); ++j) {
      Rat val = dot(f.normal, p.vertices[j]) + Rat(f.offset);
      bool on_face = std::binary_search(f.vertex_indices.begin(), f.vertex_indices.end(),
                                        static_cast<int>(j));
      if (on_face)
        CHECK(val == 0);
      else
        CHECK(val > 0);
    }
  }
}

TEST_CASE("polytope: interior point dropped") {
  std::vector<RatVec> pts = {{0, 0}, {2, 0}, {0, 2}, {2, 2}, {1, 1}};
  Polytope p = polytope_faces(pts);
  CHECK(p.vertices.size() == 4);
  for (const auto& v : p.vertices) CHECK(v != RatVec{1, 1});
}

TEST_CASE("polytope: single point and segment") {
  Polytope pt = polytope_faces({{Rat(1, 2), Rat(-3, 4)}});
  CHECK(pt.vertices.size() == 1);
  CHECK(pt.dim() == 0);
  CHECK(pt.faces.empty());

  Polytope seg = polytope_faces({RatVec{0, 0, 0}, RatVec{2, 2, 2}, RatVec{1, 1, 1}});
  CHECK(seg.vertices.size() == 2);
  CHECK(seg.dim() == 1);
  REQUIRE(seg.faces.size() == 2);
  CHECK(seg.faces[0].dim == 0);
  CHECK(seg.faces[1].dim == 0);
}

TEST_CASE("polytope: paper-style hull has the prescribed face") {
  // Q for tau = ray 7 of the fixture fan, S = {7,1,2,3}, p = 8, q = 1,
  // eps_j = 1/(2j) over the non-S rays (4,5,6,8 in that order)
  RatVec v1 = {1, 1, -1}, v2 = {-1, 0, -1}, v3 = {0, -1, -1}, v4 = {1, 0, -1};
  RatVec v5 = {0, 1, -1}, v6 = {-1, -1, -1}, v7 = {0, 0, -1}, v8 = {0, 0, 1};
  auto scale = [](const RatVec& v, const Rat& s) {
    RatVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
    return out;
  };
  std::vector<RatVec> pts = {scale(v7, 8),         scale(v1, 1),
                             scale(v2, 1),         scale(v3, 1),
                             scale(v4, Rat(1, 2)), scale(v5, Rat(1, 4)),
                             scale(v6, Rat(1, 6)), scale(v8, Rat(1, 8))};
  Polytope q = polytope_faces(pts);
  REQUIRE(q.vertices.size() == 8);
  auto vertex_index = [&](const RatVec& v) {
    for (size_t i = 0; i < q.vertices.size(); ++i)
      if (q.vertices[i] == v) return static_cast<int>(i);
    return -1;
  };
  std::vector<int> face = {vertex_index(scale(v7, 8)), vertex_index(scale(v1, 1)),
                           vertex_index(scale(v2, 1))};
  REQUIRE(*std::min_element(face.begin(), face.end()) >= 0);
  std::sort(face.begin(), face.end());
  CHECK(q.has_face_with_vertices(face));

  // independent check: the hyperplane through those three points supports Q
  std::vector<RatVec> rows = {scale(v7, 8), scale(v1, 1), scale(v2, 1)};
  auto normal = solve_linear(rows, RatVec{1, 1, 1});
  REQUIRE(normal.has_value());
  for (const auto& v : q.vertices) {
    Rat val = dot(*normal, v);
    bool on = (v == scale(v7, 8) || v == scale(v1, 1) || v == scale(v2, 1));
    if (on)
      CHECK(val == 1);
    else
      CHECK(val < 1);
  }
}

TEST_CASE("polytope from inequalities") {
  // triangle u1 >= -1, u2 >= 0, -u1-u2 >= 0
  std::vector<std::pair<IntVec, Int>> ineqs = {{{1, 0}, 1}, {{0, 1}, 0}, {{-1, -1}, 0}};
  Polytope p = polytope_from_inequalities(2, ineqs);
  CHECK(p.vertices.size() == 3);

  // infeasible: u1 >= 1, u2 >= 0, -u1-u2 >= 0
  Polytope empty = polytope_from_inequalities(2, {{{1, 0}, -1}, {{0, 1}, 0}, {{-1, -1}, 0}});
  CHECK(empty.empty());

  // unbounded: u1 >= 0
  CHECK_THROWS(polytope_from_inequalities(2, {{{1, 0}, 0}}));
}

TEST_CASE("property: biduality on random cones") {
  auto rng = oracle::seeded_rng(2024);
  for (int trial = 0; trial < 120; ++trial) {
    PolyCone c = random_cone(rng, 5, 8, 5);
    CHECK(cone_equals(dual_cone(dual_cone(c)), c));
  }
}

TEST_CASE("property: extremal ray minimality") {
  auto rng = oracle::seeded_rng(31337);
  for (int trial = 0; trial < 60; ++trial) {
    PolyCone c = random_cone(rng, 4, 7, 5);
    if (!c.is_strongly_convex() || c.generators().size() < 2) continue;
    const auto& gens = c.generators();
    for (size_t skip = 0; skip < gens.size(); ++skip) {
      std::vector<IntVec> rest;
      for (size_t i = 0; i < gens.size(); ++i)
        if (i != skip) rest.push_back(gens[i]);
      PolyCone smaller = PolyCone::from_generators(c.ambient_dim(), rest);
      CHECK(!smaller.contains(gens[skip]));
    }
  }
}

TEST_CASE("property: duality exchanges intersection and sum") {
  auto rng = oracle::seeded_rng(555);
  int checked = 0;
  for (int trial = 0; trial < 200 && checked < 60; ++trial) {
    std::uniform_int_distribution<int> dd(2, 4);
    int d = dd(rng);
    std::vector<IntVec> g1, g2;
    for (int i = 0; i < 6; ++i) {
      IntVec a = oracle::random_int_vec(rng, d, -5, 5), b = oracle::random_int_vec(rng, d, -5, 5);
      if (!is_zero_vec(a)) g1.push_back(a);
      if (!is_zero_vec(b)) g2.push_back(b);
    }
    if (g1.empty() || g2.empty()) continue;
    PolyCone c1 = PolyCone::from_generators(d, g1), c2 = PolyCone::from_generators(d, g2);
    if (!c1.is_strongly_convex() || !c2.is_strongly_convex()) continue;
    if (c1.dim() != d || c2.dim() != d) continue;
    ++checked;
    CHECK(cone_equals(dual_cone(cone_intersection(c1, c2)),
                      conical_hull_sum(dual_cone(c1), dual_cone(c2))));
  }
  CHECK(checked >= 30);
}

TEST_CASE("property: contains agrees with LP feasibility over generators") {
  auto rng = oracle::seeded_rng(808);
  for (int trial = 0; trial < 80; ++trial) {
    PolyCone c = random_cone(rng, 4, 6, 4);
    std::vector<IntVec> gens = c.generators();
    for (const auto& l : c.lineality_basis()) {
      gens.push_back(l);
      gens.push_back(vec_neg(l));
    }
    RatVec x = to_rat(oracle::random_int_vec(rng, c.ambient_dim(), -6, 6));
    CHECK(c.contains(x) == in_conical_span(gens, x));
  }
}
