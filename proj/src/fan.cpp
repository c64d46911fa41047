#include "toric/fan.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace toric {

namespace {

std::string cone_label(const std::vector<int>& c) {
  std::ostringstream os;
  os << "{";
  for (size_t i = 0; i < c.size(); ++i) {
    if (i) os << ",";
    os << c[i];
  }
  os << "}";
  return os.str();
}

std::vector<RatVec> rows_of(const Fan& f, const std::vector<int>& cone) {
  std::vector<RatVec> rows;
  rows.reserve(cone.size());
  for (int i : cone) rows.push_back(to_rat(f.rays[i]));
  return rows;
}

}  // namespace

bool is_cone_of(const Fan& f, const std::vector<int>& tau) {
  if (!std::is_sorted(tau.begin(), tau.end())) return false;
  if (std::adjacent_find(tau.begin(), tau.end()) != tau.end()) return false;
  for (int i : tau)
    if (i < 0 || i >= static_cast<int>(f.rays.size())) return false;
  if (tau.empty()) return true;
  for (const auto& mc : f.max_cones)
    if (std::includes(mc.begin(), mc.end(), tau.begin(), tau.end())) return true;
  return false;
}

bool simplicial_cone_contains(const Fan& f, const std::vector<int>& cone, const RatVec& x) {
  if (cone.empty()) return is_zero_vec(x);
  // solve x = sum lambda_i v_i with the cone's rays as columns
  std::vector<RatVec> rows(f.rank, RatVec(cone.size()));
  for (size_t j = 0; j < cone.size(); ++j)
    for (int k = 0; k < f.rank; ++k) rows[k][j] = Rat(f.rays[cone[j]][k]);
  auto sol = solve_linear(rows, x);
  if (!sol) return false;
  for (const auto& l : *sol)
    if (l < 0) return false;
  return true;
}

std::optional<int> find_containing_max_cone(const Fan& f, const RatVec& x) {
  for (size_t c = 0; c < f.max_cones.size(); ++c)
    if (simplicial_cone_contains(f, f.max_cones[c], x)) return static_cast<int>(c);
  return std::nullopt;
}

ValidationReport validate_fan(const Fan& f) {
  ValidationReport rep;
  auto fail = [&](bool& flag, const std::string& msg) {
    flag = false;
    rep.problems.push_back(msg);
  };

  if (f.rank < 1) fail(rep.rays_primitive, "rank must be positive");
  for (size_t i = 0; i < f.rays.size(); ++i) {
    if (static_cast<int>(f.rays[i].size()) != f.rank) {
      fail(rep.rays_primitive, "ray " + std::to_string(i) + " has wrong dimension");
      return rep;
    }
    if (is_zero_vec(f.rays[i]))
      fail(rep.rays_primitive, "ray " + std::to_string(i) + " is zero");
    else if (primitive_vector(f.rays[i]) != f.rays[i])
      fail(rep.rays_primitive, "ray " + std::to_string(i) + " is not primitive");
  }
  for (size_t i = 0; i < f.rays.size(); ++i)
    for (size_t j = i + 1; j < f.rays.size(); ++j)
      if (f.rays[i] == f.rays[j])
        fail(rep.rays_primitive,
             "duplicate ray " + std::to_string(i) + " = " + std::to_string(j));

  std::vector<bool> used(f.rays.size(), false);
  for (size_t c = 0; c < f.max_cones.size(); ++c) {
    const auto& mc = f.max_cones[c];
    if (!std::is_sorted(mc.begin(), mc.end()) ||
        std::adjacent_find(mc.begin(), mc.end()) != mc.end()) {
      fail(rep.simplicial, "cone " + std::to_string(c) + " is not a sorted index set");
      return rep;
    }
    for (int i : mc) {
      if (i < 0 || i >= static_cast<int>(f.rays.size())) {
        fail(rep.simplicial, "cone " + std::to_string(c) + " has an out-of-range ray index");
        return rep;
      }
      used[i] = true;
    }
  }
  for (size_t i = 0; i < f.rays.size(); ++i)
    if (!used[i]) fail(rep.rays_primitive, "ray " + std::to_string(i) + " appears in no cone");

  for (size_t c = 0; c < f.max_cones.size(); ++c) {
    if (rat_rank(rows_of(f, f.max_cones[c])) != f.max_cones[c].size())
      fail(rep.simplicial, "cone " + std::to_string(c) + " has dependent generators");
  }
  if (!rep.simplicial) return rep;

  // pairwise compatibility: geometric intersection equals the common face
  std::vector<PolyCone> cones;
  cones.reserve(f.max_cones.size());
  for (const auto& mc : f.max_cones) {
    std::vector<IntVec> gens;
    for (int i : mc) gens.push_back(f.rays[i]);
    cones.push_back(PolyCone::from_generators(f.rank, gens));
  }
  for (size_t a = 0; a < cones.size(); ++a)
    for (size_t b = a + 1; b < cones.size(); ++b) {
      std::vector<int> shared;
      std::set_intersection(f.max_cones[a].begin(), f.max_cones[a].end(),
                            f.max_cones[b].begin(), f.max_cones[b].end(),
                            std::back_inserter(shared));
      std::vector<IntVec> gens;
      for (int i : shared) gens.push_back(f.rays[i]);
      PolyCone face = PolyCone::from_generators(f.rank, gens);
      if (!cone_equals(cone_intersection(cones[a], cones[b]), face))
        fail(rep.compatible, "cones " + std::to_string(a) + " and " + std::to_string(b) +
                                 " do not meet in a common face");
    }

  // completeness: pure full dimension, every wall between exactly two maximal
  // cones, cross-validated by point location of pseudo-random directions
  if (f.max_cones.empty()) fail(rep.complete, "no maximal cones");
  for (size_t c = 0; c < f.max_cones.size(); ++c)
    if (f.max_cones[c].size() != static_cast<size_t>(f.rank))
      fail(rep.complete, "cone " + std::to_string(c) + " is not full-dimensional");
  if (rep.complete) {
    std::map<std::vector<int>, int> wall_count;
    for (const auto& mc : f.max_cones)
      for (size_t drop = 0; drop < mc.size(); ++drop) {
        std::vector<int> w;
        for (size_t i = 0; i < mc.size(); ++i)
          if (i != drop) w.push_back(mc[i]);
        ++wall_count[w];
      }
    for (const auto& [w, cnt] : wall_count)
      if (cnt != 2)
        fail(rep.complete, "wall " + cone_label(w) + " lies in " + std::to_string(cnt) +
                               " maximal cones (expected 2)");
  }
  if (rep.complete && rep.compatible) {
    std::mt19937 rng(14142);
    std::uniform_int_distribution<int> d(-9, 9);
    int tested = 0;
    while (tested < 100) {
      RatVec x(f.rank);
      bool zero = true;
      for (auto& e : x) {
        int v = d(rng);
        e = v;
        zero &= (v == 0);
      }
      if (zero) continue;
      ++tested;
      if (!find_containing_max_cone(f, x)) {
        fail(rep.complete, "direction " + vec_to_string(x) + " is not covered");
        break;
      }
    }
  }
  return rep;
}

Fan star_subdivision(const Fan& f, const IntVec& v) {
  if (static_cast<int>(v.size()) != f.rank) throw Error("star_subdivision: dimension mismatch");
  if (is_zero_vec(v) || primitive_vector(v) != v)
    throw Error("star_subdivision: subdivision ray must be primitive");
  for (const auto& r : f.rays)
    if (r == v) throw Error("star_subdivision: ray already present in the fan");

  RatVec x = to_rat(v);
  std::vector<size_t> containing;
  for (size_t c = 0; c < f.max_cones.size(); ++c)
    if (simplicial_cone_contains(f, f.max_cones[c], x)) containing.push_back(c);
  if (containing.empty()) throw Error("star_subdivision: vector not in the support of the fan");

  Fan out;
  out.rank = f.rank;
  out.rays = f.rays;
  out.rays.push_back(v);
  out.name = f.name;
  const int vidx = static_cast<int>(out.rays.size()) - 1;

  std::set<std::vector<int>> new_cones;
  std::set<size_t> subdivided(containing.begin(), containing.end());
  for (size_t c = 0; c < f.max_cones.size(); ++c) {
    if (!subdivided.count(c)) {
      new_cones.insert(f.max_cones[c]);
      continue;
    }
    const auto& mc = f.max_cones[c];
    for (size_t drop = 0; drop < mc.size(); ++drop) {
      std::vector<int> facet;
      for (size_t i = 0; i < mc.size(); ++i)
        if (i != drop) facet.push_back(mc[i]);
      if (simplicial_cone_contains(f, facet, x)) continue;
      facet.push_back(vidx);
      std::sort(facet.begin(), facet.end());
      new_cones.insert(std::move(facet));
    }
  }
  out.max_cones.assign(new_cones.begin(), new_cones.end());
  return out;
}

std::vector<int> adjacent_rays(const Fan& f, const std::vector<int>& tau) {
  if (!is_cone_of(f, tau)) throw Error("adjacent_rays: tau is not a cone of the fan");
  std::set<int> adj;
  for (const auto& mc : f.max_cones)
    if (std::includes(mc.begin(), mc.end(), tau.begin(), tau.end()))
      adj.insert(mc.begin(), mc.end());
  return std::vector<int>(adj.begin(), adj.end());
}

std::vector<std::vector<int>> cones_of_dim(const Fan& f, int d) {
  if (d < 0 || d > f.rank) throw Error("cones_of_dim: dimension out of range");
  std::set<std::vector<int>> out;
  if (d == 0) {
    out.insert(std::vector<int>{});
    return {out.begin(), out.end()};
  }
  for (const auto& mc : f.max_cones) {
    const size_t n = mc.size();
    if (n < static_cast<size_t>(d)) continue;
    std::vector<size_t> pick(d);
    for (int i = 0; i < d; ++i) pick[i] = i;
    for (;;) {
      std::vector<int> sub(d);
      for (int i = 0; i < d; ++i) sub[i] = mc[pick[i]];
      out.insert(std::move(sub));
      int i = d - 1;
      while (i >= 0 && pick[i] == n - d + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < d; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return {out.begin(), out.end()};
}

const QuotientRayImage* QuotientFanData::image_of(int source_ray) const {
  for (const auto& im : ray_map)
    if (im.source_ray == source_ray) return &im;
  return nullptr;
}

QuotientFanData quotient_fan(const Fan& f, const std::vector<int>& tau) {
  if (!is_cone_of(f, tau)) throw Error("quotient_fan: tau is not a cone of the fan");
  const int n = f.rank;
  const int t = static_cast<int>(tau.size());

  QuotientFanData qd;
  qd.base_cone = tau;
  qd.quotient_rank = n - t;

  if (t == 0) {
    qd.projection = IntMatrix::identity(n);
    qd.quotient_fan = f;
    for (size_t i = 0; i < f.rays.size(); ++i)
      qd.ray_map.push_back({static_cast<int>(i), static_cast<int>(i), f.rays[i], Int(1)});
    return qd;
  }

  // adapted basis via Smith normal form of the tau-ray matrix: the bottom
  // n - t rows of U project along the saturation of span(tau)
  std::vector<IntVec> cols;
  for (int i : tau) cols.push_back(f.rays[i]);
  SmithForm snf = smith_normal_form(IntMatrix::from_columns(cols));
  IntMatrix proj(n - t, n);
  for (int i = 0; i < n - t; ++i)
    for (int j = 0; j < n; ++j) proj(i, j) = snf.u(t + i, j);
  qd.projection = proj;

  auto project = [&](const IntVec& v) {
    IntVec out(n - t, Int(0));
    for (int i = 0; i < n - t; ++i)
      for (int j = 0; j < n; ++j) out[i] += proj(i, j) * v[j];
    return out;
  };

  std::vector<int> adj = adjacent_rays(f, tau);
  std::vector<int> mapped;
  for (int i : adj)
    if (!std::binary_search(tau.begin(), tau.end(), i)) mapped.push_back(i);

  std::map<int, int> qidx;
  Fan& qf = qd.quotient_fan;
  qf.rank = n - t;
  qf.name = f.name.empty() ? "" : f.name + "/" + cone_label(tau);
  for (int i : mapped) {
    IntVec image = project(f.rays[i]);
    if (is_zero_vec(image)) throw Error("quotient_fan: adjacent ray projects to zero");
    IntVec w = primitive_vector(image);
    Int m = 0;
    for (size_t k = 0; k < w.size(); ++k)
      if (w[k] != 0) {
        m = image[k] / w[k];
        break;
      }
    for (const auto& im : qd.ray_map)
      if (im.w == w) throw Error("quotient_fan: distinct rays project to a common ray");
    int id = static_cast<int>(qf.rays.size());
    qf.rays.push_back(w);
    qidx[i] = id;
    qd.ray_map.push_back({i, id, w, m});
  }

  std::set<std::vector<int>> qcones;
  for (const auto& mc : f.max_cones) {
    if (!std::includes(mc.begin(), mc.end(), tau.begin(), tau.end())) continue;
    std::vector<int> img;
    for (int i : mc)
      if (!std::binary_search(tau.begin(), tau.end(), i)) img.push_back(qidx.at(i));
    std::sort(img.begin(), img.end());
    qcones.insert(std::move(img));
  }
  qf.max_cones.assign(qcones.begin(), qcones.end());
  return qd;
}

std::vector<Wall> fan_walls(const Fan& f) {
  std::map<std::vector<int>, std::vector<int>> incidence;
  for (size_t c = 0; c < f.max_cones.size(); ++c) {
    const auto& mc = f.max_cones[c];
    for (size_t drop = 0; drop < mc.size(); ++drop) {
      std::vector<int> w;
      for (size_t i = 0; i < mc.size(); ++i)
        if (i != drop) w.push_back(mc[i]);
      incidence[w].push_back(static_cast<int>(c));
    }
  }
  std::vector<Wall> walls;
  for (const auto& [w, cs] : incidence) {
    if (cs.size() != 2) throw Error("fan_walls: wall " + cone_label(w) + " is not between two cones");
    Wall wall;
    wall.wall = w;
    wall.cone_a = cs[0];
    wall.cone_b = cs[1];
    auto opp = [&](int cone_idx) {
      for (int i : f.max_cones[cone_idx])
        if (!std::binary_search(w.begin(), w.end(), i)) return i;
      throw Error("fan_walls: degenerate wall");
    };
    wall.opp_a = opp(cs[0]);
    wall.opp_b = opp(cs[1]);
    walls.push_back(std::move(wall));
  }
  return walls;
}

RatVec wall_curve_class(const Fan& f, const Wall& w) {
  // v_opp_a + y v_opp_b + sum_k x_k v_wall_k = 0, unique solution, y > 0
  const int n = f.rank;
  std::vector<RatVec> rows(n, RatVec(w.wall.size() + 1));
  for (int k = 0; k < n; ++k) {
    rows[k][0] = Rat(f.rays[w.opp_b][k]);
    for (size_t j = 0; j < w.wall.size(); ++j) rows[k][j + 1] = Rat(f.rays[w.wall[j]][k]);
  }
  RatVec rhs(n);
  for (int k = 0; k < n; ++k) rhs[k] = -Rat(f.rays[w.opp_a][k]);
  auto sol = solve_linear(rows, rhs);
  if (!sol) throw Error("wall_curve_class: inconsistent wall relation");
  RatVec a(f.rays.size(), Rat(0));
  a[w.opp_a] = 1;
  a[w.opp_b] = (*sol)[0];
  for (size_t j = 0; j < w.wall.size(); ++j) a[w.wall[j]] = (*sol)[j + 1];
  if (a[w.opp_b] <= 0) throw Error("wall_curve_class: non-convex wall crossing");
  return a;
}

}  // namespace toric
