#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <curvecx/curvegraph.hpp>
#include <curvecx/errors.hpp>
#include <curvecx/hypmetric.hpp>
#include <random>

using namespace curvecx;

namespace {

// star of three paths, a tree on 7 vertices: 0-1-2, 0-3, 0-4-5-6
FiniteMetric tree7() {
  return metric_from_graph(7, {{0, 1}, {1, 2}, {0, 3}, {0, 4}, {4, 5}, {5, 6}});
}

FiniteMetric cycle(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
  return metric_from_graph(n, e);
}

FiniteMetric path6() {
  return metric_from_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}});
}

const CurveSlice& sphere_slice() {
  static CurveSlice sl = [] {
    SliceOptions o;
    o.vertex_cap = 1000000;
    return build_slice(PuncturedSurface::catalog("S_0_5"), 4, o);
  }();
  return sl;
}

const FiniteMetric& sphere_metric() {
  static FiniteMetric M = slice_metric(sphere_slice());
  return M;
}

double dist_to(const FiniteMetric& M, const std::vector<int>& U, int x) {
  double b = 1e18;
  for (int u : U) b = std::min(b, M.d[x][u]);
  return b;
}

}  // namespace

TEST_CASE("metric constructors validate their input") {
  CHECK_THROWS_AS(metric_from_matrix({{0, 1}, {2, 0}}), input_error&);
  CHECK_THROWS_AS(metric_from_matrix({{0, 0}, {0, 0}}), input_error&);
  CHECK_THROWS_AS(metric_from_matrix({{0, 5, 1}, {5, 0, 1}, {1, 1, 0}}),
                  input_error&);  // triangle violation
  CHECK_THROWS_AS(metric_from_matrix({{1}}), input_error&);
  CHECK_THROWS_AS(metric_from_graph(3, {{0, 1}}), input_error&);  // disconnected
  CHECK_THROWS_AS(metric_from_graph(2, {{0, 0}}), input_error&);
  CHECK_THROWS_AS(metric_from_graph(2, {{0, 5}}), input_error&);
  auto M = metric_from_matrix({{0, 2}, {2, 0}});
  CHECK(M.size() == 2);
  CHECK_FALSE(M.has_graph());
  CHECK(path6().has_graph());
}

TEST_CASE("gromov products match the tree picture") {
  auto T = tree7();
  CHECK(gromov_product(T, 2, 2, 6) == doctest::Approx(T.d[2][6]));
  CHECK(gromov_product(T, 2, 6, 5) == doctest::Approx(0));  // 5 on the path
  // in a tree the product at z is the distance from z to the geodesic
  for (int x = 0; x < 7; ++x)
    for (int y = 0; y < 7; ++y)
      for (int z = 0; z < 7; ++z) {
        double want = 1e18;
        for (int u = 0; u < 7; ++u)
          if (std::abs(T.d[x][u] + T.d[u][y] - T.d[x][y]) < 1e-9)
            want = std::min(want, T.d[z][u]);
        CHECK(gromov_product(T, x, y, z) == doctest::Approx(want));
      }
}

TEST_CASE("tripod legs reconstruct the side lengths") {
  const auto& M = sphere_metric();
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> pick(0, M.size() - 1);
  for (int it = 0; it < 100; ++it) {
    int x = pick(rng), y = pick(rng), z = pick(rng);
    auto T = tripod(M, x, y, z);
    CHECK(T.leg_x >= -1e-9);
    CHECK(T.leg_y >= -1e-9);
    CHECK(T.leg_z >= -1e-9);
    CHECK(T.leg_x + T.leg_y == doctest::Approx(M.d[x][y]));
    CHECK(T.leg_x + T.leg_z == doctest::Approx(M.d[x][z]));
    CHECK(T.leg_y + T.leg_z == doctest::Approx(M.d[y][z]));
  }
  // C4 triangle 0,1,2: central preimage on the long side is both midpoints
  auto C = cycle(4);
  auto T = tripod(C, 0, 1, 2);
  CHECK(T.centre_xz == std::vector<int>{1, 3});
}

TEST_CASE("four point delta on the reference spaces") {
  CHECK(four_point_delta(tree7()).delta == doctest::Approx(0));
  CHECK(four_point_delta(metric_from_matrix({{0}})).delta == doctest::Approx(0));
  auto r4 = four_point_delta(cycle(4));
  CHECK(r4.delta == doctest::Approx(1));
  CHECK(r4.exhaustive);
  CHECK(r4.tuples == 1);
  CHECK(four_point_delta(cycle(5)).delta == doctest::Approx(0.5));
  CHECK(four_point_delta(cycle(6)).delta == doctest::Approx(1));
  CHECK(four_point_delta(sphere_metric()).delta == doctest::Approx(1));
}

TEST_CASE("four point delta is blind to relabeling") {
  auto M = sphere_metric();
  int n = M.size();
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::mt19937 rng(23);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::vector<double>> d(n, std::vector<double>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) d[perm[i]][perm[j]] = M.d[i][j];
  CHECK(four_point_delta(metric_from_matrix(d)).delta ==
        doctest::Approx(four_point_delta(M).delta));
}

TEST_CASE("four point scan budget and sampling modes") {
  auto M = sphere_metric();
  DeltaOptions tight;
  tight.budget = 10;
  tight.allow_sampling = false;
  CHECK_THROWS_AS(four_point_delta(M, tight), resource_error&);
  DeltaOptions sampled;
  sampled.budget = 10;
  sampled.samples = 4000;
  sampled.seed = 5;
  auto rep = four_point_delta(M, sampled);
  CHECK_FALSE(rep.exhaustive);
  CHECK(rep.tuples > 0);
  CHECK(rep.tuples <= 4000);
  CHECK(rep.delta <= four_point_delta(M).delta + 1e-9);
  auto rep2 = four_point_delta(M, sampled);
  CHECK(rep.delta == doctest::Approx(rep2.delta));
  CHECK(rep.tuples == rep2.tuples);
  for (int th : {1, 4}) {
    DeltaOptions par;
    par.threads = th;
    CHECK(four_point_delta(M, par).delta == doctest::Approx(1));
  }
}

TEST_CASE("thin delta on the reference spaces") {
  CHECK(thin_delta(tree7()).delta == doctest::Approx(0));
  CHECK(thin_delta(cycle(4)).delta == doctest::Approx(2));
  CHECK(thin_delta(sphere_metric()).delta == doctest::Approx(3));
  CHECK_THROWS_AS(thin_delta(metric_from_matrix({{0, 1}, {1, 0}})),
                  input_error&);
}

TEST_CASE("projection and entry points on a path") {
  auto P = path6();
  std::vector<int> U = {2, 3, 4};
  CHECK(nearest_projection(P, U, 3) == std::vector<int>{3});
  CHECK(nearest_projection(P, {4}, 0) == std::vector<int>{4});
  CHECK(nearest_projection(P, U, 0) == std::vector<int>{2});
  CHECK(nearest_projection(P, U, 5) == std::vector<int>{4});
  CHECK(entry_points(P, U, 0, 0) == std::vector<int>{2});
  CHECK_THROWS_AS(nearest_projection(P, {}, 0), input_error&);
  CHECK_THROWS_AS(entry_points(P, U, 0, -1), input_error&);
  CHECK_THROWS_AS(entry_points(metric_from_matrix({{0, 1}, {1, 0}}), {0}, 1, 0),
                  input_error&);
}

TEST_CASE("entry points stay within twice the radius of the projection") {
  const auto& M = sphere_metric();
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> pick(0, M.size() - 1);
  for (int it = 0; it < 25; ++it) {
    std::vector<int> U;
    int k = 2 + it % 4;
    for (int j = 0; j < k; ++j) U.push_back(pick(rng));
    int x = pick(rng);
    for (double r : {0.0, 1.0}) {
      auto en = entry_points(M, U, x, r);
      auto pr = nearest_projection(M, U, x);
      for (int q : en) CHECK(dist_to(M, pr, q) <= 2 * r + 1e-9);
    }
  }
}

TEST_CASE("projections of quasiconvex sets stay narrow") {
  const auto& sl = sphere_slice();
  const auto& M = sphere_metric();
  const auto& S = sl.surface;
  auto h = hull(sl, {sl.index_of(normalize(S, "ac")),
                     sl.index_of(normalize(S, "bd"))});
  double Q = quasiconvexity(M, h.vertices);
  double delta = thin_delta(M).delta;
  for (int x = 0; x < M.size(); ++x) {
    auto pr = nearest_projection(M, h.vertices, x);
    double diam = 0;
    for (int a : pr)
      for (int b : pr) diam = std::max(diam, M.d[a][b]);
    CHECK(diam <= 2 * delta + 2 * Q + 1e-9);
    // every u in U nearly runs through the projection point
    for (int p : pr)
      for (int u : h.vertices)
        CHECK(std::abs(M.d[x][u] - (M.d[x][p] + M.d[p][u])) <=
              2 * delta + 2 * Q + 1e-9);
  }
}

TEST_CASE("midpoints split distances within the measured delta") {
  const auto& M = sphere_metric();
  double delta = thin_delta(M).delta;
  int n = M.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      long xy = std::lround(M.d[x][y]);
      if (xy % 2) continue;
      for (int m = 0; m < n; ++m) {
        if (M.d[x][m] != xy / 2 || M.d[m][y] != xy / 2) continue;
        for (int z = 0; z < n; ++z)
          CHECK(std::abs(std::max(M.d[x][z], M.d[y][z]) -
                         (xy / 2.0 + M.d[m][z])) <= delta + 1e-9);
      }
    }
}

TEST_CASE("circumcentres of fixtures") {
  auto P = path6();
  auto single = circumcentre(P, {4});
  CHECK(single.radius == doctest::Approx(0));
  CHECK(single.centres == std::vector<int>{4});
  auto pair = circumcentre(P, {2, 3});
  CHECK(pair.radius == doctest::Approx(1));
  CHECK(pair.centres == std::vector<int>{2, 3});
  auto C = cycle(4);
  auto all = circumcentre(C, {0, 1, 2, 3});
  CHECK(all.radius == doctest::Approx(2));
  CHECK(all.centres == std::vector<int>{0, 1, 2, 3});
  CHECK_THROWS_AS(circumcentre(C, {}), input_error&);
}

TEST_CASE("radius and diameter stay coupled through delta") {
  const auto& M = sphere_metric();
  double delta = thin_delta(M).delta;
  std::mt19937 rng(47);
  std::uniform_int_distribution<int> pick(0, M.size() - 1);
  std::uniform_int_distribution<int> size(2, 6);
  for (int it = 0; it < 200; ++it) {
    std::vector<int> U;
    int k = size(rng);
    for (int j = 0; j < k; ++j) U.push_back(pick(rng));
    double diam = 0;
    for (int a : U)
      for (int b : U) diam = std::max(diam, M.d[a][b]);
    auto c = circumcentre(M, U);
    CHECK(diam <= 2 * c.radius + 1e-9);
    CHECK(2 * c.radius <= diam + 2 * delta + 1e-9);
  }
}

TEST_CASE("group actions close up and carve fixed sets") {
  auto C = cycle(4);
  auto rot = make_action(C, {{1, 2, 3, 0}});
  CHECK(rot.elements.size() == 4);
  CHECK(orbit_diameter(C, rot, 0) == doctest::Approx(2));
  CHECK(fix_set(C, rot, 1).empty());  // free action, all orbits spread out
  CHECK(fix_set(C, rot, 2).size() == 4);  // R at the diameter captures all
  auto refl = make_action(C, {{0, 3, 2, 1}});
  CHECK(refl.elements.size() == 2);
  CHECK(fix_set(C, refl, 0) == std::vector<int>{0, 2});
  auto trivial = make_action(C, {});
  CHECK(fix_set(C, trivial, 0).size() == 4);
  CHECK_THROWS_AS(make_action(path6(), {{1, 0, 2, 3, 4, 5}}), input_error&);
  CHECK_THROWS_AS(make_action(C, {{0, 0, 1, 2}}), input_error&);
}

TEST_CASE("slice symmetry acts by isometries and bounds fixed sets") {
  const auto& sl = sphere_slice();
  const auto& M = sphere_metric();
  const auto& S = sl.surface;
  int n = M.size();
  std::vector<int> perm(n, -1);
  for (int i = 0; i < n; ++i) {
    Word w;
    for (Letter x : sl.vertices[i].canon) {
      auto g = static_cast<Letter>(std::abs(x) % 4 + 1);
      w.push_back(x > 0 ? g : static_cast<Letter>(-g));
    }
    perm[i] = sl.index_of(normalize(S, w));
    REQUIRE(perm[i] >= 0);
  }
  auto G = make_action(M, {perm});
  CHECK(G.elements.size() == 4);
  double delta = thin_delta(M).delta;
  for (double R : {delta, delta + 1}) {
    auto fix_big = fix_set(M, G, 2 * R);
    auto fix_small = fix_set(M, G, 2 * delta);
    REQUIRE_FALSE(fix_small.empty());
    for (int x : fix_big) CHECK(dist_to(M, fix_small, x) <= R + delta + 1e-9);
  }
}
