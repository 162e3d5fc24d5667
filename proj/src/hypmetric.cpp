#include "curvecx/hypmetric.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <deque>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <thread>

#include "curvecx/errors.hpp"

namespace curvecx {

namespace {

constexpr double eps = 1e-9;

void check_point(const FiniteMetric& M, int x) {
  if (x < 0 || x >= M.size()) throw input_error("point outside the metric");
}

std::vector<int> check_subset(const FiniteMetric& M, const std::vector<int>& U) {
  if (U.empty()) throw input_error("empty point set");
  std::vector<int> u = U;
  std::sort(u.begin(), u.end());
  u.erase(std::unique(u.begin(), u.end()), u.end());
  for (int x : u) check_point(M, x);
  return u;
}

void parallel_for(int n, int threads, const std::function<void(int)>& fn) {
  if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
  threads = std::max(1, std::min(threads, n));
  if (threads <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (int i; (i = next.fetch_add(1)) < n;) fn(i);
    });
  for (auto& th : pool) th.join();
}

bool on_geodesic(const FiniteMetric& M, int a, int b, int u) {
  return std::abs(M.d[a][u] + M.d[u][b] - M.d[a][b]) < eps;
}

double set_diameter(const FiniteMetric& M, const std::vector<int>& pts) {
  double out = 0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      out = std::max(out, M.d[pts[i]][pts[j]]);
  return out;
}

double quad_excess(const FiniteMetric& M, int x, int y, int z, int w) {
  double s1 = M.d[x][y] + M.d[z][w];
  double s2 = M.d[x][z] + M.d[y][w];
  double s3 = M.d[x][w] + M.d[y][z];
  double hi = std::max({s1, s2, s3});
  double mid = s1 + s2 + s3 - hi - std::min({s1, s2, s3});
  return hi - mid;
}

__int128 choose(long n, int k) {
  __int128 out = 1;
  for (int i = 0; i < k; ++i) out = out * (n - i) / (i + 1);
  return out;
}

// preimage diameters of one triangle's comparison map; unit-edge graph,
// so vertex heights are integers while legs sit on the half-integer grid
double triangle_thinness(const FiniteMetric& M, int x, int y, int z) {
  long a2 = std::lround(M.d[x][y] + M.d[x][z] - M.d[y][z]);  // 2 <y,z>_x
  long b2 = std::lround(M.d[x][y] + M.d[y][z] - M.d[x][z]);
  std::map<std::pair<int, long>, std::vector<int>> legs;
  std::vector<int> centre;
  int n = M.size();
  for (int u = 0; u < n; ++u) {
    long hx = std::lround(2 * M.d[x][u]);
    long hy = std::lround(2 * M.d[y][u]);
    if (on_geodesic(M, x, y, u)) {
      if (hx < a2) legs[{0, hx}].push_back(u);
      else if (hx > a2) legs[{1, 2 * std::lround(M.d[x][y]) - hx}].push_back(u);
      if (std::labs(hx - a2) <= 1) centre.push_back(u);
    }
    if (on_geodesic(M, x, z, u)) {
      if (hx < a2) legs[{0, hx}].push_back(u);
      else if (hx > a2) legs[{2, 2 * std::lround(M.d[x][z]) - hx}].push_back(u);
      if (std::labs(hx - a2) <= 1) centre.push_back(u);
    }
    if (on_geodesic(M, y, z, u)) {
      if (hy < b2) legs[{1, hy}].push_back(u);
      else if (hy > b2) legs[{2, 2 * std::lround(M.d[y][z]) - hy}].push_back(u);
      if (std::labs(hy - b2) <= 1) centre.push_back(u);
    }
  }
  double out = set_diameter(M, centre);
  for (auto& [key, pts] : legs) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    out = std::max(out, set_diameter(M, pts));
  }
  return out;
}

}  // namespace

void check_metric(const FiniteMetric& M) {
  int n = M.size();
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(M.d[i].size()) != n)
      throw input_error("distance matrix is not square");
    if (std::abs(M.d[i][i]) > eps)
      throw input_error("nonzero self distance");
    for (int j = 0; j < n; ++j) {
      if (M.d[i][j] < -eps) throw input_error("negative distance");
      if (i != j && M.d[i][j] < eps)
        throw input_error("zero distance between distinct points");
      if (std::abs(M.d[i][j] - M.d[j][i]) > eps)
        throw input_error("asymmetric distance matrix");
    }
  }
  auto triple_ok = [&](int i, int j, int k) {
    return M.d[i][k] <= M.d[i][j] + M.d[j][k] + eps;
  };
  if (n <= 64) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          if (!triple_ok(i, j, k))
            throw input_error("triangle inequality violated");
  } else {
    std::mt19937 rng(9);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int s = 0; s < 30000; ++s)
      if (!triple_ok(pick(rng), pick(rng), pick(rng)))
        throw input_error("triangle inequality violated");
  }
}

FiniteMetric metric_from_matrix(const std::vector<std::vector<double>>& d,
                                const std::vector<std::string>& labels) {
  FiniteMetric M;
  M.d = d;
  M.labels = labels;
  if (M.labels.empty())
    for (int i = 0; i < M.size(); ++i)
      M.labels.push_back("p" + std::to_string(i));
  if (static_cast<int>(M.labels.size()) != M.size())
    throw input_error("label count does not match the matrix");
  check_metric(M);
  return M;
}

FiniteMetric metric_from_graph(int n,
                               const std::vector<std::pair<int, int>>& edges,
                               const std::vector<std::string>& labels) {
  if (n < 1) throw input_error("graph metric needs at least one vertex");
  FiniteMetric M;
  M.adjacency.assign(n, {});
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw input_error("edge endpoint outside the graph");
    if (u == v) throw input_error("self loop in graph metric");
    M.adjacency[u].push_back(v);
    M.adjacency[v].push_back(u);
  }
  for (auto& row : M.adjacency) {
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
  }
  M.d.assign(n, std::vector<double>(n, -1));
  for (int s = 0; s < n; ++s) {
    std::vector<int> dist(n, -1);
    std::deque<int> q{s};
    dist[s] = 0;
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      for (int v : M.adjacency[u])
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          q.push_back(v);
        }
    }
    for (int t = 0; t < n; ++t) {
      if (dist[t] < 0) throw input_error("graph metric needs a connected graph");
      M.d[s][t] = dist[t];
    }
  }
  M.labels = labels;
  if (M.labels.empty())
    for (int i = 0; i < n; ++i) M.labels.push_back("v" + std::to_string(i));
  if (static_cast<int>(M.labels.size()) != n)
    throw input_error("label count does not match the graph");
  return M;
}

double gromov_product(const FiniteMetric& M, int x, int y, int z) {
  check_point(M, x);
  check_point(M, y);
  check_point(M, z);
  return (M.d[x][z] + M.d[y][z] - M.d[x][y]) / 2;
}

TripodData tripod(const FiniteMetric& M, int x, int y, int z) {
  TripodData T;
  T.x = x;
  T.y = y;
  T.z = z;
  T.leg_x = gromov_product(M, y, z, x);
  T.leg_y = gromov_product(M, x, z, y);
  T.leg_z = gromov_product(M, x, y, z);
  if (!M.has_graph()) return T;
  for (int u = 0; u < M.size(); ++u) {
    if (on_geodesic(M, x, y, u) && std::abs(M.d[x][u] - T.leg_x) <= 0.5 + eps)
      T.centre_xy.push_back(u);
    if (on_geodesic(M, x, z, u) && std::abs(M.d[x][u] - T.leg_x) <= 0.5 + eps)
      T.centre_xz.push_back(u);
    if (on_geodesic(M, y, z, u) && std::abs(M.d[y][u] - T.leg_y) <= 0.5 + eps)
      T.centre_yz.push_back(u);
  }
  return T;
}

DeltaReport four_point_delta(const FiniteMetric& M, const DeltaOptions& opt) {
  int n = M.size();
  if (n < 4) return {0, true, 0};
  bool exhaustive =
      n <= opt.exhaustive_cap && choose(n, 4) <= opt.budget;
  DeltaReport rep;
  if (exhaustive) {
    std::vector<double> best(n, 0);
    parallel_for(n, opt.threads, [&](int x) {
      double m = 0;
      for (int y = x + 1; y < n; ++y)
        for (int z = y + 1; z < n; ++z)
          for (int w = z + 1; w < n; ++w)
            m = std::max(m, quad_excess(M, x, y, z, w));
      best[x] = m;
    });
    rep.delta = *std::max_element(best.begin(), best.end()) / 2;
    rep.exhaustive = true;
    rep.tuples = static_cast<long>(choose(n, 4));
    return rep;
  }
  if (!opt.allow_sampling)
    throw resource_error("four point scan over budget without sampling");
  std::mt19937 rng(opt.seed);
  std::uniform_int_distribution<int> pick(0, n - 1);
  double m = 0;
  for (long s = 0; s < opt.samples; ++s) {
    int x = pick(rng), y = pick(rng), z = pick(rng), w = pick(rng);
    if (x == y || x == z || x == w || y == z || y == w || z == w) continue;
    m = std::max(m, quad_excess(M, x, y, z, w));
    ++rep.tuples;
  }
  rep.delta = m / 2;
  rep.exhaustive = false;
  return rep;
}

DeltaReport thin_delta(const FiniteMetric& M, const DeltaOptions& opt) {
  if (!M.has_graph())
    throw input_error("thin triangles need unit edge graph structure");
  int n = M.size();
  if (n < 3) return {0, true, 0};
  bool exhaustive = n <= opt.exhaustive_cap && choose(n, 3) <= opt.budget;
  DeltaReport rep;
  if (exhaustive) {
    std::vector<double> best(n, 0);
    parallel_for(n, opt.threads, [&](int x) {
      double m = 0;
      for (int y = x + 1; y < n; ++y)
        for (int z = y + 1; z < n; ++z)
          m = std::max(m, triangle_thinness(M, x, y, z));
      best[x] = m;
    });
    rep.delta = *std::max_element(best.begin(), best.end());
    rep.exhaustive = true;
    rep.tuples = static_cast<long>(choose(n, 3));
    return rep;
  }
  if (!opt.allow_sampling)
    throw resource_error("triangle scan over budget without sampling");
  std::mt19937 rng(opt.seed);
  std::uniform_int_distribution<int> pick(0, n - 1);
  double m = 0;
  for (long s = 0; s < opt.samples; ++s) {
    int x = pick(rng), y = pick(rng), z = pick(rng);
    if (x == y || y == z || x == z) continue;
    m = std::max(m, triangle_thinness(M, x, y, z));
    ++rep.tuples;
  }
  rep.delta = m;
  rep.exhaustive = false;
  return rep;
}

std::vector<int> nearest_projection(const FiniteMetric& M,
                                    const std::vector<int>& U, int x) {
  std::vector<int> u = check_subset(M, U);
  check_point(M, x);
  double best = M.d[x][u[0]];
  for (int p : u) best = std::min(best, M.d[x][p]);
  std::vector<int> out;
  for (int p : u)
    if (M.d[x][p] <= best + eps) out.push_back(p);
  return out;
}

std::vector<int> entry_points(const FiniteMetric& M, const std::vector<int>& U,
                              int x, double r) {
  if (!M.has_graph())
    throw input_error("entry points need unit edge graph structure");
  if (r < 0) throw input_error("negative entry radius");
  std::vector<int> u = check_subset(M, U);
  check_point(M, x);
  int n = M.size();
  std::vector<int> out;
  for (int q : u) {
    bool every = true;
    for (int t : u) {
      if (M.d[x][q] <= r + eps || M.d[t][q] <= r + eps) continue;
      // search a geodesic from x to t avoiding the r-ball around q
      std::vector<char> seen(n, 0);
      std::deque<int> bq{x};
      seen[x] = 1;
      bool escape = false;
      while (!bq.empty() && !escape) {
        int v = bq.front();
        bq.pop_front();
        if (v == t) escape = true;
        for (int w : M.adjacency[v]) {
          if (seen[w] || M.d[q][w] <= r + eps) continue;
          if (std::abs(M.d[x][w] - M.d[x][v] - 1) > eps) continue;
          if (!on_geodesic(M, x, t, w)) continue;
          seen[w] = 1;
          bq.push_back(w);
        }
      }
      if (escape) {
        every = false;
        break;
      }
    }
    if (every) out.push_back(q);
  }
  return out;
}

Circumcentre circumcentre(const FiniteMetric& M, const std::vector<int>& U) {
  std::vector<int> u = check_subset(M, U);
  Circumcentre out;
  out.radius = -1;
  for (int x = 0; x < M.size(); ++x) {
    double r = 0;
    for (int p : u) r = std::max(r, M.d[x][p]);
    if (out.radius < 0 || r < out.radius - eps) {
      out.radius = r;
      out.centres = {x};
    } else if (r <= out.radius + eps) {
      out.centres.push_back(x);
    }
  }
  return out;
}

double quasiconvexity(const FiniteMetric& M, const std::vector<int>& U) {
  if (!M.has_graph())
    throw input_error("quasiconvexity needs unit edge graph structure");
  std::vector<int> u = check_subset(M, U);
  double out = 0;
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = i + 1; j < u.size(); ++j)
      for (int w = 0; w < M.size(); ++w) {
        if (!on_geodesic(M, u[i], u[j], w)) continue;
        double back = M.d[w][u[0]];
        for (int p : u) back = std::min(back, M.d[w][p]);
        out = std::max(out, back);
      }
  return out;
}

GroupAction make_action(const FiniteMetric& M,
                        const std::vector<std::vector<int>>& generators,
                        std::size_t element_cap) {
  int n = M.size();
  for (const auto& g : generators) {
    if (static_cast<int>(g.size()) != n)
      throw input_error("permutation size does not match the metric");
    std::vector<char> hit(n, 0);
    for (int v : g) {
      if (v < 0 || v >= n || hit[v]) throw input_error("not a permutation");
      hit[v] = 1;
    }
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (std::abs(M.d[g[i]][g[j]] - M.d[i][j]) > eps)
          throw input_error("non-isometric permutation");
  }
  std::vector<int> id(n);
  for (int i = 0; i < n; ++i) id[i] = i;
  std::set<std::vector<int>> seen{id};
  std::deque<std::vector<int>> frontier{id};
  GroupAction G;
  G.elements.push_back(id);
  while (!frontier.empty()) {
    std::vector<int> g = frontier.front();
    frontier.pop_front();
    for (const auto& h : generators) {
      std::vector<int> gh(n);
      for (int i = 0; i < n; ++i) gh[i] = h[g[i]];
      if (seen.insert(gh).second) {
        if (seen.size() > element_cap)
          throw resource_error("group closure exceeded the element cap");
        G.elements.push_back(gh);
        frontier.push_back(gh);
      }
    }
  }
  return G;
}

double orbit_diameter(const FiniteMetric& M, const GroupAction& G, int x) {
  check_point(M, x);
  std::set<int> orbit;
  for (const auto& g : G.elements) orbit.insert(g[x]);
  std::vector<int> pts(orbit.begin(), orbit.end());
  return set_diameter(M, pts);
}

std::vector<int> fix_set(const FiniteMetric& M, const GroupAction& G,
                         double R) {
  std::vector<int> out;
  for (int x = 0; x < M.size(); ++x)
    if (orbit_diameter(M, G, x) <= R + eps) out.push_back(x);
  return out;
}

}  // namespace curvecx
