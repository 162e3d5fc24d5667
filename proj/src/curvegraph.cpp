#include "curvecx/curvegraph.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <deque>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include "curvecx/arrangement.hpp"
#include "curvecx/errors.hpp"
#include "curvecx/flatsurf.hpp"

namespace curvecx {

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex64(std::uint64_t h) {
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
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

std::vector<CurveClass> enumerate_simple(const PuncturedSurface& S, int maxlen,
                                         int cap) {
  std::set<Word> seen;
  std::vector<CurveClass> out;
  Word w;
  std::function<void()> rec = [&] {
    if (!w.empty() && w.back() != inv(w.front())) {
      CurveClass c = normalize(S, w);
      if (!c.trivial() && seen.insert(c.canon).second &&
          classify(S, c) == CurveType::simple_essential) {
        out.push_back(c);
        if (static_cast<int>(out.size()) > cap)
          throw resource_error("slice vertex limit exceeded");
      }
    }
    if (static_cast<int>(w.size()) == maxlen) return;
    for (int g = 1; g <= S.rank; ++g)
      for (Letter x : {static_cast<Letter>(g), static_cast<Letter>(-g)}) {
        if (!w.empty() && x == inv(w.back())) continue;
        w.push_back(x);
        rec();
        w.pop_back();
      }
  };
  rec();
  std::sort(out.begin(), out.end(), curve_less);
  return out;
}

std::string cache_path(const SliceOptions& opt, const std::string& hash) {
  std::string dir = opt.cache_dir;
  if (dir.empty())
    if (const char* e = std::getenv("CURVECX_CACHE")) dir = e;
  if (dir.empty()) return {};
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  return dir + "/slice_" + hash + ".txt";
}

bool load_table(const std::string& path, CurveSlice& sl) {
  std::ifstream in(path);
  if (!in) return false;
  std::string magic, hash;
  int version = 0;
  std::size_t v = 0;
  if (!(in >> magic >> version >> hash >> v)) return false;
  if (magic != "curvecx-slice" || version != 1 || hash != sl.provenance ||
      v != sl.vertices.size())
    return false;
  for (const CurveClass& c : sl.vertices) {
    std::string w;
    if (!(in >> w) || w != sl.surface.print(c.canon)) return false;
  }
  sl.table.assign(v, std::vector<int>(v, 0));
  for (std::size_t i = 0; i < v; ++i)
    for (std::size_t j = 0; j < v; ++j)
      if (!(in >> sl.table[i][j])) return false;
  for (std::size_t i = 0; i < v; ++i) {
    if (sl.table[i][i] != 0) return false;
    for (std::size_t j = 0; j < v; ++j)
      if (sl.table[i][j] < 0 || sl.table[i][j] != sl.table[j][i]) return false;
  }
  return true;
}

void store_table(const std::string& path, const CurveSlice& sl) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << "curvecx-slice 1 " << sl.provenance << " " << sl.vertices.size()
        << "\n";
    for (const CurveClass& c : sl.vertices)
      out << sl.surface.print(c.canon) << "\n";
    for (const auto& row : sl.table) {
      for (std::size_t j = 0; j < row.size(); ++j)
        out << row[j] << (j + 1 == row.size() ? '\n' : ' ');
      if (row.empty()) out << "\n";
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
}

// largest integer k with 2^(k-2) <= i^2, the crossing-number distance bound
int hempel_bound(long i) {
  __int128 sq = static_cast<__int128>(i) * i;
  int k = 2;
  while ((static_cast<__int128>(1) << (k - 1)) <= sq) ++k;
  return k;
}

void check_vertex(const PuncturedSurface& S, const CurveClass& c) {
  for (Letter x : c.canon) {
    int a = x < 0 ? -x : x;
    if (a < 1 || a > S.rank)
      throw input_error("curve uses letters outside the surface alphabet");
  }
  if (classify(S, c) != CurveType::simple_essential)
    throw input_error("curve graph vertices must be simple essential");
}

void check_wv(const WeightVector& t, std::size_t n) {
  if (t.size() != n)
    throw input_error("weight count does not match the tuple entries");
  bool any = false;
  for (const Rational& w : t) {
    if (w.num < 0) throw input_error("negative weight");
    if (w.num > 0) any = true;
  }
  if (!any) throw input_error("weight vector must not vanish");
}

std::vector<int> check_ids(const CurveSlice& sl, const std::vector<int>& A) {
  std::vector<int> ids = A;
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  for (int v : ids)
    if (v < 0 || v >= static_cast<int>(sl.vertices.size()))
      throw input_error("vertex id outside the slice");
  return ids;
}

std::vector<int> multi_bfs(const CurveSlice& sl, const std::vector<int>& srcs) {
  std::vector<int> d(sl.vertices.size(), -1);
  std::deque<int> q;
  for (int s : srcs)
    if (d[s] < 0) {
      d[s] = 0;
      q.push_back(s);
    }
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    for (int v : sl.adjacency[u])
      if (d[v] < 0) {
        d[v] = d[u] + 1;
        q.push_back(v);
      }
  }
  return d;
}

}  // namespace

int CurveSlice::index_of(const CurveClass& c) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), c, curve_less);
  if (it == vertices.end() || !(*it == c)) return -1;
  return static_cast<int>(it - vertices.begin());
}

std::string to_string(DistMethod m) {
  switch (m) {
    case DistMethod::equal: return "equal";
    case DistMethod::disjoint: return "disjoint";
    case DistMethod::nonfilling: return "nonfilling";
    case DistMethod::bfs: return "bfs";
    case DistMethod::hempel: return "hempel";
  }
  return "?";
}

CurveSlice build_slice(const PuncturedSurface& S, int max_word_length,
                       const SliceOptions& opt) {
  if (max_word_length < 1) throw input_error("word length bound must be positive");
  if (S.xi < 2 && !opt.allow_low_complexity)
    throw input_error(
        "disjointness graph is degenerate below complexity two; pass the low "
        "complexity override to proceed");
  CurveSlice sl;
  sl.surface = S;
  sl.max_word_length = max_word_length;
  sl.vertices = enumerate_simple(S, max_word_length, opt.vertex_cap);
  sl.provenance = hex64(fnv1a(S.to_json() + "|len=" +
                              std::to_string(max_word_length) + "|enum=v1"));
  int n = static_cast<int>(sl.vertices.size());
  std::string path = cache_path(opt, sl.provenance);
  bool cached = !path.empty() && load_table(path, sl);
  if (!cached) {
    sl.table.assign(n, std::vector<int>(n, 0));
    parallel_for(n, opt.threads, [&](int i) {
      for (int j = i + 1; j < n; ++j)
        sl.table[i][j] = intersection_number(S, sl.vertices[i], sl.vertices[j]);
    });
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < i; ++j) sl.table[i][j] = sl.table[j][i];
    if (!path.empty()) store_table(path, sl);
  }
  sl.adjacency.assign(n, {});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && sl.table[i][j] == 0) sl.adjacency[i].push_back(j);
  return sl;
}

std::vector<int> slice_distances(const CurveSlice& sl, int src) {
  if (src < 0 || src >= static_cast<int>(sl.vertices.size()))
    throw input_error("vertex id outside the slice");
  return multi_bfs(sl, {src});
}

DistanceReport distance(const CurveSlice& sl, const CurveClass& a,
                        const CurveClass& b) {
  const PuncturedSurface& S = sl.surface;
  if (S.xi < 2)
    throw input_error("graph distance needs complexity at least two");
  check_vertex(S, a);
  check_vertex(S, b);
  if (a == b) return {0, 0, true, DistMethod::equal, -1};
  int i = intersection_number(S, a, b);
  if (i == 0) return {1, 1, true, DistMethod::disjoint, -1};
  int hb = hempel_bound(i);
  Arrangement A = arrangement(S, Tuple{{a}, {b}});
  if (!A.fills) return {2, 2, true, DistMethod::nonfilling, hb};
  int upper = hb;
  DistMethod method = DistMethod::hempel;
  int ia = sl.index_of(a), ib = sl.index_of(b);
  if (ia >= 0 && ib >= 0) {
    int d = slice_distances(sl, ia)[ib];
    if (d >= 0 && d <= upper) {
      upper = d;
      method = DistMethod::bfs;
    }
  }
  if (upper < 3) throw invariant_error("distance bounds crossed");
  return {3, upper, upper == 3, method, hb};
}

HullResult hull(const CurveSlice& sl, const std::vector<int>& A) {
  if (A.empty()) throw input_error("hull needs a nonempty vertex set");
  std::vector<int> ids = check_ids(sl, A);
  std::vector<std::vector<int>> dist;
  for (int v : ids) dist.push_back(slice_distances(sl, v));
  std::set<int> res(ids.begin(), ids.end());
  HullResult out;
  out.exact = true;
  int n = static_cast<int>(sl.vertices.size());
  for (std::size_t p = 0; p < ids.size(); ++p)
    for (std::size_t q = p + 1; q < ids.size(); ++q) {
      int d = dist[p][ids[q]];
      if (d < 0) {
        out.exact = false;
        continue;
      }
      for (int x = 0; x < n; ++x)
        if (dist[p][x] >= 0 && dist[q][x] >= 0 && dist[p][x] + dist[q][x] == d)
          res.insert(x);
      DistanceReport rep = distance(sl, sl.vertices[ids[p]], sl.vertices[ids[q]]);
      if (!rep.exact || rep.upper != d) out.exact = false;
    }
  out.vertices.assign(res.begin(), res.end());
  return out;
}

BalanceVector balance_vector(const PuncturedSurface& S, const Tuple& alpha,
                             const CurveClass& beta) {
  if (beta.trivial()) throw input_error("balance vector needs an essential curve");
  std::vector<long> hits(alpha.size(), 0);
  bool all_positive = true;
  for (std::size_t j = 0; j < alpha.size(); ++j) {
    for (const CurveClass& c : alpha[j]) hits[j] += intersection_number(S, c, beta);
    if (hits[j] == 0) all_positive = false;
  }
  BalanceVector out;
  out.reciprocal = all_positive;
  for (std::size_t j = 0; j < alpha.size(); ++j)
    out.entries.push_back(all_positive ? Rational(1) / Rational(hits[j])
                                       : Rational(hits[j] == 0 ? 1 : 0));
  return out;
}

std::vector<int> short_set_sq(const CurveSlice& sl, const Tuple& alpha,
                              const WeightVector& t, const Rational& L2) {
  check_wv(t, alpha.size());
  if (L2 < Rational(0)) throw input_error("negative length bound");
  const PuncturedSurface& S = sl.surface;
  Rational norm_sq = norm_alpha_sq(S, t, alpha);
  Rational bound = L2 * norm_sq;
  std::vector<int> out;
  for (int v = 0; v < static_cast<int>(sl.vertices.size()); ++v) {
    Rational l1 = l1_length(S, alpha, t, sl.vertices[v]);
    if (l1 * l1 <= bound) out.push_back(v);
  }
  if (norm_sq.num == 0) {
    // degenerate norm: the set must sit in the 1-neighbourhood of the tuple
    for (int v : out) {
      bool near = false;
      for (std::size_t j = 0; j < alpha.size() && !near; ++j) {
        if (t[j].num == 0) continue;
        for (const CurveClass& c : alpha[j])
          if (c == sl.vertices[v] ||
              intersection_number(S, c, sl.vertices[v]) == 0) {
            near = true;
            break;
          }
      }
      if (!near) throw invariant_error("short set left the 1-neighbourhood");
    }
  }
  return out;
}

std::vector<int> short_set(const CurveSlice& sl, const Tuple& alpha,
                           const WeightVector& t, const Rational& L) {
  if (L < Rational(0)) throw input_error("negative length bound");
  return short_set_sq(sl, alpha, t, L * L);
}

std::vector<int> short_hull(const CurveSlice& sl, const Tuple& alpha,
                            const Rational& L, int grid_resolution) {
  if (grid_resolution < 1) throw input_error("grid resolution must be positive");
  std::size_t n = alpha.size();
  std::set<std::vector<int>> grid;
  std::vector<int> g(n, 0);
  while (true) {
    std::size_t k = 0;
    while (k < n && g[k] == grid_resolution) g[k++] = 0;
    if (k == n) break;
    ++g[k];
    int gc = 0;
    for (int x : g) gc = std::gcd(gc, x);
    std::vector<int> rep = g;
    for (int& x : rep) x /= gc;
    grid.insert(rep);
  }
  std::set<int> res;
  Rational L2 = L * L;
  for (const auto& rep : grid) {
    WeightVector t;
    for (int x : rep) t.push_back(Rational(x));
    for (int v : short_set_sq(sl, alpha, t, L2)) res.insert(v);
  }
  return {res.begin(), res.end()};
}

int hausdorff_distance(const CurveSlice& sl, const std::vector<int>& A,
                       const std::vector<int>& B) {
  if (A.empty() || B.empty())
    throw input_error("hausdorff distance needs nonempty sets");
  std::vector<int> da = multi_bfs(sl, check_ids(sl, A));
  std::vector<int> db = multi_bfs(sl, check_ids(sl, B));
  int h = 0;
  for (int a : A) {
    if (db[a] < 0) return -1;
    h = std::max(h, db[a]);
  }
  for (int b : B) {
    if (da[b] < 0) return -1;
    h = std::max(h, da[b]);
  }
  return h;
}

ProjectReport project_via_balance(const CurveSlice& sl, const Tuple& alpha,
                                  const CurveClass& beta, const Rational& L) {
  const PuncturedSurface& S = sl.surface;
  check_vertex(S, beta);
  int ib = sl.index_of(beta);
  if (ib < 0) throw input_error("projection target outside the slice");
  ProjectReport rep;
  rep.t_beta = balance_vector(S, alpha, beta);
  rep.shorts = short_set(sl, alpha, rep.t_beta.entries, L);
  if (rep.shorts.empty())
    throw input_error("short set empty at this length bound");
  std::vector<int> comps;
  for (const Multicurve& m : alpha)
    for (const CurveClass& c : m) {
      int id = sl.index_of(c);
      if (id < 0) throw input_error("tuple component outside the slice");
      comps.push_back(id);
    }
  for (const Multicurve& m : alpha)
    for (const CurveClass& c : m)
      if (intersection_number(S, c, beta) == 0) rep.disjoint_branch = true;
  HullResult h = hull(sl, comps);
  std::vector<int> db = slice_distances(sl, ib);
  int best = -1;
  for (int v : h.vertices)
    if (db[v] >= 0 && (best < 0 || db[v] < best)) best = db[v];
  for (int v : h.vertices)
    if (db[v] == best) rep.projection.push_back(v);
  rep.exact = h.exact && best >= 0;
  if (!rep.projection.empty()) {
    rep.hausdorff = hausdorff_distance(sl, rep.shorts, rep.projection);
    std::vector<int> ds = multi_bfs(sl, rep.shorts);
    rep.proj_to_short = 0;
    for (int v : rep.projection) {
      if (ds[v] < 0) {
        rep.proj_to_short = -1;
        break;
      }
      rep.proj_to_short = std::max(rep.proj_to_short, ds[v]);
    }
  } else {
    rep.exact = false;
  }
  if (rep.hausdorff < 0 || rep.proj_to_short < 0) rep.exact = false;
  return rep;
}

FiniteMetric slice_metric(const CurveSlice& sl) {
  std::vector<std::pair<int, int>> edges;
  std::vector<std::string> labels;
  int n = static_cast<int>(sl.vertices.size());
  for (int i = 0; i < n; ++i) {
    labels.push_back(sl.surface.print(sl.vertices[i].canon));
    for (int j : sl.adjacency[i])
      if (i < j) edges.push_back({i, j});
  }
  return metric_from_graph(n, edges, labels);
}

FourPointReport check_4ptint(const CurveSlice& sl, const CurveClass& a1,
                             const CurveClass& a2, const CurveClass& a3,
                             const CurveClass& a4, const Rational& r) {
  if (r < Rational(0)) throw input_error("negative ratio");
  int id[4] = {sl.index_of(a1), sl.index_of(a2), sl.index_of(a3),
               sl.index_of(a4)};
  for (int k = 0; k < 4; ++k)
    if (id[k] < 0) throw input_error("quadruple member outside the slice");
  FourPointReport rep;
  rep.r = r;
  rep.prod_outer = static_cast<long>(sl.table[id[0]][id[3]]) *
                   sl.table[id[1]][id[2]];
  rep.prod_inner = static_cast<long>(sl.table[id[0]][id[1]]) *
                   sl.table[id[2]][id[3]];
  rep.hypothesis = Rational(rep.prod_outer) <= r * Rational(rep.prod_inner);
  HullResult g1 = hull(sl, {id[0], id[1]});
  HullResult g2 = hull(sl, {id[2], id[3]});
  std::vector<int> d2 = multi_bfs(sl, g2.vertices);
  int best = -1;
  for (int v : g1.vertices)
    if (d2[v] >= 0 && (best < 0 || d2[v] < best)) best = d2[v];
  rep.distance = best;
  rep.exact = g1.exact && g2.exact && best >= 0;
  return rep;
}

}  // namespace curvecx
