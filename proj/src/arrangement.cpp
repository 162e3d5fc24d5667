#include "curvecx/arrangement.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <tuple>
#include <utility>

#include "curvecx/errors.hpp"
#include "curvecx/lines.hpp"
#include "curvecx/surface.hpp"

namespace curvecx {

std::string to_string(FaceKind k) {
  switch (k) {
    case FaceKind::disc: return "disc";
    case FaceKind::punctured: return "punctured";
    default: return "other";
  }
}

namespace {

// first index where two distinct reduced streams differ
int agree(const Ray& a, const Ray& b) {
  std::size_t cap = a.agree_bound(b);
  for (std::size_t i = 0; i <= cap; ++i)
    if (a.at(i) != b.at(i)) return static_cast<int>(i);
  throw invariant_error("distinct rays agree past their divergence bound");
}

// a curve germ leaving the vertex disc: one attachment point on the disc
// boundary, described by the letter stream it follows away from the vertex
struct End {
  const Ray* ray;
  int comp, phase;
  bool fwd;
};

// boundary order of two germs sharing a port, as a function of the placement
// of the crossing between their strands: the divergence fan order, reversed
// exactly when that crossing is drawn strictly beyond the port
struct PortEdge {
  int fan = 0;      // +1: first germ attaches ccw-earlier when not reversed
  int var = -1;     // crossing whose placement decides the reversal
  bool gt = false;  // reverse iff m > thr, otherwise iff m < thr
  int thr = 0;
};

// crossing together with its corridor of candidate visits; visit t sits t
// steps forward along the first component from the corridor's rear end
struct CrossRec {
  int i = 0, j = 0;    // components, i < j
  int k0 = 0, j0 = 0;  // component phases at visit 0
  int span = 0, dir = 0, sign = 0;
  int ni = 1, nj = 1;
  int m = 0;  // chosen visit
  int k_at(int t) const { return (k0 + t) % ni; }
  int j_at(int t) const { return ((j0 + (dir < 0 ? -t : t)) % nj + nj) % nj; }
};

using RecMap = std::map<std::tuple<int, int, int, int>, int>;

PortEdge analyze_pair(const PuncturedSurface& S,
                      const std::vector<std::vector<LineEnds>>& ph,
                      const RecMap& rec, const End& e1, const End& e2) {
  PortEdge out;
  out.fan = compare_pair(S, *e1.ray, *e2.ray);
  if (e1.comp == e2.comp) return out;  // lifts of one simple curve never cross
  const LineEnds& s1 = ph[e1.comp][e1.phase];
  const LineEnds& s2 = ph[e2.comp][e2.phase];
  if (ray_orientation(S, s1.back, s2.back, s1.fwd) ==
      ray_orientation(S, s1.back, s2.fwd, s1.fwd))
    return out;  // unlinked lifts keep their fan order at every port
  int lff = agree(s1.fwd, s2.fwd), lfb = agree(s1.fwd, s2.back);
  int lbb = agree(s1.back, s2.back), lbf = agree(s1.back, s2.fwd);
  int lf = std::max(lff, lfb), lb = std::max(lbb, lbf);
  bool anti = lfb > 0 || lbf > 0;
  int c1 = e1.comp, c2 = e2.comp;
  int n1 = static_cast<int>(ph[c1].size()), n2 = static_cast<int>(ph[c2].size());
  int t0, k0, j0;
  if (c1 < c2) {
    t0 = lb;
    k0 = ((e1.phase - t0) % n1 + n1) % n1;
    j0 = anti ? (e2.phase + t0) % n2 : ((e2.phase - t0) % n2 + n2) % n2;
  } else {
    t0 = anti ? lf : lb;
    k0 = ((e2.phase - t0) % n2 + n2) % n2;
    j0 = anti ? (e1.phase + t0) % n1 : ((e1.phase - t0) % n1 + n1) % n1;
  }
  auto it = rec.find({std::min(c1, c2), std::max(c1, c2), k0, j0});
  if (it == rec.end())
    throw invariant_error("linked strands without a crossing record");
  out.var = it->second;
  out.thr = t0;
  // along the first germ's forward side the corridor index grows with the
  // strand unless the strands run it in opposite directions
  bool fwd_gt = c1 < c2 || !anti;
  out.gt = e1.fwd ? fwd_gt : !fwd_gt;
  return out;
}

int edge_verdict(const PortEdge& g, const std::vector<CrossRec>& X) {
  if (g.var < 0) return g.fan;
  int m = X[g.var].m;
  bool flip = g.gt ? m > g.thr : m < g.thr;
  return flip ? -g.fan : g.fan;
}

// choose a visit for every crossing so that the germ order inside every port
// is transitive; domains are scanned rear-first, so corridor rear ends win
// whenever they are consistent
void solve_placements(const PuncturedSurface& S,
                      const std::vector<std::vector<LineEnds>>& ph,
                      const RecMap& rec, std::vector<CrossRec>& X) {
  std::vector<End> ends;
  for (int c = 0; c < static_cast<int>(ph.size()); ++c)
    for (int p = 0; p < static_cast<int>(ph[c].size()); ++p) {
      ends.push_back({&ph[c][p].back, c, p, false});
      ends.push_back({&ph[c][p].fwd, c, p, true});
    }
  struct Tri {
    PortEdge ab, bc, ac;
  };
  std::vector<std::vector<Tri>> pending(X.size());
  auto cyclic = [&](const Tri& t) {
    int vab = edge_verdict(t.ab, X);
    return vab == edge_verdict(t.bc, X) && edge_verdict(t.ac, X) == -vab;
  };
  for (Letter d : S.order()) {
    std::vector<const End*> port;
    for (const End& e : ends)
      if (e.ray->at(0) == d) port.push_back(&e);
    for (std::size_t a = 0; a < port.size(); ++a)
      for (std::size_t b = a + 1; b < port.size(); ++b)
        for (std::size_t c = b + 1; c < port.size(); ++c) {
          Tri t{analyze_pair(S, ph, rec, *port[a], *port[b]),
                analyze_pair(S, ph, rec, *port[b], *port[c]),
                analyze_pair(S, ph, rec, *port[a], *port[c])};
          int last = std::max({t.ab.var, t.bc.var, t.ac.var});
          if (last < 0) {
            if (cyclic(t))
              throw invariant_error("fixed germ orders are not transitive");
          } else
            pending[last].push_back(t);
        }
  }
  long nodes = 0;
  std::vector<int> val(X.size(), -1);
  int v = 0;
  while (v >= 0 && v < static_cast<int>(X.size())) {
    if (++nodes > (1L << 22))
      throw invariant_error("crossing placement search budget exhausted");
    ++val[v];
    if (val[v] > X[v].span) {
      val[v] = -1;
      --v;  // backtrack
      continue;
    }
    X[v].m = val[v];
    bool ok = true;
    for (const Tri& t : pending[v])
      if (cyclic(t)) {
        ok = false;
        break;
      }
    if (ok) ++v;
  }
  if (v < 0) throw invariant_error("no consistent crossing placement exists");
}

// one pass of a component through a crossing, pinned at the chosen visit
struct Incidence {
  int cross = 0;
  int side = 0;   // 0: the component is the crossing's c1, 1: c2
  int cut = 0;    // phase of the visit along the component
  int ocomp = 0;  // strand on the other side of the crossing
  int ophase = 0;
};

// boundary circle of a disc holding the given germs: ports follow the vertex
// order, germs inside a port follow the placement-adjusted fan order
std::vector<End> circle_order(const PuncturedSurface& S,
                              const std::vector<std::vector<LineEnds>>& ph,
                              const RecMap& rec, const std::vector<CrossRec>& X,
                              const std::vector<End>& ends) {
  std::vector<End> ring;
  for (Letter d : S.order()) {
    std::size_t first = ring.size();
    for (const End& e : ends) {
      if (e.ray->at(0) != d) continue;
      std::size_t at = ring.size();
      ring.push_back(e);
      while (at > first &&
             edge_verdict(analyze_pair(S, ph, rec, ring[at], ring[at - 1]), X) > 0) {
        std::swap(ring[at], ring[at - 1]);
        --at;
      }
    }
  }
  if (ring.size() != ends.size())
    throw invariant_error("disc end fell outside the vertex order");
  return ring;
}

// order of two crossings pinned at the same vertex visit of a base strand,
// read from one canonical straight-chord drawing of the three strands; every
// strand reads the same drawing, so triple points resolve consistently
bool meets_base_first(const PuncturedSurface& S,
                      const std::vector<std::vector<LineEnds>>& ph,
                      const RecMap& rec, const std::vector<CrossRec>& X, int bc,
                      int bp, const Incidence& u, const Incidence& v) {
  std::vector<End> ends;
  auto add = [&](int comp, int phase) {
    ends.push_back({&ph[comp][phase].back, comp, phase, false});
    ends.push_back({&ph[comp][phase].fwd, comp, phase, true});
  };
  add(bc, bp);
  add(u.ocomp, u.ophase);
  add(v.ocomp, v.ophase);
  std::vector<End> ring = circle_order(S, ph, rec, X, ends);
  auto tag = [](const End& e) { return std::tuple(e.comp, e.phase, e.fwd); };
  std::size_t lead = 0;
  for (std::size_t i = 1; i < ring.size(); ++i)
    if (tag(ring[i]) < tag(ring[lead])) lead = i;
  // convex position on a parabola keeps chord crossings exact in integers
  auto pt = [&](int comp, int phase, bool fwd) -> std::array<long long, 2> {
    for (std::size_t i = 0; i < ring.size(); ++i) {
      const End& e = ring[(lead + i) % ring.size()];
      if (e.comp == comp && e.phase == phase && e.fwd == fwd)
        return {static_cast<long long>(i), static_cast<long long>(i * i)};
    }
    throw invariant_error("disc end missing from the ring");
  };
  auto cross2 = [](std::array<long long, 2> p, std::array<long long, 2> q) {
    return p[0] * q[1] - p[1] * q[0];
  };
  std::array<long long, 2> A = pt(bc, bp, false), B = pt(bc, bp, true);
  std::array<long long, 2> AB{B[0] - A[0], B[1] - A[1]};
  // parameter along the base chord where the strand's chord meets it
  auto param = [&](const Incidence& q) {
    std::array<long long, 2> P = pt(q.ocomp, q.ophase, false);
    std::array<long long, 2> Q = pt(q.ocomp, q.ophase, true);
    std::array<long long, 2> PQ{Q[0] - P[0], Q[1] - P[1]};
    std::array<long long, 2> AP{P[0] - A[0], P[1] - A[1]};
    long long num = cross2(AP, PQ), den = cross2(AB, PQ);
    if (den == 0) throw invariant_error("strand chord misses the base chord");
    if (den < 0) num = -num, den = -den;
    return std::pair(num, den);
  };
  auto [nu, du] = param(u);
  auto [nv, dv] = param(v);
  return static_cast<__int128>(nu) * dv < static_cast<__int128>(nv) * du;
}

}  // namespace

Arrangement arrangement(const PuncturedSurface& S, const Tuple& alpha) {
  if (alpha.empty()) throw input_error("empty tuple");
  Arrangement A;
  for (std::size_t e = 0; e < alpha.size(); ++e) {
    if (alpha[e].empty()) throw input_error("empty multicurve entry");
    for (const CurveClass& c : alpha[e]) {
      if (classify(S, c) != CurveType::simple_essential)
        throw input_error("arrangement components must be simple essential");
      A.components.push_back({static_cast<int>(e), c.canon});
    }
  }
  int C = static_cast<int>(A.components.size());
  for (int i = 0; i < C; ++i)
    for (int j = i + 1; j < C; ++j) {
      bool same = A.components[i].entry == A.components[j].entry;
      if (A.components[i].word == A.components[j].word)
        throw input_error(same ? "duplicate component in a multicurve"
                               : "tuple entries share a component");
      if (same && intersection_number(S, CurveClass{A.components[i].word},
                                      CurveClass{A.components[j].word}) != 0)
        throw input_error("multicurve components must be disjoint");
    }

  std::vector<std::vector<LineEnds>> ph(C);
  for (int i = 0; i < C; ++i) ph[i] = line_phases(A.components[i].word);

  std::vector<CrossRec> X;
  RecMap rec;
  for (int i = 0; i < C; ++i)
    for (int j = i + 1; j < C; ++j) {
      if (A.components[i].entry == A.components[j].entry) continue;
      const Word& wi = A.components[i].word;
      const Word& wj = A.components[j].word;
      auto hits = line_crossings(S, wi, wj, false);
      if (static_cast<int>(hits.size()) !=
          intersection_number(S, CurveClass{wi}, CurveClass{wj}))
        throw invariant_error("crossing enumeration disagrees with i()");
      for (const LineCrossing& h : hits) {
        CrossRec r;
        r.i = i;
        r.j = j;
        r.k0 = h.k;
        r.j0 = h.j;
        r.span = h.corridor;
        r.dir = h.dir;
        r.sign = h.sign;
        r.ni = static_cast<int>(wi.size());
        r.nj = static_cast<int>(wj.size());
        rec[{i, j, h.k, h.j}] = static_cast<int>(X.size());
        X.push_back(r);
      }
    }

  // each crossing is drawn at one vertex visit of its corridor; the visits
  // are chosen jointly so every port order is realizable
  solve_placements(S, ph, rec, X);

  std::vector<std::vector<Incidence>> inc(C);
  for (const CrossRec& r : X) {
    int id = static_cast<int>(&r - X.data());
    int ki = r.k_at(r.m), kj = r.j_at(r.m);
    A.crossings.push_back({r.i, r.j, ki, kj, r.sign});
    inc[r.i].push_back({id, 0, ki, r.j, kj});
    inc[r.j].push_back({id, 1, kj, r.i, ki});
  }

  // traversal order along each component: visit phase, with crossings that
  // share a vertex visit ordered by the disc drawing at that visit
  for (int c = 0; c < C; ++c) {
    auto& v = inc[c];
    std::stable_sort(v.begin(), v.end(),
                     [](const Incidence& x, const Incidence& y) {
                       return x.cut < y.cut;
                     });
    for (std::size_t lo = 0; lo < v.size();) {
      std::size_t hi = lo + 1;
      while (hi < v.size() && v[hi].cut == v[lo].cut) ++hi;
      for (std::size_t i = lo + 1; i < hi; ++i) {
        Incidence cur = v[i];
        std::size_t at = i;
        while (at > lo &&
               meets_base_first(S, ph, rec, X, c, cur.cut, cur, v[at - 1])) {
          v[at] = v[at - 1];
          --at;
        }
        v[at] = cur;
      }
      lo = hi;
    }
  }

  // segments between consecutive crossings along each component; crossings
  // sharing a vertex visit are joined by empty connectors
  struct Seg {
    int comp, from_inc, to_inc;
    Word w;
  };
  std::vector<Seg> segs;
  A.order.resize(C);
  A.connector.resize(C);
  for (int c = 0; c < C; ++c) {
    const auto& v = inc[c];
    if (v.empty()) continue;
    const Word& w = A.components[c].word;
    long n = static_cast<long>(w.size());
    long total = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      std::size_t i2 = (i + 1) % v.size();
      long lo = v[i].cut;
      long hi = i2 == 0 ? v[0].cut + n : v[i2].cut;
      Word u;
      for (long t = lo + 1; t <= hi; ++t) u.push_back(w[t % n]);
      total += static_cast<long>(u.size());
      A.order[c].push_back(v[i].cross);
      A.connector[c].push_back(u);
      segs.push_back({c, static_cast<int>(i), static_cast<int>(i2), std::move(u)});
    }
    if (total != n) throw invariant_error("segment words do not cover the component");
  }

  // 4-valent graph: slots out1=0 in1=1 out2=2 in2=3 around each crossing;
  // darts are 2*seg+dir with dir 0 forward, 1 backward
  int V = static_cast<int>(A.crossings.size());
  std::vector<std::array<int, 4>> leave(V, {-1, -1, -1, -1});
  std::vector<std::array<int, 4>> arrive(V, {-1, -1, -1, -1});
  for (int s = 0; s < static_cast<int>(segs.size()); ++s) {
    const Seg& g = segs[s];
    const Incidence& fi = inc[g.comp][g.from_inc];
    const Incidence& ti = inc[g.comp][g.to_inc];
    int out_slot = fi.side == 0 ? 0 : 2;
    int in_slot = ti.side == 0 ? 1 : 3;
    leave[fi.cross][out_slot] = 2 * s;
    arrive[ti.cross][in_slot] = 2 * s;
    leave[ti.cross][in_slot] = 2 * s + 1;
    arrive[fi.cross][out_slot] = 2 * s + 1;
  }
  for (int x = 0; x < V; ++x)
    for (int s = 0; s < 4; ++s)
      if (leave[x][s] < 0 || arrive[x][s] < 0)
        throw invariant_error("crossing with an open strand slot");

  // local cyclic slot order, fixed by the side of the second strand
  std::vector<std::array<int, 4>> slot_pos(V);
  std::vector<std::array<int, 4>> rot(V);
  for (int x = 0; x < V; ++x) {
    rot[x] = A.crossings[x].sign > 0 ? std::array<int, 4>{0, 2, 1, 3}
                                     : std::array<int, 4>{0, 3, 1, 2};
    for (int s = 0; s < 4; ++s) slot_pos[x][rot[x][s]] = s;
  }
  auto head = [&](int dart) -> std::pair<int, int> {
    const Seg& g = segs[dart / 2];
    if ((dart & 1) == 0) {
      const Incidence& ti = inc[g.comp][g.to_inc];
      return {ti.cross, ti.side == 0 ? 1 : 3};
    }
    const Incidence& fi = inc[g.comp][g.from_inc];
    return {fi.cross, fi.side == 0 ? 0 : 2};
  };

  std::vector<char> used(2 * segs.size(), 0);
  for (std::size_t d0 = 0; d0 < used.size(); ++d0) {
    if (used[d0]) continue;
    Word boundary;
    std::size_t d = d0;
    do {
      used[d] = 1;
      const Word& u = segs[d / 2].w;
      if ((d & 1) == 0)
        boundary.insert(boundary.end(), u.begin(), u.end());
      else {
        Word iu = inverse(u);
        boundary.insert(boundary.end(), iu.begin(), iu.end());
      }
      auto [cr, slot] = head(static_cast<int>(d));
      int nslot = rot[cr][(slot_pos[cr][slot] + 1) % 4];
      d = static_cast<std::size_t>(leave[cr][nslot]);
    } while (d != d0);
    ArrFace f;
    f.boundary = free_reduce(boundary);
    if (f.boundary.empty()) {
      f.kind = FaceKind::disc;
    } else {
      Word canon = canonical_cyclic(f.boundary);
      const auto& per = S.peripheral_classes();
      for (std::size_t p = 0; p < per.size(); ++p)
        if (per[p] == canon) {
          f.kind = FaceKind::punctured;
          f.puncture = static_cast<int>(p);
          break;
        }
    }
    A.faces.push_back(std::move(f));
  }

  bool all_crossed = V > 0;
  for (int c = 0; c < C; ++c)
    if (inc[c].empty()) all_crossed = false;
  std::vector<int> seen(S.punctures, 0);
  bool faces_ok = true;
  for (const ArrFace& f : A.faces) {
    if (f.kind == FaceKind::other) faces_ok = false;
    if (f.kind == FaceKind::punctured) ++seen[f.puncture];
  }
  bool bij = true;
  for (int s : seen)
    if (s != 1) bij = false;
  if (all_crossed && faces_ok && bij) {
    long euler = static_cast<long>(V) - static_cast<long>(segs.size()) +
                 static_cast<long>(A.faces.size());
    if (euler != 2 - 2 * static_cast<long>(S.genus))
      throw invariant_error("arrangement face structure violates the Euler identity");
    A.fills = true;
  }
  return A;
}

}  // namespace curvecx
