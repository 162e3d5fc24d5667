#pragma once
#include <map>
#include <string>
#include <vector>

#include "curves.hpp"
#include "flatsurf.hpp"
#include "hypmetric.hpp"
#include "surface.hpp"

namespace curvecx {

// finite slice of the curve graph: every simple essential class with a
// representative word of bounded length, plus the full intersection table
struct CurveSlice {
  PuncturedSurface surface;
  int max_word_length = 0;
  std::vector<CurveClass> vertices;          // sorted by curve_less
  std::vector<std::vector<int>> table;       // symmetric, zero diagonal
  std::vector<std::vector<int>> adjacency;   // neighbours with i = 0
  std::string provenance;                    // content hash, also the cache key

  int index_of(const CurveClass& c) const;   // -1 when absent
};

struct SliceOptions {
  int vertex_cap = 20000;
  int threads = 0;                 // 0 = hardware concurrency
  bool allow_low_complexity = false;  // permit xi(S) < 2
  std::string cache_dir;           // empty: use CURVECX_CACHE env var, if set
};

CurveSlice build_slice(const PuncturedSurface& S, int max_word_length,
                       const SliceOptions& opt = {});

// breadth-first distances from src inside the slice, -1 for unreachable
std::vector<int> slice_distances(const CurveSlice& sl, int src);

enum class DistMethod { equal, disjoint, nonfilling, bfs, hempel };
std::string to_string(DistMethod m);

struct DistanceReport {
  int lower = 0;
  int upper = 0;
  bool exact = false;
  DistMethod method = DistMethod::equal;
  int hempel = -1;  // floor(2 log2 i + 2) whenever i >= 1
};

// exact for 0/1/2 via intersection and filling tests; beyond that lower 3
// with the best of the slice path and the crossing-number bound as upper
DistanceReport distance(const CurveSlice& sl, const CurveClass& a,
                        const CurveClass& b);

struct HullResult {
  std::vector<int> vertices;  // sorted ids
  bool exact = false;         // every generating pair distance certified
};

// slice vertices on a shortest slice path between some pair of A
HullResult hull(const CurveSlice& sl, const std::vector<int>& A);

struct BalanceVector {
  std::vector<Rational> entries;
  bool reciprocal = false;  // else the zero-one convention was used
};

// reciprocal weights 1/i(entry, beta) when every entry crosses beta,
// otherwise indicator weights on the disjoint entries
BalanceVector balance_vector(const PuncturedSurface& S, const Tuple& alpha,
                             const CurveClass& beta);

// vertices gamma with i(t.alpha, gamma)^2 <= L2 * |t|_alpha^2, all exact
std::vector<int> short_set_sq(const CurveSlice& sl, const Tuple& alpha,
                              const WeightVector& t, const Rational& L2);
std::vector<int> short_set(const CurveSlice& sl, const Tuple& alpha,
                           const WeightVector& t, const Rational& L);

// union of short_set over projectivized nonnegative integer weights with
// entries up to grid_resolution
std::vector<int> short_hull(const CurveSlice& sl, const Tuple& alpha,
                            const Rational& L, int grid_resolution);

// max over a of min over b of the slice distance, then symmetrized;
// -1 when some point sees no partner through the slice
int hausdorff_distance(const CurveSlice& sl, const std::vector<int>& A,
                       const std::vector<int>& B);

struct ProjectReport {
  BalanceVector t_beta;
  std::vector<int> shorts;      // short_set at the balance weights
  std::vector<int> projection;  // nearest hull(alpha) vertices to beta
  bool disjoint_branch = false; // beta misses some entry: crossing-bound case
  int hausdorff = -1;           // between shorts and projection
  int proj_to_short = -1;       // max over projection of min into shorts
  bool exact = false;
};

ProjectReport project_via_balance(const CurveSlice& sl, const Tuple& alpha,
                                  const CurveClass& beta, const Rational& L);

struct FourPointReport {
  long prod_outer = 0;  // i(a1,a4) i(a2,a3)
  long prod_inner = 0;  // i(a1,a2) i(a3,a4)
  Rational r;
  bool hypothesis = false;  // prod_outer <= r * prod_inner
  int distance = -1;        // between the slice geodesic sets [a1,a2], [a3,a4]
  bool exact = false;
};

FourPointReport check_4ptint(const CurveSlice& sl, const CurveClass& a1,
                             const CurveClass& a2, const CurveClass& a3,
                             const CurveClass& a4, const Rational& r);

// named measured constants, reproducible for a fixed slice provenance
struct EmpiricalConstants {
  std::string context;
  std::map<std::string, double> values;
};

// the disjointness graph of the slice as a unit edge metric; requires the
// graph to be connected
FiniteMetric slice_metric(const CurveSlice& sl);

}  // namespace curvecx
