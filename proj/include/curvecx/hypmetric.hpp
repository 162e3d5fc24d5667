#pragma once
#include <string>
#include <vector>

namespace curvecx {

// finite metric space on points 0..n-1; adjacency is optional unit-edge
// graph structure that unlocks geodesic enumeration
struct FiniteMetric {
  std::vector<std::string> labels;
  std::vector<std::vector<double>> d;
  std::vector<std::vector<int>> adjacency;

  int size() const { return static_cast<int>(d.size()); }
  bool has_graph() const { return !adjacency.empty(); }
};

// validates symmetry, identity, nonnegativity and spot-checks triangles
void check_metric(const FiniteMetric& M);

FiniteMetric metric_from_matrix(const std::vector<std::vector<double>>& d,
                                const std::vector<std::string>& labels = {});
// connected graph with unit edges; distances by breadth-first search
FiniteMetric metric_from_graph(int n,
                               const std::vector<std::pair<int, int>>& edges,
                               const std::vector<std::string>& labels = {});

// <x,y>_z = (xz + yz - xy) / 2
double gromov_product(const FiniteMetric& M, int x, int y, int z);

struct TripodData {
  int x = 0, y = 0, z = 0;
  double leg_x = 0, leg_y = 0, leg_z = 0;  // <y,z>_x, <x,z>_y, <x,y>_z
  // graph case: vertices within 1/2 of the central preimage on each side
  std::vector<int> centre_xy, centre_xz, centre_yz;
};
TripodData tripod(const FiniteMetric& M, int x, int y, int z);

struct DeltaOptions {
  long exhaustive_cap = 2000;      // hard point-count lid for exhaustive mode
  long budget = 50000000;          // tuple evaluations allowed exhaustively
  long samples = 200000;           // random tuples when over budget
  unsigned seed = 1;
  int threads = 0;
  bool allow_sampling = true;
};

struct DeltaReport {
  double delta = 0;
  bool exhaustive = false;
  long tuples = 0;  // quadruples or triangles actually examined
};

// least delta with xy + zw <= max(xz + yw, xw + yz) + 2 delta
DeltaReport four_point_delta(const FiniteMetric& M,
                             const DeltaOptions& opt = {});

// max over triangles and tripod points of diam of the preimage; graph only
DeltaReport thin_delta(const FiniteMetric& M, const DeltaOptions& opt = {});

// minimizers of d(x, .) over U
std::vector<int> nearest_projection(const FiniteMetric& M,
                                    const std::vector<int>& U, int x);

// members q of U that every geodesic from x to any point of U passes
// within r of; graph only
std::vector<int> entry_points(const FiniteMetric& M, const std::vector<int>& U,
                              int x, double r);

struct Circumcentre {
  double radius = 0;
  std::vector<int> centres;
};
Circumcentre circumcentre(const FiniteMetric& M, const std::vector<int>& U);

// measured quasiconvexity: max over geodesic vertices between members of U
// of the distance back to U; graph only
double quasiconvexity(const FiniteMetric& M, const std::vector<int>& U);

// point permutations acting by isometries
struct GroupAction {
  std::vector<std::vector<int>> elements;  // includes the identity
};

// closure of the generators under composition, each checked to be an isometry
GroupAction make_action(const FiniteMetric& M,
                        const std::vector<std::vector<int>>& generators,
                        std::size_t element_cap = 20000);

double orbit_diameter(const FiniteMetric& M, const GroupAction& G, int x);

// points whose orbit has diameter at most R
std::vector<int> fix_set(const FiniteMetric& M, const GroupAction& G, double R);

}  // namespace curvecx
