#pragma once
#include <string>
#include <utility>
#include <vector>

#include "arrangement.hpp"
#include "rational.hpp"

namespace curvecx {

// positive weight per tuple entry
using WeightVector = std::vector<Rational>;

// rectangle dual to one crossing; the two sides pierced by a strand have the
// length of that strand's own annulus width
struct FlatRectangle {
  int crossing = 0;          // arrangement crossing id
  int entry1 = 0, entry2 = 0;  // tuple entries of the two strands
  Rational side1, side2;     // side lengths t[entry1], t[entry2]
};

// walking a component out of one crossing and into the next identifies the
// outgoing rectangle side with the next incoming one; sides are numbered
// 0: first-strand in, 1: first-strand out, 2: second-strand in, 3: out
struct FlatGluing {
  int comp = 0;
  int rect_from = 0, side_from = 0;
  int rect_to = 0, side_to = 0;
  Word joint;  // connector word between the two crossings
};

// union of the rectangles one component meets, an annulus of its own width
struct CoreAnnulus {
  int component = 0;
  Word core;
  Rational width;
  std::vector<int> rectangles;
  Rational area;  // width times the l1 length of the core
};

// singular Euclidean surface tiled by one rectangle per crossing
struct FlatSurface {
  Arrangement arr;
  WeightVector t;
  std::vector<FlatRectangle> rectangles;
  std::vector<FlatGluing> gluings;
  Rational area;
};

FlatSurface build_flat(const PuncturedSurface& S, const Arrangement& A,
                       const WeightVector& t);

inline Rational area(const FlatSurface& F) { return F.area; }

// exact squared weighted norm: sum over entry pairs of t_j t_k i(a_j, a_k)
Rational norm_alpha_sq(const PuncturedSurface& S, const WeightVector& t,
                       const Tuple& alpha);

// geodesic length of gamma in the l1 metric: i(t.alpha, gamma)
Rational l1_length(const PuncturedSurface& S, const Tuple& alpha,
                   const WeightVector& t, const CurveClass& gamma);

// [l1/sqrt(2), l1] brackets the Euclidean geodesic length
std::pair<double, double> euclidean_length_bounds(const PuncturedSurface& S,
                                                  const Tuple& alpha,
                                                  const WeightVector& t,
                                                  const CurveClass& gamma);

std::vector<CoreAnnulus> core_annuli(const FlatSurface& F);

struct AnnulusCheck {
  std::string name;
  double lhs = 0, rhs = 0;
  bool pass = false;
};
struct AnnulusReport {
  std::vector<AnnulusCheck> checks;
  bool all_pass = false;
};

// the annulus area, crossing-length and diameter bounds as checkable facts
AnnulusReport annulus_inequalities(const PuncturedSurface& S,
                                   const FlatSurface& F, const CoreAnnulus& A,
                                   const CurveClass& beta);

}  // namespace curvecx
