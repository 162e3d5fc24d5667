#include "curvecx/flatsurf.hpp"

#include <algorithm>
#include <cmath>

#include "curvecx/errors.hpp"

namespace curvecx {

namespace {

int entry_count(const Arrangement& A) {
  int n = 0;
  for (const ArrComponent& c : A.components) n = std::max(n, c.entry + 1);
  return n;
}

void check_weights(const WeightVector& t, std::size_t n, bool strict) {
  if (t.size() != n)
    throw input_error("weight count does not match the tuple entries");
  bool any = false;
  for (const Rational& w : t) {
    if (w.num < 0) throw input_error("negative weight");
    if (strict && w.num == 0) throw input_error("zero weight entry");
    if (w.num > 0) any = true;
  }
  if (!any) throw input_error("weight vector must not vanish");
}

Tuple tuple_of(const Arrangement& A) {
  Tuple out(entry_count(A));
  for (const ArrComponent& c : A.components)
    out[c.entry].push_back(CurveClass{c.word});
  return out;
}

}  // namespace

FlatSurface build_flat(const PuncturedSurface& S, const Arrangement& A,
                       const WeightVector& t) {
  (void)S;
  if (!A.fills) throw input_error("flat structure needs a filling arrangement");
  check_weights(t, entry_count(A), true);
  FlatSurface F;
  F.arr = A;
  F.t = t;
  for (std::size_t x = 0; x < A.crossings.size(); ++x) {
    const ArrCrossing& cr = A.crossings[x];
    int e1 = A.components[cr.c1].entry;
    int e2 = A.components[cr.c2].entry;
    F.rectangles.push_back(
        {static_cast<int>(x), e1, e2, t[e1], t[e2]});
    F.area = F.area + t[e1] * t[e2];
  }
  std::vector<int> hit(4 * A.crossings.size(), 0);
  for (int c = 0; c < static_cast<int>(A.components.size()); ++c) {
    const auto& ord = A.order[c];
    for (std::size_t k = 0; k < ord.size(); ++k) {
      int x = ord[k], y = ord[(k + 1) % ord.size()];
      FlatGluing g;
      g.comp = c;
      g.rect_from = x;
      g.side_from = A.crossings[x].c1 == c ? 1 : 3;
      g.rect_to = y;
      g.side_to = A.crossings[y].c1 == c ? 0 : 2;
      g.joint = A.connector[c][k];
      ++hit[4 * g.rect_from + g.side_from];
      ++hit[4 * g.rect_to + g.side_to];
      F.gluings.push_back(std::move(g));
    }
  }
  for (int h : hit)
    if (h != 1) throw invariant_error("rectangle side not glued exactly once");
  return F;
}

Rational norm_alpha_sq(const PuncturedSurface& S, const WeightVector& t,
                       const Tuple& alpha) {
  check_weights(t, alpha.size(), false);
  Rational out;
  for (std::size_t j = 0; j < alpha.size(); ++j)
    for (std::size_t k = j + 1; k < alpha.size(); ++k)
      out = out + t[j] * t[k] *
                      Rational(intersection_number(S, alpha[j], alpha[k]));
  return out;
}

Rational l1_length(const PuncturedSurface& S, const Tuple& alpha,
                   const WeightVector& t, const CurveClass& gamma) {
  if (gamma.trivial()) throw input_error("trivial curve has no length");
  check_weights(t, alpha.size(), false);
  Rational out;
  for (std::size_t j = 0; j < alpha.size(); ++j) {
    long hits = 0;
    for (const CurveClass& c : alpha[j])
      hits += intersection_number(S, c, gamma);
    out = out + t[j] * Rational(hits);
  }
  return out;
}

std::pair<double, double> euclidean_length_bounds(const PuncturedSurface& S,
                                                  const Tuple& alpha,
                                                  const WeightVector& t,
                                                  const CurveClass& gamma) {
  double l1 = l1_length(S, alpha, t, gamma).to_double();
  return {l1 / std::sqrt(2.0), l1};
}

std::vector<CoreAnnulus> core_annuli(const FlatSurface& F) {
  std::vector<CoreAnnulus> out;
  for (int c = 0; c < static_cast<int>(F.arr.components.size()); ++c) {
    CoreAnnulus a;
    a.component = c;
    a.core = F.arr.components[c].word;
    a.width = F.t[F.arr.components[c].entry];
    for (int x : F.arr.order[c]) {
      const ArrCrossing& cr = F.arr.crossings[x];
      int other = cr.c1 == c ? cr.c2 : cr.c1;
      a.rectangles.push_back(x);
      a.area = a.area + a.width * F.t[F.arr.components[other].entry];
    }
    out.push_back(std::move(a));
  }
  return out;
}

AnnulusReport annulus_inequalities(const PuncturedSurface& S,
                                   const FlatSurface& F, const CoreAnnulus& A,
                                   const CurveClass& beta) {
  Tuple alpha = tuple_of(F.arr);
  CurveClass core{A.core};
  Rational l1_core = l1_length(S, alpha, F.t, core);
  if (A.width * l1_core != A.area)
    throw invariant_error("annulus area differs from width times core length");
  AnnulusReport rep;
  rep.checks.push_back({"annulus area within surface area",
                        A.area.to_double(), F.area.to_double(),
                        A.area <= F.area});
  Rational lhs = A.width * Rational(intersection_number(S, core, beta));
  Rational rhs = l1_length(S, alpha, F.t, beta);
  rep.checks.push_back({"width times crossings within l1 length",
                        lhs.to_double(), rhs.to_double(), lhs <= rhs});
  // l1(core) <= sqrt(2) area / width, compared exactly by squaring
  Rational prod = l1_core * A.width;
  rep.checks.push_back(
      {"core l1 within sqrt2 area over width", l1_core.to_double(),
       std::sqrt(2.0) * F.area.to_double() / A.width.to_double(),
       prod * prod <= Rational(2) * F.area * F.area});
  rep.all_pass = true;
  for (const AnnulusCheck& c : rep.checks) rep.all_pass = rep.all_pass && c.pass;
  return rep;
}

}  // namespace curvecx
