#include "curvecx/curves.hpp"

#include <cmath>
#include <cstdlib>

#include "curvecx/errors.hpp"
#include "curvecx/lines.hpp"

namespace curvecx {

CurveClass normalize(const PuncturedSurface& S, const Word& raw) {
  for (Letter x : raw)
    if (x == 0 || std::abs(static_cast<int>(x)) > S.rank)
      throw input_error("letter outside the surface basis");
  return CurveClass{canonical_cyclic(raw)};
}

CurveClass normalize(const PuncturedSurface& S, const std::string& raw) {
  return normalize(S, S.parse(raw));
}

namespace {

int raw_linked_count(const PuncturedSurface& S, const Word& r1, const Word& r2,
                     bool self_mode) {
  return static_cast<int>(line_crossings(S, r1, r2, self_mode).size());
}

}  // namespace

int intersection_number(const PuncturedSurface& S, const CurveClass& c1,
                        const CurveClass& c2) {
  if (c1.trivial() || c2.trivial()) return 0;
  auto [r1, p1] = primitive_root(c1.canon);
  auto [r2, p2] = primitive_root(c2.canon);
  if (canonical_cyclic(r1) == canonical_cyclic(r2)) return 0;  // shared axis
  return p1 * p2 * raw_linked_count(S, r1, r2, false);
}

int intersection_number(const PuncturedSurface& S, const Multicurve& u,
                        const Multicurve& v) {
  int total = 0;
  for (const CurveClass& a : u)
    for (const CurveClass& b : v) total += intersection_number(S, a, b);
  return total;
}

int self_intersection(const PuncturedSurface& S, const CurveClass& c) {
  if (c.trivial()) throw input_error("self_intersection of the trivial class");
  auto [root, p] = primitive_root(c.canon);
  int raw = raw_linked_count(S, root, root, true);
  if (raw % 2) throw invariant_error("ordered self-crossing count must be even");
  return p * p * (raw / 2) + (p - 1);
}

std::string to_string(CurveType t) {
  switch (t) {
    case CurveType::trivial: return "trivial";
    case CurveType::peripheral: return "peripheral";
    case CurveType::simple_essential: return "simple_essential";
    default: return "nonsimple";
  }
}

CurveType classify(const PuncturedSurface& S, const CurveClass& c) {
  if (c.trivial()) return CurveType::trivial;
  if (S.is_peripheral_class(c.canon)) return CurveType::peripheral;
  return self_intersection(S, c) == 0 ? CurveType::simple_essential
                                      : CurveType::nonsimple;
}

void check_weights(const std::vector<double>& t, std::size_t n) {
  if (t.size() != n) throw input_error("weight vector has the wrong length");
  bool any = false;
  for (double x : t) {
    if (x < 0 || !std::isfinite(x)) throw input_error("weights must be nonnegative");
    if (x > 0) any = true;
  }
  if (!any) throw input_error("weight vector must not be zero");
}

double weighted_intersection(const PuncturedSurface& S,
                             const std::vector<double>& t, const Tuple& alpha,
                             const Multicurve& gamma) {
  check_weights(t, alpha.size());
  double sum = 0;
  for (std::size_t i = 0; i < alpha.size(); ++i)
    if (t[i] > 0) sum += t[i] * intersection_number(S, alpha[i], gamma);
  return sum;
}

std::vector<std::vector<int>> pairwise_entries(const PuncturedSurface& S,
                                               const Tuple& alpha) {
  std::size_t n = alpha.size();
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = j + 1; k < n; ++k)
      m[j][k] = m[k][j] = intersection_number(S, alpha[j], alpha[k]);
  return m;
}

double norm_alpha(const PuncturedSurface& S, const std::vector<double>& t,
                  const Tuple& alpha) {
  check_weights(t, alpha.size());
  auto m = pairwise_entries(S, alpha);
  double sum = 0;
  for (std::size_t j = 0; j < alpha.size(); ++j)
    for (std::size_t k = j + 1; k < alpha.size(); ++k)
      sum += t[j] * t[k] * m[j][k];
  return std::sqrt(sum);
}

}  // namespace curvecx
