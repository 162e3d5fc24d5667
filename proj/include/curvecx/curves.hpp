#pragma once
#include <string>
#include <vector>

#include "surface.hpp"
#include "word.hpp"

namespace curvecx {

// free homotopy class of a closed curve: cyclically reduced word up to
// rotation and inversion, kept in canonical form
struct CurveClass {
  Word canon;
  bool operator==(const CurveClass& o) const { return canon == o.canon; }
  bool operator!=(const CurveClass& o) const { return canon != o.canon; }
  bool trivial() const { return canon.empty(); }
};

// deterministic order: shorter first, then letter_key lexicographic
inline bool curve_less(const CurveClass& a, const CurveClass& b) {
  return word_key_less(a.canon, b.canon);
}

CurveClass normalize(const PuncturedSurface& S, const Word& raw);
CurveClass normalize(const PuncturedSurface& S, const std::string& raw);

// disjoint distinct components; tuple entries must not share components
using Multicurve = std::vector<CurveClass>;
using Tuple = std::vector<Multicurve>;

// geometric intersection number of two classes; 0 when the classes share an
// axis (equal up to inversion/powers) or either is trivial
int intersection_number(const PuncturedSurface& S, const CurveClass& c1,
                        const CurveClass& c2);
int intersection_number(const PuncturedSurface& S, const Multicurve& u,
                        const Multicurve& v);

// minimal self-crossing count of the class
int self_intersection(const PuncturedSurface& S, const CurveClass& c);

enum class CurveType { trivial, peripheral, simple_essential, nonsimple };
std::string to_string(CurveType t);
CurveType classify(const PuncturedSurface& S, const CurveClass& c);

// i(t.alpha, gamma) = sum_i t_i i(alpha_i, gamma)
double weighted_intersection(const PuncturedSurface& S,
                             const std::vector<double>& t, const Tuple& alpha,
                             const Multicurve& gamma);
// ||t||_alpha = sqrt(sum_{j<k} t_j t_k i(alpha_j, alpha_k))
double norm_alpha(const PuncturedSurface& S, const std::vector<double>& t,
                  const Tuple& alpha);
// pairwise entry intersections, symmetric with zero diagonal
std::vector<std::vector<int>> pairwise_entries(const PuncturedSurface& S,
                                               const Tuple& alpha);

void check_weights(const std::vector<double>& t, std::size_t n);

}  // namespace curvecx
