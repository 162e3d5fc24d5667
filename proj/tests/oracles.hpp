#pragma once
#include <map>
#include <random>
#include <vector>

#include "curvecx/curves.hpp"
#include "curvecx/surface.hpp"

// test-side constructions kept independent of the library's intersection code
namespace oracle {

using curvecx::Letter;
using curvecx::PuncturedSurface;
using curvecx::Word;

struct Slope {
  int p = 0, q = 0;
  bool operator<(const Slope& o) const {
    return p != o.p ? p < o.p : q < o.q;
  }
};

// projective normalization: q > 0, or q == 0 and p > 0
Slope norm_slope(int p, int q);
// one representative per projective coprime class with |p|,|q| <= bound
std::vector<Slope> slopes_up_to(int bound);
long slope_det(Slope a, Slope b);

// straight-line (Christoffel) words on the once punctured torus; two such
// lines cross exactly |det| times
Word torus_slope_word(Slope s);

// words on the four punctured sphere generated from three seed curves by the
// pure-braid twists about the (1,0) and (0,1) curves; two members cross 2|det|
// times; construction only uses free-group substitution, never i()
class SphereSlopeFamily {
 public:
  explicit SphereSlopeFamily(int bound);
  const Word& word(Slope s) const;
  const std::vector<Slope>& slopes() const { return slopes_; }

 private:
  std::map<Slope, Word> words_;
  std::vector<Slope> slopes_;
};

// nonempty cyclically reduced word, length <= maxlen
Word random_reduced_word(std::mt19937& rng, int rank, int maxlen);

}  // namespace oracle
