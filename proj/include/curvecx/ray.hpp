#pragma once
#include "word.hpp"

namespace curvecx {

class PuncturedSurface;

// eventually periodic reduced infinite word prefix . period^inf;
// encodes an end of the universal cover tree of the one-vertex spine
struct Ray {
  Word prefix;
  Word period;  // nonempty, cyclically reduced

  Letter at(std::size_t i) const {
    return i < prefix.size() ? prefix[i]
                             : period[(i - prefix.size()) % period.size()];
  }
  // letters two rays can share before they must be equal (Fine-Wilf style bound)
  std::size_t agree_bound(const Ray& o) const {
    return prefix.size() + o.prefix.size() + period.size() + o.period.size() + 2;
  }
};

// normalizes so the infinite word is reduced: frees the prefix, peels period
// conjugation into the prefix, cancels the junction into period rotations
Ray make_ray(Word prefix, Word period);

// drop the first k letters
Ray suffix_ray(const Ray& r, std::size_t k);

// cyclic orientation (+1/-1) of three distinct darts around the one vertex
int orient3(const PuncturedSurface& S, Letter a, Letter b, Letter c);

// orientation of (r1, r2, w) for any end w leaving the common r1/r2 path early;
// r1 and r2 must share their first letter and differ as infinite words
int compare_pair(const PuncturedSurface& S, const Ray& r1, const Ray& r2);

// cyclic orientation of three pairwise distinct ends in the boundary order
int ray_orientation(const PuncturedSurface& S, const Ray& a, const Ray& b, const Ray& c);

}  // namespace curvecx
