#pragma once
#include <vector>

#include "ray.hpp"

namespace curvecx {

class PuncturedSurface;

// both ends of the line carrying root^inf, based between positions k and k+1
struct LineEnds {
  Ray back, fwd;
};

std::vector<LineEnds> line_phases(const Word& root);

// one transversal crossing of the lines of r1^inf and r2^inf, anchored at the
// backward-extremal shared vertex of the corridor along the first line
struct LineCrossing {
  int k = 0;         // phase on the first line (anchor vertex)
  int j = 0;         // phase on the second line at the anchor vertex
  int corridor = 0;  // shared edges forward along the first line from the anchor
  int dir = 0;       // +1 second line runs the corridor forward, -1 backward, 0 none
  int sign = 0;      // side of the second line's forward end in the first line's order
};

// all crossings, one per corridor; self=true treats the same line against
// itself and skips the diagonal phase pairs
std::vector<LineCrossing> line_crossings(const PuncturedSurface& S,
                                         const Word& r1, const Word& r2,
                                         bool self);

}  // namespace curvecx
