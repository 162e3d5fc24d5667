#include "curvecx/lines.hpp"

#include "curvecx/errors.hpp"
#include "curvecx/surface.hpp"

namespace curvecx {

std::vector<LineEnds> line_phases(const Word& root) {
  std::size_t n = root.size();
  std::vector<LineEnds> ph(n);
  for (std::size_t k = 0; k < n; ++k) {
    Word f = rotate(root, (k + 1) % n);
    ph[k] = LineEnds{make_ray({}, inverse(f)), make_ray({}, f)};
  }
  return ph;
}

namespace {

// agreement length of two reduced streams, capped by the Fine-Wilf bound
int agree_length(const Ray& a, const Ray& b) {
  std::size_t cap = a.agree_bound(b);
  for (std::size_t i = 0; i < cap; ++i)
    if (a.at(i) != b.at(i)) return static_cast<int>(i);
  throw invariant_error("rays expected to diverge agree past the bound");
}

}  // namespace

std::vector<LineCrossing> line_crossings(const PuncturedSurface& S,
                                         const Word& r1, const Word& r2,
                                         bool self) {
  auto P1 = line_phases(r1);
  auto P2 = self ? P1 : line_phases(r2);
  std::vector<LineCrossing> out;
  for (std::size_t k = 0; k < P1.size(); ++k) {
    const Ray& b1 = P1[k].back;
    const Ray& f1 = P1[k].fwd;
    Letter first_back = b1.at(0);
    for (std::size_t j = 0; j < P2.size(); ++j) {
      if (self && k == j) continue;
      const Ray& b2 = P2[j].back;
      const Ray& f2 = P2[j].fwd;
      // anchored corridors only: nothing shared along the first backward edge
      if (b2.at(0) == first_back || f2.at(0) == first_back) continue;
      int s1 = ray_orientation(S, b1, b2, f1);
      int s2 = ray_orientation(S, b1, f2, f1);
      if (s1 * s2 >= 0) continue;
      LineCrossing c;
      c.k = static_cast<int>(k);
      c.j = static_cast<int>(j);
      c.sign = s2;
      if (f2.at(0) == f1.at(0)) {
        c.dir = 1;
        c.corridor = agree_length(f1, f2);
      } else if (b2.at(0) == f1.at(0)) {
        c.dir = -1;
        c.corridor = agree_length(f1, b2);
      }
      out.push_back(c);
    }
  }
  return out;
}

}  // namespace curvecx
