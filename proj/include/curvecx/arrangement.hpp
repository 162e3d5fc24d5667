#pragma once
#include <string>
#include <vector>

#include "curves.hpp"

namespace curvecx {

// one component of the flattened tuple
struct ArrComponent {
  int entry = 0;  // tuple entry it came from
  Word word;      // canonical cyclically reduced representative
};

// transversal double point of two components in minimal position
struct ArrCrossing {
  int c1 = 0, c2 = 0;      // component indices, c1 < c2
  int pos1 = 0, pos2 = 0;  // word position of the crossing on each component
  int sign = 0;  // boundary-order side of the second strand's forward end
};

enum class FaceKind { disc, punctured, other };
std::string to_string(FaceKind k);

// complementary region boundary circuit
struct ArrFace {
  Word boundary;  // freely reduced circuit word
  FaceKind kind = FaceKind::other;
  int puncture = -1;  // peripheral index when kind == punctured
};

struct Arrangement {
  std::vector<ArrComponent> components;
  std::vector<ArrCrossing> crossings;
  // crossing ids met along each component in traversal order, and the word
  // read after each one up to the next
  std::vector<std::vector<int>> order;
  std::vector<std::vector<Word>> connector;
  std::vector<ArrFace> faces;
  bool fills = false;
};

// minimal-position arrangement of a tuple of multicurves; every component
// must be simple essential, entries internally disjoint, no repeats anywhere
Arrangement arrangement(const PuncturedSurface& S, const Tuple& alpha);

}  // namespace curvecx
