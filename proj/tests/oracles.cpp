#include "oracles.hpp"

#include <deque>
#include <numeric>
#include <stdexcept>

namespace oracle {

using curvecx::free_reduce;
using curvecx::canonical_cyclic;
using curvecx::inverse;

Slope norm_slope(int p, int q) {
  if (q < 0 || (q == 0 && p < 0)) {
    p = -p;
    q = -q;
  }
  return Slope{p, q};
}

std::vector<Slope> slopes_up_to(int bound) {
  std::vector<Slope> out;
  for (int p = -bound; p <= bound; ++p)
    for (int q = 0; q <= bound; ++q) {
      if (std::gcd(std::abs(p), q) != 1) continue;
      Slope s = norm_slope(p, q);
      if (s.p == p && s.q == q) out.push_back(s);
    }
  return out;
}

long slope_det(Slope a, Slope b) {
  return static_cast<long>(a.p) * b.q - static_cast<long>(a.q) * b.p;
}

// lower Christoffel word: cutting sequence of the segment (0,0) -> (p,q)
static Word christoffel(int p, int q) {
  int n = p + q;
  Word w;
  for (int i = 0; i < n; ++i) {
    long lo = static_cast<long>(i) * q / n;
    long hi = static_cast<long>(i + 1) * q / n;
    w.push_back(hi > lo ? Letter(2) : Letter(1));
  }
  return w;
}

Word torus_slope_word(Slope s) {
  s = norm_slope(s.p, s.q);
  if (s.q == 0) return {Letter(1)};
  if (s.p == 0) return {Letter(2)};
  if (s.p > 0) return christoffel(s.p, s.q);
  Word w = christoffel(-s.p, s.q);  // mirror (p,q) -> (-p,q): a -> a^-1
  for (Letter& x : w)
    if (std::abs(static_cast<int>(x)) == 1) x = curvecx::inv(x);
  return w;
}

// conjugate the letters x,y by the word xy (dir<0: by its inverse)
static Word braid_sub(const Word& w, int x, int y, int dir) {
  Word g = {Letter(x), Letter(y)};
  if (dir < 0) g = inverse(g);
  Word gi = inverse(g);
  Word out;
  for (Letter L : w) {
    int a = std::abs(static_cast<int>(L));
    if (a == x || a == y) {
      out.insert(out.end(), g.begin(), g.end());
      out.push_back(L);
      out.insert(out.end(), gi.begin(), gi.end());
    } else {
      out.push_back(L);
    }
  }
  return free_reduce(out);
}

SphereSlopeFamily::SphereSlopeFamily(int bound) {
  // twists about the (1,0) curve "ab" and the (0,1) curve "bc"; equally handed
  // twists act parabolically with opposite off-diagonal signs
  auto apply = [](Slope s, int op, int dir) -> Slope {
    if (op == 0) return norm_slope(s.p - 2 * dir * s.q, s.q);
    return norm_slope(s.p, s.q + 2 * dir * s.p);
  };
  std::map<Slope, Word> m;
  m[norm_slope(1, 0)] = {1, 2};           // ab
  m[norm_slope(0, 1)] = {2, 3};           // bc
  m[norm_slope(1, 1)] = {1, 2, 3, -2};    // a bcB
  std::deque<Slope> queue{norm_slope(1, 0), norm_slope(0, 1), norm_slope(1, 1)};
  int cap = bound + 2;
  while (!queue.empty()) {
    Slope s = queue.front();
    queue.pop_front();
    const Word w = m.at(s);
    for (int op = 0; op < 2; ++op)
      for (int dir : {1, -1}) {
        Slope ns = apply(s, op, dir);
        if (std::abs(ns.p) > cap || std::abs(ns.q) > cap) continue;
        if (m.count(ns)) continue;
        Word nw = canonical_cyclic(
            op == 0 ? braid_sub(w, 1, 2, dir) : braid_sub(w, 2, 3, dir));
        m.emplace(ns, std::move(nw));
        queue.push_back(ns);
      }
  }
  for (Slope s : slopes_up_to(bound)) {
    auto it = m.find(s);
    if (it == m.end())
      throw std::logic_error("sphere slope family: slope not reached");
    words_[s] = it->second;
    slopes_.push_back(s);
  }
}

const Word& SphereSlopeFamily::word(Slope s) const {
  auto it = words_.find(norm_slope(s.p, s.q));
  if (it == words_.end()) throw std::logic_error("slope outside family");
  return it->second;
}

Word random_reduced_word(std::mt19937& rng, int rank, int maxlen) {
  std::uniform_int_distribution<int> len_d(1, maxlen);
  std::uniform_int_distribution<int> gen_d(0, 2 * rank - 1);
  for (;;) {
    int len = len_d(rng);
    Word w;
    while (static_cast<int>(w.size()) < len) {
      int v = gen_d(rng);
      Letter x = static_cast<Letter>(v < rank ? v + 1 : -(v - rank + 1));
      if (!w.empty() && x == curvecx::inv(w.back())) continue;
      w.push_back(x);
    }
    w = curvecx::cyclic_reduce(w);
    if (!w.empty()) return w;
  }
}

}  // namespace oracle
