#include "curvecx/ray.hpp"

#include <algorithm>

#include "curvecx/errors.hpp"
#include "curvecx/surface.hpp"

namespace curvecx {

Ray make_ray(Word prefix, Word period) {
  period = free_reduce(std::move(period));
  // peel conjugating letters: (u q u^-1)^inf = u . q^inf
  while (period.size() >= 2 && period.front() == inv(period.back())) {
    prefix.push_back(period.front());
    period = Word(period.begin() + 1, period.end() - 1);
  }
  if (period.empty()) throw input_error("ray needs a nonempty period");
  prefix = free_reduce(std::move(prefix));
  // cancel across the junction, rotating the period as letters are consumed
  while (!prefix.empty() && prefix.back() == inv(period.front())) {
    prefix.pop_back();
    period = rotate(period, 1);
  }
  return Ray{std::move(prefix), std::move(period)};
}

Ray suffix_ray(const Ray& r, std::size_t k) {
  if (k <= r.prefix.size())
    return Ray{Word(r.prefix.begin() + k, r.prefix.end()), r.period};
  std::size_t t = (k - r.prefix.size()) % r.period.size();
  return Ray{{}, rotate(r.period, t)};
}

int orient3(const PuncturedSurface& S, Letter a, Letter b, Letter c) {
  if (a == b || b == c || a == c)
    throw invariant_error("orient3 needs three distinct darts");
  int n = static_cast<int>(S.order().size());
  int pa = S.position(a), pb = S.position(b), pc = S.position(c);
  int x = (pb - pa + n) % n, y = (pc - pa + n) % n;
  return x < y ? 1 : -1;
}

// first index where the rays differ, or -1 if equal within the agreement bound
static long divergence(const Ray& r1, const Ray& r2) {
  std::size_t bound = r1.agree_bound(r2);
  for (std::size_t k = 0; k <= bound; ++k)
    if (r1.at(k) != r2.at(k)) return static_cast<long>(k);
  return -1;
}

int compare_pair(const PuncturedSurface& S, const Ray& r1, const Ray& r2) {
  long k = divergence(r1, r2);
  if (k < 0) throw invariant_error("compare_pair on equal rays");
  if (k == 0) throw invariant_error("compare_pair needs a common first letter");
  // at the divergence vertex the incoming dart is the inverse of the last shared letter
  return orient3(S, r1.at(k), r2.at(k), inv(r1.at(k - 1)));
}

int ray_orientation(const PuncturedSurface& S, const Ray& a, const Ray& b, const Ray& c) {
  std::size_t bound =
      std::max({a.agree_bound(b), b.agree_bound(c), a.agree_bound(c)});
  std::size_t k = 0;
  while (a.at(k) == b.at(k) && b.at(k) == c.at(k)) {
    ++k;
    if (k > bound) throw invariant_error("ray_orientation on coinciding rays");
  }
  Letter x = a.at(k), y = b.at(k), z = c.at(k);
  if (x != y && y != z && x != z) return orient3(S, x, y, z);
  // two rays still agree; their private divergence decides, with the third
  // end sitting outside their cone
  if (x == y) return compare_pair(S, suffix_ray(a, k), suffix_ray(b, k));
  if (y == z) return compare_pair(S, suffix_ray(b, k), suffix_ray(c, k));
  return -compare_pair(S, suffix_ray(a, k), suffix_ray(c, k));
}

}  // namespace curvecx
