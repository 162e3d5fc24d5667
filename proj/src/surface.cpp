#include "curvecx/surface.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <limits>
#include <numeric>
#include <queue>
#include <sstream>

#include <json.hpp>

#include "curvecx/errors.hpp"

namespace curvecx {

namespace {

struct Indexed {
  std::map<std::string, int> id;            // dart name -> id
  std::vector<int> pair;                    // dart id -> paired dart id
  std::vector<int> vertex_of;               // dart id -> vertex index
};

Indexed index_input(const RibbonData& in) {
  Indexed ix;
  for (std::size_t i = 0; i < in.darts.size(); ++i) {
    const std::string& d = in.darts[i];
    if (d.empty()) throw input_error("empty dart name");
    if (!ix.id.emplace(d, static_cast<int>(i)).second)
      throw input_error("duplicate dart name: " + d);
  }
  int n = static_cast<int>(in.darts.size());
  ix.pair.assign(n, -1);
  for (const auto& [a, b] : in.pairing) {
    auto ia = ix.id.find(a), ib = ix.id.find(b);
    if (ia == ix.id.end() || ib == ix.id.end())
      throw input_error("pairing mentions unknown dart");
    int x = ia->second, y = ib->second;
    if (x == y) throw input_error("dart paired with itself: " + a);
    for (auto [u, v] : {std::pair{x, y}, std::pair{y, x}}) {
      if (ix.pair[u] != -1 && ix.pair[u] != v)
        throw input_error("pairing is not an involution at " + in.darts[u]);
      ix.pair[u] = v;
    }
  }
  for (int i = 0; i < n; ++i)
    if (ix.pair[i] == -1)
      throw input_error("dart missing from pairing: " + in.darts[i]);

  ix.vertex_of.assign(n, -1);
  for (std::size_t v = 0; v < in.vertex_cycles.size(); ++v) {
    for (const std::string& d : in.vertex_cycles[v]) {
      auto it = ix.id.find(d);
      if (it == ix.id.end()) throw input_error("cycle mentions unknown dart: " + d);
      if (ix.vertex_of[it->second] != -1)
        throw input_error("dart appears in two cycles: " + d);
      ix.vertex_of[it->second] = static_cast<int>(v);
    }
  }
  for (int i = 0; i < n; ++i)
    if (ix.vertex_of[i] == -1)
      throw input_error("dart missing from vertex cycles: " + in.darts[i]);
  return ix;
}

}  // namespace

int PuncturedSurface::position(Letter x) const {
  int a = std::abs(static_cast<int>(x));
  if (a == 0 || a > rank) throw input_error("letter outside basis");
  int idx = (x > 0 ? a - 1 : rank + a - 1);
  return pos_[idx];
}

bool PuncturedSurface::is_peripheral_class(const Word& canonical) const {
  return std::find(peripheral_cls_.begin(), peripheral_cls_.end(), canonical) !=
         peripheral_cls_.end();
}

PuncturedSurface PuncturedSurface::build(const RibbonData& in) {
  PuncturedSurface S;
  S.input_ = in;
  Indexed ix = index_input(in);
  int n = static_cast<int>(in.darts.size());
  int nv = static_cast<int>(in.vertex_cycles.size());
  if (nv == 0) throw input_error("surface needs at least one vertex");

  // circular list per vertex cycle
  std::vector<int> nxt(n, -1), prv(n, -1);
  for (const auto& cyc : in.vertex_cycles) {
    if (cyc.empty()) {
      if (nv > 1) throw input_error("empty vertex cycle in a multi-vertex graph");
      continue;
    }
    int k = static_cast<int>(cyc.size());
    for (int i = 0; i < k; ++i) {
      int d = ix.id[cyc[i]], e = ix.id[cyc[(i + 1) % k]];
      nxt[d] = e;
      prv[e] = d;
    }
  }

  // BFS over vertices from the vertex holding dart 0; tree edges get contracted
  std::vector<char> seen(nv, 0);
  std::vector<std::pair<int, int>> tree;  // (dart at seen vertex, paired dart)
  if (n > 0) {
    std::queue<int> q;
    int v0 = ix.vertex_of[0];
    seen[v0] = 1;
    q.push(v0);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (const std::string& dn : in.vertex_cycles[u]) {
        int d = ix.id[dn], e = ix.pair[d];
        int v = ix.vertex_of[e];
        if (!seen[v]) {
          seen[v] = 1;
          tree.emplace_back(d, e);
          q.push(v);
        }
      }
    }
  } else if (nv == 1) {
    seen[0] = 1;
  }
  if (std::count(seen.begin(), seen.end(), 1) != nv)
    throw input_error("disconnected ribbon graph");

  // contract tree edges: splice the far cycle into the near one
  std::vector<char> gone(n, 0);
  for (auto [d, e] : tree) {
    int a = prv[d], b = nxt[d];  // around d
    int c = nxt[e], f = prv[e];  // around e
    gone[d] = gone[e] = 1;
    if (c == e) {  // far vertex was a single dart
      if (b == d) continue;      // near one too: edge vanishes
      nxt[a] = b;
      prv[b] = a;
    } else if (b == d) {         // near vertex was a single dart
      nxt[f] = c;
      prv[c] = f;
    } else {
      nxt[a] = c;
      prv[c] = a;
      nxt[f] = b;
      prv[b] = f;
    }
  }

  std::vector<int> rest;
  for (int i = 0; i < n; ++i)
    if (!gone[i]) rest.push_back(i);

  // letters for the surviving edges, ordered by least dart id
  std::vector<std::pair<int, int>> edges;  // (positive dart, negative dart)
  for (int d : rest)
    if (d < ix.pair[d]) edges.emplace_back(d, ix.pair[d]);
  std::sort(edges.begin(), edges.end());
  S.rank = static_cast<int>(edges.size());
  if (S.rank > std::numeric_limits<Letter>::max())
    throw resource_error("too many generators");
  std::vector<Letter> letter_of(n, 0);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    letter_of[edges[i].first] = static_cast<Letter>(i + 1);
    letter_of[edges[i].second] = static_cast<Letter>(-(static_cast<int>(i) + 1));
    S.gen_darts_.emplace_back(in.darts[edges[i].first], in.darts[edges[i].second]);
  }

  // read the single remaining cycle from the least surviving dart
  if (!rest.empty()) {
    int start = rest.front();
    int d = start;
    do {
      S.order_.push_back(letter_of[d]);
      d = nxt[d];
    } while (d != start && static_cast<int>(S.order_.size()) <= n);
    if (S.order_.size() != rest.size())
      throw invariant_error("contraction did not reach a single vertex");
  }

  S.pos_.assign(2 * S.rank, -1);
  for (std::size_t i = 0; i < S.order_.size(); ++i) {
    Letter x = S.order_[i];
    int a = std::abs(static_cast<int>(x));
    S.pos_[x > 0 ? a - 1 : S.rank + a - 1] = static_cast<int>(i);
  }

  // boundary cycles: next dart = predecessor-in-order of the paired dart
  int N = static_cast<int>(S.order_.size());
  std::vector<char> used(N, 0);
  for (int s = 0; s < N; ++s) {
    if (used[s]) continue;
    Word face;
    int i = s;
    while (!used[i]) {
      used[i] = 1;
      face.push_back(S.order_[i]);
      i = (S.position(inv(S.order_[i])) + N - 1) % N;
    }
    S.peripherals_.push_back(std::move(face));
  }
  if (N == 0) S.peripherals_.push_back(Word{});  // spine is a point: disc
  for (const Word& f : S.peripherals_)
    S.peripheral_cls_.push_back(canonical_cyclic(f));

  S.punctures = static_cast<int>(S.peripherals_.size());
  int two_g = 2 - S.punctures - (1 - S.rank);  // V - E = 2 - 2g - m with V = 1
  if (two_g < 0 || two_g % 2)
    throw invariant_error("inconsistent Euler characteristic");
  S.genus = two_g / 2;
  S.xi = 3 * S.genus - 3 + S.punctures;
  return S;
}

PuncturedSurface PuncturedSurface::one_vertex(const std::vector<std::string>& order_names) {
  RibbonData rd;
  rd.darts = order_names;
  rd.vertex_cycles = {order_names};
  for (const std::string& d : order_names) {
    if (d.size() != 1 || d[0] < 'a' || d[0] > 'z') continue;
    std::string up(1, static_cast<char>(d[0] - 'a' + 'A'));
    rd.pairing[d] = up;
  }
  if (2 * rd.pairing.size() != order_names.size())
    throw input_error("one_vertex wants darts named a..z with matching A..Z");
  return build(rd);
}

PuncturedSurface PuncturedSurface::catalog(const std::string& name) {
  if (name == "S_1_1") return one_vertex({"a", "b", "A", "B"});
  if (name == "S_0_3") return one_vertex({"a", "A", "b", "B"});
  if (name == "S_0_4") return one_vertex({"a", "A", "b", "B", "c", "C"});
  if (name == "S_0_5") return one_vertex({"a", "A", "b", "B", "c", "C", "d", "D"});
  if (name == "S_1_2") return one_vertex({"a", "b", "A", "B", "c", "C"});
  if (name == "S_2_1") return one_vertex({"a", "b", "A", "B", "c", "d", "C", "D"});
  throw input_error("unknown catalog surface: " + name);
}

PuncturedSurface PuncturedSurface::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw input_error(std::string("bad surface json: ") + e.what());
  }
  RibbonData rd;
  try {
    rd.darts = j.at("darts").get<std::vector<std::string>>();
    rd.vertex_cycles =
        j.at("vertex_cycles").get<std::vector<std::vector<std::string>>>();
    rd.pairing = j.at("pairing").get<std::map<std::string, std::string>>();
  } catch (const std::exception& e) {
    throw input_error(std::string("bad surface json: ") + e.what());
  }
  return build(rd);
}

PuncturedSurface PuncturedSurface::load(const std::string& spec) {
  if (spec.rfind("S_", 0) == 0 && !std::filesystem::exists(spec))
    return catalog(spec);
  std::ifstream f(spec);
  if (!f) throw input_error("cannot open surface file: " + spec);
  std::stringstream ss;
  ss << f.rdbuf();
  return from_json(ss.str());
}

std::string PuncturedSurface::to_json() const {
  nlohmann::json j;
  j["darts"] = input_.darts;
  j["vertex_cycles"] = input_.vertex_cycles;
  j["pairing"] = input_.pairing;
  j["g"] = genus;
  j["m"] = punctures;
  j["xi"] = xi;
  j["rank"] = rank;
  std::vector<std::string> per;
  for (const Word& w : peripherals_) per.push_back(print(w));
  j["peripherals"] = per;
  std::vector<std::vector<std::string>> gens;
  for (const auto& [p, q] : gen_darts_) gens.push_back({p, q});
  j["generators"] = gens;
  Word ord = order_;
  std::string os;
  for (Letter x : ord) os += print_word({x});
  j["order"] = os;
  return j.dump();
}

}  // namespace curvecx
