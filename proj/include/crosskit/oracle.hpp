#pragma once

#include <algorithm>
#include <atomic>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <json.hpp>

#include "crosskit/error.hpp"
#include "crosskit/graph.hpp"

namespace crosskit {

// Unlabeled simple graph; what a planarization produces.
struct PlainGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
};

namespace detail {

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                         boost::property<boost::vertex_index_t, int>,
                                         boost::property<boost::edge_index_t, int>>;

inline BoostGraph to_boost(const PlainGraph& p) {
  BoostGraph g(p.n);
  int i = 0;
  for (auto [a, b] : p.edges) boost::add_edge(a, b, i++, g);
  return g;
}

}  // namespace detail

inline bool is_planar(const PlainGraph& p) {
  // Cheap edge-count reject before the real test.
  if (p.n >= 3 && static_cast<long>(p.edges.size()) > 3L * p.n - 6) return false;
  auto g = detail::to_boost(p);
  return boost::boyer_myrvold_planarity_test(g);
}

inline PlainGraph plain(const Graph& g) {
  PlainGraph p{g.num_vertices(), {}};
  for (auto e : g.edges()) p.edges.push_back(e);
  return p;
}

inline bool planarity(const Graph& g) { return is_planar(plain(g)); }

// Crossing i is pairs[i]. orderings[e] lists the crossings on edge e from its
// first endpoint; it may be omitted for edges with fewer than two.
struct PlanarizationSelection {
  std::vector<std::pair<int, int>> pairs;
  std::map<int, std::vector<int>> orderings;
};

inline void check_selection(const Graph& g, const PlanarizationSelection& s) {
  std::set<std::pair<int, int>> seen;
  std::map<int, std::vector<int>> on_edge;
  for (std::size_t i = 0; i < s.pairs.size(); ++i) {
    auto [e, f] = s.pairs[i];
    if (e < 0 || f < 0 || e >= g.num_edges() || f >= g.num_edges()) fail("UNKNOWN_EDGE", "pair " + std::to_string(i));
    if (e == f || g.share_endpoint(e, f)) fail("ADJACENT_PAIR", "edges " + std::to_string(e) + " and " + std::to_string(f));
    if (!seen.insert({std::min(e, f), std::max(e, f)}).second)
      fail("DUPLICATE_PAIR", "edges " + std::to_string(e) + " and " + std::to_string(f));
    on_edge[e].push_back(static_cast<int>(i));
    on_edge[f].push_back(static_cast<int>(i));
  }
  for (auto& [e, o] : s.orderings) {
    auto want = on_edge.count(e) ? on_edge[e] : std::vector<int>{};
    auto got = o;
    std::sort(got.begin(), got.end());
    if (got != want) fail("SCHEMA_ERROR", "ordering of edge " + std::to_string(e) + " does not list its crossings");
  }
  for (auto& [e, cs] : on_edge)
    if (cs.size() > 1 && !s.orderings.count(e)) fail("SCHEMA_ERROR", "edge " + std::to_string(e) + " needs an ordering");
}

// Every selected crossing becomes a degree-4 vertex n + i.
inline PlainGraph planarize(const Graph& g, const PlanarizationSelection& s) {
  check_selection(g, s);
  PlainGraph p{g.num_vertices() + static_cast<int>(s.pairs.size()), {}};
  std::vector<std::vector<int>> along(g.num_edges());
  for (std::size_t i = 0; i < s.pairs.size(); ++i) {
    along[s.pairs[i].first].push_back(static_cast<int>(i));
    along[s.pairs[i].second].push_back(static_cast<int>(i));
  }
  for (auto& [e, o] : s.orderings) along[e] = o;
  for (int e = 0; e < g.num_edges(); ++e) {
    int prev = g.edge(e).first;
    for (int c : along[e]) {
      p.edges.emplace_back(prev, g.num_vertices() + c);
      prev = g.num_vertices() + c;
    }
    p.edges.emplace_back(prev, g.edge(e).second);
  }
  return p;
}

// Second opinion on planarity: ask for an embedding, walk its faces and
// check Euler's formula on every component.
inline bool embedding_passes_euler(const PlainGraph& p) {
  auto g = detail::to_boost(p);
  using Emb = std::vector<std::vector<boost::graph_traits<detail::BoostGraph>::edge_descriptor>>;
  Emb emb(p.n);
  if (!boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = g,
                                           boost::boyer_myrvold_params::embedding = &emb[0]))
    return false;
  // rot[v] = neighbor order (edge ids) around v.
  std::vector<std::vector<int>> rot(p.n);
  auto eid = boost::get(boost::edge_index, g);
  for (int v = 0; v < p.n; ++v)
    for (auto e : emb[v]) rot[v].push_back(eid[e]);
  auto other = [&](int e, int v) { return p.edges[e].first == v ? p.edges[e].second : p.edges[e].first; };
  // Dart (v, j): leaving v along rot[v][j].
  std::vector<std::vector<char>> used(p.n);
  for (int v = 0; v < p.n; ++v) used[v].assign(rot[v].size(), 0);
  std::vector<int> comp(p.n, -1);
  int ncomp = 0;
  for (int s = 0; s < p.n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> st{s};
    comp[s] = ncomp;
    while (!st.empty()) {
      int v = st.back();
      st.pop_back();
      for (int e : rot[v])
        if (int w = other(e, v); comp[w] < 0) comp[w] = ncomp, st.push_back(w);
    }
    ++ncomp;
  }
  std::vector<long> V(ncomp), E(ncomp), F(ncomp);
  for (int v = 0; v < p.n; ++v) ++V[comp[v]], E[comp[v]] += static_cast<long>(rot[v].size());
  for (int v = 0; v < p.n; ++v)
    for (std::size_t j = 0; j < rot[v].size(); ++j) {
      if (used[v][j]) continue;
      ++F[comp[v]];
      int a = v, k = static_cast<int>(j);
      while (!used[a][k]) {
        used[a][k] = 1;
        int e = rot[a][k], b = other(e, a);
        auto it = std::find(rot[b].begin(), rot[b].end(), e);
        int pos = static_cast<int>(it - rot[b].begin());
        a = b;
        k = (pos + 1) % static_cast<int>(rot[b].size());
      }
    }
  for (int c = 0; c < ncomp; ++c) {
    long f = std::max(F[c], 1L);
    if (V[c] - E[c] / 2 + f != 2) return false;
  }
  return true;
}

inline bool verify_witness(const Graph& g, const PlanarizationSelection& s) {
  try {
    return embedding_passes_euler(planarize(g, s));
  } catch (const Error&) {
    return false;
  }
}

inline nlohmann::ordered_json witness_json(const PlanarizationSelection& s) {
  nlohmann::ordered_json j;
  j["k"] = s.pairs.size();
  j["pairs"] = nlohmann::ordered_json::array();
  for (auto [e, f] : s.pairs) j["pairs"].push_back({e, f});
  j["orderings"] = nlohmann::ordered_json::object();
  for (auto& [e, o] : s.orderings) {
    auto& arr = j["orderings"][std::to_string(e)] = nlohmann::ordered_json::array();
    for (int c : o) arr.push_back("c" + std::to_string(c + 1));
  }
  return j;
}

inline PlanarizationSelection witness_from_json(const nlohmann::json& j) {
  PlanarizationSelection s;
  try {
    for (auto& p : j.at("pairs")) s.pairs.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
    if (j.contains("orderings"))
      for (auto& [key, arr] : j.at("orderings").items()) {
        std::vector<int> o;
        for (auto& c : arr) {
          auto t = c.get<std::string>();
          if (t.size() < 2 || t[0] != 'c') fail("SCHEMA_ERROR", "crossing id " + t);
          o.push_back(std::stoi(t.substr(1)) - 1);
        }
        s.orderings[std::stoi(key)] = o;
      }
    if (j.contains("k") && j.at("k").get<std::size_t>() != s.pairs.size()) fail("SCHEMA_ERROR", "k disagrees with pairs");
  } catch (const nlohmann::json::exception& e) {
    fail("SCHEMA_ERROR", e.what());
  } catch (const std::invalid_argument& e) {
    fail("SCHEMA_ERROR", e.what());
  }
  return s;
}

// ---------------------------------------------------------------------------
// search

struct OracleResult {
  bool exact = false;
  int value = -1;     // when exact
  int at_least = 0;   // proven lower bound
  std::optional<PlanarizationSelection> witness;
  long long planarity_tests = 0;
};

namespace detail {

// Generators of the part-structure symmetry of a complete multipartite
// graph: swaps inside a part and swaps of equal-sized parts. Other graphs
// get the trivial group.
inline std::vector<std::vector<int>> symmetry_generators(const Graph& g) {
  std::vector<std::vector<int>> gens;
  if (!g.is_complete_multipartite()) return gens;
  const int n = g.num_vertices();
  std::vector<int> id(n);
  for (int i = 0; i < n; ++i) id[i] = i;
  const auto& parts = g.parts();
  for (auto& p : parts)
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      auto s = id;
      std::swap(s[p[i]], s[p[i + 1]]);
      gens.push_back(s);
    }
  for (std::size_t a = 0; a + 1 < parts.size(); ++a)
    if (parts[a].size() == parts[a + 1].size()) {
      auto s = id;
      for (std::size_t i = 0; i < parts[a].size(); ++i) std::swap(s[parts[a][i]], s[parts[a + 1][i]]);
      gens.push_back(s);
    }
  return gens;
}

struct PairSpace {
  std::vector<std::pair<int, int>> pairs;  // all independent pairs, lexicographic
  std::vector<int> orbit;                  // orbit index per pair, numbered by first member
  std::vector<int> reps;                   // first pair of each orbit
};

inline PairSpace pair_space(const Graph& g) {
  PairSpace ps;
  const int m = g.num_edges();
  std::map<std::pair<int, int>, int> index;
  for (int e = 0; e < m; ++e)
    for (int f = e + 1; f < m; ++f)
      if (!g.share_endpoint(e, f)) {
        index[{e, f}] = static_cast<int>(ps.pairs.size());
        ps.pairs.emplace_back(e, f);
      }
  auto gens = symmetry_generators(g);
  auto image = [&](const std::vector<int>& s, int e) {
    auto [a, b] = g.edge(e);
    return *g.edge_index(s[a], s[b]);
  };
  ps.orbit.assign(ps.pairs.size(), -1);
  for (std::size_t i = 0; i < ps.pairs.size(); ++i) {
    if (ps.orbit[i] >= 0) continue;
    int o = static_cast<int>(ps.reps.size());
    ps.reps.push_back(static_cast<int>(i));
    std::vector<int> st{static_cast<int>(i)};
    ps.orbit[i] = o;
    while (!st.empty()) {
      auto [e, f] = ps.pairs[st.back()];
      st.pop_back();
      for (auto& s : gens) {
        int a = image(s, e), b = image(s, f);
        int j = index.at({std::min(a, b), std::max(a, b)});
        if (ps.orbit[j] < 0) ps.orbit[j] = o, st.push_back(j);
      }
    }
  }
  return ps;
}

// A good drawing whose crossings are exactly `chosen` stays planar after
// deleting one edge from each pair; test all such deletions.
inline bool some_deletion_planar(const Graph& g, const std::vector<std::pair<int, int>>& chosen, long long& tests) {
  const int k = static_cast<int>(chosen.size());
  std::set<std::vector<int>> tried;
  for (int mask = 0; mask < (1 << k); ++mask) {
    std::vector<int> del;
    for (int i = 0; i < k; ++i) del.push_back(mask >> i & 1 ? chosen[i].second : chosen[i].first);
    std::sort(del.begin(), del.end());
    del.erase(std::unique(del.begin(), del.end()), del.end());
    if (!tried.insert(del).second) continue;
    PlainGraph p{g.num_vertices(), {}};
    for (int e = 0; e < g.num_edges(); ++e)
      if (!std::binary_search(del.begin(), del.end(), e)) p.edges.push_back(g.edge(e));
    ++tests;
    if (is_planar(p)) return true;
  }
  return false;
}

// Tries every ordering of the crossings along each edge.
inline std::optional<PlanarizationSelection> try_orderings(const Graph& g, const std::vector<std::pair<int, int>>& chosen,
                                                           long long& tests) {
  PlanarizationSelection s;
  s.pairs = chosen;
  std::map<int, std::vector<int>> on_edge;
  for (std::size_t i = 0; i < chosen.size(); ++i) {
    on_edge[chosen[i].first].push_back(static_cast<int>(i));
    on_edge[chosen[i].second].push_back(static_cast<int>(i));
  }
  std::vector<int> multi;
  for (auto& [e, cs] : on_edge)
    if (cs.size() > 1) {
      multi.push_back(e);
      s.orderings[e] = cs;
    }
  // Odometer over the permutations of each multi-crossed edge.
  while (true) {
    ++tests;
    if (is_planar(planarize(g, s))) return s;
    std::size_t i = 0;
    for (; i < multi.size(); ++i) {
      auto& o = s.orderings[multi[i]];
      if (std::next_permutation(o.begin(), o.end())) break;
    }
    if (i == multi.size()) return std::nullopt;
  }
}

// Unit j: selections containing the representative of orbit j whose other
// pairs all come from orbits j or later. Every selection is equivalent under
// the symmetry to one in the unit of its smallest orbit.
inline std::optional<PlanarizationSelection> search_unit(const Graph& g, const PairSpace& ps, int j, int k,
                                                         const std::atomic<int>& best_unit, long long& tests) {
  const int rep = ps.reps[j];
  std::vector<int> pool;
  for (std::size_t i = 0; i < ps.pairs.size(); ++i)
    if (static_cast<int>(i) != rep && ps.orbit[i] >= j) pool.push_back(static_cast<int>(i));
  const int r = k - 1;
  if (r > static_cast<int>(pool.size())) return std::nullopt;
  std::vector<int> idx(r);
  for (int i = 0; i < r; ++i) idx[i] = i;
  while (true) {
    if (best_unit.load() < j) return std::nullopt;
    std::vector<std::pair<int, int>> chosen{ps.pairs[rep]};
    for (int i : idx) chosen.push_back(ps.pairs[pool[i]]);
    std::sort(chosen.begin(), chosen.end());
    if (some_deletion_planar(g, chosen, tests))
      if (auto w = try_orderings(g, chosen, tests)) return w;
    int i = r - 1;
    while (i >= 0 && idx[i] == static_cast<int>(pool.size()) - r + i) --i;
    if (i < 0) return std::nullopt;
    ++idx[i];
    for (int t = i + 1; t < r; ++t) idx[t] = idx[t - 1] + 1;
  }
}

}  // namespace detail

// Iterative deepening over the number of crossings. The answer and its
// witness do not depend on `jobs`: among the units that succeed at the
// least k, the lowest-numbered one supplies the witness.
inline OracleResult exact_crossing_number(const Graph& g, int k_max, int jobs = 1) {
  if (k_max < 0) fail("INVALID_ARGUMENT", "k_max must be >= 0");
  OracleResult res;
  if (planarity(g)) {
    res.exact = true;
    res.value = 0;
    res.witness = PlanarizationSelection{};
    res.planarity_tests = 1;
    return res;
  }
  res.planarity_tests = 1;
  res.at_least = 1;
  auto ps = detail::pair_space(g);
  const int units = static_cast<int>(ps.reps.size());
  jobs = std::max(1, jobs);
  for (int k = 1; k <= k_max; ++k) {
    std::vector<std::optional<PlanarizationSelection>> found(units);
    std::vector<long long> tests(units, 0);
    std::atomic<int> next{0}, best{units};
    auto worker = [&] {
      for (int j; (j = next.fetch_add(1)) < units;) {
        if (best.load() < j) continue;
        found[j] = detail::search_unit(g, ps, j, k, best, tests[j]);
        if (found[j]) {
          int b = best.load();
          while (j < b && !best.compare_exchange_weak(b, j)) {
          }
        }
      }
    };
    if (jobs == 1 || units == 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (int t = 0; t < std::min(jobs, units); ++t) pool.emplace_back(worker);
      for (auto& t : pool) t.join();
    }
    for (auto t : tests) res.planarity_tests += t;
    if (best.load() < units) {
      res.exact = true;
      res.value = k;
      res.at_least = k;
      res.witness = found[best.load()];
      return res;
    }
    res.at_least = k + 1;
  }
  return res;
}

}  // namespace crosskit
