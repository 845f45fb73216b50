#pragma once

// Hand-rolled random inputs for the property tests, plus glue between the
// library types and the plain structures in oracles.hpp.

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "hnfold/folding.hpp"
#include "hnfold/graph.hpp"
#include "hnfold/words.hpp"
#include "oracles.hpp"

namespace gen {

using Rng = std::mt19937_64;

inline std::size_t between(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

/// Reduced word of exactly `len` letters (positive letters only if asked).
inline std::string word(Rng& rng, int rank, std::size_t len, bool positive) {
  std::string w;
  while (w.size() < len) {
    const int i = static_cast<int>(between(rng, 0, static_cast<std::size_t>(rank) - 1));
    const bool neg = !positive && between(rng, 0, 1) == 1;
    const char c = static_cast<char>((neg ? 'A' : 'a') + i);
    if (!w.empty() && w.back() == oracle::inverse_char(c)) continue;
    w.push_back(c);
  }
  return w;
}

/// Generator strings with lengths in [min_len, max_len].
inline std::vector<std::string> words(Rng& rng, int rank, std::size_t count,
                                      std::size_t min_len, std::size_t max_len,
                                      bool positive) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(word(rng, rank, between(rng, min_len, max_len), positive));
  }
  return out;
}

inline hnfold::SubgroupPresentation presentation(int rank,
                                                 const std::vector<std::string>& gens) {
  hnfold::SubgroupPresentation p{hnfold::Alphabet(rank), {}};
  for (const auto& g : gens) p.generators.push_back(hnfold::parse_word(p.alphabet, g));
  return p;
}

/// Random presentation guaranteed to have at least one non-empty generator.
inline hnfold::SubgroupPresentation presentation(Rng& rng, int rank,
                                                 std::size_t max_gens,
                                                 std::size_t max_len, bool positive) {
  return presentation(rank, words(rng, rank, between(rng, 1, max_gens), 1, max_len, positive));
}

inline std::vector<std::string> strings(const hnfold::SubgroupPresentation& p) {
  std::vector<std::string> out;
  for (const auto& w : p.generators) out.push_back(hnfold::to_string(w));
  return out;
}

struct RandomGraph {
  std::size_t n = 0;
  std::vector<oracle::RawEdge> edges;  // vertices 0..n-1

  hnfold::LabeledDigraph build() const {
    hnfold::LabeledDigraph g;
    for (std::size_t v = 0; v < n; ++v) g.add_vertex(static_cast<hnfold::VertexId>(v + 1));
    for (const auto& e : edges) g.add_edge(e.tail + 1, e.head + 1, e.label);
    return g;
  }
};

/// Arbitrary multigraph with loops and parallel edges.
inline RandomGraph digraph(Rng& rng, std::size_t max_n, std::size_t max_m) {
  RandomGraph r;
  r.n = between(rng, 1, max_n);
  const std::size_t m = between(rng, 0, max_m);
  for (std::size_t i = 0; i < m; ++i) {
    r.edges.push_back({static_cast<std::uint32_t>(between(rng, 0, r.n - 1)),
                       static_cast<std::uint32_t>(between(rng, 0, r.n - 1)),
                       static_cast<int>(between(rng, 1, 2))});
  }
  return r;
}

/// Strongly connected: a Hamiltonian cycle in shuffled order plus extras.
inline RandomGraph strong_digraph(Rng& rng, std::size_t max_n, std::size_t max_extra) {
  RandomGraph r;
  r.n = between(rng, 1, max_n);
  std::vector<std::uint32_t> order(r.n);
  for (std::size_t i = 0; i < r.n; ++i) order[i] = static_cast<std::uint32_t>(i);
  std::shuffle(order.begin(), order.end(), rng);
  for (std::size_t i = 0; i < r.n; ++i) {
    r.edges.push_back({order[i], order[(i + 1) % r.n], static_cast<int>(between(rng, 1, 2))});
  }
  const std::size_t extra = between(rng, 0, max_extra);
  for (std::size_t i = 0; i < extra; ++i) {
    r.edges.push_back({static_cast<std::uint32_t>(between(rng, 0, r.n - 1)),
                       static_cast<std::uint32_t>(between(rng, 0, r.n - 1)),
                       static_cast<int>(between(rng, 1, 2))});
  }
  std::shuffle(r.edges.begin(), r.edges.end(), rng);
  return r;
}

inline oracle::Automaton automaton(const hnfold::Folding& f) {
  oracle::Automaton a;
  a.base = f.base();
  for (auto v : f.graph().vertices()) a.vertices.insert(v);
  for (const auto& e : f.graph().edges()) a.edges.push_back({e.tail, e.head, e.label});
  return a;
}

inline std::map<std::uint32_t, std::pair<std::uint32_t, std::uint32_t>> edge_map(
    const hnfold::LabeledDigraph& g) {
  std::map<std::uint32_t, std::pair<std::uint32_t, std::uint32_t>> m;
  for (const auto& e : g.edges()) m[e.id] = {e.tail, e.head};
  return m;
}

inline std::vector<std::vector<std::uint32_t>> trail_lists(const hnfold::TrailDecomposition& d) {
  std::vector<std::vector<std::uint32_t>> out;
  for (const auto& t : d.trails) out.push_back(t.edges);
  return out;
}

}  // namespace gen
