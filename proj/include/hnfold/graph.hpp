#pragma once

// Edge-labeled directed multigraphs with directed trails, strongly connected
// components and directed trail decompositions.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hnfold {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

struct Edge {
  EdgeId id = 0;
  VertexId tail = 0;
  VertexId head = 0;
  int label = 1;  // positive letter index

  bool is_loop() const noexcept { return tail == head; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Loops and parallel edges are allowed. Vertex and edge ids are stable and
/// need not be contiguous; automatic ids start at 1.
class LabeledDigraph {
 public:
  VertexId add_vertex();
  /// No-op if the vertex already exists.
  void add_vertex(VertexId id);

  EdgeId add_edge(VertexId tail, VertexId head, int label);
  void add_edge(EdgeId id, VertexId tail, VertexId head, int label);

  bool has_vertex(VertexId v) const { return adjacency_.contains(v); }
  bool has_edge(EdgeId e) const { return edges_.contains(e); }
  const Edge& edge(EdgeId e) const;

  std::vector<VertexId> vertices() const;
  std::vector<Edge> edges() const;
  std::vector<EdgeId> edge_ids() const;

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  /// Sorted by edge id.
  const std::vector<EdgeId>& out_edges(VertexId v) const;
  const std::vector<EdgeId>& in_edges(VertexId v) const;

  std::size_t out_degree(VertexId v) const { return out_edges(v).size(); }
  std::size_t in_degree(VertexId v) const { return in_edges(v).size(); }
  /// Undirected degree; a loop counts twice.
  std::size_t degree(VertexId v) const { return out_degree(v) + in_degree(v); }

  /// Edges keep their ids; the vertex set is the set of their endpoints.
  LabeledDigraph edge_subgraph(std::span<const EdgeId> edges) const;
  LabeledDigraph induced_subgraph(std::span<const VertexId> vertices) const;

  friend bool operator==(const LabeledDigraph&, const LabeledDigraph&) = default;

 private:
  struct Adjacency {
    std::vector<EdgeId> out;
    std::vector<EdgeId> in;
    friend bool operator==(const Adjacency&, const Adjacency&) = default;
  };

  const Adjacency& adjacency(VertexId v) const;

  std::map<VertexId, Adjacency> adjacency_;
  std::map<EdgeId, Edge> edges_;
};

/// A non-empty sequence of distinct chained edges.
struct Trail {
  std::vector<EdgeId> edges;
  friend bool operator==(const Trail&, const Trail&) = default;
};

bool is_trail(const LabeledDigraph& g, const Trail& p);
bool is_self_avoiding(const LabeledDigraph& g, const Trail& p);
VertexId trail_start(const LabeledDigraph& g, const Trail& p);
VertexId trail_end(const LabeledDigraph& g, const Trail& p);
/// Sorted, without duplicates.
std::vector<VertexId> trail_vertices(const LabeledDigraph& g, const Trail& p);

/// Shortens a trail to a self-avoiding one with the same start and end that
/// only uses edges of the input. Throws Error if `p` is not a trail.
Trail make_self_avoiding(const LabeledDigraph& g, const Trail& p);

struct TrailDecomposition {
  VertexId base = 0;
  std::vector<Trail> trails;
  friend bool operator==(const TrailDecomposition&,
                         const TrailDecomposition&) = default;
};

struct SccPartition {
  /// Each component sorted; components ordered by smallest vertex id.
  std::vector<std::vector<VertexId>> components;
  std::map<VertexId, std::size_t> component_of;

  std::size_t size() const noexcept { return components.size(); }
  LabeledDigraph subgraph(const LabeledDigraph& g, std::size_t i) const {
    return g.induced_subgraph(components.at(i));
  }
};

SccPartition scc(const LabeledDigraph& g);
bool is_strongly_connected(const LabeledDigraph& g);

/// Shortest directed path from `from` to `to` using edges of `g` only, lowest
/// edge id first among equal lengths. Empty when from == to.
std::optional<Trail> shortest_directed_path(const LabeledDigraph& g,
                                            VertexId from, VertexId to);

/// Strong decomposition into self-avoiding trails rooted at `base`, built by
/// growing the covered vertex set one attached path at a time and then adding
/// leftover edges singly. Every prefix union is strongly connected.
///
/// Throws NotStronglyConnected, or Error if `g` has no edges or `base` is not
/// a vertex.
TrailDecomposition strong_trail_decomposition(const LabeledDigraph& g,
                                              VertexId base);

/// Checks the decomposition conditions literally: the trails partition the
/// edges, the first trail is closed at `d.base`, and each later trail meets
/// its predecessors in exactly its two endpoints or else is closed and
/// disjoint from them. With `strong`, disjoint later trails are rejected.
bool verify_decomposition(const LabeledDigraph& g, const TrailDecomposition& d,
                          bool strong);

/// Union of trails 0..i. Throws std::out_of_range.
LabeledDigraph prefix_union(const LabeledDigraph& g,
                            const TrailDecomposition& d, std::size_t i);

/// Graphviz text. Labels print as letters; `base` is double-circled.
std::string to_dot(const LabeledDigraph& g, std::optional<VertexId> base,
                   const std::string& name = "G");

}  // namespace hnfold
