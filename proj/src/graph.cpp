#include "hnfold/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

#include "hnfold/error.hpp"

namespace hnfold {

namespace {

void insert_sorted(std::vector<EdgeId>& list, EdgeId e) {
  if (list.empty() || list.back() < e) {
    list.push_back(e);
  } else {
    list.insert(std::lower_bound(list.begin(), list.end(), e), e);
  }
}

std::string label_name(int label) {
  if (label >= 1 && label <= 26) return std::string(1, static_cast<char>('a' + label - 1));
  return "x" + std::to_string(label);
}

// Removes closed sub-walks so that every vertex is visited once, except that
// a closed walk stays closed. The walk may repeat edges.
Trail excise_loops(const LabeledDigraph& g, std::span<const EdgeId> walk) {
  const VertexId start = g.edge(walk.front()).tail;
  const bool closed = g.edge(walk.back()).head == start;
  const std::size_t body = closed ? walk.size() - 1 : walk.size();

  std::vector<EdgeId> path;
  std::map<VertexId, std::size_t> position{{start, 0}};
  for (std::size_t i = 0; i < body; ++i) {
    const Edge& e = g.edge(walk[i]);
    if (auto it = position.find(e.head); it != position.end()) {
      const std::size_t keep = it->second;
      for (std::size_t j = keep; j < path.size(); ++j) {
        position.erase(g.edge(path[j]).head);
      }
      path.resize(keep);
    } else {
      path.push_back(e.id);
      position[e.head] = path.size();
    }
  }
  if (closed) path.push_back(walk.back());
  return Trail{std::move(path)};
}

}  // namespace

// LabeledDigraph ------------------------------------------------------------

VertexId LabeledDigraph::add_vertex() {
  const VertexId id = adjacency_.empty() ? 1 : adjacency_.rbegin()->first + 1;
  adjacency_[id];
  return id;
}

void LabeledDigraph::add_vertex(VertexId id) { adjacency_[id]; }

EdgeId LabeledDigraph::add_edge(VertexId tail, VertexId head, int label) {
  const EdgeId id = edges_.empty() ? 1 : edges_.rbegin()->first + 1;
  add_edge(id, tail, head, label);
  return id;
}

void LabeledDigraph::add_edge(EdgeId id, VertexId tail, VertexId head,
                              int label) {
  if (edges_.contains(id)) {
    throw Error("duplicate edge id " + std::to_string(id));
  }
  if (!has_vertex(tail) || !has_vertex(head)) {
    throw Error("edge " + std::to_string(id) + " has an endpoint outside the graph");
  }
  if (label < 1) throw Error("edge labels must be positive letter indices");
  edges_.emplace(id, Edge{id, tail, head, label});
  insert_sorted(adjacency_[tail].out, id);
  insert_sorted(adjacency_[head].in, id);
}

const Edge& LabeledDigraph::edge(EdgeId e) const {
  auto it = edges_.find(e);
  if (it == edges_.end()) throw Error("no edge " + std::to_string(e));
  return it->second;
}

const LabeledDigraph::Adjacency& LabeledDigraph::adjacency(VertexId v) const {
  auto it = adjacency_.find(v);
  if (it == adjacency_.end()) throw Error("no vertex " + std::to_string(v));
  return it->second;
}

const std::vector<EdgeId>& LabeledDigraph::out_edges(VertexId v) const {
  return adjacency(v).out;
}

const std::vector<EdgeId>& LabeledDigraph::in_edges(VertexId v) const {
  return adjacency(v).in;
}

std::vector<VertexId> LabeledDigraph::vertices() const {
  std::vector<VertexId> out;
  out.reserve(adjacency_.size());
  for (const auto& [v, _] : adjacency_) out.push_back(v);
  return out;
}

std::vector<Edge> LabeledDigraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edges_.size());
  for (const auto& [_, e] : edges_) out.push_back(e);
  return out;
}

std::vector<EdgeId> LabeledDigraph::edge_ids() const {
  std::vector<EdgeId> out;
  out.reserve(edges_.size());
  for (const auto& [id, _] : edges_) out.push_back(id);
  return out;
}

LabeledDigraph LabeledDigraph::edge_subgraph(std::span<const EdgeId> ids) const {
  LabeledDigraph sub;
  for (EdgeId id : ids) {
    const Edge& e = edge(id);
    sub.add_vertex(e.tail);
    sub.add_vertex(e.head);
    sub.add_edge(e.id, e.tail, e.head, e.label);
  }
  return sub;
}

LabeledDigraph LabeledDigraph::induced_subgraph(
    std::span<const VertexId> vs) const {
  LabeledDigraph sub;
  for (VertexId v : vs) {
    adjacency(v);
    sub.add_vertex(v);
  }
  for (const auto& [id, e] : edges_) {
    if (sub.has_vertex(e.tail) && sub.has_vertex(e.head)) {
      sub.add_edge(id, e.tail, e.head, e.label);
    }
  }
  return sub;
}

// Trails --------------------------------------------------------------------

bool is_trail(const LabeledDigraph& g, const Trail& p) {
  if (p.edges.empty()) return false;
  std::set<EdgeId> seen;
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    if (!g.has_edge(p.edges[i]) || !seen.insert(p.edges[i]).second) return false;
    if (i > 0 && g.edge(p.edges[i]).tail != g.edge(p.edges[i - 1]).head) {
      return false;
    }
  }
  return true;
}

bool is_self_avoiding(const LabeledDigraph& g, const Trail& p) {
  if (!is_trail(g, p)) return false;
  std::set<VertexId> tails;
  std::set<VertexId> heads;
  for (EdgeId id : p.edges) {
    const Edge& e = g.edge(id);
    if (!tails.insert(e.tail).second || !heads.insert(e.head).second) {
      return false;
    }
  }
  return true;
}

VertexId trail_start(const LabeledDigraph& g, const Trail& p) {
  return g.edge(p.edges.front()).tail;
}

VertexId trail_end(const LabeledDigraph& g, const Trail& p) {
  return g.edge(p.edges.back()).head;
}

std::vector<VertexId> trail_vertices(const LabeledDigraph& g, const Trail& p) {
  std::vector<VertexId> vs;
  vs.reserve(p.edges.size() + 1);
  for (EdgeId id : p.edges) {
    vs.push_back(g.edge(id).tail);
    vs.push_back(g.edge(id).head);
  }
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

Trail make_self_avoiding(const LabeledDigraph& g, const Trail& p) {
  if (!is_trail(g, p)) throw Error("input is not a directed trail");
  return excise_loops(g, p.edges);
}

// Strong connectivity -------------------------------------------------------

SccPartition scc(const LabeledDigraph& g) {
  const std::vector<VertexId> vs = g.vertices();
  std::map<VertexId, std::size_t> slot;
  for (std::size_t i = 0; i < vs.size(); ++i) slot[vs[i]] = i;

  constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(vs.size(), kUnvisited);
  std::vector<std::size_t> low(vs.size(), 0);
  std::vector<bool> on_stack(vs.size(), false);
  std::vector<std::size_t> stack;
  std::vector<std::vector<VertexId>> components;
  std::size_t counter = 0;

  // Iterative Tarjan: frames hold (vertex slot, next out-edge position).
  std::vector<std::pair<std::size_t, std::size_t>> frames;
  for (std::size_t root = 0; root < vs.size(); ++root) {
    if (index[root] != kUnvisited) continue;
    frames.emplace_back(root, 0);
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;

    while (!frames.empty()) {
      auto& [u, next] = frames.back();
      const auto& out = g.out_edges(vs[u]);
      if (next < out.size()) {
        const std::size_t w = slot.at(g.edge(out[next++]).head);
        if (index[w] == kUnvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[u] = std::min(low[u], index[w]);
        }
        continue;
      }
      const std::size_t done = u;
      frames.pop_back();
      if (!frames.empty()) {
        const std::size_t parent = frames.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
      if (low[done] == index[done]) {
        std::vector<VertexId> component;
        std::size_t w = 0;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          component.push_back(vs[w]);
        } while (w != done);
        std::sort(component.begin(), component.end());
        components.push_back(std::move(component));
      }
    }
  }

  std::sort(components.begin(), components.end(),
            [](const auto& x, const auto& y) { return x.front() < y.front(); });
  SccPartition result;
  result.components = std::move(components);
  for (std::size_t i = 0; i < result.components.size(); ++i) {
    for (VertexId v : result.components[i]) result.component_of[v] = i;
  }
  return result;
}

bool is_strongly_connected(const LabeledDigraph& g) {
  return scc(g).size() <= 1;
}

std::optional<Trail> shortest_directed_path(const LabeledDigraph& g,
                                            VertexId from, VertexId to) {
  if (!g.has_vertex(from) || !g.has_vertex(to)) return std::nullopt;
  if (from == to) return Trail{};
  std::map<VertexId, EdgeId> parent;
  std::deque<VertexId> queue{from};
  std::set<VertexId> seen{from};
  while (!queue.empty()) {
    const VertexId u = queue.front();
    queue.pop_front();
    for (EdgeId id : g.out_edges(u)) {
      const VertexId h = g.edge(id).head;
      if (!seen.insert(h).second) continue;
      parent[h] = id;
      if (h == to) {
        std::vector<EdgeId> path;
        for (VertexId at = to; at != from; at = g.edge(parent.at(at)).tail) {
          path.push_back(parent.at(at));
        }
        std::reverse(path.begin(), path.end());
        return Trail{std::move(path)};
      }
      queue.push_back(h);
    }
  }
  return std::nullopt;
}

// Decompositions ------------------------------------------------------------

namespace {

// Shortest path that starts in `covered`, ends at `target` and whose other
// vertices are all outside `covered`.
std::vector<EdgeId> path_into(const LabeledDigraph& g,
                              const std::set<VertexId>& covered,
                              VertexId target) {
  std::map<VertexId, EdgeId> parent;
  std::deque<VertexId> queue(covered.begin(), covered.end());
  while (!queue.empty()) {
    const VertexId u = queue.front();
    queue.pop_front();
    for (EdgeId id : g.out_edges(u)) {
      const VertexId h = g.edge(id).head;
      if (covered.contains(h) || parent.contains(h)) continue;
      parent[h] = id;
      if (h == target) {
        std::vector<EdgeId> path;
        for (VertexId at = target; !covered.contains(at);
             at = g.edge(parent.at(at)).tail) {
          path.push_back(parent.at(at));
        }
        std::reverse(path.begin(), path.end());
        return path;
      }
      queue.push_back(h);
    }
  }
  throw LogicError("no path into vertex " + std::to_string(target));
}

// Shortest path from `source` (not covered) to the first covered vertex, with
// all intermediate vertices outside `covered`.
std::vector<EdgeId> path_out_of(const LabeledDigraph& g,
                                const std::set<VertexId>& covered,
                                VertexId source) {
  std::map<VertexId, EdgeId> parent;
  std::set<VertexId> seen{source};
  std::deque<VertexId> queue{source};
  auto unwind = [&](EdgeId last) {
    std::vector<EdgeId> path{last};
    for (VertexId at = g.edge(last).tail; at != source;
         at = g.edge(parent.at(at)).tail) {
      path.push_back(parent.at(at));
    }
    std::reverse(path.begin(), path.end());
    return path;
  };
  while (!queue.empty()) {
    const VertexId u = queue.front();
    queue.pop_front();
    for (EdgeId id : g.out_edges(u)) {
      const VertexId h = g.edge(id).head;
      if (covered.contains(h)) return unwind(id);
      if (!seen.insert(h).second) continue;
      parent[h] = id;
      queue.push_back(h);
    }
  }
  throw LogicError("no path out of vertex " + std::to_string(source));
}

}  // namespace

TrailDecomposition strong_trail_decomposition(const LabeledDigraph& g,
                                              VertexId base) {
  if (!g.has_vertex(base)) {
    throw Error("base " + std::to_string(base) + " is not a vertex");
  }
  if (g.edge_count() == 0) throw Error("graph has no edges to decompose");
  if (!is_strongly_connected(g)) throw NotStronglyConnected();

  TrailDecomposition d{base, {}};
  std::set<VertexId> covered_vertices{base};
  std::set<EdgeId> covered_edges;
  auto append = [&](Trail trail) {
    for (EdgeId id : trail.edges) {
      covered_edges.insert(id);
      covered_vertices.insert(g.edge(id).tail);
      covered_vertices.insert(g.edge(id).head);
    }
    d.trails.push_back(std::move(trail));
  };

  // Grow the covered vertex set by paths attached at their two ends.
  const std::vector<VertexId> all = g.vertices();
  for (VertexId v : all) {
    // Each pass covers at least one new vertex, though not always v itself.
    while (!covered_vertices.contains(v)) {
      std::vector<EdgeId> walk = path_into(g, covered_vertices, v);
      const std::vector<EdgeId> back = path_out_of(g, covered_vertices, v);
      walk.insert(walk.end(), back.begin(), back.end());
      // The two halves may cross outside the covered set; excising the
      // crossings keeps both attachment points.
      append(excise_loops(g, walk));
    }
  }

  // Every vertex is covered; leftover edges become single-edge trails.
  for (EdgeId id : g.edge_ids()) {
    if (!covered_edges.contains(id)) append(Trail{{id}});
  }
  return d;
}

bool verify_decomposition(const LabeledDigraph& g, const TrailDecomposition& d,
                          bool strong) {
  if (d.trails.empty()) return false;
  std::set<EdgeId> used;
  for (const Trail& p : d.trails) {
    if (!is_trail(g, p)) return false;
    for (EdgeId id : p.edges) {
      if (!used.insert(id).second) return false;
    }
  }
  if (used.size() != g.edge_count()) return false;

  const Trail& first = d.trails.front();
  if (trail_start(g, first) != d.base || trail_end(g, first) != d.base) {
    return false;
  }

  std::vector<VertexId> earlier = trail_vertices(g, first);
  for (std::size_t i = 1; i < d.trails.size(); ++i) {
    const Trail& p = d.trails[i];
    const std::vector<VertexId> own = trail_vertices(g, p);
    std::vector<VertexId> meet;
    std::set_intersection(own.begin(), own.end(), earlier.begin(),
                          earlier.end(), std::back_inserter(meet));
    const VertexId s = trail_start(g, p);
    const VertexId t = trail_end(g, p);
    if (!meet.empty()) {
      std::vector<VertexId> ends{std::min(s, t), std::max(s, t)};
      ends.erase(std::unique(ends.begin(), ends.end()), ends.end());
      if (meet != ends) return false;
    } else {
      if (strong || s != t) return false;
    }
    std::vector<VertexId> merged;
    std::set_union(earlier.begin(), earlier.end(), own.begin(), own.end(),
                   std::back_inserter(merged));
    earlier = std::move(merged);
  }
  return true;
}

LabeledDigraph prefix_union(const LabeledDigraph& g,
                            const TrailDecomposition& d, std::size_t i) {
  if (i >= d.trails.size()) {
    throw std::out_of_range("prefix index " + std::to_string(i) +
                            " past the last of " +
                            std::to_string(d.trails.size()) + " trails");
  }
  std::vector<EdgeId> ids;
  for (std::size_t j = 0; j <= i; ++j) {
    ids.insert(ids.end(), d.trails[j].edges.begin(), d.trails[j].edges.end());
  }
  return g.edge_subgraph(ids);
}

std::string to_dot(const LabeledDigraph& g, std::optional<VertexId> base,
                   const std::string& name) {
  std::ostringstream out;
  out << "digraph " << name << " {\n";
  out << "  node [shape=circle];\n";
  for (VertexId v : g.vertices()) {
    out << "  " << v;
    if (base && *base == v) out << " [shape=doublecircle]";
    out << ";\n";
  }
  for (const Edge& e : g.edges()) {
    out << "  " << e.tail << " -> " << e.head << " [label=\""
        << label_name(e.label) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace hnfold
