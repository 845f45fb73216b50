#include "hnfold/decomposition.hpp"

#include <algorithm>
#include <set>

#include "hnfold/error.hpp"

namespace hnfold {

SourceSinkReport find_sources_sinks(const Folding& f) {
  const LabeledDigraph& g = f.graph();
  const SccPartition parts = scc(g);
  SourceSinkReport report;
  for (VertexId v : g.vertices()) {
    const std::size_t in = g.in_degree(v);
    const std::size_t out = g.out_degree(v);
    if (in + out == 0) continue;
    const bool singleton = parts.components[parts.component_of.at(v)].size() == 1;
    if (singleton && in + out == 2 && in == 0) {
      report.sources.push_back(v);
    } else if (singleton && in + out == 2 && out == 0) {
      report.sinks.push_back(v);
    } else if (in == 0 || out == 0) {
      report.one_way.push_back(v);
    }
  }
  return report;
}

DecompositionResult trail_decomposition(const Folding& f) {
  if (f.is_trivial()) throw TrivialFolding();
  SourceSinkReport report = find_sources_sinks(f);
  if (!report.empty()) return NoDecomposition{std::move(report)};

  const LabeledDigraph& g = f.graph();
  const SccPartition parts = scc(g);

  std::vector<std::size_t> seeded;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto& members = parts.components[i];
    const VertexId v = members.front();
    const bool has_loop = std::any_of(
        g.out_edges(v).begin(), g.out_edges(v).end(),
        [&](EdgeId id) { return g.edge(id).is_loop(); });
    if (members.size() > 1 || has_loop) seeded.push_back(i);
  }
  const std::size_t base_part = parts.component_of.at(f.base());
  std::stable_partition(seeded.begin(), seeded.end(),
                        [&](std::size_t i) { return i == base_part; });
  if (seeded.empty()) {
    throw LogicError("source/sink-free folding without a directed cycle");
  }

  TrailDecomposition d;
  std::set<VertexId> covered_vertices;
  std::set<EdgeId> covered_edges;
  auto append = [&](Trail trail) {
    for (EdgeId id : trail.edges) {
      covered_edges.insert(id);
      covered_vertices.insert(g.edge(id).tail);
      covered_vertices.insert(g.edge(id).head);
    }
    d.trails.push_back(std::move(trail));
  };

  for (std::size_t i : seeded) {
    const LabeledDigraph part = parts.subgraph(g, i);
    const VertexId root = i == base_part ? f.base() : parts.components[i].front();
    if (d.trails.empty()) d.base = root;
    for (Trail& t : strong_trail_decomposition(part, root).trails) {
      append(std::move(t));
    }
  }

  for (EdgeId id : g.edge_ids()) {
    if (covered_edges.contains(id)) continue;
    const Edge& e = g.edge(id);
    std::set<VertexId> fresh;
    auto claim = [&](VertexId v) {
      if (!covered_vertices.contains(v) && !fresh.insert(v).second) {
        throw LogicError("attaching walk closed a cycle outside the covered part");
      }
    };
    claim(e.tail);
    if (e.head != e.tail) claim(e.head);

    std::vector<EdgeId> backward;
    for (VertexId at = e.tail; !covered_vertices.contains(at);) {
      if (g.in_edges(at).empty()) throw LogicError("backward walk stuck");
      const Edge& step = g.edge(g.in_edges(at).front());
      backward.push_back(step.id);
      at = step.tail;
      claim(at);
    }
    std::vector<EdgeId> forward;
    for (VertexId at = e.head; !covered_vertices.contains(at);) {
      if (g.out_edges(at).empty()) throw LogicError("forward walk stuck");
      const Edge& step = g.edge(g.out_edges(at).front());
      forward.push_back(step.id);
      at = step.head;
      claim(at);
    }

    Trail trail{std::vector<EdgeId>(backward.rbegin(), backward.rend())};
    trail.edges.push_back(id);
    trail.edges.insert(trail.edges.end(), forward.begin(), forward.end());
    append(std::move(trail));
  }
  return d;
}

std::optional<std::vector<Word>> positive_basis(const Folding& f) {
  const LabeledDigraph& g = f.graph();
  if (!is_strongly_connected(g)) return std::nullopt;
  std::vector<Word> basis;
  if (f.is_trivial()) return basis;

  const TrailDecomposition d = strong_trail_decomposition(g, f.base());
  basis.push_back(trail_word(f, d.trails.front()));
  for (std::size_t i = 1; i < d.trails.size(); ++i) {
    const Trail& p = d.trails[i];
    const LabeledDigraph before = prefix_union(g, d, i - 1);
    const auto lead = shortest_directed_path(before, f.base(), trail_start(g, p));
    const auto back = shortest_directed_path(before, trail_end(g, p), f.base());
    if (!lead || !back) {
      throw LogicError("prefix union of a strong decomposition is not strongly connected");
    }
    basis.push_back(concat(concat(trail_word(f, *lead), trail_word(f, p)),
                           trail_word(f, *back)));
  }
  return basis;
}

bool is_positively_generated(const Folding& f) {
  return is_strongly_connected(f.graph());
}

SubgroupPresentation apply_automorphism(const SubgroupPresentation& p,
                                        const std::map<int, Word>& images) {
  std::vector<Word> ordered;
  for (int i = 1; i <= p.alphabet.rank(); ++i) {
    auto it = images.find(i);
    if (it == images.end()) {
      throw AlphabetError("no image given for letter " +
                          std::string(1, letter_char(Letter::pos(i))));
    }
    if (it->second.alphabet() != p.alphabet) {
      throw AlphabetError("image alphabet differs from the presentation's");
    }
    ordered.push_back(it->second);
  }
  SubgroupPresentation out{p.alphabet, {}};
  for (const Word& w : p.generators) out.generators.push_back(substitute(w, ordered));
  return out;
}

}  // namespace hnfold
