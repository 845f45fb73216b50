#include "hnfold/folding.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "hnfold/error.hpp"

namespace hnfold {

namespace {

bool undirected_connected(const LabeledDigraph& g) {
  const auto vs = g.vertices();
  if (vs.empty()) return false;
  std::set<VertexId> seen{vs.front()};
  std::deque<VertexId> queue{vs.front()};
  while (!queue.empty()) {
    const VertexId u = queue.front();
    queue.pop_front();
    auto visit = [&](VertexId w) {
      if (seen.insert(w).second) queue.push_back(w);
    };
    for (EdgeId e : g.out_edges(u)) visit(g.edge(e).head);
    for (EdgeId e : g.in_edges(u)) visit(g.edge(e).tail);
  }
  return seen.size() == vs.size();
}

// Renumbers a folded graph: base becomes 1, vertices follow in breadth-first
// order (outgoing edges by label, then incoming edges by label), and edges
// are numbered by (tail, label).
Folding canonicalize(const LabeledDigraph& g, VertexId base, Alphabet alphabet) {
  std::map<VertexId, VertexId> renumber{{base, 1}};
  std::deque<VertexId> queue{base};
  while (!queue.empty()) {
    const VertexId u = queue.front();
    queue.pop_front();
    std::vector<std::pair<int, VertexId>> outs;
    std::vector<std::pair<int, VertexId>> ins;
    for (EdgeId e : g.out_edges(u)) outs.emplace_back(g.edge(e).label, g.edge(e).head);
    for (EdgeId e : g.in_edges(u)) ins.emplace_back(g.edge(e).label, g.edge(e).tail);
    std::sort(outs.begin(), outs.end());
    std::sort(ins.begin(), ins.end());
    for (const auto* side : {&outs, &ins}) {
      for (const auto& [label, w] : *side) {
        if (!renumber.contains(w)) {
          const auto next = static_cast<VertexId>(renumber.size() + 1);
          renumber.emplace(w, next);
          queue.push_back(w);
        }
      }
    }
  }

  struct Renamed {
    VertexId tail;
    int label;
    VertexId head;
    auto operator<=>(const Renamed&) const = default;
  };
  std::vector<Renamed> edges;
  for (const Edge& e : g.edges()) {
    edges.push_back({renumber.at(e.tail), e.label, renumber.at(e.head)});
  }
  std::sort(edges.begin(), edges.end());

  LabeledDigraph out;
  for (VertexId v = 1; v <= renumber.size(); ++v) out.add_vertex(v);
  for (const Renamed& e : edges) out.add_edge(e.tail, e.head, e.label);
  return Folding(std::move(out), 1, alphabet);
}

// Union-find over the rose's vertices with per-class incidence lists.
class FoldState {
 public:
  struct WorkEdge {
    std::size_t tail;
    std::size_t head;
    int label;
    bool alive;
  };

  FoldState(const LabeledDigraph& g, VertexId base,
            std::optional<std::uint64_t> seed)
      : ids_(g.vertices()) {
    std::map<VertexId, std::size_t> slot;
    for (std::size_t i = 0; i < ids_.size(); ++i) slot[ids_[i]] = i;
    parent_.resize(ids_.size());
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    size_.assign(ids_.size(), 1);
    out_.resize(ids_.size());
    in_.resize(ids_.size());
    for (const Edge& e : g.edges()) {
      const std::size_t t = slot.at(e.tail);
      const std::size_t h = slot.at(e.head);
      out_[t].push_back(edges_.size());
      in_[h].push_back(edges_.size());
      edges_.push_back({t, h, e.label, true});
    }
    base_ = slot.at(base);
    if (seed) rng_.emplace(*seed);
  }

  void run() {
    std::vector<std::size_t> work(ids_.size());
    std::iota(work.begin(), work.end(), std::size_t{0});
    std::reverse(work.begin(), work.end());
    while (!work.empty()) {
      std::size_t pick = work.size() - 1;
      if (rng_) {
        pick = std::uniform_int_distribution<std::size_t>(0, work.size() - 1)(*rng_);
      }
      std::swap(work[pick], work.back());
      std::size_t v = find(work.back());
      work.pop_back();
      while (auto merged = fold_once(v)) {
        work.push_back(*merged);
        v = find(v);
      }
    }
  }

  void trim() {
    removed_.assign(ids_.size(), false);
    std::vector<std::size_t> degree(ids_.size(), 0);
    for (const WorkEdge& e : edges_) {
      if (!e.alive) continue;
      ++degree[find(e.tail)];
      ++degree[find(e.head)];
    }
    const std::size_t base = find(base_);
    std::vector<std::size_t> queue;
    for (std::size_t v = 0; v < ids_.size(); ++v) {
      if (find(v) == v && v != base && degree[v] <= 1) queue.push_back(v);
    }
    while (!queue.empty()) {
      const std::size_t v = queue.back();
      queue.pop_back();
      if (removed_[v]) continue;
      removed_[v] = true;
      for (const auto* list : {&out_[v], &in_[v]}) {
        for (std::size_t id : *list) {
          WorkEdge& e = edges_[id];
          if (!e.alive) continue;
          e.alive = false;
          const std::size_t other = find(e.tail) == v ? find(e.head) : find(e.tail);
          if (--degree[other] <= 1 && other != base) queue.push_back(other);
        }
      }
    }
  }

  LabeledDigraph graph() {
    LabeledDigraph g;
    for (std::size_t v = 0; v < ids_.size(); ++v) {
      if (find(v) == v && !removed_[v]) g.add_vertex(ids_[v]);
    }
    for (const WorkEdge& e : edges_) {
      if (e.alive) g.add_edge(ids_[find(e.tail)], ids_[find(e.head)], e.label);
    }
    return g;
  }

  VertexId base_id() { return ids_[find(base_)]; }

 private:
  std::size_t find(std::size_t v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  std::size_t unite(std::size_t a, std::size_t b) {
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    out_[a].insert(out_[a].end(), out_[b].begin(), out_[b].end());
    in_[a].insert(in_[a].end(), in_[b].begin(), in_[b].end());
    out_[b].clear();
    in_[b].clear();
    return a;
  }

  // Performs one identification at `v`. Returns the merged class when two
  // vertices were glued; duplicate parallel edges are dropped silently.
  std::optional<std::size_t> fold_once(std::size_t v) {
    for (const bool outgoing : {true, false}) {
      auto& list = outgoing ? out_[v] : in_[v];
      std::erase_if(list, [&](std::size_t id) { return !edges_[id].alive; });
      if (rng_) std::shuffle(list.begin(), list.end(), *rng_);
      std::map<int, std::size_t> first_by_label;
      for (std::size_t id : list) {
        WorkEdge& e = edges_[id];
        if (!e.alive) continue;
        auto [it, fresh] = first_by_label.emplace(e.label, id);
        if (fresh) continue;
        const WorkEdge& keep = edges_[it->second];
        const std::size_t x = find(outgoing ? keep.head : keep.tail);
        const std::size_t y = find(outgoing ? e.head : e.tail);
        e.alive = false;
        if (x != y) return unite(x, y);
      }
    }
    return std::nullopt;
  }

  std::vector<VertexId> ids_;
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<std::vector<std::size_t>> in_;
  std::vector<WorkEdge> edges_;
  std::vector<bool> removed_;
  std::size_t base_ = 0;
  std::optional<std::mt19937_64> rng_;
};

char label_char(int label) { return letter_char(Letter::pos(label)); }

}  // namespace

// Folding -------------------------------------------------------------------

Folding::Folding(LabeledDigraph graph, VertexId base, Alphabet alphabet)
    : graph_(std::move(graph)), base_(base), alphabet_(alphabet) {
  if (!graph_.has_vertex(base_)) {
    throw Error("base " + std::to_string(base_) + " is not a vertex");
  }
  if (!undirected_connected(graph_)) throw Error("folding is not connected");

  const auto vs = graph_.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i) slot_[vs[i]] = i;
  const auto width = static_cast<std::size_t>(2 * alphabet_.rank());
  transitions_.assign(vs.size() * width, 0);

  for (const Edge& e : graph_.edges()) {
    if (!alphabet_.contains(e.label)) {
      throw AlphabetError("edge " + std::to_string(e.id) + " has label " +
                          std::to_string(e.label) + " outside the alphabet");
    }
    VertexId& fwd = transitions_[cell(e.tail, Letter::pos(e.label))];
    VertexId& bwd = transitions_[cell(e.head, Letter::neg(e.label))];
    if (fwd != 0) {
      throw Error("vertex " + std::to_string(e.tail) +
                  " has two outgoing edges labelled " + label_char(e.label));
    }
    if (bwd != 0) {
      throw Error("vertex " + std::to_string(e.head) +
                  " has two incoming edges labelled " + label_char(e.label));
    }
    fwd = e.head;
    bwd = e.tail;
  }

  if (graph_.edge_count() == 0) {
    if (vs.size() != 1) throw Error("edgeless folding must be a lone vertex");
    return;
  }
  for (VertexId v : vs) {
    const std::size_t need = v == base_ ? 1 : 2;
    if (graph_.degree(v) < need) {
      throw Error("vertex " + std::to_string(v) + " violates the core condition");
    }
  }
}

std::size_t Folding::cell(VertexId v, Letter l) const {
  const auto width = static_cast<std::size_t>(2 * alphabet_.rank());
  const std::size_t side = l.positive() ? 0 : 1;
  return slot_.at(v) * width + 2 * static_cast<std::size_t>(l.index - 1) + side;
}

std::optional<VertexId> Folding::follow(VertexId v, Letter l) const {
  if (!alphabet_.contains(l.index)) return std::nullopt;
  const VertexId w = transitions_[cell(v, l)];
  if (w == 0) return std::nullopt;
  return w;
}

// Construction --------------------------------------------------------------

Rose build_rose(const SubgroupPresentation& p) {
  Rose rose;
  rose.base = rose.graph.add_vertex();
  bool any = false;
  for (const Word& w : p.generators) {
    if (w.alphabet() != p.alphabet) {
      throw AlphabetError("generator " + to_string(w) +
                          " is over a different alphabet");
    }
    if (w.empty()) continue;
    any = true;
    VertexId at = rose.base;
    for (std::size_t i = 0; i < w.size(); ++i) {
      const VertexId next = i + 1 == w.size() ? rose.base : rose.graph.add_vertex();
      const Letter l = w[i];
      if (l.positive()) {
        rose.graph.add_edge(at, next, l.index);
      } else {
        rose.graph.add_edge(next, at, l.index);
      }
      at = next;
    }
  }
  if (!any) throw EmptyPresentation();
  return rose;
}

Folding fold(const LabeledDigraph& g, VertexId base, Alphabet alphabet,
             std::optional<std::uint64_t> shuffle_seed) {
  if (!g.has_vertex(base)) {
    throw Error("base " + std::to_string(base) + " is not a vertex");
  }
  if (!undirected_connected(g)) throw Error("cannot fold a disconnected graph");
  for (const Edge& e : g.edges()) {
    if (!alphabet.contains(e.label)) {
      throw AlphabetError("edge label " + std::to_string(e.label) +
                          " outside the alphabet");
    }
  }
  FoldState state(g, base, shuffle_seed);
  state.run();
  state.trim();
  return canonicalize(state.graph(), state.base_id(), alphabet);
}

Folding folding_of(const SubgroupPresentation& p,
                   std::optional<std::uint64_t> shuffle_seed) {
  const bool trivial = std::all_of(p.generators.begin(), p.generators.end(),
                                   [](const Word& w) { return w.empty(); });
  if (trivial) {
    for (const Word& w : p.generators) {
      if (w.alphabet() != p.alphabet) {
        throw AlphabetError("generator is over a different alphabet");
      }
    }
    LabeledDigraph lone;
    lone.add_vertex(1);
    return Folding(std::move(lone), 1, p.alphabet);
  }
  const Rose rose = build_rose(p);
  return fold(rose.graph, rose.base, p.alphabet, shuffle_seed);
}

// Queries -------------------------------------------------------------------

bool membership(const Folding& f, const Word& w) {
  if (w.alphabet() != f.alphabet()) {
    throw AlphabetError("word and folding are over different alphabets");
  }
  VertexId at = f.base();
  for (Letter l : w.letters()) {
    const auto next = f.follow(at, l);
    if (!next) return false;
    at = *next;
  }
  return at == f.base();
}

std::size_t rank(const Folding& f) {
  return f.graph().edge_count() + 1 - f.graph().vertex_count();
}

std::vector<Word> spanning_tree_basis(const Folding& f) {
  const LabeledDigraph& g = f.graph();
  std::map<VertexId, Word> path_to{{f.base(), Word(f.alphabet())}};
  std::set<EdgeId> tree;
  std::deque<VertexId> queue{f.base()};
  while (!queue.empty()) {
    const VertexId u = queue.front();
    queue.pop_front();
    for (int label = 1; label <= f.alphabet().rank(); ++label) {
      for (const Letter l : {Letter::pos(label), Letter::neg(label)}) {
        const auto w = f.follow(u, l);
        if (!w || path_to.contains(*w)) continue;
        const std::vector<Letter> step{l};
        path_to.emplace(*w, concat(path_to.at(u), Word(f.alphabet(), step)));
        for (EdgeId id : l.positive() ? g.out_edges(u) : g.in_edges(u)) {
          const Edge& e = g.edge(id);
          if (e.label == label && (l.positive() ? e.head : e.tail) == *w) {
            tree.insert(id);
          }
        }
        queue.push_back(*w);
      }
    }
  }

  std::vector<Word> basis;
  for (const Edge& e : g.edges()) {
    if (tree.contains(e.id)) continue;
    const std::vector<Letter> step{Letter::pos(e.label)};
    basis.push_back(concat(concat(path_to.at(e.tail), Word(f.alphabet(), step)),
                           invert(path_to.at(e.head))));
  }
  return basis;
}

std::vector<std::size_t> degree_counts(const Folding& f) {
  std::vector<std::size_t> counts;
  for (VertexId v : f.graph().vertices()) {
    const std::size_t d = f.graph().degree(v);
    if (counts.size() <= d) counts.resize(d + 1, 0);
    ++counts[d];
  }
  return counts;
}

DegreeProfile degree_profile(const Folding& f) {
  if (f.alphabet().rank() != 2) throw ClassCountUnavailable();
  DegreeProfile profile;
  profile.by_degree = degree_counts(f);
  if (profile.by_degree.size() < 5) profile.by_degree.resize(5, 0);
  constexpr int a = 1;
  constexpr int b = 2;
  for (VertexId v : f.graph().vertices()) {
    if (f.graph().degree(v) != 3) continue;
    if (!f.follow(v, Letter::neg(a))) {
      ++profile.classes[0];
    } else if (!f.follow(v, Letter::pos(a))) {
      ++profile.classes[1];
    } else if (!f.follow(v, Letter::neg(b))) {
      ++profile.classes[2];
    } else {
      ++profile.classes[3];
    }
  }
  return profile;
}

bool is_3_balanced(const Folding& f) {
  const DegreeProfile p = degree_profile(f);
  return p.c(1) + p.c(3) == p.c(2) + p.c(4);
}

std::optional<int> neumann_majority_type(const Folding& f) {
  const DegreeProfile p = degree_profile(f);
  for (int i = 1; i <= 4; ++i) {
    if (2 * p.c(i) > p.d(3)) return i;
  }
  return std::nullopt;
}

bool foldings_isomorphic(const Folding& f, const Folding& g) {
  if (f.alphabet() != g.alphabet()) return false;
  if (f.graph().vertex_count() != g.graph().vertex_count() ||
      f.graph().edge_count() != g.graph().edge_count()) {
    return false;
  }
  std::map<VertexId, VertexId> forward{{f.base(), g.base()}};
  std::map<VertexId, VertexId> backward{{g.base(), f.base()}};
  std::deque<VertexId> queue{f.base()};
  while (!queue.empty()) {
    const VertexId u = queue.front();
    queue.pop_front();
    const VertexId image = forward.at(u);
    for (int label = 1; label <= f.alphabet().rank(); ++label) {
      for (const Letter l : {Letter::pos(label), Letter::neg(label)}) {
        const auto x = f.follow(u, l);
        const auto y = g.follow(image, l);
        if (x.has_value() != y.has_value()) return false;
        if (!x) continue;
        auto fw = forward.find(*x);
        auto bw = backward.find(*y);
        if (fw == forward.end() && bw == backward.end()) {
          forward.emplace(*x, *y);
          backward.emplace(*y, *x);
          queue.push_back(*x);
        } else if (fw == forward.end() || bw == backward.end() ||
                   fw->second != *y || bw->second != *x) {
          return false;
        }
      }
    }
  }
  return forward.size() == f.graph().vertex_count();
}

Word trail_word(const Folding& f, const Trail& p) {
  std::vector<Letter> letters;
  letters.reserve(p.edges.size());
  for (EdgeId id : p.edges) letters.push_back(Letter::pos(f.graph().edge(id).label));
  return Word(f.alphabet(), letters);
}

// Text formats ----------------------------------------------------------------

SubgroupPresentation parse_subgroup(std::string_view text) {
  std::optional<Alphabet> alphabet;
  std::vector<Word> generators;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    line = line.substr(0, line.find('#'));
    const std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) continue;
    const std::size_t last = line.find_last_not_of(" \t\r");
    const std::string_view body = line.substr(first, last - first + 1);

    if (!alphabet) {
      constexpr std::string_view kKeyword = "alphabet";
      if (!body.starts_with(kKeyword)) {
        throw ParseError(line_no, first + 1, "expected 'alphabet <rank>'");
      }
      std::string_view rest = body.substr(kKeyword.size());
      const std::size_t digits = rest.find_first_not_of(" \t");
      int rank = 0;
      std::from_chars_result parsed{};
      if (digits != 0 && digits != std::string_view::npos) {
        rest = rest.substr(digits);
        parsed = std::from_chars(rest.data(), rest.data() + rest.size(), rank);
      }
      if (digits == 0 || digits == std::string_view::npos ||
          parsed.ec != std::errc{} || parsed.ptr != rest.data() + rest.size() ||
          rank < 1 || rank > Alphabet::kMaxTextRank) {
        throw ParseError(line_no, first + 1,
                         "alphabet rank must be an integer in 1..26");
      }
      alphabet = Alphabet(rank);
      continue;
    }
    try {
      generators.push_back(parse_word(*alphabet, body));
    } catch (const ParseError& e) {
      // parse_word reports columns relative to the word itself.
      const std::string what = e.what();
      throw ParseError(line_no, first + e.column(),
                       what.substr(what.find(": ") + 2));
    }
  }
  if (!alphabet) {
    throw ParseError(std::max<std::size_t>(line_no, 1), 1,
                     "missing 'alphabet <rank>' line");
  }
  return SubgroupPresentation{*alphabet, std::move(generators)};
}

SubgroupPresentation read_subgroup(std::istream& in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_subgroup(buffer.str());
}

std::string format_subgroup(const SubgroupPresentation& p) {
  std::string out = "alphabet " + std::to_string(p.alphabet.rank()) + "\n";
  for (const Word& w : p.generators) {
    if (w.empty()) continue;
    out += to_string(w);
    out += '\n';
  }
  return out;
}

std::string canonical_text(const Folding& f) {
  std::ostringstream out;
  out << "alphabet " << f.alphabet().rank() << "\n";
  out << "base " << f.base() << "\n";
  out << "vertices " << f.graph().vertex_count() << "\n";
  out << "edges " << f.graph().edge_count() << "\n";
  for (const Edge& e : f.graph().edges()) {
    out << e.tail << ' ' << label_char(e.label) << ' ' << e.head << "\n";
  }
  return out.str();
}

std::string to_dot(const Folding& f, const std::string& name) {
  return to_dot(f.graph(), f.base(), name);
}

}  // namespace hnfold
