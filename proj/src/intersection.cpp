#include "hnfold/intersection.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "hnfold/decomposition.hpp"
#include "hnfold/error.hpp"

namespace hnfold {

Folding pullback(const Folding& f, const Folding& g) {
  if (f.alphabet() != g.alphabet()) {
    throw AlphabetError("cannot intersect subgroups of different free groups");
  }
  using State = std::pair<VertexId, VertexId>;
  std::map<State, VertexId> ids{{{f.base(), g.base()}, 1}};
  std::deque<State> queue{{f.base(), g.base()}};
  std::vector<State> order;
  while (!queue.empty()) {
    const State s = queue.front();
    queue.pop_front();
    order.push_back(s);
    for (int label = 1; label <= f.alphabet().rank(); ++label) {
      for (const Letter l : {Letter::pos(label), Letter::neg(label)}) {
        const auto x = f.follow(s.first, l);
        const auto y = g.follow(s.second, l);
        if (!x || !y) continue;
        const State t{*x, *y};
        if (ids.emplace(t, static_cast<VertexId>(ids.size() + 1)).second) {
          queue.push_back(t);
        }
      }
    }
  }

  LabeledDigraph product;
  for (VertexId v = 1; v <= ids.size(); ++v) product.add_vertex(v);
  for (const State& s : order) {
    for (int label = 1; label <= f.alphabet().rank(); ++label) {
      const auto x = f.follow(s.first, Letter::pos(label));
      const auto y = g.follow(s.second, Letter::pos(label));
      if (x && y) product.add_edge(ids.at(s), ids.at({*x, *y}), label);
    }
  }
  // Already deterministic; folding only trims and renumbers.
  return fold(product, 1, f.alphabet());
}

std::size_t reduced_rank(std::size_t rank) { return rank == 0 ? 0 : rank - 1; }

HncReport hnc_report(const Folding& h, const Folding& k) {
  HncReport r;
  r.rank_h = rank(h);
  r.rank_k = rank(k);
  r.rank_meet = rank(pullback(h, k));
  r.reduced_rank_h = reduced_rank(r.rank_h);
  r.reduced_rank_k = reduced_rank(r.rank_k);
  r.reduced_rank_meet = reduced_rank(r.rank_meet);

  const auto rh = static_cast<std::int64_t>(r.reduced_rank_h);
  const auto rk = static_cast<std::int64_t>(r.reduced_rank_k);
  r.bound_hn_conjecture = rh * rk;
  r.bound_hneumann = 2 * rh * rk;
  r.bound_burns = 2 * rh * rk - std::min(rh, rk);
  // Tardos' bound is stated for subgroups of rank at least 2; below that every
  // intersection is cyclic and the product bound of 0 applies.
  r.bound_tardos96 = (rh >= 1 && rk >= 1) ? 2 * rh * rk - rh - rk + 1 : 0;

  const auto lhs = static_cast<std::int64_t>(r.reduced_rank_meet);
  r.verdict_hn_conjecture = lhs <= r.bound_hn_conjecture;
  r.verdict_hneumann = lhs <= r.bound_hneumann;
  r.verdict_burns = lhs <= r.bound_burns;
  r.verdict_tardos96 = lhs <= r.bound_tardos96;

  r.h_positively_generated = is_positively_generated(h);
  r.k_positively_generated = is_positively_generated(k);
  r.h_source_sink_free = find_sources_sinks(h).empty();
  r.k_source_sink_free = find_sources_sinks(k).empty();
  if (h.alphabet().rank() == 2) {
    r.majority_type_h = neumann_majority_type(h);
    r.majority_type_k = neumann_majority_type(k);
  }
  return r;
}

HncReport hnc_check(const SubgroupPresentation& ph,
                    const SubgroupPresentation& pk) {
  if (ph.alphabet != pk.alphabet) {
    throw AlphabetError("subgroups live in free groups of different rank");
  }
  return hnc_report(folding_of(ph), folding_of(pk));
}

namespace {

std::vector<Word> rank2_images(int rank) {
  const Alphabet two(2);
  std::vector<Word> images;
  for (int i = 1; i <= rank; ++i) {
    std::vector<Letter> letters(static_cast<std::size_t>(i), Letter::pos(1));
    letters.push_back(Letter::pos(2));
    letters.insert(letters.end(), static_cast<std::size_t>(i), Letter::pos(1));
    images.emplace_back(two, letters);
  }
  return images;
}

}  // namespace

Word embed_word_to_rank2(const Word& w) {
  return substitute(w, rank2_images(w.alphabet().rank()));
}

SubgroupPresentation embed_to_rank2(const SubgroupPresentation& p) {
  const std::vector<Word> images = rank2_images(p.alphabet.rank());
  SubgroupPresentation out{Alphabet(2), {}};
  for (const Word& w : p.generators) out.generators.push_back(substitute(w, images));
  return out;
}

}  // namespace hnfold
