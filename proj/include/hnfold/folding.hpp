#pragma once

// Stallings foldings of finitely generated subgroups of free groups.

#include <array>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hnfold/graph.hpp"
#include "hnfold/words.hpp"

namespace hnfold {

/// Generators of a subgroup H. Empty words are allowed and ignored.
struct SubgroupPresentation {
  Alphabet alphabet{1};
  std::vector<Word> generators;

  friend bool operator==(const SubgroupPresentation&,
                         const SubgroupPresentation&) = default;
};

/// A rooted, deterministic, co-deterministic, connected core graph. Edge
/// labels are letter indices; an edge u -x-> v is read as x forwards and as
/// x^-1 backwards.
class Folding {
 public:
  /// Validates every invariant and throws Error on the first violation.
  Folding(LabeledDigraph graph, VertexId base, Alphabet alphabet);

  const LabeledDigraph& graph() const noexcept { return graph_; }
  VertexId base() const noexcept { return base_; }
  Alphabet alphabet() const noexcept { return alphabet_; }
  bool is_trivial() const noexcept { return graph_.edge_count() == 0; }

  /// Endpoint of the unique edge read as `l` from `v`, if any.
  std::optional<VertexId> follow(VertexId v, Letter l) const;

 private:
  std::size_t cell(VertexId v, Letter l) const;

  LabeledDigraph graph_;
  VertexId base_;
  Alphabet alphabet_;
  std::map<VertexId, std::size_t> slot_;
  std::vector<VertexId> transitions_;  // 0 marks a missing edge
};

struct Rose {
  LabeledDigraph graph;
  VertexId base = 0;
};

/// One cycle per non-empty generator, all sharing the base vertex. Throws
/// EmptyPresentation or AlphabetError.
Rose build_rose(const SubgroupPresentation& p);

/// Identifies equal-label edge pairs sharing a head or a tail until none
/// remain, trims non-base vertices of degree <= 1 and renumbers the result
/// canonically (base 1, breadth-first). A seed shuffles the identification
/// order; the result does not depend on it.
Folding fold(const LabeledDigraph& g, VertexId base, Alphabet alphabet,
             std::optional<std::uint64_t> shuffle_seed = std::nullopt);

/// Folding of <p.generators>; the trivial subgroup gives a lone base vertex.
Folding folding_of(const SubgroupPresentation& p,
                   std::optional<std::uint64_t> shuffle_seed = std::nullopt);

/// Throws AlphabetError if `w` is over a different alphabet.
bool membership(const Folding& f, const Word& w);

std::size_t rank(const Folding& f);

/// Free basis read off a breadth-first spanning tree: one word per non-tree
/// edge, in edge-id order.
std::vector<Word> spanning_tree_basis(const Folding& f);

/// Degree-3 vertices are classified by their one missing incident slot:
/// C1 lacks an incoming a, C2 an outgoing a, C3 an incoming b, C4 an
/// outgoing b. C1 and C3 vertices are 1-in/2-out, C2 and C4 are 2-in/1-out.
struct DegreeProfile {
  std::vector<std::size_t> by_degree;  // by_degree[k] = number of degree-k vertices
  std::array<std::size_t, 4> classes{};

  std::size_t d(std::size_t k) const {
    return k < by_degree.size() ? by_degree[k] : 0;
  }
  std::size_t c(int i) const { return classes.at(static_cast<std::size_t>(i - 1)); }
};

/// Degree counts only; valid for any alphabet.
std::vector<std::size_t> degree_counts(const Folding& f);

/// Throws ClassCountUnavailable unless the alphabet has rank 2.
DegreeProfile degree_profile(const Folding& f);

/// C1 + C3 == C2 + C4. Throws ClassCountUnavailable unless rank 2.
bool is_3_balanced(const Folding& f);

/// The class i in 1..4 holding more than half of the degree-3 vertices, if
/// any. Throws ClassCountUnavailable unless rank 2.
std::optional<int> neumann_majority_type(const Folding& f);

/// Base- and label-preserving isomorphism, found by walking both foldings in
/// lockstep from their bases.
bool foldings_isomorphic(const Folding& f, const Folding& g);

/// Word spelled by traversing the trail's edges forwards.
Word trail_word(const Folding& f, const Trail& p);

// Text formats ----------------------------------------------------------------

/// "alphabet N" followed by one generator per line; '#' starts a comment.
/// Throws ParseError with the 1-based line and column.
SubgroupPresentation parse_subgroup(std::string_view text);
SubgroupPresentation read_subgroup(std::istream& in);
std::string format_subgroup(const SubgroupPresentation& p);

/// Header lines, then one "tail label head" line per edge in id order.
std::string canonical_text(const Folding& f);
std::string to_dot(const Folding& f, const std::string& name = "folding");

}  // namespace hnfold
