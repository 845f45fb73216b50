#pragma once

// Sources and sinks, directed trail decompositions of foldings, positive
// bases, and rewriting presentations by explicit automorphisms.

#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "hnfold/folding.hpp"

namespace hnfold {

/// A source (sink) is a singleton strongly connected component of degree 2
/// whose two edges both leave (enter) it; a vertex with a loop never counts.
/// `one_way` lists the remaining vertices that have edges but lack an incoming
/// or an outgoing one; in a rank-2 core folding that is only a degree-1 base.
/// Such vertices block a trail decomposition just as sources and sinks do.
struct SourceSinkReport {
  std::vector<VertexId> sources;
  std::vector<VertexId> sinks;
  std::vector<VertexId> one_way;

  bool empty() const {
    return sources.empty() && sinks.empty() && one_way.empty();
  }
  friend bool operator==(const SourceSinkReport&, const SourceSinkReport&) = default;
};

SourceSinkReport find_sources_sinks(const Folding& f);

/// Returned instead of a decomposition; carries the blocking vertices.
struct NoDecomposition {
  SourceSinkReport report;
};

using DecompositionResult = std::variant<TrailDecomposition, NoDecomposition>;

/// Decomposes each non-trivial strongly connected component (more than one
/// vertex, or a loop) with strong_trail_decomposition, the base's component
/// first, then attaches every remaining edge by walking backwards and
/// forwards from it until the covered part is reached. Lowest edge ids win
/// every choice. Throws TrivialFolding for the edgeless folding.
DecompositionResult trail_decomposition(const Folding& f);

/// A basis of positive words when the folding is strongly connected, else
/// nullopt. The trivial folding yields an empty basis.
std::optional<std::vector<Word>> positive_basis(const Folding& f);

/// Strong connectivity of the folding; equivalent to having a positive
/// generating set and to having a positive basis.
bool is_positively_generated(const Folding& f);

/// Rewrites every generator by letter images (inverse letters map to inverse
/// images). Does not check that the images define an automorphism. Throws
/// AlphabetError if an image is missing or over another alphabet.
SubgroupPresentation apply_automorphism(const SubgroupPresentation& p,
                                        const std::map<int, Word>& images);

}  // namespace hnfold
