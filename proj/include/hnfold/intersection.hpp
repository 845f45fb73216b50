#pragma once

// Intersections of subgroups through the product of their foldings, and the
// rank inequalities of the Hanna Neumann problem evaluated on them.

#include <cstddef>
#include <cstdint>
#include <optional>

#include "hnfold/folding.hpp"

namespace hnfold {

/// Folding of H ∩ K: pairs of vertices joined where both foldings have an
/// equally labelled edge, restricted to the component of the paired bases
/// and trimmed. Throws AlphabetError if the alphabets differ.
Folding pullback(const Folding& f, const Folding& g);

/// max(rank - 1, 0).
std::size_t reduced_rank(std::size_t rank);

/// Rank data and bound evaluations for one pair (H, K). Every verdict reads
/// reduced_rank(rank_meet) <= bound.
struct HncReport {
  std::size_t rank_h = 0;
  std::size_t rank_k = 0;
  std::size_t rank_meet = 0;
  std::size_t reduced_rank_h = 0;
  std::size_t reduced_rank_k = 0;
  std::size_t reduced_rank_meet = 0;

  std::int64_t bound_hn_conjecture = 0;  // r̄H·r̄K
  std::int64_t bound_hneumann = 0;       // 2·r̄H·r̄K
  std::int64_t bound_burns = 0;          // 2·r̄H·r̄K − min(r̄H, r̄K)
  std::int64_t bound_tardos96 = 0;       // 2·r̄H·r̄K − r̄H − r̄K + 1, both r̄ ≥ 1

  bool verdict_hn_conjecture = true;
  bool verdict_hneumann = true;
  bool verdict_burns = true;
  bool verdict_tardos96 = true;

  bool h_positively_generated = false;
  bool k_positively_generated = false;
  bool h_source_sink_free = false;
  bool k_source_sink_free = false;
  std::optional<int> majority_type_h;  // only over a rank-2 alphabet
  std::optional<int> majority_type_k;

  /// The H. Neumann, Burns and Tardos verdicts, which are theorems.
  bool proved_bounds_hold() const {
    return verdict_hneumann && verdict_burns && verdict_tardos96;
  }

  friend bool operator==(const HncReport&, const HncReport&) = default;
};

HncReport hnc_report(const Folding& h, const Folding& k);

/// Throws AlphabetError if the presentations use different alphabets.
HncReport hnc_check(const SubgroupPresentation& ph,
                    const SubgroupPresentation& pk);

/// Image of x_i under x_i -> a^i b a^i in F(a, b).
Word embed_word_to_rank2(const Word& w);

/// Applies x_i -> a^i b a^i to every generator. Injective on F_n, preserves
/// subgroup rank and sends positive words to positive words.
SubgroupPresentation embed_to_rank2(const SubgroupPresentation& p);

}  // namespace hnfold
