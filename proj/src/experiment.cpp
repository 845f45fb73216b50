#include "hnfold/experiment.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

#include "hnfold/decomposition.hpp"
#include "hnfold/error.hpp"
#include "hnfold/intersection.hpp"

namespace hnfold {

Word random_word(std::mt19937_64& rng, Alphabet alphabet, std::size_t length,
                 WordDistribution distribution) {
  const int n = alphabet.rank();
  std::vector<Letter> letters;
  letters.reserve(length);
  if (distribution == WordDistribution::positive) {
    std::uniform_int_distribution<int> pick(1, n);
    for (std::size_t i = 0; i < length; ++i) letters.push_back(Letter::pos(pick(rng)));
    return Word(alphabet, letters);
  }
  for (std::size_t i = 0; i < length; ++i) {
    // 2n letters, minus the inverse of the previous one.
    const int choices = letters.empty() ? 2 * n : 2 * n - 1;
    int k = std::uniform_int_distribution<int>(0, choices - 1)(rng);
    Letter next{};
    for (int index = 1; index <= n; ++index) {
      for (const int sign : {1, -1}) {
        const Letter candidate{index, sign};
        if (!letters.empty() && letters.back().cancels(candidate)) continue;
        if (k-- == 0) next = candidate;
      }
    }
    letters.push_back(next);
  }
  return Word(alphabet, letters);
}

SubgroupPresentation random_presentation(std::mt19937_64& rng,
                                         Alphabet alphabet, SizeRange generators,
                                         SizeRange length,
                                         WordDistribution distribution) {
  SubgroupPresentation p{alphabet, {}};
  const std::size_t count =
      std::uniform_int_distribution<std::size_t>(generators.min, generators.max)(rng);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t len =
        std::uniform_int_distribution<std::size_t>(length.min, length.max)(rng);
    p.generators.push_back(random_word(rng, alphabet, len, distribution));
  }
  return p;
}

void ExperimentConfig::validate() const {
  if (samples < 1) throw Error("samples must be at least 1");
  if (generator_count.min < 1 || generator_count.min > generator_count.max) {
    throw Error("generator count range must be non-empty and start at 1 or more");
  }
  if (word_length.min < 1 || word_length.min > word_length.max) {
    throw Error("word length range must be non-empty and start at 1 or more");
  }
  if (ambient_rank < 1 || ambient_rank > Alphabet::kMaxTextRank) {
    throw Error("ambient rank must be in 1..26");
  }
}

std::string to_string(WordDistribution d) {
  return d == WordDistribution::positive ? "positive-words" : "reduced-words";
}

std::optional<WordDistribution> parse_distribution(std::string_view name) {
  if (name == "positive-words") return WordDistribution::positive;
  if (name == "reduced-words") return WordDistribution::reduced;
  return std::nullopt;
}

bool ExperimentResult::all_passed() const {
  return std::all_of(tallies.begin(), tallies.end(), [](const PropertyTally& t) {
    return t.passed == t.applicable;
  });
}

std::string ExperimentResult::report() const {
  std::ostringstream out;
  out << "seed " << config.seed << "\n"
      << "samples " << config.samples << "\n"
      << "distribution " << to_string(config.distribution) << "\n"
      << "ambient_rank " << config.ambient_rank << "\n"
      << "generators " << config.generator_count.min << "-"
      << config.generator_count.max << "\n"
      << "length " << config.word_length.min << "-" << config.word_length.max
      << "\n";
  std::size_t width = 0;
  for (const auto& t : tallies) width = std::max(width, t.name.size());
  for (const auto& t : tallies) {
    out << t.name << std::string(width - t.name.size() + 2, ' ') << t.passed
        << "/" << t.applicable
        << (t.passed == t.applicable ? "" : "  VIOLATED") << "\n";
  }
  for (const auto& v : violations) out << "violation " << v << "\n";
  out << (all_passed() ? "result ok" : "result FAILED") << "\n";
  return out.str();
}

namespace {

enum Property : std::size_t {
  kPositiveStronglyConnected,
  kPositiveBasisRoundTrip,
  kStrongDecompositionValid,
  kDecompositionIffNoSourceSink,
  kDecomposableIsBalanced,
  kUnbalancedHasSourceSink,
  kPositivePairHn,
  kSourceSinkFreePairHn,
  kProvedBounds,
  kPropertyCount,
};

constexpr const char* kPropertyNames[kPropertyCount] = {
    "positive-generators-strongly-connected",
    "positive-basis-round-trip",
    "strong-decomposition-valid",
    "decomposition-iff-no-source-sink",
    "decomposable-is-3-balanced",
    "unbalanced-has-source-sink",
    "positively-generated-pair-satisfies-hn",
    "source-sink-free-pair-satisfies-hn",
    "proved-bounds-hold",
};

bool basis_round_trip(const Folding& f) {
  const auto basis = positive_basis(f);
  if (!basis || basis->size() != rank(f)) return false;
  if (!std::all_of(basis->begin(), basis->end(), is_positive)) return false;
  return foldings_isomorphic(folding_of({f.alphabet(), *basis}), f);
}

bool strong_decomposition_valid(const Folding& f) {
  const LabeledDigraph& g = f.graph();
  const TrailDecomposition d = strong_trail_decomposition(g, f.base());
  if (!verify_decomposition(g, d, true)) return false;
  for (std::size_t i = 0; i < d.trails.size(); ++i) {
    if (!is_self_avoiding(g, d.trails[i])) return false;
    if (!is_strongly_connected(prefix_union(g, d, i))) return false;
  }
  return true;
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& config) {
  config.validate();
  ExperimentResult result;
  result.config = config;
  for (const char* name : kPropertyNames) result.tallies.push_back({name, 0, 0});

  std::mt19937_64 rng(config.seed);
  const Alphabet alphabet(config.ambient_rank);
  const bool rank2 = config.ambient_rank == 2;

  for (std::size_t sample = 0; sample < config.samples; ++sample) {
    const SubgroupPresentation ph = random_presentation(
        rng, alphabet, config.generator_count, config.word_length,
        config.distribution);
    const SubgroupPresentation pk =
        random_presentation(rng, alphabet, config.generator_count,
                            config.word_length, WordDistribution::reduced);

    auto check = [&](Property property, bool applicable,
                     const std::function<bool()>& holds, bool pair) {
      if (!applicable) return;
      PropertyTally& tally = result.tallies[property];
      ++tally.applicable;
      if (holds()) {
        ++tally.passed;
        return;
      }
      std::ostringstream name;
      name << "sample-" << sample << "-" << kPropertyNames[property];
      result.violations.push_back(name.str());
      if (!config.reproducer_dir) return;
      std::filesystem::create_directories(*config.reproducer_dir);
      const auto stem = *config.reproducer_dir / name.str();
      std::ofstream(stem.string() + "-H.txt")
          << "# " << kPropertyNames[property] << "\n" << format_subgroup(ph);
      if (pair) {
        std::ofstream(stem.string() + "-K.txt")
            << "# " << kPropertyNames[property] << "\n" << format_subgroup(pk);
      }
    };

    const Folding h = folding_of(ph);
    const Folding k = folding_of(pk);
    const bool positive_gens =
        std::all_of(ph.generators.begin(), ph.generators.end(), is_positive);
    const bool strongly_connected = is_strongly_connected(h.graph());

    check(kPositiveStronglyConnected, positive_gens,
          [&] { return strongly_connected; }, false);
    check(kPositiveBasisRoundTrip, strongly_connected,
          [&] { return basis_round_trip(h); }, false);
    check(kStrongDecompositionValid, strongly_connected && !h.is_trivial(),
          [&] { return strong_decomposition_valid(h); }, false);

    std::optional<bool> decomposable;
    if (!h.is_trivial()) {
      const DecompositionResult d = trail_decomposition(h);
      const bool no_blockers = find_sources_sinks(h).empty();
      const auto* found = std::get_if<TrailDecomposition>(&d);
      decomposable = found != nullptr;
      check(kDecompositionIffNoSourceSink, true, [&] {
        return (found != nullptr) == no_blockers &&
               (!found || verify_decomposition(h.graph(), *found, false));
      }, false);
    }
    if (rank2) {
      check(kDecomposableIsBalanced, decomposable.value_or(false),
            [&] { return is_3_balanced(h); }, false);
      check(kUnbalancedHasSourceSink, !is_3_balanced(h),
            [&] { return !find_sources_sinks(h).empty(); }, false);
    }

    const HncReport direct = hnc_report(h, k);
    const HncReport via_rank2 =
        rank2 ? direct : hnc_check(embed_to_rank2(ph), embed_to_rank2(pk));
    check(kPositivePairHn, strongly_connected,
          [&] { return via_rank2.verdict_hn_conjecture; }, true);
    if (rank2) {
      check(kSourceSinkFreePairHn, direct.h_source_sink_free,
            [&] { return direct.verdict_hn_conjecture; }, true);
    }
    check(kProvedBounds, true, [&] { return direct.proved_bounds_hold(); }, true);
  }
  std::sort(result.violations.begin(), result.violations.end());
  return result;
}

}  // namespace hnfold
