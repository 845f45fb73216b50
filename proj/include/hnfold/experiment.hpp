#pragma once

// Randomized checks of the structural properties over sampled subgroups.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hnfold/folding.hpp"

namespace hnfold {

enum class WordDistribution { positive, reduced };

/// Letter-by-letter: reduced words pick uniformly among the letters that do
/// not cancel the previous one, positive words uniformly among x_1..x_n.
Word random_word(std::mt19937_64& rng, Alphabet alphabet, std::size_t length,
                 WordDistribution distribution);

struct SizeRange {
  std::size_t min = 1;
  std::size_t max = 1;
};

/// Generator count and word lengths drawn uniformly from the ranges.
SubgroupPresentation random_presentation(std::mt19937_64& rng,
                                         Alphabet alphabet, SizeRange generators,
                                         SizeRange length,
                                         WordDistribution distribution);

struct ExperimentConfig {
  std::uint64_t seed = 1;
  std::size_t samples = 100;
  SizeRange generator_count{1, 3};
  SizeRange word_length{1, 6};
  WordDistribution distribution = WordDistribution::positive;
  int ambient_rank = 2;
  /// Where reproducers for violated properties go; none are written if unset.
  std::optional<std::filesystem::path> reproducer_dir;

  /// Throws Error describing the first invalid field.
  void validate() const;
};

struct PropertyTally {
  std::string name;
  std::size_t applicable = 0;
  std::size_t passed = 0;
};

struct ExperimentResult {
  ExperimentConfig config;
  std::vector<PropertyTally> tallies;
  /// Sorted; one entry per violation.
  std::vector<std::string> violations;

  bool all_passed() const;
  /// Deterministic plain-text summary.
  std::string report() const;
};

/// Each sample draws H from the configured distribution and K from reduced
/// words, then checks every applicable property. Same config, same result.
ExperimentResult run_experiment(const ExperimentConfig& config);

std::string to_string(WordDistribution d);
/// Accepts "positive-words" and "reduced-words".
std::optional<WordDistribution> parse_distribution(std::string_view name);

}  // namespace hnfold
