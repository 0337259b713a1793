#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ind/graph.hpp"
#include "ind/synth.hpp"

namespace ind {

/// Pairwise record-linkage metric. precision/f1 are empty when no pairs are
/// predicted (counts stay intact); recall is empty when truth has no pairs.
struct PairwiseScore {
  std::optional<double> precision;
  std::optional<double> recall;
  std::optional<double> f1;
  std::uint64_t true_pairs = 0;
  std::uint64_t predicted_pairs = 0;
  std::uint64_t intersecting_pairs = 0;
};

struct ClusterComparison {
  std::size_t clustered_by_a_not_b = 0;
  std::size_t clustered_by_b_not_a = 0;
  std::size_t largest_a = 0;
  std::size_t largest_b = 0;
  // sizes of the pieces A's largest cluster is split into under B
  // (singletons under B appear as 1s)
  std::vector<std::size_t> largest_a_fragments;
};

/// Throws std::invalid_argument if a predicted member is missing from truth.
/// Singletons contribute no predicted pairs.
PairwiseScore pairwise_score(const Clustering& predicted, const SyntheticTruth& truth);

/// Single-link clustering over pairs with token-set Jaccard similarity >=
/// cutoff. Tokens are lowercased with punctuation stripped. Order-free.
Clustering token_baseline(const std::vector<std::string>& affiliations, double cutoff);

/// Throws std::invalid_argument when the two clusterings cover different
/// string universes.
ClusterComparison compare_clusterings(const Clustering& a, const Clustering& b);

std::string score_to_json(const PairwiseScore& s);
std::string score_to_table(const PairwiseScore& s);
std::string comparison_to_json(const ClusterComparison& c);

}  // namespace ind
