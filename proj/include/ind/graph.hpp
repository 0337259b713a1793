#pragma once

#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

#include "ind/cooccur.hpp"
#include "ind/matrix.hpp"

namespace ind {

struct WeightedEdge {
  std::uint32_t i;
  std::uint32_t j;  // i < j
  std::uint32_t w;
};

/// Undirected graph keeping off-diagonal pairs with weight >= threshold.
struct ThresholdGraph {
  std::uint32_t threshold = 1;
  std::uint32_t n = 0;  // affiliation id space
  std::vector<WeightedEdge> edges;
};

/// One connected component. Members sorted lexicographically; edges are
/// (label_i, label_j, w) with label_i < label_j, sorted.
struct Cluster {
  std::vector<std::string> members;
  std::vector<std::tuple<std::string, std::string, std::uint32_t>> edges;
  std::size_t size() const { return members.size(); }
};

/// Components ordered by size descending, then by smallest member ascending.
/// Singletons (no surviving incident edge) are listed separately.
struct Clustering {
  std::uint32_t threshold = 1;
  std::vector<Cluster> clusters;
  std::vector<std::string> singletons;
  std::size_t singleton_count() const { return singletons.size(); }
};

struct SweepRow {
  std::uint32_t threshold;
  std::size_t clusters;
  std::size_t largest;
  std::size_t clustered_nodes;
  std::size_t edges;
};

/// Throws std::invalid_argument for threshold 0.
ThresholdGraph build_graph(const CooccurrenceMatrix& c, std::uint32_t threshold);

Clustering components(const ThresholdGraph& g, const Interner& affiliations);

std::vector<SweepRow> sweep(const CooccurrenceMatrix& c, const Interner& affiliations,
                            std::uint32_t t_min, std::uint32_t t_max);

/// k-th component under the documented ordering; throws std::out_of_range.
const Cluster& component_at(const Clustering& cl, std::size_t rank);

/// JSON document: {"threshold": t, "clusters": [{"rank", "size", "members",
/// "edges"}], "singletons": m} (+ "singleton_members" when requested).
std::string clustering_to_json(const Clustering& cl, bool include_singletons = false);

/// Graphviz DOT of one component; node label = affiliation string,
/// edge label = co-occurrence weight.
std::string cluster_to_dot(const Cluster& cluster);

}  // namespace ind
