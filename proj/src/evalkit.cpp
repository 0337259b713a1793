#include "ind/evalkit.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include <nlohmann/json.hpp>

namespace ind {
namespace {

std::uint64_t pairs_of(std::uint64_t n) { return n * (n - 1) / 2; }

std::set<std::string> tokenize(const std::string& s) {
  std::set<std::string> tokens;
  std::string current;
  for (char c : s) {
    if (std::isalnum(static_cast<unsigned char>(c))) {
      current.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    } else if (!current.empty()) {
      tokens.insert(current);
      current.clear();
    }
  }
  if (!current.empty()) tokens.insert(current);
  return tokens;
}

double jaccard(const std::set<std::string>& a, const std::set<std::string>& b) {
  if (a.empty() && b.empty()) return 1.0;
  std::size_t inter = 0;
  for (const auto& t : a) inter += b.count(t);
  return static_cast<double>(inter) / static_cast<double>(a.size() + b.size() - inter);
}

}  // namespace

PairwiseScore pairwise_score(const Clustering& predicted, const SyntheticTruth& truth) {
  PairwiseScore score;

  std::map<std::uint32_t, std::uint64_t> institute_sizes;
  for (const auto& [aff, inst] : truth.affiliation_institute) ++institute_sizes[inst];
  for (const auto& [inst, n] : institute_sizes) score.true_pairs += pairs_of(n);

  for (const auto& cluster : predicted.clusters) {
    score.predicted_pairs += pairs_of(cluster.size());
    std::map<std::uint32_t, std::uint64_t> per_institute;
    for (const auto& member : cluster.members) {
      auto it = truth.affiliation_institute.find(member);
      if (it == truth.affiliation_institute.end())
        throw std::invalid_argument("predicted member not in truth: " + member);
      ++per_institute[it->second];
    }
    for (const auto& [inst, n] : per_institute) score.intersecting_pairs += pairs_of(n);
  }

  if (score.predicted_pairs > 0)
    score.precision = static_cast<double>(score.intersecting_pairs) /
                      static_cast<double>(score.predicted_pairs);
  if (score.true_pairs > 0)
    score.recall = static_cast<double>(score.intersecting_pairs) /
                   static_cast<double>(score.true_pairs);
  if (score.precision && score.recall && (*score.precision + *score.recall) > 0)
    score.f1 = 2.0 * *score.precision * *score.recall / (*score.precision + *score.recall);
  return score;
}

Clustering token_baseline(const std::vector<std::string>& affiliations, double cutoff) {
  if (cutoff <= 0.0 || cutoff > 1.0)
    throw std::invalid_argument("similarity cutoff must lie in (0, 1]");

  // deduplicate while keeping a deterministic (sorted) node order
  std::vector<std::string> nodes(affiliations);
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());

  std::vector<std::set<std::string>> tokens;
  tokens.reserve(nodes.size());
  for (const auto& s : nodes) tokens.push_back(tokenize(s));

  std::vector<std::size_t> parent(nodes.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };

  std::vector<bool> connected(nodes.size(), false);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t j = i + 1; j < nodes.size(); ++j) {
      if (jaccard(tokens[i], tokens[j]) >= cutoff) {
        parent[find(i)] = find(j);
        connected[i] = connected[j] = true;
      }
    }
  }

  std::map<std::size_t, Cluster> groups;
  Clustering cl;
  cl.threshold = 1;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (connected[i])
      groups[find(i)].members.push_back(nodes[i]);
    else
      cl.singletons.push_back(nodes[i]);
  }
  for (auto& [root, cluster] : groups) {
    std::sort(cluster.members.begin(), cluster.members.end());
    cl.clusters.push_back(std::move(cluster));
  }
  std::stable_sort(cl.clusters.begin(), cl.clusters.end(),
                   [](const Cluster& a, const Cluster& b) {
                     if (a.size() != b.size()) return a.size() > b.size();
                     return a.members.front() < b.members.front();
                   });
  return cl;
}

ClusterComparison compare_clusterings(const Clustering& a, const Clustering& b) {
  auto universe_of = [](const Clustering& cl) {
    std::set<std::string> u(cl.singletons.begin(), cl.singletons.end());
    for (const auto& c : cl.clusters) u.insert(c.members.begin(), c.members.end());
    return u;
  };
  if (universe_of(a) != universe_of(b))
    throw std::invalid_argument("clusterings cover different string universes");

  std::unordered_map<std::string, std::size_t> b_cluster_of;
  for (std::size_t k = 0; k < b.clusters.size(); ++k) {
    for (const auto& m : b.clusters[k].members) b_cluster_of[m] = k;
  }
  std::unordered_map<std::string, std::size_t> a_cluster_of;
  for (std::size_t k = 0; k < a.clusters.size(); ++k) {
    for (const auto& m : a.clusters[k].members) a_cluster_of[m] = k;
  }

  ClusterComparison cmp;
  for (const auto& c : a.clusters) {
    for (const auto& m : c.members) {
      if (!b_cluster_of.count(m)) ++cmp.clustered_by_a_not_b;
    }
  }
  for (const auto& c : b.clusters) {
    for (const auto& m : c.members) {
      if (!a_cluster_of.count(m)) ++cmp.clustered_by_b_not_a;
    }
  }
  cmp.largest_a = a.clusters.empty() ? 0 : a.clusters.front().size();
  cmp.largest_b = b.clusters.empty() ? 0 : b.clusters.front().size();

  if (!a.clusters.empty()) {
    std::map<std::ptrdiff_t, std::size_t> pieces;
    std::ptrdiff_t next_singleton = -1;
    for (const auto& m : a.clusters.front().members) {
      auto it = b_cluster_of.find(m);
      if (it != b_cluster_of.end())
        ++pieces[static_cast<std::ptrdiff_t>(it->second)];
      else
        ++pieces[next_singleton--];  // each B-singleton is its own piece
    }
    for (const auto& [key, n] : pieces) cmp.largest_a_fragments.push_back(n);
    std::sort(cmp.largest_a_fragments.rbegin(), cmp.largest_a_fragments.rend());
  }
  return cmp;
}

std::string score_to_json(const PairwiseScore& s) {
  nlohmann::json j;
  j["precision"] = s.precision ? nlohmann::json(*s.precision) : nlohmann::json(nullptr);
  j["recall"] = s.recall ? nlohmann::json(*s.recall) : nlohmann::json(nullptr);
  j["f1"] = s.f1 ? nlohmann::json(*s.f1) : nlohmann::json(nullptr);
  j["true_pairs"] = s.true_pairs;
  j["predicted_pairs"] = s.predicted_pairs;
  j["intersecting_pairs"] = s.intersecting_pairs;
  return j.dump(2);
}

std::string score_to_table(const PairwiseScore& s) {
  auto fmt = [](const std::optional<double>& v) {
    if (!v) return std::string("undefined");
    std::ostringstream os;
    os.precision(6);
    os << *v;
    return os.str();
  };
  std::ostringstream out;
  out << "metric              value\n"
      << "precision           " << fmt(s.precision) << "\n"
      << "recall              " << fmt(s.recall) << "\n"
      << "f1                  " << fmt(s.f1) << "\n"
      << "true_pairs          " << s.true_pairs << "\n"
      << "predicted_pairs     " << s.predicted_pairs << "\n"
      << "intersecting_pairs  " << s.intersecting_pairs << "\n";
  return out.str();
}

std::string comparison_to_json(const ClusterComparison& c) {
  nlohmann::json j;
  j["clustered_by_a_not_b"] = c.clustered_by_a_not_b;
  j["clustered_by_b_not_a"] = c.clustered_by_b_not_a;
  j["largest_a"] = c.largest_a;
  j["largest_b"] = c.largest_b;
  j["largest_a_fragments"] = c.largest_a_fragments;
  return j.dump(2);
}

}  // namespace ind
