#include "ind/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace ind {
namespace {

// Union-find with path compression and union by size.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), 0u);
  }

  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
  }

 private:
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> size_;
};

}  // namespace

ThresholdGraph build_graph(const CooccurrenceMatrix& c, std::uint32_t threshold) {
  if (threshold < 1)
    throw std::invalid_argument("threshold must be >= 1 (0 would link every pair sharing an author)");
  ThresholdGraph g;
  g.threshold = threshold;
  g.n = c.n;
  for (const auto& e : c.entries) {
    if (e.i != e.j && e.w >= threshold) g.edges.push_back({e.i, e.j, e.w});
  }
  return g;
}

Clustering components(const ThresholdGraph& g, const Interner& affiliations) {
  UnionFind uf(g.n);
  std::vector<bool> connected(g.n, false);
  for (const auto& e : g.edges) {
    uf.unite(e.i, e.j);
    connected[e.i] = connected[e.j] = true;
  }

  std::map<std::uint32_t, std::vector<std::uint32_t>> groups;
  for (std::uint32_t v = 0; v < g.n; ++v) {
    if (connected[v]) groups[uf.find(v)].push_back(v);
  }

  Clustering cl;
  cl.threshold = g.threshold;
  std::vector<std::uint32_t> root_of(g.n);
  for (std::uint32_t v = 0; v < g.n; ++v) root_of[v] = uf.find(v);

  std::map<std::uint32_t, std::size_t> cluster_index;
  for (const auto& [root, ids] : groups) {
    Cluster c;
    for (std::uint32_t id : ids) c.members.push_back(affiliations.at(id));
    std::sort(c.members.begin(), c.members.end());
    cluster_index[root] = cl.clusters.size();
    cl.clusters.push_back(std::move(c));
  }
  for (const auto& e : g.edges) {
    std::string a = affiliations.at(e.i);
    std::string b = affiliations.at(e.j);
    if (b < a) std::swap(a, b);
    cl.clusters[cluster_index.at(root_of[e.i])].edges.emplace_back(std::move(a), std::move(b), e.w);
  }
  for (auto& c : cl.clusters) std::sort(c.edges.begin(), c.edges.end());

  std::stable_sort(cl.clusters.begin(), cl.clusters.end(),
                   [](const Cluster& a, const Cluster& b) {
                     if (a.size() != b.size()) return a.size() > b.size();
                     return a.members.front() < b.members.front();
                   });

  for (std::uint32_t v = 0; v < g.n; ++v) {
    if (!connected[v]) cl.singletons.push_back(affiliations.at(v));
  }
  std::sort(cl.singletons.begin(), cl.singletons.end());
  return cl;
}

std::vector<SweepRow> sweep(const CooccurrenceMatrix& c, const Interner& affiliations,
                            std::uint32_t t_min, std::uint32_t t_max) {
  if (t_min < 1 || t_min > t_max) throw std::invalid_argument("need 1 <= t_min <= t_max");
  std::vector<SweepRow> rows;
  for (std::uint32_t t = t_min; t <= t_max; ++t) {
    ThresholdGraph g = build_graph(c, t);
    Clustering cl = components(g, affiliations);
    std::size_t largest = cl.clusters.empty() ? 0 : cl.clusters.front().size();
    std::size_t clustered = 0;
    for (const auto& cluster : cl.clusters) clustered += cluster.size();
    rows.push_back({t, cl.clusters.size(), largest, clustered, g.edges.size()});
  }
  return rows;
}

const Cluster& component_at(const Clustering& cl, std::size_t rank) {
  if (rank >= cl.clusters.size())
    throw std::out_of_range("component rank out of range: " + std::to_string(rank) + " >= " +
                            std::to_string(cl.clusters.size()));
  return cl.clusters[rank];
}

std::string clustering_to_json(const Clustering& cl, bool include_singletons) {
  nlohmann::json j;
  j["threshold"] = cl.threshold;
  nlohmann::json clusters = nlohmann::json::array();
  for (std::size_t k = 0; k < cl.clusters.size(); ++k) {
    const Cluster& c = cl.clusters[k];
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& [a, b, w] : c.edges) edges.push_back({a, b, w});
    clusters.push_back({{"rank", k}, {"size", c.size()}, {"members", c.members},
                        {"edges", std::move(edges)}});
  }
  j["clusters"] = std::move(clusters);
  j["singletons"] = cl.singleton_count();
  if (include_singletons) j["singleton_members"] = cl.singletons;
  return j.dump(2);
}

namespace {
std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}
}  // namespace

std::string cluster_to_dot(const Cluster& cluster) {
  std::ostringstream out;
  out << "graph cluster {\n";
  for (const auto& m : cluster.members) {
    out << "  \"" << dot_escape(m) << "\";\n";
  }
  for (const auto& [a, b, w] : cluster.edges) {
    out << "  \"" << dot_escape(a) << "\" -- \"" << dot_escape(b) << "\" [label=\"" << w
        << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace ind
