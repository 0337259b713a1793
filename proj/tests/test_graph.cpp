#include <doctest.h>

#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "ind/graph.hpp"
#include "test_support.hpp"

using namespace ind;
using namespace test_support;

namespace {

CorpusMatrix two_author_matrix() {
  return build_matrix({
      {"Author 1", "Univ A", "p1"}, {"Author 1", "Univ A", "p2"},
      {"Author 1", "Univ B", "p3"}, {"Author 2", "Univ C", "p4"},
      {"Author 2", "Univ C", "p5"}, {"Author 2", "Univ C", "p6"},
  });
}

Interner labels(std::uint32_t n) {
  Interner in;
  for (std::uint32_t i = 0; i < n; ++i) in.intern("n" + std::to_string(i));
  return in;
}

CooccurrenceMatrix from_entries(std::uint32_t n,
                                std::vector<CooccurrenceMatrix::Entry> entries) {
  CooccurrenceMatrix c;
  c.n = n;
  c.entries = std::move(entries);
  return c;
}

}  // namespace

TEST_CASE("threshold 1 keeps the Univ A - Univ B edge, Univ C isolated") {
  CorpusMatrix cm = two_author_matrix();
  CooccurrenceMatrix co = cooccurrence(binarize(cm.matrix));
  ThresholdGraph g = build_graph(co, 1);
  REQUIRE(g.edges.size() == 1);
  CHECK(cm.affiliations.at(g.edges[0].i) == "Univ A");
  CHECK(cm.affiliations.at(g.edges[0].j) == "Univ B");

  Clustering cl = components(g, cm.affiliations);
  REQUIRE(cl.clusters.size() == 1);
  CHECK(cl.clusters[0].members == std::vector<std::string>{"Univ A", "Univ B"});
  CHECK(cl.singleton_count() == 1);
  CHECK(cl.singletons == std::vector<std::string>{"Univ C"});
}

TEST_CASE("threshold 2 removes every edge of the worked example") {
  CorpusMatrix cm = two_author_matrix();
  ThresholdGraph g = build_graph(cooccurrence(binarize(cm.matrix)), 2);
  CHECK(g.edges.empty());
  Clustering cl = components(g, cm.affiliations);
  CHECK(cl.clusters.empty());
  CHECK(cl.singleton_count() == 3);
}

TEST_CASE("threshold 0 is rejected") {
  CooccurrenceMatrix c = from_entries(2, {{0, 1, 5}});
  CHECK_THROWS_AS(build_graph(c, 0), std::invalid_argument);
}

TEST_CASE("edge with weight exactly at the threshold survives") {
  CooccurrenceMatrix c = from_entries(2, {{0, 0, 3}, {0, 1, 3}, {1, 1, 3}});
  CHECK(build_graph(c, 3).edges.size() == 1);
  CHECK(build_graph(c, 4).edges.empty());
}

TEST_CASE("component ordering: size desc, then smallest member") {
  // path n0-n1, n1-n2 plus separate n3-n4 edge
  CooccurrenceMatrix c = from_entries(5, {{0, 1, 2}, {1, 2, 2}, {3, 4, 2}});
  Clustering cl = components(build_graph(c, 1), labels(5));
  REQUIRE(cl.clusters.size() == 2);
  CHECK(cl.clusters[0].members == std::vector<std::string>{"n0", "n1", "n2"});
  CHECK(cl.clusters[1].members == std::vector<std::string>{"n3", "n4"});

  CHECK(component_at(cl, 0).size() == 3);
  CHECK(component_at(cl, 1).size() == 2);
  CHECK_THROWS_AS(component_at(cl, 2), std::out_of_range);
}

TEST_CASE("equal-size components tie-break on their smallest member") {
  CooccurrenceMatrix c = from_entries(4, {{2, 3, 1}, {0, 1, 1}});
  Clustering cl = components(build_graph(c, 1), labels(4));
  REQUIRE(cl.clusters.size() == 2);
  CHECK(cl.clusters[0].members.front() == "n0");
  CHECK(cl.clusters[1].members.front() == "n2");
}

TEST_CASE("build_graph equals a brute-force filter of the oracle matrix") {
  std::mt19937_64 rng(7);
  auto dense_mask = random_dense_mask(rng, 60, 25, 12);
  auto oracle = brute_force_cooccurrence(dense_mask);
  CooccurrenceMatrix co = cooccurrence(to_mask(dense_mask));
  for (std::uint32_t t = 1; t <= 4; ++t) {
    ThresholdGraph g = build_graph(co, t);
    std::set<std::pair<std::uint32_t, std::uint32_t>> got;
    for (const auto& e : g.edges) got.emplace(e.i, e.j);
    std::set<std::pair<std::uint32_t, std::uint32_t>> expected;
    for (std::uint32_t i = 0; i < oracle.size(); ++i) {
      for (std::uint32_t j = i + 1; j < oracle.size(); ++j) {
        if (oracle[i][j] >= t) expected.emplace(i, j);
      }
    }
    CHECK(got == expected);
  }
}

TEST_CASE("sweep rows and monotonicity") {
  CorpusMatrix cm = two_author_matrix();
  CooccurrenceMatrix co = cooccurrence(binarize(cm.matrix));
  auto rows = sweep(co, cm.affiliations, 1, 2);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].threshold == 1);
  CHECK(rows[0].clusters == 1);
  CHECK(rows[0].largest == 2);
  CHECK(rows[1].clusters == 0);
  CHECK(rows[1].edges <= rows[0].edges);

  CHECK_THROWS_AS(sweep(co, cm.affiliations, 0, 2), std::invalid_argument);
  CHECK_THROWS_AS(sweep(co, cm.affiliations, 3, 2), std::invalid_argument);
}

TEST_CASE("refinement: raising the threshold only splits clusters") {
  std::mt19937_64 rng(9);
  auto dense_mask = random_dense_mask(rng, 120, 30, 15);
  CooccurrenceMatrix co = cooccurrence(to_mask(dense_mask));
  Interner names = labels(30);

  Clustering prev = components(build_graph(co, 1), names);
  for (std::uint32_t t = 2; t <= 6; ++t) {
    Clustering next = components(build_graph(co, t), names);
    std::map<std::string, std::size_t> prev_cluster;
    for (std::size_t k = 0; k < prev.clusters.size(); ++k) {
      for (const auto& m : prev.clusters[k].members) prev_cluster[m] = k;
    }
    for (const auto& c : next.clusters) {
      REQUIRE(prev_cluster.count(c.members.front()));
      std::size_t home = prev_cluster[c.members.front()];
      for (const auto& m : c.members) CHECK(prev_cluster.at(m) == home);
    }
    prev = std::move(next);
  }
}

TEST_CASE("partition: clusters plus singletons cover the id space exactly") {
  std::mt19937_64 rng(10);
  auto dense_mask = random_dense_mask(rng, 40, 20, 20);
  CooccurrenceMatrix co = cooccurrence(to_mask(dense_mask));
  Clustering cl = components(build_graph(co, 2), labels(20));
  std::multiset<std::string> all(cl.singletons.begin(), cl.singletons.end());
  for (const auto& c : cl.clusters) {
    CHECK(c.size() >= 2);
    all.insert(c.members.begin(), c.members.end());
  }
  CHECK(all.size() == 20);
  std::set<std::string> unique(all.begin(), all.end());
  CHECK(unique.size() == 20);  // no overlaps
}

TEST_CASE("json and dot exports") {
  CorpusMatrix cm = two_author_matrix();
  Clustering cl = components(build_graph(cooccurrence(binarize(cm.matrix)), 1),
                             cm.affiliations);
  std::string js = clustering_to_json(cl);
  CHECK(js.find("\"threshold\": 1") != std::string::npos);
  CHECK(js.find("\"Univ A\"") != std::string::npos);
  CHECK(js.find("singleton_members") == std::string::npos);

  std::string js_all = clustering_to_json(cl, true);
  CHECK(js_all.find("singleton_members") != std::string::npos);
  CHECK(js_all.find("\"Univ C\"") != std::string::npos);

  std::string dot = cluster_to_dot(component_at(cl, 0));
  CHECK(dot.find("\"Univ A\" -- \"Univ B\" [label=\"1\"]") != std::string::npos);
}
