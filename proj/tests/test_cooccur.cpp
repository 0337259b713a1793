#include <doctest.h>

#include <random>
#include <sstream>

#include "ind/cooccur.hpp"
#include "ind/matrix.hpp"
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

}  // namespace

TEST_CASE("binarize keeps the sparsity pattern and drops counts") {
  CorpusMatrix cm = two_author_matrix();
  BinaryMask mask = binarize(cm.matrix);
  CHECK(mask.row_ptr == cm.matrix.row_ptr);
  CHECK(mask.col == cm.matrix.col);

  BinaryMask empty = binarize(build_matrix({}).matrix);
  CHECK(empty.col.empty());
}

TEST_CASE("co-occurrence of the two-author mask matches the worked table") {
  CooccurrenceMatrix c = cooccurrence(binarize(two_author_matrix().matrix));
  // [[1,1,0],[1,1,0],[0,0,1]]
  CHECK(c.n == 3);
  CHECK(c.weight(0, 0) == 1);
  CHECK(c.weight(0, 1) == 1);
  CHECK(c.weight(0, 2) == 0);
  CHECK(c.weight(1, 1) == 1);
  CHECK(c.weight(1, 2) == 0);
  CHECK(c.weight(2, 2) == 1);
}

TEST_CASE("single author with k affiliations yields an all-ones block") {
  std::vector<Observation> obs;
  for (int k = 0; k < 5; ++k) obs.push_back({"A", "affil" + std::to_string(k), "p"});
  CooccurrenceMatrix c = cooccurrence(binarize(build_matrix(obs).matrix));
  for (std::uint32_t i = 0; i < 5; ++i) {
    for (std::uint32_t j = i; j < 5; ++j) CHECK(c.weight(i, j) == 1);
  }
}

TEST_CASE("random masks match the brute-force pair-counting oracle") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 25; ++trial) {
    std::size_t n_authors = 1 + rng() % 50;
    std::size_t n_affils = 1 + rng() % 30;
    auto dense = random_dense_mask(rng, n_authors, n_affils, 10);
    CooccurrenceMatrix c = cooccurrence(to_mask(dense));
    CHECK(matches_dense(c, brute_force_cooccurrence(dense)));
  }
}

TEST_CASE("symmetry and pair bound invariants hold on random masks") {
  std::mt19937_64 rng(43);
  auto dense = random_dense_mask(rng, 80, 40, 8);
  CooccurrenceMatrix c = cooccurrence(to_mask(dense));
  for (const auto& e : c.entries) {
    CHECK(c.weight(e.j, e.i) == e.w);  // symmetric lookup
    CHECK(e.w <= std::min(c.weight(e.i, e.i), c.weight(e.j, e.j)));
  }
}

TEST_CASE("mask invariance: positive counts do not matter") {
  std::mt19937_64 rng(44);
  std::vector<Observation> obs;
  for (int k = 0; k < 300; ++k) {
    std::string author = "a" + std::to_string(rng() % 20);
    std::string affil = "f" + std::to_string(rng() % 15);
    // random positive multiplicity
    std::size_t reps = 1 + rng() % 4;
    for (std::size_t r = 0; r < reps; ++r) obs.push_back({author, affil, "p"});
  }
  CorpusMatrix cm = build_matrix(obs);
  CooccurrenceMatrix original = cooccurrence(binarize(cm.matrix));

  // replace every count with a different positive value
  AuthorAffiliationMatrix inflated = cm.matrix;
  for (auto& n : inflated.count) n = n * 7 + 3;
  CooccurrenceMatrix changed = cooccurrence(binarize(inflated));
  REQUIRE(changed.entries.size() == original.entries.size());
  for (std::size_t k = 0; k < original.entries.size(); ++k) {
    CHECK(changed.entries[k].i == original.entries[k].i);
    CHECK(changed.entries[k].j == original.entries[k].j);
    CHECK(changed.entries[k].w == original.entries[k].w);
  }
}

TEST_CASE("binarize is idempotent through the pipeline") {
  CorpusMatrix cm = two_author_matrix();
  BinaryMask once = binarize(cm.matrix);
  AuthorAffiliationMatrix as_counts{once.n_authors, once.n_affiliations, once.row_ptr,
                                    once.col,
                                    std::vector<std::uint32_t>(once.col.size(), 1)};
  BinaryMask twice = binarize(as_counts);
  CHECK(twice.row_ptr == once.row_ptr);
  CHECK(twice.col == once.col);
}

TEST_CASE("parallel co-occurrence is identical for any worker count") {
  std::mt19937_64 rng(45);
  auto dense = random_dense_mask(rng, 500, 60, 4);
  BinaryMask mask = to_mask(dense);
  CooccurrenceMatrix base = cooccurrence(mask);
  for (unsigned workers : {1u, 2u, 4u, 8u}) {
    CooccurrenceMatrix par = cooccurrence_parallel(mask, workers);
    REQUIRE(par.entries.size() == base.entries.size());
    for (std::size_t k = 0; k < base.entries.size(); ++k) {
      CHECK(par.entries[k].i == base.entries[k].i);
      CHECK(par.entries[k].j == base.entries[k].j);
      CHECK(par.entries[k].w == base.entries[k].w);
    }
  }
}

TEST_CASE("fig-style mask with 4 workers still gives the worked table") {
  CooccurrenceMatrix c = cooccurrence_parallel(binarize(two_author_matrix().matrix), 4);
  CHECK(c.weight(0, 1) == 1);
  CHECK(c.weight(0, 2) == 0);
}

TEST_CASE("snapshot JSONL orders labels lexicographically") {
  CorpusMatrix cm = build_matrix({{"A", "Zeta", "p"}, {"A", "Alpha", "p"}});
  std::ostringstream out;
  write_cooccurrence_jsonl(cooccurrence(binarize(cm.matrix)), cm.affiliations, out);
  std::string text = out.str();
  // off-diagonal pair must appear as Alpha < Zeta
  CHECK(text.find("{\"i_label\":\"Alpha\",\"j_label\":\"Zeta\",\"w\":1}") != std::string::npos);
  // diagonal entries present
  CHECK(text.find("{\"i_label\":\"Alpha\",\"j_label\":\"Alpha\",\"w\":1}") != std::string::npos);
}
