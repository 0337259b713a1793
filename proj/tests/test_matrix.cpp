#include <doctest.h>

#include <random>
#include <sstream>

#include "ind/matrix.hpp"

using namespace ind;

namespace {

// The worked two-author example: Author 1 uses Univ A twice and Univ B once,
// Author 2 uses Univ C three times.
std::vector<Observation> two_author_observations() {
  return {
      {"Author 1", "Univ A", "p1"}, {"Author 1", "Univ A", "p2"},
      {"Author 1", "Univ B", "p3"}, {"Author 2", "Univ C", "p4"},
      {"Author 2", "Univ C", "p5"}, {"Author 2", "Univ C", "p6"},
  };
}

std::uint32_t entry(const AuthorAffiliationMatrix& m, std::uint32_t r, std::uint32_t c) {
  for (std::uint32_t k = m.row_ptr[r]; k < m.row_ptr[r + 1]; ++k) {
    if (m.col[k] == c) return m.count[k];
  }
  return 0;
}

}  // namespace

TEST_CASE("interner assigns consecutive ids in first-seen order") {
  Interner in;
  CHECK(in.intern("b") == 0);
  CHECK(in.intern("a") == 1);
  CHECK(in.intern("b") == 0);
  CHECK(in.size() == 2);
  CHECK(in.at(0) == "b");
  CHECK(in.at(1) == "a");
  CHECK(in.lookup("a") == 1);
  CHECK(!in.lookup("c"));
}

TEST_CASE("build_matrix reproduces the two-author example rows") {
  CorpusMatrix cm = build_matrix(two_author_observations());
  const auto& m = cm.matrix;
  REQUIRE(m.n_authors == 2);
  REQUIRE(m.n_affiliations == 3);
  // rows [2,1,0] and [0,0,3]
  CHECK(entry(m, 0, 0) == 2);
  CHECK(entry(m, 0, 1) == 1);
  CHECK(entry(m, 0, 2) == 0);
  CHECK(entry(m, 1, 0) == 0);
  CHECK(entry(m, 1, 1) == 0);
  CHECK(entry(m, 1, 2) == 3);
  CHECK(cm.affiliations.at(0) == "Univ A");
  CHECK(cm.affiliations.at(2) == "Univ C");
}

TEST_CASE("build_matrix edge cases") {
  CorpusMatrix empty = build_matrix({});
  CHECK(empty.matrix.n_authors == 0);
  CHECK(empty.matrix.n_affiliations == 0);
  CHECK(empty.matrix.nonzeros() == 0);

  CorpusMatrix single = build_matrix({{"A", "X", "p"}});
  CHECK(single.matrix.nonzeros() == 1);
  CHECK(single.matrix.total() == 1);
}

TEST_CASE("matrix_stats") {
  MatrixStats s = matrix_stats(build_matrix(two_author_observations()).matrix);
  CHECK(s.rows == 2);
  CHECK(s.cols == 3);
  CHECK(s.nonzeros == 3);
  CHECK(s.total == 6);

  MatrixStats zero = matrix_stats(build_matrix({}).matrix);
  CHECK(zero.rows == 0);
  CHECK(zero.nonzeros == 0);

  std::vector<Observation> dup(7, {"A", "X", "p"});
  MatrixStats d = matrix_stats(build_matrix(dup).matrix);
  CHECK(d.nonzeros == 1);
  CHECK(d.total == 7);
}

TEST_CASE("conservation and round-trip over random observation streams") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Observation> obs;
    std::size_t n = rng() % 400;
    for (std::size_t k = 0; k < n; ++k) {
      obs.push_back({"author" + std::to_string(rng() % 30),
                     "affil" + std::to_string(rng() % 20), "doi"});
    }
    CorpusMatrix cm = build_matrix(obs);
    CHECK(cm.matrix.total() == obs.size());

    // identical sequence -> identical interning
    CorpusMatrix again = build_matrix(obs);
    CHECK(again.authors.size() == cm.authors.size());
    for (std::uint32_t i = 0; i < cm.authors.size(); ++i)
      CHECK(again.authors.at(i) == cm.authors.at(i));

    // every stored entry reverse-interns to a real observation pair
    for (std::uint32_t r = 0; r < cm.matrix.n_authors; ++r) {
      for (std::uint32_t k = cm.matrix.row_ptr[r]; k < cm.matrix.row_ptr[r + 1]; ++k) {
        CHECK(cm.authors.lookup(cm.authors.at(r)) == r);
        CHECK(cm.affiliations.lookup(cm.affiliations.at(cm.matrix.col[k])) == cm.matrix.col[k]);
      }
    }
  }
}

TEST_CASE("snapshot round-trip") {
  CorpusMatrix cm = build_matrix(two_author_observations());
  std::stringstream buf;
  save_snapshot(cm, buf);
  CorpusMatrix back = load_snapshot(buf);
  CHECK(back.matrix.n_authors == 2);
  CHECK(back.matrix.n_affiliations == 3);
  CHECK(back.matrix.total() == 6);
  CHECK(back.affiliations.at(1) == "Univ B");

  std::stringstream again;
  save_snapshot(back, again);
  std::stringstream orig;
  save_snapshot(cm, orig);
  CHECK(again.str() == orig.str());
}

TEST_CASE("snapshot rejects bad magic and version") {
  std::stringstream bad1(R"({"magic":"nope","version":1})");
  CHECK_THROWS_AS(load_snapshot(bad1), std::runtime_error);
  std::stringstream bad2(R"({"magic":"ind-aamatrix","version":99,"authors":[],"affiliations":[],"entries":[]})");
  CHECK_THROWS_AS(load_snapshot(bad2), std::runtime_error);
  std::stringstream bad3("not json at all");
  CHECK_THROWS_AS(load_snapshot(bad3), std::runtime_error);
}
