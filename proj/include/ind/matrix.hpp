#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ind/ingest.hpp"

namespace ind {

/// Maps strings to consecutive ids in first-seen order.
class Interner {
 public:
  std::uint32_t intern(std::string_view s);
  std::optional<std::uint32_t> lookup(std::string_view s) const;
  const std::string& at(std::uint32_t id) const { return strings_.at(id); }
  std::uint32_t size() const { return static_cast<std::uint32_t>(strings_.size()); }

 private:
  std::unordered_map<std::string, std::uint32_t> ids_;
  std::vector<std::string> strings_;
};

/// Sparse row-compressed author x affiliation count matrix.
/// Columns within a row are sorted; all counts >= 1.
struct AuthorAffiliationMatrix {
  std::uint32_t n_authors = 0;
  std::uint32_t n_affiliations = 0;
  std::vector<std::uint32_t> row_ptr;  // size n_authors + 1
  std::vector<std::uint32_t> col;
  std::vector<std::uint32_t> count;

  std::size_t nonzeros() const { return col.size(); }
  std::uint64_t total() const;
};

struct CorpusMatrix {
  AuthorAffiliationMatrix matrix;
  Interner authors;
  Interner affiliations;
};

struct MatrixStats {
  std::uint32_t rows = 0;
  std::uint32_t cols = 0;
  std::size_t nonzeros = 0;
  std::uint64_t total = 0;
};

CorpusMatrix build_matrix(const std::vector<Observation>& observations);

MatrixStats matrix_stats(const AuthorAffiliationMatrix& m);

/// Versioned JSON snapshot (interners + entries) for pipeline checkpointing.
void save_snapshot(const CorpusMatrix& cm, std::ostream& out);

/// Throws std::runtime_error on magic/version mismatch or malformed payload.
CorpusMatrix load_snapshot(std::istream& in);

}  // namespace ind
