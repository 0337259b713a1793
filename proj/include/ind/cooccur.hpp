#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "ind/matrix.hpp"

namespace ind {

/// 0/1 indicator of the author x affiliation matrix, same sparsity pattern.
struct BinaryMask {
  std::uint32_t n_authors = 0;
  std::uint32_t n_affiliations = 0;
  std::vector<std::uint32_t> row_ptr;
  std::vector<std::uint32_t> col;  // presence = 1
};

/// Sparse symmetric affiliation x affiliation matrix. Each unordered pair is
/// stored once with i <= j; entries sorted by (i, j). weight(i, i) is the
/// number of distinct authors using affiliation i.
struct CooccurrenceMatrix {
  struct Entry {
    std::uint32_t i;
    std::uint32_t j;
    std::uint32_t w;
  };

  std::uint32_t n = 0;
  std::vector<Entry> entries;

  std::uint32_t weight(std::uint32_t i, std::uint32_t j) const;
};

BinaryMask binarize(const AuthorAffiliationMatrix& m);

/// weight(i, j) = number of authors with mask(a, i) = mask(a, j) = 1.
CooccurrenceMatrix cooccurrence(const BinaryMask& mask);

/// Same result as cooccurrence() for every worker_count. Rows are split into
/// contiguous per-worker ranges; per-worker accumulators are merged in fixed
/// worker order so the output never depends on scheduling.
CooccurrenceMatrix cooccurrence_parallel(const BinaryMask& mask, unsigned worker_count);

/// JSON-Lines triples {"i_label":..., "j_label":..., "w":...} with
/// i_label < j_label for off-diagonal entries (diagonal has i_label == j_label),
/// sorted by label pair so output is byte-reproducible.
void write_cooccurrence_jsonl(const CooccurrenceMatrix& c, const Interner& affiliations,
                              std::ostream& out);

}  // namespace ind
