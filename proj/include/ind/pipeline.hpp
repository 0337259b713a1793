#pragma once

#include <cstdint>
#include <iosfwd>

#include "ind/cooccur.hpp"
#include "ind/graph.hpp"
#include "ind/matrix.hpp"

namespace ind {

struct IngestCounts {
  std::size_t records = 0;
  std::size_t skipped_lines = 0;
  std::size_t observations = 0;
  std::size_t dropped = 0;
};

/// parse_corpus + extract_observations + build_matrix in one pass.
CorpusMatrix matrix_from_corpus(std::istream& in, IngestCounts* counts = nullptr);

/// binarize + cooccurrence_parallel.
CooccurrenceMatrix cooccurrence_of(const CorpusMatrix& cm, unsigned workers);

/// Full pipeline: corpus stream -> clustering at the given threshold.
Clustering cluster_corpus(std::istream& in, std::uint32_t threshold, unsigned workers,
                          IngestCounts* counts = nullptr);

}  // namespace ind
