#include "ind/pipeline.hpp"

#include <istream>

#include "ind/ingest.hpp"

namespace ind {

CorpusMatrix matrix_from_corpus(std::istream& in, IngestCounts* counts) {
  ParseResult parsed = parse_corpus(in);
  ExtractResult extracted = extract_observations(parsed.records);
  if (counts) {
    counts->records = parsed.records.size();
    counts->skipped_lines = parsed.skipped_lines;
    counts->observations = extracted.observations.size();
    counts->dropped = extracted.dropped;
  }
  return build_matrix(extracted.observations);
}

CooccurrenceMatrix cooccurrence_of(const CorpusMatrix& cm, unsigned workers) {
  return cooccurrence_parallel(binarize(cm.matrix), workers);
}

Clustering cluster_corpus(std::istream& in, std::uint32_t threshold, unsigned workers,
                          IngestCounts* counts) {
  CorpusMatrix cm = matrix_from_corpus(in, counts);
  CooccurrenceMatrix co = cooccurrence_of(cm, workers);
  return components(build_graph(co, threshold), cm.affiliations);
}

}  // namespace ind
