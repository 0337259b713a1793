#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ind/ingest.hpp"

namespace ind {

struct IntRange {
  std::uint32_t lo = 1;
  std::uint32_t hi = 1;
  bool valid() const { return lo >= 1 && lo <= hi; }
};

struct SynthConfig {
  std::uint32_t institute_count = 10;
  IntRange aliases_per_institute{3, 3};
  IntRange authors_per_institute{5, 5};
  IntRange papers_per_author{4, 4};
  IntRange authors_per_paper{1, 1};  // lead + coauthors
  double homonym_rate = 0.0;
  double cross_institute_noise_rate = 0.0;
  std::uint64_t rng_seed = 1;
};

/// Ground truth keyed by the *cleaned* affiliation surface form (the form the
/// pipeline clusters), since generated aliases exercise the leading-number
/// cleaning path.
struct SyntheticTruth {
  std::map<std::string, std::uint32_t> affiliation_institute;
  std::multimap<std::string, std::uint32_t> author_institutes;
};

struct SyntheticCorpus {
  std::vector<PaperRecord> papers;
  SyntheticTruth truth;
  // raw (pre-cleaning) alias strings per institute, needed by plant_confusion
  std::vector<std::vector<std::string>> raw_aliases;
};

/// Deterministic for a fixed seed. Authors cycle through their institute's
/// aliases round-robin (offset by author index), so when every author appears
/// at least aliases_per_institute.hi times, every alias pair of an institute
/// is linked by every one of its authors. Throws std::invalid_argument on an
/// infeasible config (e.g. homonym_rate > 0 with a single institute).
SyntheticCorpus generate(const SynthConfig& config);

/// The threshold at which zero-noise recovery is exact, when the config
/// guarantees full alias coverage per author (papers_per_author.lo >=
/// aliases_per_institute.hi with single-author papers). nullopt otherwise.
std::optional<std::uint32_t> guaranteed_threshold(const SynthConfig& config);

/// Adds shared_author_count authors who each publish 3 papers under an alias
/// of institute 0 and 3 papers under an alias of institute 1, planting a
/// cross-institute co-occurrence edge of weight shared_author_count.
void plant_confusion(SyntheticCorpus& corpus, std::uint32_t shared_author_count);

/// Same JSON-Lines corpus format ingest consumes.
void write_corpus(const std::vector<PaperRecord>& papers, std::ostream& out);

/// Truth file: JSON-Lines {"affiliation":..., "institute_id":...}.
void write_truth(const SyntheticTruth& truth, std::ostream& out);
SyntheticTruth read_truth(std::istream& in);

}  // namespace ind
