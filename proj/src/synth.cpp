#include "ind/synth.hpp"

#include <cctype>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace ind {
namespace {

const std::vector<std::string> kKinds = {
    "National Institute of Technology", "Institute of Medical Sciences",
    "Central University",               "Institute of Science",
    "College of Engineering",           "Academy of Higher Education",
};

const std::vector<std::string> kInitials = {"A.", "B.", "C.", "D.", "M.", "P.", "R.", "S."};
const std::vector<std::string> kFamilies = {"Sharma", "Kumar",  "Patel", "Singh",
                                            "Reddy",  "Iyer",   "Das",   "Gupta",
                                            "Mehta",  "Nair"};

std::string abbreviate(const std::string& name) {
  std::string abbr;
  bool word_start = true;
  for (char c : name) {
    if (c == ' ') {
      word_start = true;
    } else {
      if (word_start && std::isupper(static_cast<unsigned char>(c))) abbr.push_back(c);
      word_start = false;
    }
  }
  return abbr;  // "National Institute of Technology" -> "NIT"
}

// Surface variants exercising the cleaning path: abbreviation, comma
// reordering, and a department prefix with a leading number.
std::vector<std::string> alias_variants(const std::string& kind, const std::string& city) {
  const std::string full = kind + " " + city;
  const std::string abbr = abbreviate(kind);
  return {
      full,
      abbr + " " + city,
      city + ", " + kind,
      "1 Department of Physics, " + full,
      kind + ", " + city,
      abbr + ", " + city,
  };
}

// Bounded draws use modulo on the raw engine output so corpora are
// byte-identical across standard library implementations.
std::uint32_t draw(std::mt19937_64& rng, IntRange r) {
  return r.lo + static_cast<std::uint32_t>(rng() % (r.hi - r.lo + 1));
}

double draw_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

void validate(const SynthConfig& c) {
  if (c.institute_count < 1) throw std::invalid_argument("institute_count must be >= 1");
  if (!c.aliases_per_institute.valid() || !c.authors_per_institute.valid() ||
      !c.papers_per_author.valid() || !c.authors_per_paper.valid())
    throw std::invalid_argument("all ranges must be nonempty and positive");
  if (c.aliases_per_institute.hi > 6)
    throw std::invalid_argument("at most 6 alias variants are available per institute");
  if (c.homonym_rate < 0 || c.homonym_rate > 1 || c.cross_institute_noise_rate < 0 ||
      c.cross_institute_noise_rate > 1)
    throw std::invalid_argument("rates must lie in [0,1]");
  if (c.homonym_rate > 0 && c.institute_count < 2)
    throw std::invalid_argument("homonym_rate > 0 needs at least 2 institutes");
  if (c.cross_institute_noise_rate > 0 && c.institute_count < 2)
    throw std::invalid_argument("cross_institute_noise_rate > 0 needs at least 2 institutes");
}

}  // namespace

std::optional<std::uint32_t> guaranteed_threshold(const SynthConfig& c) {
  const bool solo_papers = c.authors_per_paper.lo == 1 && c.authors_per_paper.hi == 1;
  const bool full_alias_coverage = c.papers_per_author.lo >= c.aliases_per_institute.hi;
  const bool noise_free = c.homonym_rate == 0.0 && c.cross_institute_noise_rate == 0.0;
  if (solo_papers && full_alias_coverage && noise_free)
    return c.authors_per_institute.lo;
  return std::nullopt;
}

SyntheticCorpus generate(const SynthConfig& config) {
  validate(config);
  std::mt19937_64 rng(config.rng_seed);
  SyntheticCorpus corpus;

  struct Institute {
    std::vector<std::string> aliases;       // raw forms
    std::vector<std::string> author_names;
  };
  std::vector<Institute> institutes(config.institute_count);

  std::uint32_t next_author = 0;
  for (std::uint32_t i = 0; i < config.institute_count; ++i) {
    auto& inst = institutes[i];
    const std::string& kind = kKinds[i % kKinds.size()];
    const std::string city = "City" + std::to_string(i);
    auto variants = alias_variants(kind, city);
    variants.resize(draw(rng, config.aliases_per_institute));
    inst.aliases = variants;
    for (const auto& raw : inst.aliases) {
      corpus.truth.affiliation_institute.emplace(clean_affiliation(raw), i);
    }

    std::uint32_t n_authors = draw(rng, config.authors_per_institute);
    for (std::uint32_t k = 0; k < n_authors; ++k) {
      std::string name;
      if (i > 0 && config.homonym_rate > 0 && draw_unit(rng) < config.homonym_rate) {
        // reuse a name from an earlier institute
        std::uint32_t other = static_cast<std::uint32_t>(rng() % i);
        const auto& pool = institutes[other].author_names;
        name = pool[rng() % pool.size()];
      } else {
        std::uint32_t idx = next_author++;
        name = kInitials[idx % kInitials.size()] + " " +
               kFamilies[idx % kFamilies.size()] + std::to_string(idx / kFamilies.size());
      }
      inst.author_names.push_back(name);
      corpus.truth.author_institutes.emplace(name, i);
    }
  }
  corpus.raw_aliases.reserve(institutes.size());
  for (const auto& inst : institutes) corpus.raw_aliases.push_back(inst.aliases);

  // Papers: each paper takes the next authors_per_paper authors of the
  // institute round-robin; each author appearance advances that author's own
  // alias cursor (offset by author index so all aliases are in use).
  std::uint64_t paper_seq = 0;
  for (std::uint32_t i = 0; i < config.institute_count; ++i) {
    const auto& inst = institutes[i];
    const auto n = static_cast<std::uint32_t>(inst.author_names.size());
    const std::uint32_t a_count = static_cast<std::uint32_t>(inst.aliases.size());
    const std::uint32_t ppa = draw(rng, config.papers_per_author);
    const std::uint32_t app = std::min(draw(rng, config.authors_per_paper), n);
    const std::uint64_t papers = (static_cast<std::uint64_t>(n) * ppa + app - 1) / app;

    std::vector<std::uint32_t> alias_uses(n, 0);
    std::uint32_t author_pos = 0;
    for (std::uint64_t p = 0; p < papers; ++p) {
      PaperRecord rec;
      rec.doi = "10.9999/synth." + std::to_string(paper_seq++);
      for (std::uint32_t s = 0; s < app; ++s) {
        std::uint32_t k = author_pos;
        author_pos = (author_pos + 1) % n;
        AuthorEntry entry;
        entry.name = inst.author_names[k];
        if (config.cross_institute_noise_rate > 0 &&
            draw_unit(rng) < config.cross_institute_noise_rate) {
          std::uint32_t other = static_cast<std::uint32_t>(rng() % (config.institute_count - 1));
          if (other >= i) ++other;
          const auto& other_aliases = institutes[other].aliases;
          entry.affiliations.push_back(other_aliases[rng() % other_aliases.size()]);
        } else {
          entry.affiliations.push_back(inst.aliases[(k + alias_uses[k]) % a_count]);
          ++alias_uses[k];
        }
        rec.authors.push_back(std::move(entry));
      }
      corpus.papers.push_back(std::move(rec));
    }
  }
  return corpus;
}

void plant_confusion(SyntheticCorpus& corpus, std::uint32_t shared_author_count) {
  if (corpus.raw_aliases.size() < 2)
    throw std::invalid_argument("plant_confusion needs at least 2 institutes");
  if (shared_author_count == 0) return;
  const std::string& alias_a = corpus.raw_aliases[0][0];
  const std::string& alias_b = corpus.raw_aliases[1][0];
  for (std::uint32_t k = 0; k < shared_author_count; ++k) {
    std::string name = "T. Bridger" + std::to_string(k);
    corpus.truth.author_institutes.emplace(name, 0);
    corpus.truth.author_institutes.emplace(name, 1);
    for (int rep = 0; rep < 3; ++rep) {
      for (const std::string* alias : {&alias_a, &alias_b}) {
        PaperRecord rec;
        rec.doi = "10.9999/planted." + std::to_string(k) + "." + std::to_string(rep) +
                  (alias == &alias_a ? ".a" : ".b");
        rec.authors.push_back({name, {*alias}});
        corpus.papers.push_back(std::move(rec));
      }
    }
  }
}

void write_corpus(const std::vector<PaperRecord>& papers, std::ostream& out) {
  for (const auto& rec : papers) {
    nlohmann::json authors = nlohmann::json::array();
    for (const auto& a : rec.authors) {
      authors.push_back({{"name", a.name}, {"affiliations", a.affiliations}});
    }
    nlohmann::json j{{"doi", rec.doi}, {"authors", std::move(authors)}};
    out << j.dump() << '\n';
  }
}

void write_truth(const SyntheticTruth& truth, std::ostream& out) {
  for (const auto& [aff, inst] : truth.affiliation_institute) {
    nlohmann::json j{{"affiliation", aff}, {"institute_id", inst}};
    out << j.dump() << '\n';
  }
}

SyntheticTruth read_truth(std::istream& in) {
  SyntheticTruth truth;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    nlohmann::json j = nlohmann::json::parse(line);
    truth.affiliation_institute.emplace(j.at("affiliation").get<std::string>(),
                                        j.at("institute_id").get<std::uint32_t>());
  }
  return truth;
}

}  // namespace ind
