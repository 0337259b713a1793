#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "ind/cooccur.hpp"
#include "ind/evalkit.hpp"
#include "ind/graph.hpp"
#include "ind/ingest.hpp"
#include "ind/pipeline.hpp"
#include "ind/synth.hpp"

namespace py = pybind11;

namespace {

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  return in;
}

ind::SynthConfig make_config(std::uint32_t institutes, std::uint32_t aliases,
                             std::uint32_t authors, std::uint32_t papers,
                             std::uint32_t authors_per_paper, double homonym_rate,
                             double noise_rate, std::uint64_t seed) {
  ind::SynthConfig cfg;
  cfg.institute_count = institutes;
  cfg.aliases_per_institute = {aliases, aliases};
  cfg.authors_per_institute = {authors, authors};
  cfg.papers_per_author = {papers, papers};
  cfg.authors_per_paper = {authors_per_paper, authors_per_paper};
  cfg.homonym_rate = homonym_rate;
  cfg.cross_institute_noise_rate = noise_rate;
  cfg.rng_seed = seed;
  return cfg;
}

std::string cluster_file_json(const std::string& path, std::uint32_t threshold,
                              unsigned workers, bool include_singletons) {
  auto in = open_or_throw(path);
  return ind::clustering_to_json(ind::cluster_corpus(in, threshold, workers),
                                 include_singletons);
}

std::vector<std::tuple<std::uint32_t, std::size_t, std::size_t, std::size_t, std::size_t>>
sweep_file(const std::string& path, std::uint32_t t_min, std::uint32_t t_max,
           unsigned workers) {
  auto in = open_or_throw(path);
  ind::CorpusMatrix cm = ind::matrix_from_corpus(in);
  ind::CooccurrenceMatrix co = ind::cooccurrence_of(cm, workers);
  std::vector<std::tuple<std::uint32_t, std::size_t, std::size_t, std::size_t, std::size_t>> out;
  for (const auto& r : ind::sweep(co, cm.affiliations, t_min, t_max))
    out.emplace_back(r.threshold, r.clusters, r.largest, r.clustered_nodes, r.edges);
  return out;
}

void generate_corpus(const std::string& corpus_path, const std::string& truth_path,
                     std::uint32_t institutes, std::uint32_t aliases, std::uint32_t authors,
                     std::uint32_t papers, std::uint32_t authors_per_paper,
                     double homonym_rate, double noise_rate, std::uint64_t seed,
                     std::uint32_t plant_shared) {
  ind::SyntheticCorpus corpus = ind::generate(make_config(
      institutes, aliases, authors, papers, authors_per_paper, homonym_rate, noise_rate, seed));
  ind::plant_confusion(corpus, plant_shared);
  std::ofstream out(corpus_path);
  if (!out) throw std::runtime_error("cannot open file: " + corpus_path);
  ind::write_corpus(corpus.papers, out);
  std::ofstream tout(truth_path);
  if (!tout) throw std::runtime_error("cannot open file: " + truth_path);
  ind::write_truth(corpus.truth, tout);
}

std::string score_file_json(const std::string& corpus_path, const std::string& truth_path,
                            std::uint32_t threshold, unsigned workers) {
  auto in = open_or_throw(corpus_path);
  ind::Clustering cl = ind::cluster_corpus(in, threshold, workers);
  auto tin = open_or_throw(truth_path);
  ind::SyntheticTruth truth = ind::read_truth(tin);
  return ind::score_to_json(ind::pairwise_score(cl, truth));
}

std::vector<std::vector<std::string>> token_baseline_py(
    const std::vector<std::string>& affiliations, double cutoff) {
  ind::Clustering cl = ind::token_baseline(affiliations, cutoff);
  std::vector<std::vector<std::string>> out;
  for (const auto& c : cl.clusters) out.push_back(c.members);
  return out;
}

std::string cooccurrence_jsonl_of_file(const std::string& path, unsigned workers) {
  auto in = open_or_throw(path);
  ind::CorpusMatrix cm = ind::matrix_from_corpus(in);
  std::ostringstream out;
  ind::write_cooccurrence_jsonl(ind::cooccurrence_of(cm, workers), cm.affiliations, out);
  return out.str();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "context-based institute name disambiguation";

  m.def("clean_affiliation", &ind::clean_affiliation, py::arg("raw"));
  m.def("normalize_author", &ind::normalize_author, py::arg("raw"));

  m.def("cluster_file_json", &cluster_file_json, py::arg("path"), py::arg("threshold") = 1,
        py::arg("workers") = 1, py::arg("include_singletons") = false,
        "Run corpus -> matrix -> mask -> co-occurrence -> threshold graph -> "
        "components; returns the clustering as a JSON string.");
  m.def("sweep_file", &sweep_file, py::arg("path"), py::arg("t_min"), py::arg("t_max"),
        py::arg("workers") = 1,
        "Per-threshold (threshold, clusters, largest, clustered_nodes, edges) rows.");
  m.def("generate_corpus", &generate_corpus, py::arg("corpus_path"), py::arg("truth_path"),
        py::arg("institutes") = 10, py::arg("aliases") = 3, py::arg("authors") = 5,
        py::arg("papers") = 4, py::arg("authors_per_paper") = 1,
        py::arg("homonym_rate") = 0.0, py::arg("noise_rate") = 0.0, py::arg("seed") = 1,
        py::arg("plant_shared") = 0);
  m.def("score_file_json", &score_file_json, py::arg("corpus_path"), py::arg("truth_path"),
        py::arg("threshold") = 1, py::arg("workers") = 1,
        "Pairwise precision/recall/F1 of the pipeline clustering against a truth file.");
  m.def("token_baseline", &token_baseline_py, py::arg("affiliations"), py::arg("cutoff"),
        "Single-link token-Jaccard clusters (lists of members, largest first).");
  m.def("cooccurrence_jsonl", &cooccurrence_jsonl_of_file, py::arg("path"),
        py::arg("workers") = 1, "Co-occurrence snapshot of a corpus file as JSON-Lines.");
}
