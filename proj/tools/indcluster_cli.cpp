#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ind/cooccur.hpp"
#include "ind/evalkit.hpp"
#include "ind/graph.hpp"
#include "ind/ingest.hpp"
#include "ind/matrix.hpp"
#include "ind/pipeline.hpp"
#include "ind/synth.hpp"

namespace {

constexpr const char* kVersion = "indcluster 0.1.0";

// exit codes
constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kIoError = 2;
constexpr int kDataError = 3;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open input file: " + path);
  return in;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open output file: " + path);
  return out;
}

// writes to the file when path is set, standard output otherwise
void emit(const std::optional<std::string>& path, const std::string& text) {
  if (path) {
    auto out = open_output(*path);
    out << text;
    if (!out) throw IoError("write failed: " + *path);
  } else {
    std::cout << text;
  }
}

ind::IntRange parse_range(const std::string& s) {
  ind::IntRange r;
  auto colon = s.find(':');
  try {
    if (colon == std::string::npos) {
      r.lo = r.hi = static_cast<std::uint32_t>(std::stoul(s));
    } else {
      r.lo = static_cast<std::uint32_t>(std::stoul(s.substr(0, colon)));
      r.hi = static_cast<std::uint32_t>(std::stoul(s.substr(colon + 1)));
    }
  } catch (const std::exception&) {
    throw CLI::ValidationError("expected N or LO:HI, got '" + s + "'");
  }
  if (!r.valid()) throw CLI::ValidationError("invalid range '" + s + "'");
  return r;
}

// shared input options: a raw corpus, a normalized observations file, or a
// matrix snapshot checkpoint
struct MatrixSource {
  std::optional<std::string> corpus;
  std::optional<std::string> observations;
  std::optional<std::string> checkpoint;

  void add_options(CLI::App& cmd) {
    auto* a = cmd.add_option("--input", corpus, "corpus JSON-Lines file");
    auto* b = cmd.add_option("--observations", observations, "normalized observations JSON-Lines file");
    auto* c = cmd.add_option("--checkpoint", checkpoint, "matrix snapshot checkpoint");
    a->excludes(b)->excludes(c);
    b->excludes(c);
  }

  ind::CorpusMatrix load(ind::IngestCounts* counts = nullptr) const {
    if (corpus) {
      auto in = open_input(*corpus);
      return ind::matrix_from_corpus(in, counts);
    }
    if (observations) {
      auto in = open_input(*observations);
      try {
        return ind::build_matrix(ind::read_observations(in));
      } catch (const std::exception& e) {
        throw DataError(std::string("bad observations file: ") + e.what());
      }
    }
    if (checkpoint) {
      auto in = open_input(*checkpoint);
      try {
        return ind::load_snapshot(in);
      } catch (const std::exception& e) {
        throw DataError(std::string("bad checkpoint: ") + e.what());
      }
    }
    throw CLI::ValidationError("one of --input/--observations/--checkpoint is required");
  }
};

int run(int argc, char** argv) {
  CLI::App app{"context-based institute name disambiguation"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  unsigned default_workers = std::max(1u, std::thread::hardware_concurrency());

  // ingest
  auto* ingest = app.add_subcommand("ingest", "normalize a corpus into observations");
  std::string ingest_in;
  std::string ingest_out;
  ingest->add_option("--input", ingest_in, "corpus JSON-Lines file")->required();
  ingest->add_option("--output", ingest_out, "observations JSON-Lines file")->required();

  // stats
  auto* stats = app.add_subcommand("stats", "author x affiliation matrix statistics");
  MatrixSource stats_src;
  stats_src.add_options(*stats);
  std::optional<std::string> stats_save;
  stats->add_option("--save", stats_save, "write a matrix snapshot checkpoint");

  // cluster
  auto* cluster = app.add_subcommand("cluster", "run the full pipeline and print clusters");
  MatrixSource cluster_src;
  cluster_src.add_options(*cluster);
  std::uint32_t threshold = 1;
  unsigned workers = default_workers;
  bool include_singletons = false;
  std::optional<std::string> cluster_out;
  cluster->add_option("--threshold", threshold, "minimum co-occurrence weight")
      ->check(CLI::Range(1u, std::numeric_limits<std::uint32_t>::max()));
  cluster->add_option("--workers", workers, "worker threads for the co-occurrence product")
      ->check(CLI::Range(1u, 1024u));
  cluster->add_flag("--include-singletons", include_singletons,
                    "list unclustered affiliations too");
  cluster->add_option("--output", cluster_out, "output file (default: stdout)");

  // sweep
  auto* sweep_cmd = app.add_subcommand("sweep", "cluster summaries over a threshold range");
  MatrixSource sweep_src;
  sweep_src.add_options(*sweep_cmd);
  std::uint32_t t_min = 1, t_max = 6;
  unsigned sweep_workers = default_workers;
  std::optional<std::string> sweep_out;
  sweep_cmd->add_option("--t-min", t_min)->check(CLI::Range(1u, std::numeric_limits<std::uint32_t>::max()));
  sweep_cmd->add_option("--t-max", t_max)->check(CLI::Range(1u, std::numeric_limits<std::uint32_t>::max()));
  sweep_cmd->add_option("--workers", sweep_workers)->check(CLI::Range(1u, 1024u));
  sweep_cmd->add_option("--output", sweep_out, "output file (default: stdout)");

  // export
  auto* export_cmd = app.add_subcommand("export", "export one component as DOT or JSON");
  MatrixSource export_src;
  export_src.add_options(*export_cmd);
  std::uint32_t export_threshold = 1;
  std::size_t rank = 0;
  std::string format = "dot";
  unsigned export_workers = default_workers;
  std::optional<std::string> export_out;
  export_cmd->add_option("--threshold", export_threshold)
      ->check(CLI::Range(1u, std::numeric_limits<std::uint32_t>::max()));
  export_cmd->add_option("--rank", rank, "component rank (0 = biggest)");
  export_cmd->add_option("--format", format)->check(CLI::IsMember({"dot", "json"}));
  export_cmd->add_option("--workers", export_workers)->check(CLI::Range(1u, 1024u));
  export_cmd->add_option("--output", export_out, "output file (default: stdout)");

  // gen
  auto* gen = app.add_subcommand("gen", "generate a synthetic corpus with ground truth");
  std::string gen_out, gen_truth;
  std::string r_aliases = "3", r_authors = "5", r_papers = "4", r_app = "1";
  ind::SynthConfig cfg;
  std::uint32_t plant_shared = 0;
  gen->add_option("--output", gen_out, "corpus JSON-Lines file")->required();
  gen->add_option("--truth", gen_truth, "truth JSON-Lines file")->required();
  gen->add_option("--institutes", cfg.institute_count)->check(CLI::Range(1u, 10000000u));
  gen->add_option("--aliases", r_aliases, "aliases per institute (N or LO:HI)");
  gen->add_option("--authors", r_authors, "authors per institute (N or LO:HI)");
  gen->add_option("--papers", r_papers, "papers per author (N or LO:HI)");
  gen->add_option("--authors-per-paper", r_app, "authors per paper (N or LO:HI)");
  gen->add_option("--homonym-rate", cfg.homonym_rate)->check(CLI::Range(0.0, 1.0));
  gen->add_option("--noise-rate", cfg.cross_institute_noise_rate)->check(CLI::Range(0.0, 1.0));
  gen->add_option("--seed", cfg.rng_seed);
  gen->add_option("--plant-shared", plant_shared,
                  "add this many authors bridging institutes 0 and 1");

  // eval
  auto* eval = app.add_subcommand("eval", "score a clustering against ground truth");
  std::string eval_in, eval_truth;
  std::uint32_t eval_threshold = 1;
  unsigned eval_workers = default_workers;
  std::string eval_format = "table";
  std::optional<double> baseline_cutoff;
  std::optional<std::string> eval_out;
  eval->add_option("--input", eval_in, "corpus JSON-Lines file")->required();
  eval->add_option("--truth", eval_truth, "truth JSON-Lines file")->required();
  eval->add_option("--threshold", eval_threshold)
      ->check(CLI::Range(1u, std::numeric_limits<std::uint32_t>::max()));
  eval->add_option("--workers", eval_workers)->check(CLI::Range(1u, 1024u));
  eval->add_option("--format", eval_format)->check(CLI::IsMember({"table", "json"}));
  eval->add_option("--baseline-cutoff", baseline_cutoff,
                   "also run the token-Jaccard baseline and compare");
  eval->add_option("--output", eval_out, "output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return kOk;
  } catch (const CLI::CallForVersion&) {
    std::cout << app.version() << "\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  }

  if (ingest->parsed()) {
    auto in = open_input(ingest_in);
    ind::ParseResult parsed = ind::parse_corpus(in);
    ind::ExtractResult extracted = ind::extract_observations(parsed.records);
    auto out = open_output(ingest_out);
    ind::write_observations(extracted.observations, out);
    if (!out) throw IoError("write failed: " + ingest_out);
    std::cout << "records=" << parsed.records.size() << " skipped=" << parsed.skipped_lines
              << " observations=" << extracted.observations.size()
              << " dropped=" << extracted.dropped << "\n";
    return kOk;
  }

  if (stats->parsed()) {
    ind::IngestCounts counts;
    ind::CorpusMatrix cm = stats_src.load(&counts);
    ind::MatrixStats ms = ind::matrix_stats(cm.matrix);
    std::cout << "rows=" << ms.rows << " cols=" << ms.cols << " nonzeros=" << ms.nonzeros
              << " total=" << ms.total << "\n";
    if (stats_save) {
      auto out = open_output(*stats_save);
      ind::save_snapshot(cm, out);
      if (!out) throw IoError("write failed: " + *stats_save);
    }
    return kOk;
  }

  if (cluster->parsed()) {
    ind::CorpusMatrix cm = cluster_src.load();
    ind::CooccurrenceMatrix co = ind::cooccurrence_of(cm, workers);
    ind::Clustering cl = ind::components(ind::build_graph(co, threshold), cm.affiliations);
    emit(cluster_out, ind::clustering_to_json(cl, include_singletons) + "\n");
    return kOk;
  }

  if (sweep_cmd->parsed()) {
    if (t_min > t_max) throw CLI::ValidationError("--t-min must be <= --t-max");
    ind::CorpusMatrix cm = sweep_src.load();
    ind::CooccurrenceMatrix co = ind::cooccurrence_of(cm, sweep_workers);
    std::ostringstream csv;
    csv << "threshold,clusters,largest,clustered_nodes,edges\n";
    for (const auto& row : ind::sweep(co, cm.affiliations, t_min, t_max)) {
      csv << row.threshold << ',' << row.clusters << ',' << row.largest << ','
          << row.clustered_nodes << ',' << row.edges << '\n';
    }
    emit(sweep_out, csv.str());
    return kOk;
  }

  if (export_cmd->parsed()) {
    ind::CorpusMatrix cm = export_src.load();
    ind::CooccurrenceMatrix co = ind::cooccurrence_of(cm, export_workers);
    ind::Clustering cl = ind::components(ind::build_graph(co, export_threshold), cm.affiliations);
    const ind::Cluster* comp;
    try {
      comp = &ind::component_at(cl, rank);
    } catch (const std::out_of_range& e) {
      throw DataError(e.what());
    }
    if (format == "dot") {
      emit(export_out, ind::cluster_to_dot(*comp));
    } else {
      nlohmann::json edges = nlohmann::json::array();
      for (const auto& [a, b, w] : comp->edges) edges.push_back({a, b, w});
      nlohmann::json j{{"rank", rank}, {"size", comp->size()}, {"members", comp->members},
                       {"edges", std::move(edges)}};
      emit(export_out, j.dump(2) + "\n");
    }
    return kOk;
  }

  if (gen->parsed()) {
    cfg.aliases_per_institute = parse_range(r_aliases);
    cfg.authors_per_institute = parse_range(r_authors);
    cfg.papers_per_author = parse_range(r_papers);
    cfg.authors_per_paper = parse_range(r_app);
    ind::SyntheticCorpus corpus;
    try {
      corpus = ind::generate(cfg);
      ind::plant_confusion(corpus, plant_shared);
    } catch (const std::invalid_argument& e) {
      throw DataError(e.what());
    }
    auto out = open_output(gen_out);
    ind::write_corpus(corpus.papers, out);
    if (!out) throw IoError("write failed: " + gen_out);
    auto tout = open_output(gen_truth);
    ind::write_truth(corpus.truth, tout);
    if (!tout) throw IoError("write failed: " + gen_truth);
    std::cout << "papers=" << corpus.papers.size()
              << " affiliations=" << corpus.truth.affiliation_institute.size() << "\n";
    return kOk;
  }

  if (eval->parsed()) {
    auto in = open_input(eval_in);
    ind::CorpusMatrix cm = ind::matrix_from_corpus(in);
    ind::CooccurrenceMatrix co = ind::cooccurrence_of(cm, eval_workers);
    ind::Clustering cl = ind::components(ind::build_graph(co, eval_threshold), cm.affiliations);
    auto tin = open_input(eval_truth);
    ind::SyntheticTruth truth = ind::read_truth(tin);
    ind::PairwiseScore score;
    try {
      score = ind::pairwise_score(cl, truth);
    } catch (const std::invalid_argument& e) {
      throw DataError(e.what());
    }

    std::ostringstream report;
    if (eval_format == "json") {
      nlohmann::json j = nlohmann::json::parse(ind::score_to_json(score));
      if (baseline_cutoff) {
        std::vector<std::string> universe;
        for (std::uint32_t i = 0; i < cm.affiliations.size(); ++i)
          universe.push_back(cm.affiliations.at(i));
        ind::Clustering base = ind::token_baseline(universe, *baseline_cutoff);
        j["baseline_comparison"] =
            nlohmann::json::parse(ind::comparison_to_json(ind::compare_clusterings(cl, base)));
      }
      report << j.dump(2) << "\n";
    } else {
      report << ind::score_to_table(score);
      if (baseline_cutoff) {
        std::vector<std::string> universe;
        for (std::uint32_t i = 0; i < cm.affiliations.size(); ++i)
          universe.push_back(cm.affiliations.at(i));
        ind::Clustering base = ind::token_baseline(universe, *baseline_cutoff);
        ind::ClusterComparison cmp = ind::compare_clusterings(cl, base);
        report << "\nbaseline (token Jaccard >= " << *baseline_cutoff << ")\n"
               << "clustered_by_pipeline_not_baseline  " << cmp.clustered_by_a_not_b << "\n"
               << "clustered_by_baseline_not_pipeline  " << cmp.clustered_by_b_not_a << "\n"
               << "largest_pipeline_cluster            " << cmp.largest_a << "\n"
               << "largest_baseline_cluster            " << cmp.largest_b << "\n";
      }
    }
    emit(eval_out, report.str());
    return kOk;
  }

  return kUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIoError;
  } catch (const DataError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDataError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
