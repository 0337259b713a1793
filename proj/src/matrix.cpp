#include "ind/matrix.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace ind {

namespace {
constexpr const char* kSnapshotMagic = "ind-aamatrix";
constexpr int kSnapshotVersion = 1;
}  // namespace

std::uint32_t Interner::intern(std::string_view s) {
  auto it = ids_.find(std::string(s));
  if (it != ids_.end()) return it->second;
  auto id = static_cast<std::uint32_t>(strings_.size());
  strings_.emplace_back(s);
  ids_.emplace(strings_.back(), id);
  return id;
}

std::optional<std::uint32_t> Interner::lookup(std::string_view s) const {
  auto it = ids_.find(std::string(s));
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

std::uint64_t AuthorAffiliationMatrix::total() const {
  return std::accumulate(count.begin(), count.end(), std::uint64_t{0});
}

CorpusMatrix build_matrix(const std::vector<Observation>& observations) {
  CorpusMatrix cm;
  // First pass: intern ids in observation order.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  pairs.reserve(observations.size());
  for (const auto& o : observations) {
    pairs.emplace_back(cm.authors.intern(o.author_key),
                       cm.affiliations.intern(o.affiliation_key));
  }

  auto& m = cm.matrix;
  m.n_authors = cm.authors.size();
  m.n_affiliations = cm.affiliations.size();

  std::sort(pairs.begin(), pairs.end());
  m.row_ptr.assign(m.n_authors + 1, 0);
  for (std::size_t k = 0; k < pairs.size();) {
    std::size_t run = k + 1;
    while (run < pairs.size() && pairs[run] == pairs[k]) ++run;
    m.col.push_back(pairs[k].second);
    m.count.push_back(static_cast<std::uint32_t>(run - k));
    ++m.row_ptr[pairs[k].first + 1];
    k = run;
  }
  for (std::uint32_t r = 0; r < m.n_authors; ++r) m.row_ptr[r + 1] += m.row_ptr[r];
  return cm;
}

MatrixStats matrix_stats(const AuthorAffiliationMatrix& m) {
  return {m.n_authors, m.n_affiliations, m.nonzeros(), m.total()};
}

void save_snapshot(const CorpusMatrix& cm, std::ostream& out) {
  nlohmann::json j;
  j["magic"] = kSnapshotMagic;
  j["version"] = kSnapshotVersion;
  nlohmann::json authors = nlohmann::json::array();
  for (std::uint32_t i = 0; i < cm.authors.size(); ++i) authors.push_back(cm.authors.at(i));
  nlohmann::json affils = nlohmann::json::array();
  for (std::uint32_t i = 0; i < cm.affiliations.size(); ++i)
    affils.push_back(cm.affiliations.at(i));
  j["authors"] = std::move(authors);
  j["affiliations"] = std::move(affils);
  nlohmann::json entries = nlohmann::json::array();
  const auto& m = cm.matrix;
  for (std::uint32_t r = 0; r < m.n_authors; ++r) {
    for (std::uint32_t k = m.row_ptr[r]; k < m.row_ptr[r + 1]; ++k) {
      entries.push_back({r, m.col[k], m.count[k]});
    }
  }
  j["entries"] = std::move(entries);
  out << j.dump() << '\n';
}

CorpusMatrix load_snapshot(std::istream& in) {
  nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
  if (!j.is_object() || j.value("magic", "") != kSnapshotMagic)
    throw std::runtime_error("not a matrix snapshot (bad magic)");
  if (j.value("version", -1) != kSnapshotVersion)
    throw std::runtime_error("unsupported snapshot version");

  CorpusMatrix cm;
  for (const auto& s : j.at("authors")) cm.authors.intern(s.get<std::string>());
  for (const auto& s : j.at("affiliations")) cm.affiliations.intern(s.get<std::string>());
  auto& m = cm.matrix;
  m.n_authors = cm.authors.size();
  m.n_affiliations = cm.affiliations.size();
  m.row_ptr.assign(m.n_authors + 1, 0);
  std::uint32_t prev_row = 0;
  for (const auto& e : j.at("entries")) {
    std::uint32_t r = e.at(0), c = e.at(1), n = e.at(2);
    if (r >= m.n_authors || c >= m.n_affiliations || n == 0 || r < prev_row)
      throw std::runtime_error("malformed snapshot entry");
    m.col.push_back(c);
    m.count.push_back(n);
    ++m.row_ptr[r + 1];
    prev_row = r;
  }
  for (std::uint32_t r = 0; r < m.n_authors; ++r) m.row_ptr[r + 1] += m.row_ptr[r];
  return cm;
}

}  // namespace ind
