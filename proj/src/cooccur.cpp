#include "ind/cooccur.hpp"

#include <algorithm>
#include <ostream>
#include <thread>
#include <unordered_map>

#include <nlohmann/json.hpp>

namespace ind {

std::uint32_t CooccurrenceMatrix::weight(std::uint32_t i, std::uint32_t j) const {
  if (i > j) std::swap(i, j);
  auto it = std::lower_bound(entries.begin(), entries.end(), Entry{i, j, 0},
                             [](const Entry& a, const Entry& b) {
                               return a.i != b.i ? a.i < b.i : a.j < b.j;
                             });
  if (it != entries.end() && it->i == i && it->j == j) return it->w;
  return 0;
}

BinaryMask binarize(const AuthorAffiliationMatrix& m) {
  return {m.n_authors, m.n_affiliations, m.row_ptr, m.col};
}

namespace {

using PairMap = std::unordered_map<std::uint64_t, std::uint32_t>;

inline std::uint64_t pack(std::uint32_t i, std::uint32_t j) {
  return (static_cast<std::uint64_t>(i) << 32) | j;
}

// Off-diagonal contributions of rows [row_begin, row_end): each author row is
// a rank-one outer product over its affiliation set. Rows with a single
// affiliation touch only the diagonal and are skipped here.
void accumulate_rows(const BinaryMask& mask, std::uint32_t row_begin, std::uint32_t row_end,
                     PairMap& acc) {
  for (std::uint32_t r = row_begin; r < row_end; ++r) {
    std::uint32_t lo = mask.row_ptr[r], hi = mask.row_ptr[r + 1];
    if (hi - lo < 2) continue;
    for (std::uint32_t a = lo; a < hi; ++a) {
      for (std::uint32_t b = a + 1; b < hi; ++b) {
        ++acc[pack(mask.col[a], mask.col[b])];  // columns sorted, so col[a] < col[b]
      }
    }
  }
}

}  // namespace

CooccurrenceMatrix cooccurrence_parallel(const BinaryMask& mask, unsigned worker_count) {
  if (worker_count < 1) worker_count = 1;

  std::vector<PairMap> partial(worker_count);
  if (worker_count == 1 || mask.n_authors < 2 * worker_count) {
    accumulate_rows(mask, 0, mask.n_authors, partial[0]);
  } else {
    std::vector<std::thread> workers;
    workers.reserve(worker_count);
    const std::uint32_t chunk = (mask.n_authors + worker_count - 1) / worker_count;
    for (unsigned w = 0; w < worker_count; ++w) {
      std::uint32_t begin = std::min<std::uint32_t>(w * chunk, mask.n_authors);
      std::uint32_t end = std::min<std::uint32_t>(begin + chunk, mask.n_authors);
      workers.emplace_back(accumulate_rows, std::cref(mask), begin, end,
                           std::ref(partial[w]));
    }
    for (auto& t : workers) t.join();
  }

  // Sequential merge in worker order.
  PairMap merged = std::move(partial[0]);
  for (unsigned w = 1; w < worker_count; ++w) {
    for (const auto& [key, cnt] : partial[w]) merged[key] += cnt;
  }

  // Diagonal: distinct authors per affiliation.
  std::vector<std::uint32_t> diag(mask.n_affiliations, 0);
  for (std::uint32_t c : mask.col) ++diag[c];

  CooccurrenceMatrix out;
  out.n = mask.n_affiliations;
  out.entries.reserve(merged.size() + mask.n_affiliations);
  for (std::uint32_t i = 0; i < mask.n_affiliations; ++i) {
    if (diag[i] > 0) out.entries.push_back({i, i, diag[i]});
  }
  for (const auto& [key, cnt] : merged) {
    out.entries.push_back({static_cast<std::uint32_t>(key >> 32),
                           static_cast<std::uint32_t>(key & 0xffffffffu), cnt});
  }
  std::sort(out.entries.begin(), out.entries.end(),
            [](const CooccurrenceMatrix::Entry& a, const CooccurrenceMatrix::Entry& b) {
              return a.i != b.i ? a.i < b.i : a.j < b.j;
            });
  return out;
}

CooccurrenceMatrix cooccurrence(const BinaryMask& mask) {
  return cooccurrence_parallel(mask, 1);
}

void write_cooccurrence_jsonl(const CooccurrenceMatrix& c, const Interner& affiliations,
                              std::ostream& out) {
  std::vector<std::tuple<std::string, std::string, std::uint32_t>> rows;
  rows.reserve(c.entries.size());
  for (const auto& e : c.entries) {
    std::string a = affiliations.at(e.i);
    std::string b = affiliations.at(e.j);
    if (b < a) std::swap(a, b);
    rows.emplace_back(std::move(a), std::move(b), e.w);
  }
  std::sort(rows.begin(), rows.end());
  for (const auto& [a, b, w] : rows) {
    nlohmann::json j{{"i_label", a}, {"j_label", b}, {"w", w}};
    out << j.dump() << '\n';
  }
}

}  // namespace ind
