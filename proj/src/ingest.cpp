#include "ind/ingest.hpp"

#include <cctype>
#include <istream>
#include <ostream>

#include <nlohmann/json.hpp>

namespace ind {
namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

bool is_separator(char c) {
  return c == ' ' || c == '.' || c == ',' || c == ')' || c == '-';
}

std::string collapse_whitespace(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  bool pending_space = false;
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      pending_space = !out.empty();
    } else {
      if (pending_space) out.push_back(' ');
      pending_space = false;
      out.push_back(c);
    }
  }
  return out;
}

}  // namespace

std::string clean_affiliation(std::string_view raw) {
  std::string s = collapse_whitespace(raw);
  // Strip leading digit runs to a fixed point so the result is idempotent.
  // A run glued directly to a letter ("3M Company") is left alone.
  for (;;) {
    std::size_t digits = 0;
    while (digits < s.size() && is_digit(s[digits])) ++digits;
    if (digits == 0) break;
    if (digits < s.size() && !is_separator(s[digits])) break;
    std::size_t cut = digits;
    if (cut < s.size() && is_separator(s[cut])) ++cut;
    while (cut < s.size() && s[cut] == ' ') ++cut;
    s.erase(0, cut);
  }
  return s;
}

std::string normalize_author(std::string_view raw) { return collapse_whitespace(raw); }

std::string join_name(std::string_view given, std::string_view family) {
  std::string g = collapse_whitespace(given);
  std::string f = collapse_whitespace(family);
  if (g.empty()) return f;
  if (f.empty()) return g;
  return g + " " + f;
}

namespace {

bool parse_line(const std::string& line, PaperRecord& rec) {
  nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
  if (!j.is_object()) return false;
  auto doi_it = j.find("doi");
  if (doi_it == j.end() || !doi_it->is_string()) return false;
  rec.doi = doi_it->get<std::string>();
  if (rec.doi.empty()) return false;

  auto authors_it = j.find("authors");
  if (authors_it == j.end() || authors_it->is_null()) return true;
  if (!authors_it->is_array()) return false;
  for (const auto& a : *authors_it) {
    if (!a.is_object()) return false;
    AuthorEntry entry;
    if (auto it = a.find("name"); it != a.end() && it->is_string()) {
      entry.name = it->get<std::string>();
    } else {
      std::string given, family;
      if (auto g = a.find("given"); g != a.end() && g->is_string()) given = *g;
      if (auto f = a.find("family"); f != a.end() && f->is_string()) family = *f;
      entry.name = join_name(given, family);
    }
    if (auto it = a.find("affiliations"); it != a.end()) {
      if (!it->is_array()) return false;
      for (const auto& aff : *it) {
        if (!aff.is_string()) return false;
        entry.affiliations.push_back(aff.get<std::string>());
      }
    }
    rec.authors.push_back(std::move(entry));
  }
  return true;
}

}  // namespace

ParseResult parse_corpus(std::istream& in) {
  ParseResult result;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    PaperRecord rec;
    if (parse_line(line, rec)) {
      result.records.push_back(std::move(rec));
    } else {
      ++result.skipped_lines;
    }
  }
  return result;
}

ExtractResult extract_observations(const std::vector<PaperRecord>& records) {
  ExtractResult result;
  for (const auto& rec : records) {
    for (const auto& author : rec.authors) {
      std::string name = normalize_author(author.name);
      if (name.empty()) {
        result.dropped += author.affiliations.size();
        continue;
      }
      for (const auto& raw_aff : author.affiliations) {
        std::string aff = clean_affiliation(raw_aff);
        if (aff.empty()) {
          ++result.dropped;
          continue;
        }
        result.observations.push_back({name, std::move(aff), rec.doi});
      }
    }
  }
  return result;
}

void write_observations(const std::vector<Observation>& obs, std::ostream& out) {
  for (const auto& o : obs) {
    nlohmann::json j{{"author", o.author_key}, {"affiliation", o.affiliation_key},
                     {"doi", o.paper_doi}};
    out << j.dump() << '\n';
  }
}

std::vector<Observation> read_observations(std::istream& in) {
  std::vector<Observation> obs;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    nlohmann::json j = nlohmann::json::parse(line);
    obs.push_back({j.at("author").get<std::string>(),
                   j.at("affiliation").get<std::string>(),
                   j.at("doi").get<std::string>()});
  }
  return obs;
}

}  // namespace ind
