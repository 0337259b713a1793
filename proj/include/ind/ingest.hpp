#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace ind {

struct AuthorEntry {
  std::string name;                       // verbatim, pre-normalization
  std::vector<std::string> affiliations;  // verbatim, pre-cleaning
};

struct PaperRecord {
  std::string doi;
  std::vector<AuthorEntry> authors;
};

// One (paper, author, affiliation) triple after normalization/cleaning.
struct Observation {
  std::string author_key;
  std::string affiliation_key;
  std::string paper_doi;
};

struct ParseResult {
  std::vector<PaperRecord> records;
  std::size_t skipped_lines = 0;  // malformed lines, never fatal
};

struct ExtractResult {
  std::vector<Observation> observations;
  std::size_t dropped = 0;  // author/affiliation strings empty after cleanup
};

/// Removes a leading run of digits (plus one trailing separator) repeatedly,
/// trims, and collapses internal whitespace. Case and all other characters
/// are preserved. A digit run glued to a letter ("3M Company") is kept.
/// May return an empty string; callers treat that as a drop.
std::string clean_affiliation(std::string_view raw);

/// Trims and collapses whitespace. No case folding.
std::string normalize_author(std::string_view raw);

/// Joins Crossref-style given/family name parts as "given family".
std::string join_name(std::string_view given, std::string_view family);

/// Parses JSON-Lines records: one object per line with `doi` and `authors`
/// (each author: `name` or `given`+`family`, plus `affiliations`).
/// Malformed lines are counted and skipped; blank lines are ignored.
ParseResult parse_corpus(std::istream& in);

/// Cartesian pairing of each author's normalized name with each cleaned
/// affiliation. Duplicates across papers are retained.
ExtractResult extract_observations(const std::vector<PaperRecord>& records);

/// Writes observations as JSON-Lines {"author":..., "affiliation":..., "doi":...}.
void write_observations(const std::vector<Observation>& obs, std::ostream& out);

/// Reads the observations JSON-Lines format back.
std::vector<Observation> read_observations(std::istream& in);

}  // namespace ind
