#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "fairrank/types.hpp"

namespace fairrank {

// Loaders for the three line-delimited input files. All validation errors
// carry a "<file>:<line>:" prefix and the offending key.

// corpus.jsonl: required `id`; optional `title`, `paperAbstract`, `authors`
// (objects with an `ids` list and `name`), `inCitations`, `outCitations`,
// `year`, `venue`. Unknown fields are kept in PaperDoc::extra.
CorpusTable load_corpus(const std::filesystem::path& path);

// authors.jsonl: required `corpus_author_id`; optional `name`,
// `num_citations`, `h_index`, `i10`, `num_papers`, `gender`, `economy`.
// Absent group fields default to Unknown.
AuthorTable load_authors(const std::filesystem::path& path);

struct QueryWarning {
  std::size_t line = 0;
  std::string query_id;
  std::string doc_id;  // referenced but not in the corpus
};

struct QueryLoadResult {
  std::vector<QueryRecord> queries;  // file order
  std::vector<QueryWarning> warnings;
};

// queries.jsonl: `qid`, `query`, `frequency`, `documents` of
// {doc_id, relevance?}. Unknown doc ids are reported, not dropped;
// relevance outside {0,1} is a ValidationError.
QueryLoadResult load_queries(const std::filesystem::path& path, const CorpusTable& corpus);

void save_corpus(const CorpusTable& corpus, const std::filesystem::path& path);
void save_authors(const AuthorTable& authors, const std::filesystem::path& path);
void save_queries(const std::vector<QueryRecord>& queries, const std::filesystem::path& path);

// Per-variable label counts over an author table, Unknown included.
// Fractions sum to 1 within 1e-9.
struct GroupStats {
  struct Cell {
    std::string value;
    std::size_t count = 0;
    double fraction = 0.0;
  };
  std::vector<Cell> gender;   // Male, Female, Unknown
  std::vector<Cell> country;  // Advanced, Developing, Unknown
};

GroupStats group_stats(const AuthorTable& authors);  // empty table -> ValidationError

// CSV: variable,value,count,fraction
void write_group_stats_csv(const GroupStats& stats, std::ostream& out);
void write_group_stats_csv(const GroupStats& stats, const std::filesystem::path& path);

}  // namespace fairrank
