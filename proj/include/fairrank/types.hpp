#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <json.hpp>

namespace fairrank {

using json = nlohmann::json;

// Error taxonomy. Loaders attach "<file>:<line>:" prefixes so corpus debugging
// points at the offending record.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input (bad JSON, bad TSV row, unreadable file).
class ParseError : public Error {
 public:
  using Error::Error;
};

// Keyed-table violations: duplicate ids, dangling references.
class IntegrityError : public Error {
 public:
  using Error::Error;
};

// Value constraints: negative counters, relevance outside {0,1}, bad weights.
class ValidationError : public Error {
 public:
  using Error::Error;
};

enum class Gender { Male, Female, Unknown };
enum class Economy { Advanced, Developing, Unknown };

std::string_view to_string(Gender g);
std::string_view to_string(Economy e);
Gender gender_from_string(std::string_view s);    // case-insensitive, throws ValidationError
Economy economy_from_string(std::string_view s);  // case-insensitive, throws ValidationError

// One corpus document. `extra` holds fields outside the schema so that
// load -> save -> load is lossless.
struct PaperDoc {
  std::string doc_id;
  std::string title;
  std::string abstract;  // may be empty
  std::vector<std::string> author_ids;
  std::optional<int> year;
  std::optional<std::string> venue;
  std::vector<std::string> in_citations;
  std::vector<std::string> out_citations;
  json extra = json::object();

  const std::string& key() const { return doc_id; }
  bool operator==(const PaperDoc&) const = default;
};

struct AuthorRecord {
  std::string author_id;
  std::string name;
  std::uint64_t num_citations = 0;
  std::uint64_t h_index = 0;
  std::uint64_t i10_index = 0;
  std::uint64_t num_papers = 0;
  Gender gender = Gender::Unknown;
  Economy economy = Economy::Unknown;
  json extra = json::object();

  const std::string& key() const { return author_id; }
  bool operator==(const AuthorRecord&) const = default;
};

struct QueryDocument {
  std::string doc_id;
  std::optional<int> relevance;  // binary when present
  bool operator==(const QueryDocument&) const = default;
};

struct QueryRecord {
  std::string query_id;
  std::string query_text;
  std::uint64_t frequency = 0;
  std::vector<QueryDocument> documents;
  json extra = json::object();
  bool operator==(const QueryRecord&) const = default;
};

// Order-preserving keyed table: records iterate in insertion (file) order,
// lookups go through the key index. Immutable once loaded.
template <typename Record>
class Table {
 public:
  Table() = default;

  // Throws IntegrityError when the record's key is already present.
  void insert(Record record) {
    auto [it, inserted] = index_.emplace(record.key(), records_.size());
    if (!inserted) {
      throw IntegrityError("duplicate key: " + record.key());
    }
    records_.push_back(std::move(record));
  }

  const Record* find(std::string_view key) const {
    auto it = index_.find(std::string(key));
    return it == index_.end() ? nullptr : &records_[it->second];
  }

  const Record& at(std::string_view key) const {
    const Record* r = find(key);
    if (r == nullptr) {
      throw IntegrityError("unknown key: " + std::string(key));
    }
    return *r;
  }

  bool contains(std::string_view key) const { return find(key) != nullptr; }
  std::size_t size() const { return records_.size(); }
  bool empty() const { return records_.empty(); }

  auto begin() const { return records_.begin(); }
  auto end() const { return records_.end(); }
  const std::vector<Record>& records() const { return records_; }

  bool operator==(const Table& other) const { return records_ == other.records_; }

 private:
  std::vector<Record> records_;
  std::unordered_map<std::string, std::size_t> index_;
};

using CorpusTable = Table<PaperDoc>;
using AuthorTable = Table<AuthorRecord>;

}  // namespace fairrank
