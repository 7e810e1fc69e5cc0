#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fairrank/corpus.hpp"
#include "fairrank/types.hpp"

namespace fairrank {

// First-name usage counts backing offline gender inference.
// Keys are case-folded first names.
struct NameGenderTable {
  std::unordered_map<std::string, std::pair<std::uint64_t, std::uint64_t>> counts;

  // TSV rows: name<TAB>male_count<TAB>female_count. Counts nonnegative,
  // at least one positive per row.
  static NameGenderTable load_tsv(const std::filesystem::path& path);
};

// Lookup tables for the offline country chain (email TLD, university name,
// city name) plus the country -> economy classification. Lookups are virtual
// so tests can instrument which step consulted which table.
class GeoTables {
 public:
  GeoTables() = default;
  virtual ~GeoTables() = default;

  std::unordered_map<std::string, std::string> tld_to_country;
  std::unordered_map<std::string, std::string> university_to_country;  // folded keys
  std::unordered_map<std::string, std::string> city_to_country;        // folded keys
  std::unordered_map<std::string, std::string> country_to_economy;     // Advanced/Developing

  // geo_tables.json: one object holding the four maps above.
  static GeoTables load_json(const std::filesystem::path& path);

  // Case-folds lookup keys; call after populating the maps by hand.
  void normalize_keys();

  // Every country code referenced by the three lookup maps must be
  // classified in country_to_economy.
  void validate() const;

  virtual std::optional<std::string> country_from_tld(std::string_view tld) const;
  // Longest case-insensitive substring match over table keys; `affiliation`
  // must already be case-folded. Equal-length ties pick the smaller key.
  virtual std::optional<std::string> country_from_university(std::string_view affiliation) const;
  virtual std::optional<std::string> country_from_city(std::string_view affiliation) const;

  bool has_economy(std::string_view country) const;
  Economy economy_of(std::string_view country) const;  // unmapped code -> ValidationError
};

struct Contact {
  std::optional<std::string> email;
  std::optional<std::string> affiliation;
};
using ContactMap = std::unordered_map<std::string, Contact>;

// contacts.jsonl: {author_id, email?, affiliation?} per line.
ContactMap load_contacts(const std::filesystem::path& path);

// Hook for external lookup backends (web search, place APIs). The default
// build plugs nothing in, so the chain ends after the city step.
class CountryProvider {
 public:
  virtual ~CountryProvider() = default;
  virtual std::optional<std::string> lookup(const std::optional<std::string>& email,
                                            const std::optional<std::string>& affiliation) const = 0;
};

// Majority rule over the first whitespace-delimited name token: Male when
// male count exceeds female count, Female otherwise (ties included),
// Unknown when the name is absent. Total over arbitrary input.
Gender infer_gender(std::string_view full_name, const NameGenderTable& table);

// Chain: email TLD, then university substring, then city substring, then the
// optional provider. Returns at the first success; nullopt means Unknown.
std::optional<std::string> infer_country(const std::optional<std::string>& email,
                                         const std::optional<std::string>& affiliation,
                                         const GeoTables& tables,
                                         const CountryProvider* provider = nullptr);

struct AttributionReport {
  GroupStats coverage;  // label counts after attribution, before imputation
  struct Failure {
    std::string author_id;
    std::string reason;
  };
  std::vector<Failure> failures;
};

struct AttributionResult {
  AuthorTable authors;
  AttributionReport report;
};

// Fills gender via the name table and economy via the country chain for every
// author whose label is Unknown. Pre-existing known labels are never
// overwritten; per-author failures are recorded, never fatal.
AttributionResult attribute_all(const AuthorTable& authors, const NameGenderTable& names,
                                const GeoTables& geo, const ContactMap& contacts,
                                const CountryProvider* provider = nullptr);

}  // namespace fairrank
