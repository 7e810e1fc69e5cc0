#include "fairrank/attribution.hpp"

#include <fstream>

#include "fairrank/textprep.hpp"
#include "jsonl.hpp"

namespace fairrank {

namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

std::string_view first_token(std::string_view s) {
  std::size_t begin = 0;
  while (begin < s.size() && is_space(s[begin])) ++begin;
  std::size_t end = begin;
  while (end < s.size() && !is_space(s[end])) ++end;
  return s.substr(begin, end - begin);
}

std::optional<std::string> longest_key_match(
    std::string_view folded_affiliation,
    const std::unordered_map<std::string, std::string>& table) {
  const std::string* best_key = nullptr;
  const std::string* best_value = nullptr;
  for (const auto& [key, value] : table) {
    if (key.empty() || key.size() > folded_affiliation.size()) continue;
    if (best_key != nullptr &&
        (key.size() < best_key->size() || (key.size() == best_key->size() && key >= *best_key))) {
      continue;
    }
    if (folded_affiliation.find(key) == std::string_view::npos) continue;
    best_key = &key;
    best_value = &value;
  }
  if (best_value == nullptr) return std::nullopt;
  return *best_value;
}

}  // namespace

NameGenderTable NameGenderTable::load_tsv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open file: " + path.string());
  }
  NameGenderTable table;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const std::string where = detail::location(path, line_no);
    std::size_t t1 = line.find('\t');
    std::size_t t2 = t1 == std::string::npos ? std::string::npos : line.find('\t', t1 + 1);
    if (t1 == std::string::npos || t2 == std::string::npos) {
      throw ParseError(where + "expected name<TAB>male_count<TAB>female_count");
    }
    std::string name = textprep::fold_case(std::string_view(line).substr(0, t1));
    std::uint64_t male = 0, female = 0;
    try {
      male = std::stoull(line.substr(t1 + 1, t2 - t1 - 1));
      female = std::stoull(line.substr(t2 + 1));
    } catch (const std::exception&) {
      throw ParseError(where + "counts must be nonnegative integers");
    }
    if (name.empty()) {
      throw ParseError(where + "empty name");
    }
    if (male == 0 && female == 0) {
      throw ValidationError(where + "entry '" + name + "' has no positive count");
    }
    table.counts[name] = {male, female};
  }
  return table;
}

GeoTables GeoTables::load_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open file: " + path.string());
  }
  json obj = json::parse(in, nullptr, /*allow_exceptions=*/false);
  if (obj.is_discarded() || !obj.is_object()) {
    throw ParseError(path.string() + ": malformed geo tables JSON");
  }
  GeoTables tables;
  const auto read_map = [&](const char* field, std::unordered_map<std::string, std::string>& map) {
    if (!obj.contains(field)) {
      throw ParseError(path.string() + ": missing map '" + field + "'");
    }
    const json& m = obj.at(field);
    if (!m.is_object()) {
      throw ParseError(path.string() + ": '" + field + "' must be an object");
    }
    for (const auto& [k, v] : m.items()) {
      map[k] = v.get<std::string>();
    }
  };
  read_map("tld_to_country", tables.tld_to_country);
  read_map("university_to_country", tables.university_to_country);
  read_map("city_to_country", tables.city_to_country);
  read_map("country_to_economy", tables.country_to_economy);
  tables.normalize_keys();
  tables.validate();
  return tables;
}

void GeoTables::normalize_keys() {
  const auto fold_keys = [](std::unordered_map<std::string, std::string>& map) {
    std::unordered_map<std::string, std::string> folded;
    folded.reserve(map.size());
    for (auto& [k, v] : map) {
      folded[textprep::fold_case(k)] = v;
    }
    map = std::move(folded);
  };
  fold_keys(tld_to_country);
  fold_keys(university_to_country);
  fold_keys(city_to_country);
}

void GeoTables::validate() const {
  const auto check = [&](const std::unordered_map<std::string, std::string>& map,
                         const char* name) {
    for (const auto& [key, country] : map) {
      if (country_to_economy.find(country) == country_to_economy.end()) {
        throw ValidationError(std::string("geo tables: ") + name + " entry '" + key +
                              "' maps to country '" + country + "' with no economy class");
      }
    }
  };
  check(tld_to_country, "tld_to_country");
  check(university_to_country, "university_to_country");
  check(city_to_country, "city_to_country");
  for (const auto& [country, economy] : country_to_economy) {
    Economy e = economy_from_string(economy);
    if (e == Economy::Unknown) {
      throw ValidationError("geo tables: country '" + country +
                            "' classified Unknown; use Advanced or Developing");
    }
  }
}

std::optional<std::string> GeoTables::country_from_tld(std::string_view tld) const {
  auto it = tld_to_country.find(std::string(tld));
  if (it == tld_to_country.end()) return std::nullopt;
  return it->second;
}

std::optional<std::string> GeoTables::country_from_university(std::string_view affiliation) const {
  return longest_key_match(affiliation, university_to_country);
}

std::optional<std::string> GeoTables::country_from_city(std::string_view affiliation) const {
  return longest_key_match(affiliation, city_to_country);
}

bool GeoTables::has_economy(std::string_view country) const {
  return country_to_economy.find(std::string(country)) != country_to_economy.end();
}

Economy GeoTables::economy_of(std::string_view country) const {
  auto it = country_to_economy.find(std::string(country));
  if (it == country_to_economy.end()) {
    throw ValidationError("economy_of: unmapped country code: " + std::string(country));
  }
  return economy_from_string(it->second);
}

ContactMap load_contacts(const std::filesystem::path& path) {
  ContactMap contacts;
  detail::for_each_jsonl(path, [&](std::size_t line, const json& obj) {
    const std::string where = detail::location(path, line);
    if (!obj.contains("author_id")) {
      throw ParseError(where + "missing required field 'author_id'");
    }
    std::string id = detail::key_string(obj.at("author_id"), where);
    Contact contact;
    if (obj.contains("email") && !obj.at("email").is_null()) {
      contact.email = obj.at("email").get<std::string>();
    }
    if (obj.contains("affiliation") && !obj.at("affiliation").is_null()) {
      contact.affiliation = obj.at("affiliation").get<std::string>();
    }
    contacts[std::move(id)] = std::move(contact);
  });
  return contacts;
}

Gender infer_gender(std::string_view full_name, const NameGenderTable& table) {
  std::string name = textprep::fold_case(first_token(full_name));
  if (name.empty()) return Gender::Unknown;
  auto it = table.counts.find(name);
  if (it == table.counts.end()) return Gender::Unknown;
  return it->second.first > it->second.second ? Gender::Male : Gender::Female;
}

std::optional<std::string> infer_country(const std::optional<std::string>& email,
                                         const std::optional<std::string>& affiliation,
                                         const GeoTables& tables, const CountryProvider* provider) {
  if (email && !email->empty()) {
    std::string_view addr = *email;
    std::size_t at = addr.rfind('@');
    std::string_view domain = at == std::string_view::npos ? addr : addr.substr(at + 1);
    std::size_t dot = domain.rfind('.');
    if (dot != std::string_view::npos && dot + 1 < domain.size()) {
      std::string tld = textprep::fold_case(domain.substr(dot + 1));
      if (auto country = tables.country_from_tld(tld)) return country;
    }
  }
  if (affiliation && !affiliation->empty()) {
    std::string folded = textprep::fold_case(*affiliation);
    if (auto country = tables.country_from_university(folded)) return country;
    if (auto country = tables.country_from_city(folded)) return country;
  }
  if (provider != nullptr) {
    if (auto country = provider->lookup(email, affiliation)) return country;
  }
  return std::nullopt;
}

AttributionResult attribute_all(const AuthorTable& authors, const NameGenderTable& names,
                                const GeoTables& geo, const ContactMap& contacts,
                                const CountryProvider* provider) {
  AttributionResult result;
  for (const AuthorRecord& a : authors) {
    AuthorRecord rec = a;
    if (rec.gender == Gender::Unknown) {
      rec.gender = infer_gender(rec.name, names);
    }
    if (rec.economy == Economy::Unknown) {
      auto it = contacts.find(rec.author_id);
      if (it != contacts.end()) {
        if (auto country = infer_country(it->second.email, it->second.affiliation, geo, provider)) {
          if (geo.has_economy(*country)) {
            rec.economy = geo.economy_of(*country);
          } else {
            result.report.failures.push_back(
                {rec.author_id, "country '" + *country + "' has no economy class"});
          }
        }
      }
    }
    result.authors.insert(std::move(rec));
  }
  if (result.authors.empty()) {
    GroupStats empty;
    empty.gender = {{"Male", 0, 0.0}, {"Female", 0, 0.0}, {"Unknown", 0, 0.0}};
    empty.country = {{"Advanced", 0, 0.0}, {"Developing", 0, 0.0}, {"Unknown", 0, 0.0}};
    result.report.coverage = empty;
  } else {
    result.report.coverage = group_stats(result.authors);
  }
  return result;
}

}  // namespace fairrank
