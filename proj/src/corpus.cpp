#include "fairrank/corpus.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <unordered_set>

#include "jsonl.hpp"

namespace fairrank {

std::string_view to_string(Gender g) {
  switch (g) {
    case Gender::Male: return "Male";
    case Gender::Female: return "Female";
    default: return "Unknown";
  }
}

std::string_view to_string(Economy e) {
  switch (e) {
    case Economy::Advanced: return "Advanced";
    case Economy::Developing: return "Developing";
    default: return "Unknown";
  }
}

namespace {

std::string ascii_lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c += 0x20;
  }
  return out;
}

}  // namespace

Gender gender_from_string(std::string_view s) {
  std::string v = ascii_lower(s);
  if (v == "male") return Gender::Male;
  if (v == "female") return Gender::Female;
  if (v == "unknown") return Gender::Unknown;
  throw ValidationError("invalid gender label: " + std::string(s));
}

Economy economy_from_string(std::string_view s) {
  std::string v = ascii_lower(s);
  if (v == "advanced") return Economy::Advanced;
  if (v == "developing") return Economy::Developing;
  if (v == "unknown") return Economy::Unknown;
  throw ValidationError("invalid economy label: " + std::string(s));
}

namespace {

using detail::extra_fields;
using detail::for_each_jsonl;
using detail::key_string;
using detail::location;
using detail::nonneg_int;

std::vector<std::string> id_list(const json& v, const std::string& where) {
  std::vector<std::string> out;
  if (!v.is_array()) {
    throw ParseError(where + "expected an array of identifiers");
  }
  out.reserve(v.size());
  for (const auto& item : v) {
    out.push_back(key_string(item, where));
  }
  return out;
}

}  // namespace

CorpusTable load_corpus(const std::filesystem::path& path) {
  CorpusTable corpus;
  for_each_jsonl(path, [&](std::size_t line, const json& obj) {
    const std::string where = location(path, line);
    PaperDoc doc;
    if (!obj.contains("id")) {
      throw ParseError(where + "missing required field 'id'");
    }
    doc.doc_id = key_string(obj.at("id"), where);
    if (doc.doc_id.empty()) {
      throw ParseError(where + "empty document id");
    }
    if (obj.contains("title")) doc.title = obj.at("title").get<std::string>();
    if (obj.contains("paperAbstract")) doc.abstract = obj.at("paperAbstract").get<std::string>();
    if (obj.contains("authors")) {
      const json& authors = obj.at("authors");
      if (!authors.is_array()) {
        throw ParseError(where + "'authors' must be an array");
      }
      std::unordered_set<std::string> seen;
      for (const auto& a : authors) {
        if (!a.is_object() || !a.contains("ids")) {
          throw ParseError(where + "author entries must be objects with an 'ids' list");
        }
        for (std::string& id : id_list(a.at("ids"), where)) {
          if (seen.insert(id).second) {
            doc.author_ids.push_back(std::move(id));
          }
        }
      }
    }
    if (obj.contains("inCitations")) doc.in_citations = id_list(obj.at("inCitations"), where);
    if (obj.contains("outCitations")) doc.out_citations = id_list(obj.at("outCitations"), where);
    if (obj.contains("year") && !obj.at("year").is_null()) {
      if (!obj.at("year").is_number_integer() && !obj.at("year").is_number_unsigned()) {
        throw ParseError(where + "'year' must be an integer");
      }
      doc.year = obj.at("year").get<int>();
    }
    if (obj.contains("venue") && !obj.at("venue").is_null()) {
      doc.venue = obj.at("venue").get<std::string>();
    }
    doc.extra = extra_fields(
        obj, {"id", "title", "paperAbstract", "authors", "inCitations", "outCitations", "year",
              "venue"});
    try {
      corpus.insert(std::move(doc));
    } catch (const IntegrityError& e) {
      throw IntegrityError(where + e.what());
    }
  });
  return corpus;
}

AuthorTable load_authors(const std::filesystem::path& path) {
  AuthorTable authors;
  for_each_jsonl(path, [&](std::size_t line, const json& obj) {
    const std::string where = location(path, line);
    AuthorRecord rec;
    if (!obj.contains("corpus_author_id")) {
      throw ParseError(where + "missing required field 'corpus_author_id'");
    }
    rec.author_id = key_string(obj.at("corpus_author_id"), where);
    if (rec.author_id.empty()) {
      throw ParseError(where + "empty author id");
    }
    if (obj.contains("name")) rec.name = obj.at("name").get<std::string>();
    if (obj.contains("num_citations")) {
      rec.num_citations = nonneg_int(obj.at("num_citations"), "num_citations", where);
    }
    if (obj.contains("h_index")) rec.h_index = nonneg_int(obj.at("h_index"), "h_index", where);
    if (obj.contains("i10")) rec.i10_index = nonneg_int(obj.at("i10"), "i10", where);
    if (obj.contains("num_papers")) {
      rec.num_papers = nonneg_int(obj.at("num_papers"), "num_papers", where);
    }
    try {
      if (obj.contains("gender")) rec.gender = gender_from_string(obj.at("gender").get<std::string>());
      if (obj.contains("economy")) {
        rec.economy = economy_from_string(obj.at("economy").get<std::string>());
      }
    } catch (const ValidationError& e) {
      throw ValidationError(where + e.what());
    }
    rec.extra = extra_fields(obj, {"corpus_author_id", "name", "num_citations", "h_index", "i10",
                                   "num_papers", "gender", "economy"});
    try {
      authors.insert(std::move(rec));
    } catch (const IntegrityError& e) {
      throw IntegrityError(where + e.what());
    }
  });
  return authors;
}

QueryLoadResult load_queries(const std::filesystem::path& path, const CorpusTable& corpus) {
  QueryLoadResult result;
  for_each_jsonl(path, [&](std::size_t line, const json& obj) {
    const std::string where = location(path, line);
    QueryRecord rec;
    if (!obj.contains("qid")) {
      throw ParseError(where + "missing required field 'qid'");
    }
    rec.query_id = key_string(obj.at("qid"), where);
    if (obj.contains("query")) rec.query_text = obj.at("query").get<std::string>();
    if (obj.contains("frequency")) {
      rec.frequency = nonneg_int(obj.at("frequency"), "frequency", where);
    }
    if (obj.contains("documents")) {
      const json& docs = obj.at("documents");
      if (!docs.is_array()) {
        throw ParseError(where + "'documents' must be an array");
      }
      for (const auto& d : docs) {
        if (!d.is_object() || !d.contains("doc_id")) {
          throw ParseError(where + "document entries must be objects with 'doc_id'");
        }
        QueryDocument qd;
        qd.doc_id = key_string(d.at("doc_id"), where);
        if (d.contains("relevance") && !d.at("relevance").is_null()) {
          const json& rel = d.at("relevance");
          if (!rel.is_number_integer() && !rel.is_number_unsigned()) {
            throw ValidationError(where + "relevance must be 0 or 1");
          }
          auto r = rel.get<std::int64_t>();
          if (r != 0 && r != 1) {
            throw ValidationError(where + "relevance must be 0 or 1, got " + std::to_string(r));
          }
          qd.relevance = static_cast<int>(r);
        }
        if (!corpus.contains(qd.doc_id)) {
          result.warnings.push_back({line, rec.query_id, qd.doc_id});
        }
        rec.documents.push_back(std::move(qd));
      }
    }
    rec.extra = extra_fields(obj, {"qid", "query", "frequency", "documents"});
    result.queries.push_back(std::move(rec));
  });
  return result;
}

namespace {

void merge_extra(json& obj, const json& extra) {
  for (const auto& [k, v] : extra.items()) {
    obj[k] = v;
  }
}

}  // namespace

void save_corpus(const CorpusTable& corpus, const std::filesystem::path& path) {
  auto out = detail::open_output(path);
  for (const PaperDoc& doc : corpus) {
    json obj;
    obj["id"] = doc.doc_id;
    if (!doc.title.empty()) obj["title"] = doc.title;
    if (!doc.abstract.empty()) obj["paperAbstract"] = doc.abstract;
    if (!doc.author_ids.empty()) {
      json authors = json::array();
      for (const std::string& id : doc.author_ids) {
        authors.push_back(json{{"ids", json::array({id})}});
      }
      obj["authors"] = std::move(authors);
    }
    if (!doc.in_citations.empty()) obj["inCitations"] = doc.in_citations;
    if (!doc.out_citations.empty()) obj["outCitations"] = doc.out_citations;
    if (doc.year) obj["year"] = *doc.year;
    if (doc.venue) obj["venue"] = *doc.venue;
    merge_extra(obj, doc.extra);
    out << obj.dump() << '\n';
  }
}

void save_authors(const AuthorTable& authors, const std::filesystem::path& path) {
  auto out = detail::open_output(path);
  for (const AuthorRecord& rec : authors) {
    json obj;
    obj["corpus_author_id"] = rec.author_id;
    if (!rec.name.empty()) obj["name"] = rec.name;
    if (rec.num_citations != 0) obj["num_citations"] = rec.num_citations;
    if (rec.h_index != 0) obj["h_index"] = rec.h_index;
    if (rec.i10_index != 0) obj["i10"] = rec.i10_index;
    if (rec.num_papers != 0) obj["num_papers"] = rec.num_papers;
    obj["gender"] = std::string(to_string(rec.gender));
    obj["economy"] = std::string(to_string(rec.economy));
    merge_extra(obj, rec.extra);
    out << obj.dump() << '\n';
  }
}

void save_queries(const std::vector<QueryRecord>& queries, const std::filesystem::path& path) {
  auto out = detail::open_output(path);
  for (const QueryRecord& rec : queries) {
    json obj;
    obj["qid"] = rec.query_id;
    obj["query"] = rec.query_text;
    obj["frequency"] = rec.frequency;
    json docs = json::array();
    for (const QueryDocument& d : rec.documents) {
      json entry{{"doc_id", d.doc_id}};
      if (d.relevance) entry["relevance"] = *d.relevance;
      docs.push_back(std::move(entry));
    }
    obj["documents"] = std::move(docs);
    merge_extra(obj, rec.extra);
    out << obj.dump() << '\n';
  }
}

GroupStats group_stats(const AuthorTable& authors) {
  if (authors.empty()) {
    throw ValidationError("group_stats: empty author table has no distribution");
  }
  std::size_t male = 0, female = 0, gender_unknown = 0;
  std::size_t advanced = 0, developing = 0, economy_unknown = 0;
  for (const AuthorRecord& a : authors) {
    switch (a.gender) {
      case Gender::Male: ++male; break;
      case Gender::Female: ++female; break;
      default: ++gender_unknown; break;
    }
    switch (a.economy) {
      case Economy::Advanced: ++advanced; break;
      case Economy::Developing: ++developing; break;
      default: ++economy_unknown; break;
    }
  }
  const double total = static_cast<double>(authors.size());
  GroupStats stats;
  stats.gender = {{"Male", male, male / total},
                  {"Female", female, female / total},
                  {"Unknown", gender_unknown, gender_unknown / total}};
  stats.country = {{"Advanced", advanced, advanced / total},
                   {"Developing", developing, developing / total},
                   {"Unknown", economy_unknown, economy_unknown / total}};
  return stats;
}

void write_group_stats_csv(const GroupStats& stats, std::ostream& out) {
  out << "variable,value,count,fraction\n";
  char buf[64];
  const auto row = [&](const char* variable, const GroupStats::Cell& cell) {
    std::snprintf(buf, sizeof(buf), "%.9g", cell.fraction);
    out << variable << ',' << cell.value << ',' << cell.count << ',' << buf << '\n';
  };
  for (const auto& cell : stats.gender) row("gender", cell);
  for (const auto& cell : stats.country) row("country", cell);
}

void write_group_stats_csv(const GroupStats& stats, const std::filesystem::path& path) {
  auto out = detail::open_output(path);
  write_group_stats_csv(stats, out);
}

}  // namespace fairrank
