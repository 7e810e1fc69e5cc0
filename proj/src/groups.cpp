#include "fairrank/groups.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "fairrank/rng.hpp"

namespace fairrank {

std::string_view group_var_name(GroupVar v) {
  return v == GroupVar::Gender ? "gender" : "country";
}

const std::vector<std::string>& group_values(GroupVar v) {
  static const std::vector<std::string> gender{"Male", "Female"};
  static const std::vector<std::string> country{"Advanced", "Developing"};
  return v == GroupVar::Gender ? gender : country;
}

std::string_view group_label(const AuthorRecord& author, GroupVar v) {
  return v == GroupVar::Gender ? to_string(author.gender) : to_string(author.economy);
}

int group_label_index(const AuthorRecord& author, GroupVar v) {
  if (v == GroupVar::Gender) {
    switch (author.gender) {
      case Gender::Male: return 0;
      case Gender::Female: return 1;
      default: return -1;
    }
  }
  switch (author.economy) {
    case Economy::Advanced: return 0;
    case Economy::Developing: return 1;
    default: return -1;
  }
}

AuthorTable impute(const AuthorTable& authors, const ImputationPolicy& policy) {
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
  if (male + female == 0) {
    throw ValidationError("impute: no identified gender labels to sample from");
  }
  if (advanced + developing == 0) {
    throw ValidationError("impute: no identified economy labels to sample from");
  }
  const double male_frac = static_cast<double>(male) / static_cast<double>(male + female);
  const double advanced_frac =
      static_cast<double>(advanced) / static_cast<double>(advanced + developing);

  // Draw order is fixed by ascending author_id, independent of file order.
  std::vector<const AuthorRecord*> ordered;
  ordered.reserve(authors.size());
  for (const AuthorRecord& a : authors) ordered.push_back(&a);
  std::sort(ordered.begin(), ordered.end(),
            [](const AuthorRecord* a, const AuthorRecord* b) { return a->author_id < b->author_id; });

  std::mt19937_64 gen(policy.seed);
  std::unordered_map<std::string, std::pair<Gender, Economy>> assigned;
  for (const AuthorRecord* a : ordered) {
    Gender g = a->gender;
    Economy e = a->economy;
    if (g == Gender::Unknown) {
      g = rng::uniform01(gen) < male_frac ? Gender::Male : Gender::Female;
    }
    if (e == Economy::Unknown) {
      e = rng::uniform01(gen) < advanced_frac ? Economy::Advanced : Economy::Developing;
    }
    if (g != a->gender || e != a->economy) {
      assigned.emplace(a->author_id, std::make_pair(g, e));
    }
  }

  AuthorTable out;
  for (const AuthorRecord& a : authors) {
    AuthorRecord rec = a;
    auto it = assigned.find(a.author_id);
    if (it != assigned.end()) {
      rec.gender = it->second.first;
      rec.economy = it->second.second;
    }
    out.insert(std::move(rec));
  }
  return out;
}

GroupDistribution pooled_distribution(std::span<const std::string> doc_ids,
                                      const CorpusTable& corpus, const AuthorTable& authors,
                                      GroupVar variable) {
  if (doc_ids.empty()) {
    throw ValidationError("pooled_distribution: empty document list");
  }
  const auto& values = group_values(variable);
  std::vector<std::size_t> counts(values.size(), 0);
  std::size_t total = 0;
  for (const std::string& doc_id : doc_ids) {
    const PaperDoc& doc = corpus.at(doc_id);
    for (const std::string& author_id : doc.author_ids) {
      const AuthorRecord* author = authors.find(author_id);
      if (author == nullptr) continue;  // unresolvable author reference
      int idx = group_label_index(*author, variable);
      if (idx < 0) {
        throw ValidationError("pooled_distribution: author " + author_id + " has Unknown " +
                              std::string(group_var_name(variable)) + "; impute labels first");
      }
      ++counts[static_cast<std::size_t>(idx)];
      ++total;
    }
  }
  if (total == 0) {
    throw ValidationError("pooled_distribution: zero author occurrences over the document list");
  }
  GroupDistribution dist;
  dist.variable = variable;
  dist.values = values;
  dist.probs.resize(values.size());
  for (std::size_t i = 0; i < counts.size(); ++i) {
    dist.probs[i] = static_cast<double>(counts[i]) / static_cast<double>(total);
  }
  return dist;
}

double kl_divergence(const GroupDistribution& p, const GroupDistribution& q, double alpha) {
  if (p.variable != q.variable || p.values != q.values) {
    throw ValidationError("kl_divergence: distributions are over different variables or values");
  }
  if (p.probs.size() != p.values.size() || q.probs.size() != q.values.size()) {
    throw ValidationError("kl_divergence: probability vector does not match the value set");
  }
  const std::size_t n = p.probs.size();
  double p_sum = 0.0, q_sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    p_sum += p.probs[i] + alpha;
    q_sum += q.probs[i] + alpha;
  }
  double kl = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double pi = (p.probs[i] + alpha) / p_sum;
    const double qi = (q.probs[i] + alpha) / q_sum;
    if (pi == 0.0) continue;
    if (qi == 0.0) return std::numeric_limits<double>::infinity();
    kl += pi * std::log(pi / qi);
  }
  return kl;
}

}  // namespace fairrank
