#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fairrank/types.hpp"

namespace fairrank {

// The two group variables of the cost function: author gender and author
// country, the latter carrying economy-class values.
enum class GroupVar { Gender, Country };

std::string_view group_var_name(GroupVar v);                // "gender" / "country"
const std::vector<std::string>& group_values(GroupVar v);   // known labels, fixed order

// The author's label for a variable ("Unknown" when unresolved).
std::string_view group_label(const AuthorRecord& author, GroupVar v);

// Index into group_values(v), or -1 for Unknown.
int group_label_index(const AuthorRecord& author, GroupVar v);

// Normalized probability table over one variable's known values.
// After imputation no Unknown mass exists, so `values` excludes Unknown.
struct GroupDistribution {
  GroupVar variable = GroupVar::Gender;
  std::vector<std::string> values;
  std::vector<double> probs;
};

struct ImputationPolicy {
  enum class Strategy { SampleByCorpusFraction };
  std::uint64_t seed = 0;
  Strategy strategy = Strategy::SampleByCorpusFraction;
};

// Replaces every Unknown label by a value drawn with probability equal to
// that value's fraction among identified authors. Identified labels are
// never changed. Draws walk authors in ascending author_id order (gender
// first, then economy per author), so a seed fixes the result exactly.
// Throws ValidationError when a variable has no identified labels at all.
AuthorTable impute(const AuthorTable& authors, const ImputationPolicy& policy);

// Author-pooled distribution over a document list: every author occurrence
// counts once per listing (a shared author on two docs counts twice).
// Documents with no resolvable authors contribute nothing; zero occurrences
// over the whole list is a ValidationError, as is an Unknown label
// (impute first).
GroupDistribution pooled_distribution(std::span<const std::string> doc_ids,
                                      const CorpusTable& corpus, const AuthorTable& authors,
                                      GroupVar variable);

// KL(p || q) = sum p_i ln(p_i / q_i) after additive smoothing: alpha is added
// to every cell of both distributions and each is renormalized. Requires the
// same variable and value set on both sides.
double kl_divergence(const GroupDistribution& p, const GroupDistribution& q,
                     double alpha = 1e-6);

}  // namespace fairrank
