#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ncinv/chartheory.hpp"
#include "ncinv/group.hpp"

namespace ncinv {

enum class Property { Unramified, PseudoUnramified };

std::string to_string(Property p);

namespace tags {
inline constexpr const char* kUnramifiedSufficient = "UNRAMIFIED-SUFFICIENT";
inline constexpr const char* kUnramifiedImpossible = "UNRAMIFIED-IMPOSSIBLE";
inline constexpr const char* kSkip = "SKIP";
inline constexpr const char* kCommutatorNecessary = "COMMUTATOR-NECESSARY-FAILS";
inline constexpr const char* kNilpotentMaximal = "NILPOTENT-MAXIMAL-ONLY";
inline constexpr const char* kAbelian = "ABELIAN";
inline constexpr const char* kMemo = "MEMO";
}  // namespace tags

/// Outcome of a single "unramified / pseudo-unramified over N" check.
struct OverResult {
  bool holds = false;
  /// Unramified: an irreducible of G (table index) whose restriction is
  /// neither multiplicity free nor a multiple of the trivial character.
  std::optional<std::size_t> violating_character;
  /// Pseudo: an irreducible of N (table index) with no multiplicity-free
  /// irreducible of G above it.
  std::optional<std::size_t> orphan_linear;
  /// Pseudo: for each G-orbit of Irr(N), (orbit representative in Irr(N), chosen character of G).
  std::vector<std::pair<std::size_t, std::size_t>> choices;
};

/// Per-group data reused across the checks of a decision run.
class GroupContext {
 public:
  explicit GroupContext(GroupPtr G);
  GroupContext(GroupPtr G, std::shared_ptr<const CharacterTable> table);

  const GroupPtr& group() const { return group_; }
  const CharacterTable& table() const { return *table_; }
  std::shared_ptr<const CharacterTable> table_ptr() const { return table_; }
  const ModularField& field() const { return field_; }
  const std::vector<std::vector<std::uint64_t>>& modular() const { return modular_; }
  const Subgroup& derived() const { return derived_; }
  const Subgroup& centre() const { return centre_; }
  bool nilpotent() const { return nilpotent_; }

  /// Irreducible values of a subgroup in field(), with the class of each
  /// parent element (SIZE_MAX outside H). Memoised per subgroup.
  struct SubgroupValues {
    std::vector<std::size_t> class_of;
    std::vector<std::vector<std::uint64_t>> values;
  };
  std::shared_ptr<const SubgroupValues> subgroup_values(const Subgroup& H) const;

 private:
  GroupPtr group_;
  std::shared_ptr<const CharacterTable> table_;
  ModularField field_;
  std::vector<std::vector<std::uint64_t>> modular_;
  Subgroup derived_;
  Subgroup centre_;
  bool nilpotent_ = false;
  std::shared_ptr<std::mutex> cache_mutex_ = std::make_shared<std::mutex>();
  mutable std::map<std::vector<Elem>, std::shared_ptr<const SubgroupValues>> subgroup_cache_;
};

/// Irr(N) together with the restriction data from G, all in the modular field of G.
struct RestrictionData {
  EmbeddedSubgroup sub;
  std::shared_ptr<const CharacterTable> table_N;
  /// multiplicity[i][j] = <chi_i|_N, mu_j>
  std::vector<std::vector<long>> multiplicity;
};

RestrictionData restriction_data(const GroupContext& ctx, const Subgroup& N);

/// N must be a nontrivial abelian normal subgroup of G (InputError otherwise).
OverResult is_unramified_over(const GroupContext& ctx, const Subgroup& N);
OverResult is_pseudo_unramified_over(const GroupContext& ctx, const Subgroup& N);
OverResult check_over(const GroupContext& ctx, const Subgroup& N, Property p);

/// The same verdicts through inertia subgroups (independent cross-check).
bool inertia_criterion(const GroupContext& ctx, const Subgroup& N, Property p);

/// Rule tags that fire for (G, N).
std::set<std::string> fast_path_flags(const GroupContext& ctx, const Subgroup& N);

struct CertificateLevel {
  std::size_t group_order = 0;
  std::vector<Elem> subgroup;  // elements of N in the group of this level
  std::vector<std::string> tags;
  std::vector<std::pair<std::size_t, std::size_t>> choices;  // pseudo only
};

struct Counterexample {
  std::vector<Elem> subgroup;  // abelian normal subgroup of the input group
  std::optional<std::size_t> character;  // index in Irr(G) (unramified)
  std::optional<std::size_t> linear;     // index in Irr(N) (pseudo)
  std::string note;
};

struct DecisionCertificate {
  Property property = Property::Unramified;
  bool verdict = false;
  std::vector<CertificateLevel> chain;
  std::optional<Counterexample> counterexample;
  std::vector<std::string> prunes_applied;
  std::size_t nodes_explored = 0;
};

DecisionCertificate decide_totally(const GroupPtr& G, Property p);
DecisionCertificate is_totally_unramified(const GroupPtr& G);
DecisionCertificate is_totally_pseudo_unramified(const GroupPtr& G);

/// Re-verifies each level of a positive certificate from scratch.
bool replay_certificate(const GroupPtr& G, const DecisionCertificate& cert);

// ---------------------------------------------------------------- completeness

struct CompletenessLevel {
  GroupPtr group;
  std::shared_ptr<const CharacterTable> table;
  std::vector<Elem> subgroup;          // N
  std::vector<std::size_t> support;    // constituents of the character at this level
  std::vector<std::size_t> b_part;     // constituents forming pi_B
  std::vector<std::size_t> j_part;     // constituents of pi_J (support)
  std::vector<std::size_t> next_support;  // constituents of Q pi on G/N (empty at the last level)
  std::shared_ptr<const QuotientGroup> quotient;  // G/N, null at the last level
};

struct CompletenessReport {
  bool verdict = false;
  std::vector<CompletenessLevel> levels;
  std::string reason;
  std::size_t nodes_explored = 0;
};

/// Q pi on G/N as a class function, for pi = B + J (characters of G).
ClassFunction qpi_character(const ClassFunction& chi_pi, const ClassFunction& chi_B, const ClassFunction& chi_J,
                            const QuotientGroup& Q);

struct CompletenessOptions {
  /// Only accept pi_B choices closed under complex conjugation at every level.
  bool conjugation_closed = false;
  std::size_t max_nodes = 200000;
};

CompletenessReport is_complete(const GroupPtr& G, const ClassFunction& chi_pi, const CompletenessOptions& opts = {});
CompletenessReport is_complete(const RepresentationMatrices& pi, const CompletenessOptions& opts = {});
CompletenessReport is_complete_regular(const GroupPtr& G);

/// Checks item (1) and the constituent bookkeeping of every level.
bool replay_completeness(const CompletenessReport& report);

}  // namespace ncinv
