#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace ncinv {

using Elem = std::uint32_t;

inline constexpr std::size_t kDefaultElementBudget = 100000;

struct PermutationProvenance {
  std::size_t degree = 0;
  /// Images of 0..degree-1; the product p*q applies q first.
  std::vector<std::vector<std::uint32_t>> generators;
};

struct MatrixProvenance {
  std::uint32_t prime = 0;
  std::size_t dim = 0;
  /// Row-major dim x dim matrices over F_prime.
  std::vector<std::vector<std::uint32_t>> generators;
};

using GeneratorProvenance = std::variant<std::monostate, PermutationProvenance, MatrixProvenance>;

/// Partition of a group into conjugacy classes, in canonical order:
/// (order of representative, class size, minimal element index).
struct ConjugacyClasses {
  std::vector<std::size_t> class_of;       // element -> class index
  std::vector<Elem> representatives;       // minimal element index of each class
  std::vector<std::size_t> sizes;
  std::vector<std::vector<Elem>> members;  // sorted element lists
  std::size_t count() const { return representatives.size(); }
};

/// A finite group as a dense multiplication table on 0..order-1, element 0
/// being the identity. Immutable once constructed; conjugacy classes, element
/// orders and a small generating set are computed eagerly.
class FiniteGroup {
 public:
  /// Validates closure, identity, inverses and associativity (exhaustive for
  /// order <= 1000, 10^4 sampled triples above). The identity is relabelled to 0.
  static FiniteGroup from_table(std::size_t order, std::vector<Elem> mul,
                                std::vector<std::string> labels = {});
  /// Same without validation, for tables derived from an existing group.
  static FiniteGroup from_trusted_table(std::size_t order, std::vector<Elem> mul,
                                        std::vector<std::string> labels = {});

  std::size_t order() const { return n_; }
  Elem identity() const { return 0; }
  Elem mul(Elem a, Elem b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
  Elem inv(Elem a) const { return inverse_[a]; }
  Elem conj(Elem g, Elem x) const { return mul(mul(inv(x), g), x); }  // x^-1 g x
  Elem commutator(Elem a, Elem b) const { return mul(mul(inv(a), inv(b)), mul(a, b)); }
  Elem power(Elem a, std::int64_t k) const;

  const std::vector<Elem>& table() const { return table_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const ConjugacyClasses& classes() const { return classes_; }
  std::size_t element_order(Elem a) const { return orders_[a]; }
  std::size_t exponent() const { return exponent_; }
  bool is_abelian() const { return abelian_; }

  /// Generating set: the input generators for groups built from generators,
  /// a greedily chosen one otherwise.
  const std::vector<Elem>& generators() const { return generators_; }
  /// Word bookkeeping for groups built from generators: element e equals
  /// mul(word_parent(e), generators()[word_letter(e)]) for e != identity.
  bool has_generator_words() const { return !word_parent_.empty(); }
  Elem word_parent(Elem e) const { return word_parent_[e]; }
  std::size_t word_letter(Elem e) const { return word_letter_[e]; }

  const GeneratorProvenance& provenance() const { return provenance_; }

  /// Table bytes, usable as a memoisation key for identical presentations.
  std::string table_key() const;

 private:
  friend FiniteGroup closure_from_generators(std::size_t, std::vector<std::vector<Elem>>,
                                             std::vector<Elem>, GeneratorProvenance,
                                             std::vector<std::string>);
  FiniteGroup() = default;
  void finish();

  std::size_t n_ = 0;
  std::vector<Elem> table_;
  std::vector<Elem> inverse_;
  std::vector<std::size_t> orders_;
  std::size_t exponent_ = 1;
  bool abelian_ = true;
  std::vector<std::string> labels_;
  std::vector<Elem> generators_;
  std::vector<Elem> word_parent_;
  std::vector<std::size_t> word_letter_;
  ConjugacyClasses classes_;
  GeneratorProvenance provenance_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Closes a set of permutations (on degree points, product applies the right
/// factor first) into a group. Throws ResourceError past `budget` elements.
GroupPtr group_from_permutations(std::size_t degree, const std::vector<std::vector<std::uint32_t>>& gens,
                                 std::size_t budget = kDefaultElementBudget);
/// Closes a set of invertible matrices over F_p.
GroupPtr group_from_matrices(std::uint32_t prime, std::size_t dim,
                             const std::vector<std::vector<std::uint32_t>>& gens,
                             std::size_t budget = kDefaultElementBudget);
GroupPtr group_from_table(std::size_t order, std::vector<Elem> mul);

/// A subgroup as a sorted element set of its parent.
class Subgroup {
 public:
  Subgroup(GroupPtr parent, std::vector<Elem> elements);

  const GroupPtr& parent() const { return parent_; }
  const std::vector<Elem>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }
  bool contains(Elem e) const { return member_[e]; }
  bool is_trivial() const { return elements_.size() == 1; }
  bool is_whole() const { return elements_.size() == parent_->order(); }
  /// Small generating set (greedy).
  const std::vector<Elem>& generators() const { return gens_; }

  bool is_subset_of(const Subgroup& other) const;
  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.elements_ == b.elements_; }
  /// Canonical order: (order, lexicographic element list).
  friend bool operator<(const Subgroup& a, const Subgroup& b);

 private:
  GroupPtr parent_;
  std::vector<Elem> elements_;
  std::vector<bool> member_;
  std::vector<Elem> gens_;
};

struct QuotientGroup {
  GroupPtr parent;
  Subgroup kernel;
  GroupPtr group;
  std::vector<Elem> projection;  // parent element -> coset index
  std::vector<Elem> lift;        // coset index -> minimal parent element in the coset
};

/// A subgroup viewed as a group in its own right, with the embedding.
struct SubgroupAsGroup {
  GroupPtr group;
  std::vector<Elem> embedding;  // local index -> parent element
};

Subgroup trivial_subgroup(const GroupPtr& G);
Subgroup whole_group(const GroupPtr& G);
Subgroup subgroup_generated(const GroupPtr& G, const std::vector<Elem>& gens);
Subgroup normal_closure(const GroupPtr& G, const std::vector<Elem>& gens);
Subgroup join(const Subgroup& a, const Subgroup& b);
Subgroup intersection(const Subgroup& a, const Subgroup& b);

bool is_normal(const Subgroup& N);
bool is_abelian(const Subgroup& H);

/// All normal subgroups, ascending in the canonical subgroup order.
std::vector<Subgroup> normal_subgroups(const GroupPtr& G);
/// Nontrivial abelian normal subgroups, descending by order (ties: lexicographic).
std::vector<Subgroup> abelian_normal_subgroups(const GroupPtr& G);
/// Abelian normal subgroups that are maximal among abelian normal subgroups.
std::vector<Subgroup> maximal_abelian_normal_subgroups(const GroupPtr& G);

QuotientGroup quotient(const GroupPtr& G, const Subgroup& N);
SubgroupAsGroup subgroup_as_group(const Subgroup& H);

Subgroup derived_subgroup(const GroupPtr& G);
Subgroup center(const GroupPtr& G);
/// [N, H] = <[n, h] : n in N, h in H>.
Subgroup commutator(const Subgroup& N, const Subgroup& H);
bool is_nilpotent(const GroupPtr& G);
/// Image of a subgroup of the parent under the quotient map.
Subgroup image_in_quotient(const QuotientGroup& Q, const Subgroup& H);
/// Full preimage of a subgroup of the quotient.
Subgroup preimage(const QuotientGroup& Q, const Subgroup& Hbar);

GroupPtr direct_product(const GroupPtr& G, const GroupPtr& H);

/// Exhaustive (order <= 1000) or sampled associativity check.
bool check_associativity(const FiniteGroup& G, std::uint64_t seed = 1);

}  // namespace ncinv
