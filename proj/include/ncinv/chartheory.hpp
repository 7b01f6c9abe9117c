#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ncinv/cyclotomic.hpp"
#include "ncinv/group.hpp"
#include "ncinv/linalg.hpp"
#include "ncinv/modular.hpp"

namespace ncinv {

/// A class function: one value per conjugacy class of `group`, in the
/// group's canonical class order.
struct ClassFunction {
  GroupPtr group;
  std::vector<Cyclotomic> values;

  const Cyclotomic& degree() const { return values.front(); }
  ClassFunction conjugate() const;

  friend ClassFunction operator+(const ClassFunction& a, const ClassFunction& b);
  friend ClassFunction operator-(const ClassFunction& a, const ClassFunction& b);
  friend ClassFunction operator*(const Cyclotomic& s, const ClassFunction& a);
  friend bool operator==(const ClassFunction& a, const ClassFunction& b);
};

ClassFunction trivial_character(const GroupPtr& G);
ClassFunction regular_character(const GroupPtr& G);
ClassFunction zero_function(const GroupPtr& G);

/// Irreducible characters in canonical order: by degree, the trivial
/// character first, then by descending lexicographic value vectors.
class CharacterTable {
 public:
  /// Dixon's method: simultaneous eigenvectors of the class-sum structure
  /// constants over F_p, lifted to Q(zeta_e) through eigenvalue multiplicities.
  static CharacterTable compute(const GroupPtr& G);
  /// Wraps a complete list of irreducibles (sorted canonically; count checked).
  static CharacterTable from_irreducibles(const GroupPtr& G, std::vector<ClassFunction> chars);

  const GroupPtr& group() const { return group_; }
  const ConjugacyClasses& classes() const { return group_->classes(); }
  std::size_t size() const { return irr_.size(); }
  const ClassFunction& operator[](std::size_t i) const { return irr_[i]; }
  const std::vector<ClassFunction>& irreducibles() const { return irr_; }
  /// Class index of the inverse of each class.
  const std::vector<std::size_t>& inverse_class() const { return inverse_class_; }
  std::size_t index_of(const ClassFunction& chi) const;  // throws InputError if absent
  bool is_linear(std::size_t i) const;

 private:
  GroupPtr group_;
  std::vector<ClassFunction> irr_;
  std::vector<std::size_t> inverse_class_;
};

/// Strict weak order used for canonical character ordering.
bool canonical_character_less(const ClassFunction& a, const ClassFunction& b);

Cyclotomic inner_product(const ClassFunction& phi, const ClassFunction& psi);

/// A subgroup together with a standalone copy of it as a group.
struct EmbeddedSubgroup {
  Subgroup subgroup;
  GroupPtr group;
  std::vector<Elem> embedding;  // local -> parent
  std::vector<Elem> local;      // parent -> local, UINT32_MAX outside

  static EmbeddedSubgroup make(const Subgroup& H);
  const GroupPtr& parent() const { return subgroup.parent(); }
};

ClassFunction restrict(const ClassFunction& chi, const EmbeddedSubgroup& H);
ClassFunction induce(const ClassFunction& mu, const EmbeddedSubgroup& H);
ClassFunction tensor(const ClassFunction& a, const ClassFunction& b);
/// Requires chi(n) = chi(1) on the kernel; InputError otherwise.
ClassFunction deflate(const ClassFunction& chi, const QuotientGroup& Q);
ClassFunction inflate(const ClassFunction& chibar, const QuotientGroup& Q);
bool is_trivial_on(const ClassFunction& chi, const Subgroup& N);

/// Multiplicity of each irreducible of `table` in chi. InputError unless all
/// are nonnegative integers.
std::vector<long> decompose(const ClassFunction& chi, const CharacterTable& table);
bool is_multiplicity_free(const std::vector<long>& multiplicities);

/// Stabiliser of mu (a class function of the normal subgroup H) under conjugation.
Subgroup inertia_subgroup(const ClassFunction& mu, const EmbeddedSubgroup& H);
/// Indices of the irreducibles of G lying over mu.
std::vector<std::size_t> irr_over(const ClassFunction& mu, const EmbeddedSubgroup& H, const CharacterTable& table_G);

/// Table of G/N from the irreducibles of G trivial on N.
CharacterTable quotient_table(const CharacterTable& table_G, const QuotientGroup& Q);

/// Images of every character value in a modular field whose exponent is a
/// multiple of the group exponent.
std::vector<std::vector<std::uint64_t>> modular_values(const CharacterTable& table, const ModularField& F);

/// A linear representation given by generator images, expanded to every element.
class RepresentationMatrices {
 public:
  /// generator_images[i] is the image of G->generators()[i]. Column j of an
  /// image holds the coordinates of the image of the j-th basis variable.
  /// Throws InputError if the images do not define a homomorphism.
  RepresentationMatrices(GroupPtr G, std::size_t dim, std::vector<Matrix> generator_images,
                         std::vector<std::string> variables = {});

  const GroupPtr& group() const { return group_; }
  std::size_t dim() const { return dim_; }
  const Matrix& image(Elem g) const { return images_[g]; }
  const std::vector<Matrix>& generator_images() const { return gen_images_; }
  const std::vector<std::string>& variables() const { return variables_; }
  /// Least common multiple of the moduli of all entries.
  std::uint64_t field_modulus() const { return modulus_; }
  ClassFunction character() const;
  /// Elements acting as the identity.
  Subgroup kernel() const;

 private:
  GroupPtr group_;
  std::size_t dim_;
  std::vector<Matrix> gen_images_;
  std::vector<Matrix> images_;
  std::vector<std::string> variables_;
  std::uint64_t modulus_ = 1;
};

}  // namespace ncinv
