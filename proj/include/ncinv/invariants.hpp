#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "ncinv/chartheory.hpp"
#include "ncinv/decide.hpp"
#include "ncinv/errors.hpp"
#include "ncinv/freegroup.hpp"
#include "ncinv/ncexpr.hpp"

namespace ncinv {

enum class Field { Complex, Real };

const char* to_string(Field f);

/// An eigenvector of pi restricted to N, as coordinates in the variables and
/// as an expression, labelled by the index of its character in the table of N.
struct LabeledVector {
  std::vector<Cyclotomic> coords;
  std::size_t character = 0;
  NCExpr expr;
};

struct IsotypicBasis {
  std::shared_ptr<const CharacterTable> table;  // of N as a group
  std::vector<LabeledVector> vectors;           // descending lexicographic coordinates
};

/// Joint eigenbasis of an abelian normal N. For a real representation the
/// vectors of conjugate characters are literal conjugates and vectors of real
/// characters are conjugation-fixed.
IsotypicBasis isotypic_basis(const RepresentationMatrices& pi, const Subgroup& N);

struct LevelSummary {
  std::size_t group_order = 0;
  std::size_t subgroup_order = 0;
  std::size_t variables_in = 0;
  std::size_t generators_out = 0;
  bool count_ok = false;
  bool monomial = false;           // residual action one entry per row and column
  bool character_matches = true;   // residual character equals qpi_character
  std::vector<std::string> letter_names;
  std::vector<std::string> letter_definitions;  // infix over the previous level's names
};

struct GeneratorSet {
  Field field = Field::Complex;
  std::size_t level = 0;
  std::vector<std::string> variables;
  std::vector<NCExpr> generators;  // in the original variables
  std::vector<std::string> names;
  std::vector<std::string> words;  // rendering over the last level's letters
  GroupPtr residual;               // group still acting on the generators
  std::vector<Matrix> action;      // images of residual->generators()
  /// conj(g_i) = conjugation_scalars[i] * g_{conjugation[i]}; empty when unknown.
  std::vector<std::size_t> conjugation;
  std::vector<Cyclotomic> conjugation_scalars;
  std::vector<LevelSummary> levels;
  std::vector<std::string> warnings;
  std::size_t acting_order = 1;  // order of the group acting faithfully
  bool uses_inverses = false;    // Schreier words with inverse letters

  std::size_t expected_count() const { return acting_order * (variables.size() - 1) + 1; }
};

class NotCompleteError : public InputError {
 public:
  NotCompleteError(const std::string& what, CompletenessReport report)
      : InputError(what), report_(std::move(report)) {}
  const CompletenessReport& report() const { return report_; }

 private:
  CompletenessReport report_;
};

GeneratorSet abelian_invariant_generators(const RepresentationMatrices& pi, Field field);
GeneratorSet complete_invariant_generators(const RepresentationMatrices& pi, Field field);
/// Abelian groups go through the abelian path, everything else through completeness.
GeneratorSet invariant_generators(const RepresentationMatrices& pi, Field field);

/// Conjugation-fixed combinations w + conj(w), i(w - conj(w)); duplicates and
/// zeros dropped. `words`, when given, is rewritten alongside.
std::vector<NCExpr> realify_generators(const std::vector<NCExpr>& gens, const std::vector<std::size_t>& conjugation,
                                       const std::vector<Cyclotomic>& scalars,
                                       std::vector<std::string>* words = nullptr);

struct InvarianceReport {
  bool passed = false;
  bool count_ok = false;
  bool real_ok = true;
  std::size_t trials = 0;
  std::size_t checks = 0;
  std::vector<std::string> failures;
};

/// Exact check on random rational dim x dim tuples under every group element.
InvarianceReport verify_invariance(const GeneratorSet& gens, const RepresentationMatrices& pi, std::size_t trials = 3,
                                   std::size_t dim = 4, std::uint64_t seed = 20240601);

json export_generators(const GeneratorSet& gens);

}  // namespace ncinv
