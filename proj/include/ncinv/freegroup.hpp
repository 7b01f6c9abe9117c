#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <vector>

namespace ncinv {

struct Letter {
  std::size_t gen = 0;
  int exp = 1;  // +1 or -1
  friend bool operator==(const Letter& a, const Letter& b) { return a.gen == b.gen && a.exp == b.exp; }
};

/// A freely reduced word.
class FreeWord {
 public:
  FreeWord() = default;
  explicit FreeWord(std::vector<Letter> letters);  // reduces

  static FreeWord generator(std::size_t g, int exp = 1) { return FreeWord({Letter{g, exp}}); }

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  FreeWord inverse() const;

  friend FreeWord operator*(const FreeWord& a, const FreeWord& b);
  friend bool operator==(const FreeWord& a, const FreeWord& b) { return a.letters_ == b.letters_; }
  friend bool operator<(const FreeWord& a, const FreeWord& b);  // shortlex

  /// "b a c^-1"; names default to x1, x2, ...
  std::string str(const std::vector<std::string>& names = {}) const;
  static FreeWord parse(const std::string& text, const std::vector<std::string>& names);

 private:
  std::vector<Letter> letters_;
};

FreeWord reduce(const std::vector<Letter>& letters);

/// Shortlex letter order: x1 < ... < xn < x1^-1 < ... < xn^-1.
std::size_t letter_rank(const Letter& l, std::size_t n);

struct SchreierResult {
  std::vector<FreeWord> transversal;  // representative of each coset, in discovery order
  std::vector<FreeWord> generators;   // nonempty Schreier generators
  std::size_t cosets = 0;
};

/// Schreier generators for the stabiliser of coset 0 in a transitive action on
/// `cosets` points, given by step(coset, generator) for positive letters.
SchreierResult schreier_generators(std::size_t n, std::size_t cosets,
                                   const std::function<std::size_t(std::size_t, std::size_t)>& step);

/// A finite abelian group Z_{d1} x ... x Z_{dr} and images of the free generators.
struct AbelianTarget {
  std::vector<std::uint64_t> invariants;
  std::vector<std::vector<std::int64_t>> images;  // one exponent vector per free generator
};

/// Kernel of x_i -> images[i]; InputError if the map is not surjective.
SchreierResult kernel_generators(std::size_t n, const AbelianTarget& target);
/// Same on the image subgroup (no surjectivity requirement).
SchreierResult kernel_generators_on_image(std::size_t n, const AbelianTarget& target);
/// Image of the word in the abelian group, reduced mod the invariants.
std::vector<std::int64_t> evaluate(const FreeWord& w, const AbelianTarget& target);

/// Stallings-folded core graph of the subgroup generated by some words.
struct SubgroupGraph {
  std::size_t n = 0;        // ambient rank
  std::size_t vertices = 1;
  std::size_t base = 0;
  struct Edge {
    std::size_t from, gen, to;
  };
  std::vector<Edge> edges;
};

SubgroupGraph fold(const std::vector<FreeWord>& generators, std::size_t n);

inline constexpr std::size_t kInfiniteIndex = std::numeric_limits<std::size_t>::max();

struct RankIndex {
  std::size_t rank = 0;
  std::size_t index = kInfiniteIndex;  // kInfiniteIndex when the graph is not a complete cover
};

RankIndex graph_rank_index(const SubgroupGraph& g);
/// Whether the folded graph reads w as a closed loop at the base point.
bool accepts(const SubgroupGraph& g, const FreeWord& w);
/// Equality of generated subgroups via mutual membership.
bool same_subgroup(const std::vector<FreeWord>& a, const std::vector<FreeWord>& b, std::size_t n);

}  // namespace ncinv
