#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "ncinv/cyclotomic.hpp"
#include "ncinv/io.hpp"
#include "ncinv/linalg.hpp"

namespace ncinv {

enum class NodeKind { Variable, Scalar, Sum, Product, Scale, Inverse };

const char* to_string(NodeKind k);

/// Same number in the smallest cyclotomic field containing it.
Cyclotomic minimise_modulus(const Cyclotomic& c);

/// Immutable noncommutative expression DAG over numbered variables.
/// Constructors normalise: nested sums and products are flattened, scalars
/// are pulled to the front of products, equal summands are merged (first
/// occurrence order) and zero terms dropped.
class NCExpr {
 public:
  NCExpr();  // zero

  static NCExpr variable(std::size_t index);
  static NCExpr scalar(const Cyclotomic& c);
  static NCExpr sum(const std::vector<NCExpr>& terms);
  static NCExpr product(const std::vector<NCExpr>& factors);
  static NCExpr scale(const Cyclotomic& c, const NCExpr& e);
  static NCExpr inverse(const NCExpr& e);
  /// sum_i coeffs[i] * basis[i]
  static NCExpr linear(const std::vector<Cyclotomic>& coeffs, const std::vector<NCExpr>& basis);

  NodeKind kind() const;
  std::size_t variable_index() const;
  const Cyclotomic& scalar_value() const;  // Scalar and Scale nodes
  const std::vector<NCExpr>& children() const;

  bool is_zero() const;
  /// Structural normal-form key; equal keys mean equal expressions.
  const std::string& key() const;
  const void* id() const { return node_.get(); }

  /// Coefficient-wise complex conjugation.
  NCExpr conjugate() const;
  /// Maximal word length (inverses count as their argument's degree).
  std::size_t degree() const;
  bool has_inverse() const;
  /// Number of distinct DAG nodes.
  std::size_t dag_size() const;

  /// Infix rendering; variables use `names` when given, x1.. otherwise.
  std::string str(const std::vector<std::string>& names = {}) const;

  friend bool operator==(const NCExpr& a, const NCExpr& b) { return a.key() == b.key(); }
  friend bool operator!=(const NCExpr& a, const NCExpr& b) { return !(a == b); }

 private:
  struct Node;
  explicit NCExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static NCExpr make(NodeKind kind, std::size_t var, Cyclotomic scalar, std::vector<NCExpr> children);
  std::shared_ptr<const Node> node_;
};

/// Substitution of matrices for variables, memoised across calls on shared nodes.
class MatrixEvaluator {
 public:
  explicit MatrixEvaluator(std::vector<Matrix> values);
  /// Throws ArithmeticError when an inverse node meets a singular matrix.
  const Matrix& operator()(const NCExpr& e);

 private:
  std::vector<Matrix> values_;
  std::size_t dim_;
  std::unordered_map<const void*, Matrix> memo_;
  std::vector<NCExpr> keep_;  // keeps memoised nodes alive
};

/// Expanded noncommutative polynomial: monomial (variable indices) -> coefficient.
using NCPolynomial = std::map<std::vector<std::size_t>, Cyclotomic>;

/// Expands an inverse-free expression; ResourceError past max_terms monomials.
NCPolynomial expand(const NCExpr& e, std::size_t max_terms = 200000);
std::string polynomial_str(const NCPolynomial& p, const std::vector<std::string>& names = {});

/// DAG export: node table plus one root id per expression.
json expressions_to_json(const std::vector<NCExpr>& exprs, std::vector<std::size_t>& roots);

}  // namespace ncinv
