#include "ncinv/ncexpr.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <mutex>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "ncinv/errors.hpp"

namespace ncinv {

const char* to_string(NodeKind k) {
  switch (k) {
    case NodeKind::Variable: return "VAR";
    case NodeKind::Scalar: return "SCALAR";
    case NodeKind::Sum: return "SUM";
    case NodeKind::Product: return "PRODUCT";
    case NodeKind::Scale: return "SCALE";
    case NodeKind::Inverse: return "INVERSE";
  }
  return "?";
}


Cyclotomic minimise_modulus(const Cyclotomic& c) { return c.reduced(); }

struct NCExpr::Node {
  NodeKind kind;
  std::size_t var = 0;
  Cyclotomic scalar;
  std::vector<NCExpr> children;
  std::string key;
};

namespace {

std::mutex intern_mutex;
std::unordered_map<std::string, std::size_t>& intern_table() {
  static std::unordered_map<std::string, std::size_t> t;
  return t;
}

std::string interned_key(const std::string& raw) {
  std::lock_guard<std::mutex> lock(intern_mutex);
  auto& t = intern_table();
  auto [it, fresh] = t.emplace(raw, t.size());
  return "#" + std::to_string(it->second);
}

}  // namespace

NCExpr NCExpr::make(NodeKind kind, std::size_t var, Cyclotomic scalar, std::vector<NCExpr> children) {
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->var = var;
  if (kind == NodeKind::Scalar || kind == NodeKind::Scale) scalar = minimise_modulus(scalar);
  n->scalar = std::move(scalar);
  n->children = std::move(children);
  std::ostringstream raw;
  raw << static_cast<int>(kind) << ':';
  switch (kind) {
    case NodeKind::Variable: raw << var; break;
    case NodeKind::Scalar:
    case NodeKind::Scale: raw << n->scalar.modulus() << '[' << n->scalar.str() << ']'; break;
    default: break;
  }
  for (const auto& c : n->children) raw << ',' << c.key();
  n->key = interned_key(raw.str());
  return NCExpr(std::shared_ptr<const Node>(std::move(n)));
}

NCExpr::NCExpr() : NCExpr(make(NodeKind::Scalar, 0, Cyclotomic(0), {})) {}

NCExpr NCExpr::variable(std::size_t index) { return make(NodeKind::Variable, index, Cyclotomic(0), {}); }
NCExpr NCExpr::scalar(const Cyclotomic& c) { return make(NodeKind::Scalar, 0, c, {}); }

NodeKind NCExpr::kind() const { return node_->kind; }
std::size_t NCExpr::variable_index() const { return node_->var; }
const Cyclotomic& NCExpr::scalar_value() const { return node_->scalar; }
const std::vector<NCExpr>& NCExpr::children() const { return node_->children; }
const std::string& NCExpr::key() const { return node_->key; }
bool NCExpr::is_zero() const { return node_->kind == NodeKind::Scalar && node_->scalar.is_zero(); }

namespace {

// c * base with base not a Scale node
std::pair<Cyclotomic, NCExpr> split_scale(const NCExpr& e) {
  if (e.kind() == NodeKind::Scale) return {e.scalar_value(), e.children().front()};
  if (e.kind() == NodeKind::Scalar) return {e.scalar_value(), NCExpr::scalar(Cyclotomic(1))};
  return {Cyclotomic(1), e};
}

}  // namespace

NCExpr NCExpr::scale(const Cyclotomic& c, const NCExpr& e) {
  if (c.is_zero() || e.is_zero()) return NCExpr();
  if (c == Cyclotomic(1)) return e;
  if (e.kind() == NodeKind::Scalar) return scalar(c * e.scalar_value());
  if (e.kind() == NodeKind::Scale) return scale(c * e.scalar_value(), e.children().front());
  if (e.kind() == NodeKind::Sum) {
    std::vector<NCExpr> terms;
    for (const auto& t : e.children()) terms.push_back(scale(c, t));
    return sum(terms);
  }
  return make(NodeKind::Scale, 0, c, {e});
}

NCExpr NCExpr::sum(const std::vector<NCExpr>& terms) {
  std::vector<std::pair<Cyclotomic, NCExpr>> acc;
  std::unordered_map<std::string, std::size_t> where;
  std::function<void(const NCExpr&)> add = [&](const NCExpr& t) {
    if (t.kind() == NodeKind::Sum) {
      for (const auto& c : t.children()) add(c);
      return;
    }
    if (t.is_zero()) return;
    auto [c, base] = split_scale(t);
    auto [it, fresh] = where.emplace(base.key(), acc.size());
    if (fresh) {
      acc.emplace_back(c, base);
    } else {
      acc[it->second].first += c;
    }
  };
  for (const auto& t : terms) add(t);
  std::vector<NCExpr> out;
  for (auto& [c, base] : acc) {
    if (c.is_zero()) continue;
    if (base.kind() == NodeKind::Scalar) {
      out.push_back(scalar(c));
    } else {
      out.push_back(c == Cyclotomic(1) ? base : make(NodeKind::Scale, 0, c, {base}));
    }
  }
  if (out.empty()) return NCExpr();
  if (out.size() == 1) return out.front();
  return make(NodeKind::Sum, 0, Cyclotomic(0), std::move(out));
}

NCExpr NCExpr::product(const std::vector<NCExpr>& factors) {
  Cyclotomic coef(1);
  std::vector<NCExpr> out;
  std::function<void(const NCExpr&)> add = [&](const NCExpr& f) {
    if (f.kind() == NodeKind::Product) {
      for (const auto& c : f.children()) add(c);
      return;
    }
    auto [c, base] = split_scale(f);
    coef *= c;
    if (base.kind() == NodeKind::Scalar) return;  // the unit left by split_scale
    if (base.kind() == NodeKind::Product) {
      for (const auto& c2 : base.children()) add(c2);
      return;
    }
    out.push_back(base);
  };
  for (const auto& f : factors) add(f);
  if (coef.is_zero()) return NCExpr();
  if (out.empty()) return scalar(coef);
  NCExpr body = out.size() == 1 ? out.front() : make(NodeKind::Product, 0, Cyclotomic(0), std::move(out));
  return scale(coef, body);
}

NCExpr NCExpr::inverse(const NCExpr& e) {
  if (e.kind() == NodeKind::Scalar) return scalar(e.scalar_value().inverse());
  if (e.kind() == NodeKind::Inverse) return e.children().front();
  if (e.kind() == NodeKind::Scale) return scale(e.scalar_value().inverse(), inverse(e.children().front()));
  return make(NodeKind::Inverse, 0, Cyclotomic(0), {e});
}

NCExpr NCExpr::linear(const std::vector<Cyclotomic>& coeffs, const std::vector<NCExpr>& basis) {
  if (coeffs.size() != basis.size()) throw InternalError("linear combination size mismatch");
  std::vector<NCExpr> terms;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (!coeffs[i].is_zero()) terms.push_back(scale(coeffs[i], basis[i]));
  }
  return sum(terms);
}

NCExpr NCExpr::conjugate() const {
  std::unordered_map<const void*, NCExpr> memo;
  std::function<NCExpr(const NCExpr&)> rec = [&](const NCExpr& e) -> NCExpr {
    if (auto it = memo.find(e.id()); it != memo.end()) return it->second;
    NCExpr r;
    switch (e.kind()) {
      case NodeKind::Variable: r = e; break;
      case NodeKind::Scalar: r = scalar(e.scalar_value().conjugate()); break;
      case NodeKind::Scale: r = scale(e.scalar_value().conjugate(), rec(e.children().front())); break;
      case NodeKind::Inverse: r = inverse(rec(e.children().front())); break;
      case NodeKind::Sum:
      case NodeKind::Product: {
        std::vector<NCExpr> ch;
        for (const auto& c : e.children()) ch.push_back(rec(c));
        r = e.kind() == NodeKind::Sum ? sum(ch) : product(ch);
        break;
      }
    }
    memo.emplace(e.id(), r);
    return r;
  };
  return rec(*this);
}

std::size_t NCExpr::degree() const {
  std::unordered_map<const void*, std::size_t> memo;
  std::function<std::size_t(const NCExpr&)> rec = [&](const NCExpr& e) -> std::size_t {
    if (auto it = memo.find(e.id()); it != memo.end()) return it->second;
    std::size_t d = 0;
    switch (e.kind()) {
      case NodeKind::Variable: d = 1; break;
      case NodeKind::Scalar: d = 0; break;
      case NodeKind::Scale:
      case NodeKind::Inverse: d = rec(e.children().front()); break;
      case NodeKind::Sum:
        for (const auto& c : e.children()) d = std::max(d, rec(c));
        break;
      case NodeKind::Product:
        for (const auto& c : e.children()) d += rec(c);
        break;
    }
    memo.emplace(e.id(), d);
    return d;
  };
  return rec(*this);
}

bool NCExpr::has_inverse() const {
  std::unordered_set<const void*> seen;
  std::function<bool(const NCExpr&)> rec = [&](const NCExpr& e) {
    if (!seen.insert(e.id()).second) return false;
    if (e.kind() == NodeKind::Inverse) return true;
    for (const auto& c : e.children()) {
      if (rec(c)) return true;
    }
    return false;
  };
  return rec(*this);
}

std::size_t NCExpr::dag_size() const {
  std::unordered_set<const void*> seen;
  std::function<void(const NCExpr&)> rec = [&](const NCExpr& e) {
    if (!seen.insert(e.id()).second) return;
    for (const auto& c : e.children()) rec(c);
  };
  rec(*this);
  return seen.size();
}

namespace {

std::string var_name(std::size_t i, const std::vector<std::string>& names) {
  return i < names.size() ? names[i] : "x" + std::to_string(i + 1);
}

bool needs_parens(const std::string& s) {
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char ch = s[i];
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (depth == 0 && (ch == '+' || (ch == '-' && i > 0))) return true;
  }
  return false;
}

std::string scalar_str(const Cyclotomic& c) {
  std::string s = c.str();
  return needs_parens(s) || s.find('*') != std::string::npos ? "(" + s + ")" : s;
}

}  // namespace

std::string NCExpr::str(const std::vector<std::string>& names) const {
  switch (kind()) {
    case NodeKind::Variable: return var_name(variable_index(), names);
    case NodeKind::Scalar: return scalar_value().str();
    case NodeKind::Scale: {
      const std::string inner = children().front().str(names);
      if (scalar_value() == Cyclotomic(-1)) return "-" + (needs_parens(inner) ? "(" + inner + ")" : inner);
      return scalar_str(scalar_value()) + "*" + (needs_parens(inner) ? "(" + inner + ")" : inner);
    }
    case NodeKind::Inverse: {
      const std::string inner = children().front().str(names);
      const bool simple = children().front().kind() == NodeKind::Variable;
      return (simple ? inner : "(" + inner + ")") + "^-1";
    }
    case NodeKind::Sum: {
      std::string out;
      for (std::size_t i = 0; i < children().size(); ++i) {
        std::string t = children()[i].str(names);
        if (i == 0) {
          out = t;
        } else if (!t.empty() && t[0] == '-') {
          out += " - " + t.substr(1);
        } else {
          out += " + " + t;
        }
      }
      return out;
    }
    case NodeKind::Product: {
      std::string out;
      for (std::size_t i = 0; i < children().size(); ++i) {
        std::string t = children()[i].str(names);
        if (needs_parens(t)) t = "(" + t + ")";
        out += (i ? " " : "") + t;
      }
      return out;
    }
  }
  return "?";
}

// ---------------------------------------------------------------- evaluation

MatrixEvaluator::MatrixEvaluator(std::vector<Matrix> values) : values_(std::move(values)) {
  dim_ = values_.empty() ? 1 : values_.front().rows();
  for (const auto& m : values_) {
    if (m.rows() != dim_ || m.cols() != dim_) throw InputError("evaluation matrices must be square of equal size");
  }
}

const Matrix& MatrixEvaluator::operator()(const NCExpr& e) {
  if (auto it = memo_.find(e.id()); it != memo_.end()) return it->second;
  Matrix r;
  switch (e.kind()) {
    case NodeKind::Variable:
      if (e.variable_index() >= values_.size()) throw InputError("expression uses an unassigned variable");
      r = values_[e.variable_index()];
      break;
    case NodeKind::Scalar: r = e.scalar_value() * Matrix::identity(dim_); break;
    case NodeKind::Scale: r = e.scalar_value() * (*this)(e.children().front()); break;
    case NodeKind::Inverse: r = ncinv::inverse((*this)(e.children().front())); break;
    case NodeKind::Sum:
      r = (*this)(e.children().front());
      for (std::size_t i = 1; i < e.children().size(); ++i) r = r + (*this)(e.children()[i]);
      break;
    case NodeKind::Product:
      r = (*this)(e.children().front());
      for (std::size_t i = 1; i < e.children().size(); ++i) r = r * (*this)(e.children()[i]);
      break;
  }
  keep_.push_back(e);
  return memo_.emplace(e.id(), std::move(r)).first->second;
}

// ---------------------------------------------------------------- expansion

NCPolynomial expand(const NCExpr& root, std::size_t max_terms) {
  std::unordered_map<const void*, NCPolynomial> memo;
  std::function<const NCPolynomial&(const NCExpr&)> rec = [&](const NCExpr& e) -> const NCPolynomial& {
    if (auto it = memo.find(e.id()); it != memo.end()) return it->second;
    NCPolynomial p;
    auto add = [&](const std::vector<std::size_t>& mono, const Cyclotomic& c) {
      auto [it, fresh] = p.emplace(mono, c);
      if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) p.erase(it);
      }
    };
    switch (e.kind()) {
      case NodeKind::Variable: p[{e.variable_index()}] = Cyclotomic(1); break;
      case NodeKind::Scalar:
        if (!e.scalar_value().is_zero()) p[{}] = e.scalar_value();
        break;
      case NodeKind::Scale:
        for (const auto& [m, c] : rec(e.children().front())) p[m] = c * e.scalar_value();
        break;
      case NodeKind::Inverse: throw InputError("cannot expand an expression with inverses");
      case NodeKind::Sum:
        for (const auto& ch : e.children()) {
          for (const auto& [m, c] : rec(ch)) add(m, c);
        }
        break;
      case NodeKind::Product: {
        p[{}] = Cyclotomic(1);
        for (const auto& ch : e.children()) {
          const NCPolynomial& q = rec(ch);
          NCPolynomial next;
          for (const auto& [m1, c1] : p) {
            for (const auto& [m2, c2] : q) {
              std::vector<std::size_t> m = m1;
              m.insert(m.end(), m2.begin(), m2.end());
              auto [it, fresh] = next.emplace(std::move(m), c1 * c2);
              if (!fresh) it->second += c1 * c2;
              if (next.size() > max_terms) throw ResourceError("polynomial expansion exceeded its term budget");
            }
          }
          for (auto it = next.begin(); it != next.end();) it = it->second.is_zero() ? next.erase(it) : std::next(it);
          p = std::move(next);
        }
        break;
      }
    }
    if (p.size() > max_terms) throw ResourceError("polynomial expansion exceeded its term budget");
    return memo.emplace(e.id(), std::move(p)).first->second;
  };
  return rec(root);
}

std::string polynomial_str(const NCPolynomial& p, const std::vector<std::string>& names) {
  if (p.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [mono, c] : p) {
    std::string m;
    for (std::size_t i = 0; i < mono.size(); ++i) m += (i ? " " : "") + var_name(mono[i], names);
    std::string term;
    if (mono.empty()) {
      term = c.str();
    } else if (c == Cyclotomic(1)) {
      term = m;
    } else if (c == Cyclotomic(-1)) {
      term = "-" + m;
    } else {
      term = scalar_str(c) + "*" + m;
    }
    if (first) {
      out = term;
    } else if (term[0] == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
    first = false;
  }
  return out;
}

json expressions_to_json(const std::vector<NCExpr>& exprs, std::vector<std::size_t>& roots) {
  json nodes = json::array();
  std::unordered_map<const void*, std::size_t> ids;
  std::function<std::size_t(const NCExpr&)> rec = [&](const NCExpr& e) -> std::size_t {
    if (auto it = ids.find(e.id()); it != ids.end()) return it->second;
    std::vector<std::size_t> ch;
    for (const auto& c : e.children()) ch.push_back(rec(c));
    json n;
    n["kind"] = to_string(e.kind());
    if (e.kind() == NodeKind::Variable) n["var"] = e.variable_index();
    if (e.kind() == NodeKind::Scalar || e.kind() == NodeKind::Scale) n["scalar"] = to_json(e.scalar_value());
    if (!ch.empty()) n["children"] = ch;
    const std::size_t id = nodes.size();
    n["id"] = id;
    nodes.push_back(std::move(n));
    ids.emplace(e.id(), id);
    return id;
  };
  roots.clear();
  for (const auto& e : exprs) roots.push_back(rec(e));
  return nodes;
}

}  // namespace ncinv
