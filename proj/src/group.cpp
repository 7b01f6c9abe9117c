#include "ncinv/group.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <unordered_map>

#include "ncinv/errors.hpp"

namespace ncinv {

namespace {

struct VecHash {
  std::size_t operator()(const std::vector<std::uint32_t>& v) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto x : v) {
      h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

std::string cycle_label(const std::vector<std::uint32_t>& p) {
  std::vector<bool> seen(p.size(), false);
  std::ostringstream os;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == i) continue;
    os << "(";
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) os << ",";
      os << j + 1;
      first = false;
      j = p[j];
    }
    os << ")";
  }
  const std::string s = os.str();
  return s.empty() ? "()" : s;
}

// Greedy generating set of the subgroup formed by `elements` (sorted, contains 0).
std::vector<Elem> greedy_generators(const FiniteGroup& G, const std::vector<Elem>& elements) {
  std::vector<Elem> gens;
  std::vector<bool> in(G.order(), false);
  std::vector<Elem> current{0};
  in[0] = true;
  for (Elem e : elements) {
    if (in[e]) continue;
    gens.push_back(e);
    in[e] = true;
    current.push_back(e);
    for (std::size_t i = 0; i < current.size(); ++i) {
      for (Elem g : gens) {
        const Elem y = G.mul(current[i], g);
        if (!in[y]) {
          in[y] = true;
          current.push_back(y);
        }
      }
    }
  }
  return gens;
}

std::vector<Elem> close_under(const FiniteGroup& G, const std::vector<Elem>& gens) {
  std::vector<bool> in(G.order(), false);
  std::vector<Elem> out{0};
  in[0] = true;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (Elem g : gens) {
      const Elem y = G.mul(out[i], g);
      if (!in[y]) {
        in[y] = true;
        out.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Elem FiniteGroup::power(Elem a, std::int64_t k) const {
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  Elem r = 0;
  Elem base = a;
  while (k > 0) {
    if (k & 1) r = mul(r, base);
    base = mul(base, base);
    k >>= 1;
  }
  return r;
}

std::string FiniteGroup::table_key() const {
  std::string key(reinterpret_cast<const char*>(table_.data()), table_.size() * sizeof(Elem));
  return key;
}

void FiniteGroup::finish() {
  const std::size_t n = n_;
  inverse_.assign(n, 0);
  for (Elem a = 0; a < n; ++a) {
    bool found = false;
    for (Elem b = 0; b < n; ++b) {
      if (mul(a, b) == 0) {
        inverse_[a] = b;
        found = true;
        break;
      }
    }
    if (!found) throw InputError("element " + std::to_string(a) + " has no inverse");
  }
  orders_.assign(n, 1);
  exponent_ = 1;
  for (Elem a = 0; a < n; ++a) {
    std::size_t k = 1;
    Elem x = a;
    while (x != 0) {
      x = mul(x, a);
      ++k;
      if (k > n) throw InputError("element order exceeds group order");
    }
    orders_[a] = k;
    exponent_ = std::lcm(exponent_, k);
  }
  abelian_ = true;
  for (Elem a = 0; a < n && abelian_; ++a) {
    for (Elem b = a + 1; b < n; ++b) {
      if (mul(a, b) != mul(b, a)) {
        abelian_ = false;
        break;
      }
    }
  }
  if (generators_.empty()) {
    std::vector<Elem> all(n);
    std::iota(all.begin(), all.end(), 0);
    generators_ = greedy_generators(*this, all);
  }
  if (labels_.size() != n) {
    labels_.resize(n);
    for (Elem a = 0; a < n; ++a) labels_[a] = "g" + std::to_string(a);
  }

  // conjugacy classes: orbits under conjugation by the generators
  std::vector<std::size_t> raw(n, SIZE_MAX);
  std::vector<std::vector<Elem>> orbits;
  for (Elem a = 0; a < n; ++a) {
    if (raw[a] != SIZE_MAX) continue;
    std::vector<Elem> orbit{a};
    raw[a] = orbits.size();
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (Elem g : generators_) {
        const Elem y = conj(orbit[i], g);
        if (raw[y] == SIZE_MAX) {
          raw[y] = orbits.size();
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  std::vector<std::size_t> idx(orbits.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) {
    const auto& ox = orbits[x];
    const auto& oy = orbits[y];
    const auto kx = std::make_tuple(orders_[ox.front()], ox.size(), ox.front());
    const auto ky = std::make_tuple(orders_[oy.front()], oy.size(), oy.front());
    return kx < ky;
  });
  classes_ = ConjugacyClasses{};
  classes_.class_of.assign(n, 0);
  for (std::size_t c = 0; c < idx.size(); ++c) {
    auto& orbit = orbits[idx[c]];
    for (Elem e : orbit) classes_.class_of[e] = c;
    classes_.representatives.push_back(orbit.front());
    classes_.sizes.push_back(orbit.size());
    classes_.members.push_back(std::move(orbit));
  }
}

FiniteGroup FiniteGroup::from_table(std::size_t order, std::vector<Elem> mul, std::vector<std::string> labels) {
  if (order == 0) throw InputError("group order must be positive");
  if (mul.size() != order * order) throw InputError("multiplication table must have order^2 entries");
  for (Elem v : mul) {
    if (v >= order) throw InputError("multiplication table entry out of range");
  }
  // locate the identity
  std::optional<Elem> identity;
  for (Elem e = 0; e < order && !identity; ++e) {
    bool ok = true;
    for (Elem a = 0; a < order && ok; ++a) {
      ok = mul[e * order + a] == a && mul[a * order + e] == a;
    }
    if (ok) identity = e;
  }
  if (!identity) throw InputError("multiplication table has no two-sided identity");
  // relabel so that the identity is element 0
  std::vector<Elem> perm(order);
  std::iota(perm.begin(), perm.end(), 0);
  std::swap(perm[0], perm[*identity]);
  std::vector<Elem> table(order * order);
  for (Elem a = 0; a < order; ++a) {
    for (Elem b = 0; b < order; ++b) {
      table[perm[a] * order + perm[b]] = perm[mul[a * order + b]];
    }
  }
  if (labels.size() == order) {
    std::vector<std::string> relabelled(order);
    for (Elem a = 0; a < order; ++a) relabelled[perm[a]] = labels[a];
    labels = std::move(relabelled);
  }
  FiniteGroup G;
  G.n_ = order;
  G.table_ = std::move(table);
  G.labels_ = std::move(labels);
  if (!check_associativity(G)) throw InputError("multiplication table is not associative");
  G.finish();
  return G;
}

FiniteGroup FiniteGroup::from_trusted_table(std::size_t order, std::vector<Elem> mul,
                                            std::vector<std::string> labels) {
  if (order == 0 || mul.size() != order * order) throw InternalError("malformed derived table");
  FiniteGroup G;
  G.n_ = order;
  G.table_ = std::move(mul);
  G.labels_ = std::move(labels);
  G.finish();
  return G;
}

namespace {

using RawElem = std::vector<std::uint32_t>;

struct RawClosure {
  std::vector<RawElem> elements;
  std::vector<Elem> parent;
  std::vector<std::size_t> letter;
  std::vector<std::vector<Elem>> right;  // right[g][i] = index of elements[i] * gen g
};

RawClosure raw_closure(const RawElem& identity, const std::vector<RawElem>& gens,
                       const std::function<RawElem(const RawElem&, const RawElem&)>& mul, std::size_t budget) {
  RawClosure rc;
  std::unordered_map<RawElem, Elem, VecHash> index;
  rc.elements.push_back(identity);
  rc.parent.push_back(0);
  rc.letter.push_back(0);
  index.emplace(identity, 0);
  rc.right.assign(gens.size(), {});
  for (std::size_t i = 0; i < rc.elements.size(); ++i) {
    for (std::size_t g = 0; g < gens.size(); ++g) {
      RawElem y = mul(rc.elements[i], gens[g]);
      auto [it, inserted] = index.emplace(y, static_cast<Elem>(rc.elements.size()));
      if (inserted) {
        if (rc.elements.size() >= budget) {
          throw ResourceError("group closure exceeds the element budget of " + std::to_string(budget));
        }
        rc.elements.push_back(std::move(y));
        rc.parent.push_back(static_cast<Elem>(i));
        rc.letter.push_back(g);
      }
      rc.right[g].push_back(it->second);
    }
  }
  return rc;
}

}  // namespace

FiniteGroup closure_from_generators(std::size_t n, std::vector<std::vector<Elem>> right, std::vector<Elem> parent,
                                   GeneratorProvenance prov, std::vector<std::string> labels) {
  FiniteGroup G;
  G.n_ = n;
  G.table_.assign(n * n, 0);
  // elements are in BFS order: e = parent(e) * gen(letter(e)), so rows fill left to right
  std::vector<std::size_t> letter(n, 0);
  // recover letters from the right-multiplication tables
  for (Elem e = 1; e < n; ++e) {
    for (std::size_t g = 0; g < right.size(); ++g) {
      if (right[g][parent[e]] == e) {
        letter[e] = g;
        break;
      }
    }
  }
  for (Elem a = 0; a < n; ++a) {
    G.table_[static_cast<std::size_t>(a) * n] = a;
    for (Elem b = 1; b < n; ++b) {
      const Elem ap = G.table_[static_cast<std::size_t>(a) * n + parent[b]];
      G.table_[static_cast<std::size_t>(a) * n + b] = right[letter[b]][ap];
    }
  }
  for (std::size_t g = 0; g < right.size(); ++g) G.generators_.push_back(right[g][0]);
  G.word_parent_ = std::move(parent);
  G.word_letter_ = std::move(letter);
  G.provenance_ = std::move(prov);
  G.labels_ = std::move(labels);
  G.finish();
  return G;
}

GroupPtr group_from_permutations(std::size_t degree, const std::vector<std::vector<std::uint32_t>>& gens,
                                 std::size_t budget) {
  if (gens.empty()) throw InputError("generator set must be nonempty");
  for (const auto& g : gens) {
    if (g.size() != degree) throw InputError("permutation has wrong length");
    std::vector<bool> hit(degree, false);
    for (auto v : g) {
      if (v >= degree || hit[v]) throw InputError("generator is not a permutation");
      hit[v] = true;
    }
  }
  RawElem identity(degree);
  std::iota(identity.begin(), identity.end(), 0);
  auto mul = [](const RawElem& p, const RawElem& q) {
    RawElem r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
    return r;
  };
  RawClosure rc = raw_closure(identity, gens, mul, budget);
  std::vector<std::string> labels;
  labels.reserve(rc.elements.size());
  for (const auto& e : rc.elements) labels.push_back(cycle_label(e));
  PermutationProvenance prov{degree, gens};
  const std::size_t n = rc.elements.size();
  return std::make_shared<const FiniteGroup>(
      closure_from_generators(n, std::move(rc.right), std::move(rc.parent), prov, std::move(labels)));
}

GroupPtr group_from_matrices(std::uint32_t prime, std::size_t dim, const std::vector<std::vector<std::uint32_t>>& gens,
                             std::size_t budget) {
  if (gens.empty()) throw InputError("generator set must be nonempty");
  if (prime < 2) throw InputError("matrix groups need a prime modulus");
  for (std::uint32_t d = 2; d * d <= prime; ++d) {
    if (prime % d == 0) throw InputError("matrix modulus " + std::to_string(prime) + " is not prime");
  }
  std::vector<RawElem> reduced;
  for (const auto& g : gens) {
    if (g.size() != dim * dim) throw InputError("matrix generator has wrong number of entries");
    RawElem m(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) m[i] = g[i] % prime;
    // invertibility via Gaussian elimination mod p
    std::vector<std::int64_t> a(m.begin(), m.end());
    std::size_t rank = 0;
    for (std::size_t col = 0; col < dim && rank < dim; ++col) {
      std::size_t piv = rank;
      while (piv < dim && a[piv * dim + col] == 0) ++piv;
      if (piv == dim) continue;
      for (std::size_t k = 0; k < dim; ++k) std::swap(a[rank * dim + k], a[piv * dim + k]);
      std::int64_t inv = 1;
      for (std::uint32_t e = 0; e + 2 < prime; ++e) inv = inv * a[rank * dim + col] % prime;
      for (std::size_t r = 0; r < dim; ++r) {
        if (r == rank || a[r * dim + col] == 0) continue;
        const std::int64_t f = a[r * dim + col] * inv % prime;
        for (std::size_t k = 0; k < dim; ++k) {
          a[r * dim + k] = ((a[r * dim + k] - f * a[rank * dim + k]) % prime + prime) % prime;
        }
      }
      ++rank;
    }
    if (rank < dim) throw InputError("matrix generator is not invertible over F_" + std::to_string(prime));
    reduced.push_back(std::move(m));
  }
  RawElem identity(dim * dim, 0);
  for (std::size_t i = 0; i < dim; ++i) identity[i * dim + i] = 1;
  auto mul = [dim, prime](const RawElem& x, const RawElem& y) {
    RawElem r(dim * dim, 0);
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t k = 0; k < dim; ++k) {
        const std::uint64_t xik = x[i * dim + k];
        if (xik == 0) continue;
        for (std::size_t j = 0; j < dim; ++j) {
          r[i * dim + j] = static_cast<std::uint32_t>((r[i * dim + j] + xik * y[k * dim + j]) % prime);
        }
      }
    }
    return r;
  };
  RawClosure rc = raw_closure(identity, reduced, mul, budget);
  std::vector<std::string> labels;
  for (const auto& e : rc.elements) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < e.size(); ++i) os << (i ? (i % dim == 0 ? ";" : ",") : "") << e[i];
    os << "]";
    labels.push_back(os.str());
  }
  MatrixProvenance prov{prime, dim, reduced};
  const std::size_t n = rc.elements.size();
  return std::make_shared<const FiniteGroup>(
      closure_from_generators(n, std::move(rc.right), std::move(rc.parent), prov, std::move(labels)));
}

GroupPtr group_from_table(std::size_t order, std::vector<Elem> mul) {
  return std::make_shared<const FiniteGroup>(FiniteGroup::from_table(order, std::move(mul)));
}

bool check_associativity(const FiniteGroup& G, std::uint64_t seed) {
  const std::size_t n = G.order();
  if (n <= 1000) {
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        const Elem ab = G.mul(a, b);
        for (Elem c = 0; c < n; ++c) {
          if (G.mul(ab, c) != G.mul(a, G.mul(b, c))) return false;
        }
      }
    }
    return true;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(n - 1));
  for (int t = 0; t < 10000; ++t) {
    const Elem a = pick(rng), b = pick(rng), c = pick(rng);
    if (G.mul(G.mul(a, b), c) != G.mul(a, G.mul(b, c))) return false;
  }
  return true;
}

// ------------------------------------------------------------------ subgroups

Subgroup::Subgroup(GroupPtr parent, std::vector<Elem> elements) : parent_(std::move(parent)) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (elements.empty() || elements.front() != 0) throw InputError("subgroup must contain the identity");
  elements_ = std::move(elements);
  member_.assign(parent_->order(), false);
  for (Elem e : elements_) {
    if (e >= parent_->order()) throw InputError("subgroup element out of range");
    member_[e] = true;
  }
  gens_ = greedy_generators(*parent_, elements_);
}

bool Subgroup::is_subset_of(const Subgroup& other) const {
  if (order() > other.order()) return false;
  return std::all_of(elements_.begin(), elements_.end(), [&](Elem e) { return other.contains(e); });
}

bool operator<(const Subgroup& a, const Subgroup& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  return a.elements_ < b.elements_;
}

Subgroup trivial_subgroup(const GroupPtr& G) { return Subgroup(G, {0}); }

Subgroup whole_group(const GroupPtr& G) {
  std::vector<Elem> all(G->order());
  std::iota(all.begin(), all.end(), 0);
  return Subgroup(G, std::move(all));
}

Subgroup subgroup_generated(const GroupPtr& G, const std::vector<Elem>& gens) {
  for (Elem g : gens) {
    if (g >= G->order()) throw InputError("generator index out of range");
  }
  return Subgroup(G, close_under(*G, gens));
}

Subgroup normal_closure(const GroupPtr& G, const std::vector<Elem>& gens) {
  std::vector<Elem> current = gens;
  Subgroup H = subgroup_generated(G, current);
  bool grew = true;
  while (grew) {
    grew = false;
    for (Elem h : H.generators()) {
      for (Elem g : G->generators()) {
        const Elem c = G->conj(h, g);
        if (!H.contains(c)) {
          current.push_back(c);
          H = subgroup_generated(G, current);
          grew = true;
          break;
        }
      }
      if (grew) break;
    }
  }
  return H;
}

Subgroup join(const Subgroup& a, const Subgroup& b) {
  std::vector<Elem> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return subgroup_generated(a.parent(), gens);
}

Subgroup intersection(const Subgroup& a, const Subgroup& b) {
  std::vector<Elem> out;
  for (Elem e : a.elements()) {
    if (b.contains(e)) out.push_back(e);
  }
  return Subgroup(a.parent(), std::move(out));
}

bool is_normal(const Subgroup& N) {
  const auto& G = *N.parent();
  for (Elem n : N.generators()) {
    for (Elem g : G.generators()) {
      if (!N.contains(G.conj(n, g))) return false;
    }
  }
  return true;
}

bool is_abelian(const Subgroup& H) {
  const auto& G = *H.parent();
  const auto& gens = H.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (G.mul(gens[i], gens[j]) != G.mul(gens[j], gens[i])) return false;
    }
  }
  return true;
}

std::vector<Subgroup> normal_subgroups(const GroupPtr& G) {
  const auto& cls = G->classes();
  std::vector<Subgroup> class_closures;
  for (std::size_t c = 1; c < cls.count(); ++c) {
    Subgroup S = subgroup_generated(G, cls.members[c]);
    if (std::find(class_closures.begin(), class_closures.end(), S) == class_closures.end()) {
      class_closures.push_back(std::move(S));
    }
  }
  std::set<std::vector<Elem>> seen;
  std::vector<Subgroup> found;
  auto add = [&](Subgroup S) {
    if (seen.insert(S.elements()).second) found.push_back(std::move(S));
  };
  add(trivial_subgroup(G));
  for (const auto& C : class_closures) add(C);
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (const auto& C : class_closures) {
      if (C.is_subset_of(found[i])) continue;
      add(join(found[i], C));
    }
  }
  std::sort(found.begin(), found.end());
  return found;
}

std::vector<Subgroup> abelian_normal_subgroups(const GroupPtr& G) {
  std::vector<Subgroup> out;
  for (auto& N : normal_subgroups(G)) {
    if (!N.is_trivial() && is_abelian(N)) out.push_back(std::move(N));
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const Subgroup& a, const Subgroup& b) { return a.order() > b.order(); });
  return out;
}

std::vector<Subgroup> maximal_abelian_normal_subgroups(const GroupPtr& G) {
  auto all = abelian_normal_subgroups(G);
  std::vector<Subgroup> out;
  for (std::size_t i = 0; i < all.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < all.size() && maximal; ++j) {
      if (all[j].order() > all[i].order() && all[i].is_subset_of(all[j])) maximal = false;
    }
    if (maximal) out.push_back(all[i]);
  }
  return out;
}

QuotientGroup quotient(const GroupPtr& G, const Subgroup& N) {
  if (N.parent().get() != G.get() && N.parent()->table() != G->table()) {
    throw InputError("subgroup belongs to a different group");
  }
  if (!is_normal(N)) throw InputError("quotient by a subgroup that is not normal");
  const std::size_t n = G->order();
  std::vector<Elem> proj(n, UINT32_MAX);
  std::vector<Elem> lift;
  for (Elem g = 0; g < n; ++g) {
    if (proj[g] != UINT32_MAX) continue;
    const Elem k = static_cast<Elem>(lift.size());
    lift.push_back(g);
    for (Elem x : N.elements()) proj[G->mul(g, x)] = k;
  }
  const std::size_t m = lift.size();
  std::vector<Elem> table(m * m);
  for (Elem a = 0; a < m; ++a) {
    for (Elem b = 0; b < m; ++b) table[a * m + b] = proj[G->mul(lift[a], lift[b])];
  }
  std::vector<std::string> labels(m);
  for (Elem a = 0; a < m; ++a) labels[a] = G->labels()[lift[a]] + "N";
  FiniteGroup Q = FiniteGroup::from_trusted_table(m, std::move(table), std::move(labels));
  return QuotientGroup{G, N, std::make_shared<const FiniteGroup>(std::move(Q)), std::move(proj), std::move(lift)};
}

SubgroupAsGroup subgroup_as_group(const Subgroup& H) {
  const auto& G = *H.parent();
  const auto& el = H.elements();
  std::vector<Elem> local(G.order(), UINT32_MAX);
  for (Elem i = 0; i < el.size(); ++i) local[el[i]] = i;
  const std::size_t m = el.size();
  std::vector<Elem> table(m * m);
  std::vector<std::string> labels(m);
  for (Elem a = 0; a < m; ++a) {
    labels[a] = G.labels()[el[a]];
    for (Elem b = 0; b < m; ++b) table[a * m + b] = local[G.mul(el[a], el[b])];
  }
  FiniteGroup K = FiniteGroup::from_trusted_table(m, std::move(table), std::move(labels));
  return SubgroupAsGroup{std::make_shared<const FiniteGroup>(std::move(K)), el};
}

Subgroup derived_subgroup(const GroupPtr& G) {
  std::vector<Elem> comms;
  const auto& gens = G->generators();
  for (Elem a : gens) {
    for (Elem b : gens) comms.push_back(G->commutator(a, b));
  }
  return normal_closure(G, comms);
}

Subgroup center(const GroupPtr& G) {
  std::vector<Elem> z;
  for (Elem a = 0; a < G->order(); ++a) {
    bool central = true;
    for (Elem g : G->generators()) {
      if (G->mul(a, g) != G->mul(g, a)) {
        central = false;
        break;
      }
    }
    if (central) z.push_back(a);
  }
  return Subgroup(G, std::move(z));
}

Subgroup commutator(const Subgroup& N, const Subgroup& H) {
  const auto& Gp = N.parent();
  const auto& G = *Gp;
  std::vector<bool> seen(G.order(), false);
  std::vector<Elem> values;
  for (Elem n : N.elements()) {
    for (Elem h : H.elements()) {
      const Elem c = G.commutator(n, h);
      if (!seen[c]) {
        seen[c] = true;
        values.push_back(c);
      }
    }
  }
  std::sort(values.begin(), values.end());
  return Subgroup(Gp, close_under(G, greedy_generators(G, values)));
}

bool is_nilpotent(const GroupPtr& G) {
  const Subgroup whole = whole_group(G);
  Subgroup gamma = whole;
  while (true) {
    Subgroup next = commutator(gamma, whole);
    if (next.is_trivial()) return true;
    if (next == gamma) return false;
    gamma = std::move(next);
  }
}

Subgroup image_in_quotient(const QuotientGroup& Q, const Subgroup& H) {
  std::vector<Elem> img;
  for (Elem h : H.elements()) img.push_back(Q.projection[h]);
  return Subgroup(Q.group, std::move(img));
}

Subgroup preimage(const QuotientGroup& Q, const Subgroup& Hbar) {
  std::vector<Elem> pre;
  for (Elem g = 0; g < Q.parent->order(); ++g) {
    if (Hbar.contains(Q.projection[g])) pre.push_back(g);
  }
  return Subgroup(Q.parent, std::move(pre));
}

GroupPtr direct_product(const GroupPtr& G, const GroupPtr& H) {
  const std::size_t a = G->order(), b = H->order(), n = a * b;
  std::vector<Elem> table(n * n);
  for (Elem g1 = 0; g1 < a; ++g1) {
    for (Elem h1 = 0; h1 < b; ++h1) {
      for (Elem g2 = 0; g2 < a; ++g2) {
        for (Elem h2 = 0; h2 < b; ++h2) {
          table[(g1 * b + h1) * n + (g2 * b + h2)] =
              static_cast<Elem>(G->mul(g1, g2) * b + H->mul(h1, h2));
        }
      }
    }
  }
  std::vector<std::string> labels(n);
  for (Elem g = 0; g < a; ++g) {
    for (Elem h = 0; h < b; ++h) labels[g * b + h] = "(" + G->labels()[g] + "," + H->labels()[h] + ")";
  }
  return std::make_shared<const FiniteGroup>(FiniteGroup::from_trusted_table(n, std::move(table), std::move(labels)));
}

}  // namespace ncinv
