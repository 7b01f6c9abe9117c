#include "ncinv/chartheory.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "ncinv/errors.hpp"

namespace ncinv {

namespace {

void require_same_group(const GroupPtr& a, const GroupPtr& b) {
  if (a.get() != b.get()) throw InputError("class functions live on different groups");
}

// --- F_p linear algebra for the eigenspace splitting -----------------------

using Vec = std::vector<std::uint64_t>;
using Mat = std::vector<Vec>;

// Reduced row echelon form of the rows; returns pivot columns and drops zero rows.
std::vector<std::size_t> rref(Mat& rows, std::uint64_t p) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  const std::size_t ncols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    const std::uint64_t inv = invmod(rows[r][c], p);
    for (auto& x : rows[r]) x = x * inv % p;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const std::uint64_t f = rows[i][c];
      for (std::size_t k = 0; k < ncols; ++k) {
        rows[i][k] = (rows[i][k] + p - f * rows[r][k] % p) % p;
      }
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

// Nullspace of a square matrix mod p.
Mat nullspace_mod(Mat a, std::uint64_t p) {
  const std::size_t n = a.size();
  const auto pivots = rref(a, p);
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  Mat basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vec v(n, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = (p - a[i][f]) % p;
    basis.push_back(std::move(v));
  }
  return basis;
}

// Characteristic polynomial (lowest degree first) via Hessenberg reduction.
Vec charpoly_mod(Mat h, std::uint64_t p) {
  const std::size_t d = h.size();
  for (std::size_t j = 0; j + 2 < d; ++j) {
    std::size_t i = j + 1;
    while (i < d && h[i][j] == 0) ++i;
    if (i == d) continue;
    if (i != j + 1) {
      std::swap(h[i], h[j + 1]);
      for (std::size_t r = 0; r < d; ++r) std::swap(h[r][i], h[r][j + 1]);
    }
    const std::uint64_t inv = invmod(h[j + 1][j], p);
    for (i = j + 2; i < d; ++i) {
      const std::uint64_t f = h[i][j] * inv % p;
      if (f == 0) continue;
      for (std::size_t k = 0; k < d; ++k) h[i][k] = (h[i][k] + p - f * h[j + 1][k] % p) % p;
      for (std::size_t r = 0; r < d; ++r) h[r][j + 1] = (h[r][j + 1] + f * h[r][i]) % p;
    }
  }
  std::vector<Vec> polys(d + 1);
  polys[0] = Vec{1};
  for (std::size_t m = 1; m <= d; ++m) {
    Vec next(m + 1, 0);
    const Vec& prev = polys[m - 1];
    const std::uint64_t hm = h[m - 1][m - 1];
    for (std::size_t k = 0; k < prev.size(); ++k) {
      next[k + 1] = (next[k + 1] + prev[k]) % p;
      next[k] = (next[k] + p - hm * prev[k] % p) % p;
    }
    std::uint64_t prod = 1;
    for (std::size_t i = 1; i < m; ++i) {
      prod = prod * h[m - i][m - i - 1] % p;
      const std::uint64_t coef = h[m - i - 1][m - 1] * prod % p;
      if (coef == 0) continue;
      const Vec& q = polys[m - i - 1];
      for (std::size_t k = 0; k < q.size(); ++k) next[k] = (next[k] + p - coef * q[k] % p) % p;
    }
    polys[m] = std::move(next);
  }
  return polys[d];
}

std::uint64_t eval_poly(const Vec& poly, std::uint64_t x, std::uint64_t p) {
  std::uint64_t acc = 0;
  for (std::size_t k = poly.size(); k-- > 0;) acc = (acc * x + poly[k]) % p;
  return acc;
}

}  // namespace

// ------------------------------------------------------------ class functions

ClassFunction ClassFunction::conjugate() const {
  ClassFunction out{group, values};
  for (auto& v : out.values) v = v.conjugate();
  return out;
}

ClassFunction operator+(const ClassFunction& a, const ClassFunction& b) {
  require_same_group(a.group, b.group);
  ClassFunction out = a;
  for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] += b.values[i];
  return out;
}

ClassFunction operator-(const ClassFunction& a, const ClassFunction& b) {
  require_same_group(a.group, b.group);
  ClassFunction out = a;
  for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] -= b.values[i];
  return out;
}

ClassFunction operator*(const Cyclotomic& s, const ClassFunction& a) {
  ClassFunction out = a;
  for (auto& v : out.values) v *= s;
  return out;
}

bool operator==(const ClassFunction& a, const ClassFunction& b) {
  return a.group.get() == b.group.get() && a.values == b.values;
}

ClassFunction trivial_character(const GroupPtr& G) {
  return ClassFunction{G, std::vector<Cyclotomic>(G->classes().count(), Cyclotomic(1))};
}

ClassFunction regular_character(const GroupPtr& G) {
  ClassFunction f = zero_function(G);
  f.values[0] = Cyclotomic(static_cast<long>(G->order()));
  return f;
}

ClassFunction zero_function(const GroupPtr& G) {
  return ClassFunction{G, std::vector<Cyclotomic>(G->classes().count())};
}

bool canonical_character_less(const ClassFunction& a, const ClassFunction& b) {
  const int dc = Cyclotomic::compare(a.degree(), b.degree());
  if (dc != 0) return dc < 0;
  const bool at = std::all_of(a.values.begin(), a.values.end(), [](const Cyclotomic& v) { return v == Cyclotomic(1); });
  const bool bt = std::all_of(b.values.begin(), b.values.end(), [](const Cyclotomic& v) { return v == Cyclotomic(1); });
  if (at != bt) return at;
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    const int c = Cyclotomic::compare_in(a.values[i], b.values[i], a.group->exponent());
    if (c != 0) return c > 0;
  }
  return false;
}

Cyclotomic inner_product(const ClassFunction& phi, const ClassFunction& psi) {
  require_same_group(phi.group, psi.group);
  const auto& cls = phi.group->classes();
  Cyclotomic acc;
  for (std::size_t c = 0; c < cls.count(); ++c) {
    if (phi.values[c].is_zero() || psi.values[c].is_zero()) continue;
    acc += (phi.values[c] * psi.values[c].conjugate()) * Rational(static_cast<long>(cls.sizes[c]));
  }
  acc *= Rational(1, static_cast<long>(phi.group->order()));
  return acc;
}

// ------------------------------------------------------------ character table

CharacterTable CharacterTable::from_irreducibles(const GroupPtr& G, std::vector<ClassFunction> chars) {
  const auto& cls = G->classes();
  if (chars.size() != cls.count()) throw InternalError("number of irreducibles differs from number of classes");
  std::sort(chars.begin(), chars.end(), canonical_character_less);
  CharacterTable t;
  t.group_ = G;
  t.irr_ = std::move(chars);
  t.inverse_class_.resize(cls.count());
  for (std::size_t c = 0; c < cls.count(); ++c) t.inverse_class_[c] = cls.class_of[G->inv(cls.representatives[c])];
  return t;
}

CharacterTable CharacterTable::compute(const GroupPtr& G) {
  const auto& cls = G->classes();
  const std::size_t n = G->order();
  const std::size_t k = cls.count();
  const std::uint64_t e = G->exponent();
  if (k == 1) return from_irreducibles(G, {trivial_character(G)});

  const auto bound = static_cast<std::uint64_t>(std::ceil(2.0 * std::sqrt(static_cast<double>(n))));
  const ModularField F = ModularField::select(e, bound);
  const std::uint64_t p = F.q;

  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<std::uint64_t> coin(0, p - 1);

  // subspaces of F_p^k, each in reduced row echelon form
  std::vector<Mat> done;
  std::vector<Mat> pending;
  {
    Mat full(k, Vec(k, 0));
    for (std::size_t i = 0; i < k; ++i) full[i][i] = 1;
    pending.push_back(std::move(full));
  }
  int stale_rounds = 0;
  while (!pending.empty()) {
    if (stale_rounds > 200) throw ResourceError("eigenspace splitting did not converge for the character table");
    // random element of the centre of F_p[G] acting on class-sum coordinates
    Mat M(k, Vec(k, 0));
    for (std::size_t j = 1; j < k; ++j) {
      const std::uint64_t r = coin(rng);
      if (r == 0) continue;
      for (std::size_t col = 0; col < k; ++col) {
        const Elem z = cls.representatives[col];
        for (Elem y : cls.members[j]) {
          auto& cell = M[cls.class_of[G->mul(z, G->inv(y))]][col];
          cell = (cell + r) % p;
        }
      }
    }
    std::vector<Mat> next;
    bool progress = false;
    for (auto& W : pending) {
      const std::size_t d = W.size();
      std::vector<std::size_t> piv;
      {
        Mat tmp = W;
        piv = rref(tmp, p);
      }
      Mat A(d, Vec(d, 0));
      for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t s = 0; s < d; ++s) {
          std::uint64_t acc = 0;
          const std::size_t row = piv[s];
          for (std::size_t c = 0; c < k; ++c) acc = (acc + M[row][c] * W[r][c]) % p;
          A[s][r] = acc;
        }
      }
      const Vec poly = charpoly_mod(A, p);
      std::vector<std::uint64_t> roots;
      for (std::uint64_t x = 0; x < p; ++x) {
        if (eval_poly(poly, x, p) == 0) roots.push_back(x);
      }
      if (roots.size() <= 1) {
        next.push_back(std::move(W));
        continue;
      }
      progress = true;
      std::size_t total = 0;
      for (auto lambda : roots) {
        Mat shifted = A;
        for (std::size_t i = 0; i < d; ++i) shifted[i][i] = (shifted[i][i] + p - lambda) % p;
        Mat coords = nullspace_mod(shifted, p);
        Mat sub;
        for (const auto& cvec : coords) {
          Vec v(k, 0);
          for (std::size_t r = 0; r < d; ++r) {
            if (cvec[r] == 0) continue;
            for (std::size_t c = 0; c < k; ++c) v[c] = (v[c] + cvec[r] * W[r][c]) % p;
          }
          sub.push_back(std::move(v));
        }
        rref(sub, p);
        total += sub.size();
        if (sub.size() == 1) {
          done.push_back(std::move(sub));
        } else if (!sub.empty()) {
          next.push_back(std::move(sub));
        }
      }
      if (total != d) throw InternalError("class algebra eigenspaces do not span");
    }
    pending = std::move(next);
    stale_rounds = progress ? 0 : stale_rounds + 1;
  }
  if (done.size() != k) throw InternalError("wrong number of central characters");

  // power maps on classes
  std::vector<std::vector<std::size_t>> power_class(k, std::vector<std::size_t>(e));
  for (std::size_t c = 0; c < k; ++c) {
    Elem x = 0;
    for (std::uint64_t l = 0; l < e; ++l) {
      power_class[c][l] = cls.class_of[x];
      x = G->mul(x, cls.representatives[c]);
    }
  }
  std::vector<std::size_t> inv_class(k);
  for (std::size_t c = 0; c < k; ++c) inv_class[c] = cls.class_of[G->inv(cls.representatives[c])];
  std::vector<std::uint64_t> zpow(e);
  for (std::uint64_t t = 0; t < e; ++t) zpow[t] = powmod(F.w, t, p);
  const std::uint64_t inv_e = invmod(e % p, p);
  const std::uint64_t n_mod = n % p;
  const auto root_n = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)) + 1);

  std::vector<ClassFunction> chars;
  std::uint64_t degree_square_sum = 0;
  for (auto& W : done) {
    Vec omega = W[0];
    if (omega[0] == 0) throw InternalError("central character vanishes at the identity");
    const std::uint64_t s0 = invmod(omega[0], p);
    for (auto& x : omega) x = x * s0 % p;
    std::uint64_t s = 0;
    for (std::size_t c = 0; c < k; ++c) {
      s = (s + omega[c] * omega[inv_class[c]] % p * invmod(cls.sizes[c] % p, p)) % p;
    }
    const std::uint64_t target = n_mod * invmod(s, p) % p;
    std::uint64_t deg = 0;
    for (std::uint64_t d = 1; d <= root_n; ++d) {
      if (d * d % p == target) {
        deg = d;
        break;
      }
    }
    if (deg == 0) throw InternalError("could not recover a character degree");
    degree_square_sum += deg * deg;
    Vec chi_p(k);
    for (std::size_t c = 0; c < k; ++c) chi_p[c] = omega[c] * deg % p * invmod(cls.sizes[c] % p, p) % p;
    ClassFunction chi{G, std::vector<Cyclotomic>(k)};
    for (std::size_t c = 0; c < k; ++c) {
      std::vector<Rational> mult(e);
      std::uint64_t count = 0;
      for (std::uint64_t t = 0; t < e; ++t) {
        std::uint64_t acc = 0;
        for (std::uint64_t l = 0; l < e; ++l) {
          const std::uint64_t exp = (e - (t * l) % e) % e;
          acc = (acc + chi_p[power_class[c][l]] * zpow[exp]) % p;
        }
        acc = acc * inv_e % p;
        if (acc > deg) throw InternalError("eigenvalue multiplicity out of range");
        mult[t] = Rational(static_cast<long>(acc));
        count += acc;
      }
      if (count != deg) throw InternalError("eigenvalue multiplicities do not sum to the degree");
      chi.values[c] = Cyclotomic::from_powers(e, mult);
    }
    chars.push_back(std::move(chi));
  }
  if (degree_square_sum != n) throw InternalError("character degrees do not satisfy the sum of squares");
  return from_irreducibles(G, std::move(chars));
}

std::size_t CharacterTable::index_of(const ClassFunction& chi) const {
  for (std::size_t i = 0; i < irr_.size(); ++i) {
    if (irr_[i].values == chi.values) return i;
  }
  throw InputError("class function is not an irreducible character of this table");
}

bool CharacterTable::is_linear(std::size_t i) const { return irr_[i].degree() == Cyclotomic(1); }

// ------------------------------------------------------------ Clifford toolkit

EmbeddedSubgroup EmbeddedSubgroup::make(const Subgroup& H) {
  SubgroupAsGroup sg = subgroup_as_group(H);
  std::vector<Elem> local(H.parent()->order(), UINT32_MAX);
  for (Elem i = 0; i < sg.embedding.size(); ++i) local[sg.embedding[i]] = i;
  return EmbeddedSubgroup{H, sg.group, std::move(sg.embedding), std::move(local)};
}

ClassFunction restrict(const ClassFunction& chi, const EmbeddedSubgroup& H) {
  require_same_group(chi.group, H.parent());
  const auto& hc = H.group->classes();
  const auto& gc = chi.group->classes();
  ClassFunction out{H.group, std::vector<Cyclotomic>(hc.count())};
  for (std::size_t c = 0; c < hc.count(); ++c) {
    out.values[c] = chi.values[gc.class_of[H.embedding[hc.representatives[c]]]];
  }
  return out;
}

ClassFunction induce(const ClassFunction& mu, const EmbeddedSubgroup& H) {
  require_same_group(mu.group, H.group);
  const GroupPtr& G = H.parent();
  const auto& hc = H.group->classes();
  const auto& gc = G->classes();
  ClassFunction out = zero_function(G);
  for (std::size_t c = 0; c < hc.count(); ++c) {
    const std::size_t gcls = gc.class_of[H.embedding[hc.representatives[c]]];
    out.values[gcls] += mu.values[c] * Rational(static_cast<long>(hc.sizes[c]));
  }
  for (std::size_t g = 0; g < gc.count(); ++g) {
    if (out.values[g].is_zero()) continue;
    Rational f(static_cast<long>(G->order()), static_cast<long>(H.group->order() * gc.sizes[g]));
    f.canonicalize();
    out.values[g] *= f;
  }
  return out;
}

ClassFunction tensor(const ClassFunction& a, const ClassFunction& b) {
  require_same_group(a.group, b.group);
  ClassFunction out = a;
  for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] *= b.values[i];
  return out;
}

bool is_trivial_on(const ClassFunction& chi, const Subgroup& N) {
  const auto& gc = chi.group->classes();
  for (std::size_t c = 0; c < gc.count(); ++c) {
    if (N.contains(gc.representatives[c]) && chi.values[c] != chi.degree()) return false;
  }
  return true;
}

ClassFunction deflate(const ClassFunction& chi, const QuotientGroup& Q) {
  require_same_group(chi.group, Q.parent);
  if (!is_trivial_on(chi, Q.kernel)) throw InputError("deflation of a character that is not trivial on the kernel");
  const auto& qc = Q.group->classes();
  const auto& gc = Q.parent->classes();
  ClassFunction out{Q.group, std::vector<Cyclotomic>(qc.count())};
  for (std::size_t c = 0; c < qc.count(); ++c) {
    out.values[c] = chi.values[gc.class_of[Q.lift[qc.representatives[c]]]];
  }
  return out;
}

ClassFunction inflate(const ClassFunction& chibar, const QuotientGroup& Q) {
  require_same_group(chibar.group, Q.group);
  const auto& qc = Q.group->classes();
  const auto& gc = Q.parent->classes();
  ClassFunction out{Q.parent, std::vector<Cyclotomic>(gc.count())};
  for (std::size_t c = 0; c < gc.count(); ++c) {
    out.values[c] = chibar.values[qc.class_of[Q.projection[gc.representatives[c]]]];
  }
  return out;
}

std::vector<long> decompose(const ClassFunction& chi, const CharacterTable& table) {
  std::vector<long> mult(table.size());
  for (std::size_t i = 0; i < table.size(); ++i) {
    const auto v = inner_product(chi, table[i]).as_integer();
    if (!v || *v < 0 || !v->fits_slong_p()) throw InputError("class function is not a character");
    mult[i] = v->get_si();
  }
  return mult;
}

bool is_multiplicity_free(const std::vector<long>& multiplicities) {
  return std::all_of(multiplicities.begin(), multiplicities.end(), [](long m) { return m <= 1; });
}

Subgroup inertia_subgroup(const ClassFunction& mu, const EmbeddedSubgroup& H) {
  require_same_group(mu.group, H.group);
  if (!is_normal(H.subgroup)) throw InputError("inertia subgroup of a non-normal subgroup");
  const GroupPtr& G = H.parent();
  const auto& hc = H.group->classes();
  // value ids so that the scan compares integers
  std::vector<std::size_t> vid(hc.count());
  std::vector<Cyclotomic> distinct;
  for (std::size_t c = 0; c < hc.count(); ++c) {
    std::size_t id = 0;
    while (id < distinct.size() && distinct[id] != mu.values[c]) ++id;
    if (id == distinct.size()) distinct.push_back(mu.values[c]);
    vid[c] = id;
  }
  std::vector<Elem> stab;
  for (Elem g = 0; g < G->order(); ++g) {
    bool fixes = true;
    for (std::size_t c = 0; c < hc.count() && fixes; ++c) {
      const Elem n = H.embedding[hc.representatives[c]];
      const Elem m = G->conj(n, g);
      fixes = vid[hc.class_of[H.local[m]]] == vid[c];
    }
    if (fixes) stab.push_back(g);
  }
  return Subgroup(G, std::move(stab));
}

std::vector<std::size_t> irr_over(const ClassFunction& mu, const EmbeddedSubgroup& H, const CharacterTable& table_G) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < table_G.size(); ++i) {
    if (!inner_product(restrict(table_G[i], H), mu).is_zero()) out.push_back(i);
  }
  return out;
}

CharacterTable quotient_table(const CharacterTable& table_G, const QuotientGroup& Q) {
  std::vector<ClassFunction> chars;
  for (const auto& chi : table_G.irreducibles()) {
    if (is_trivial_on(chi, Q.kernel)) chars.push_back(deflate(chi, Q));
  }
  return CharacterTable::from_irreducibles(Q.group, std::move(chars));
}

std::vector<std::vector<std::uint64_t>> modular_values(const CharacterTable& table, const ModularField& F) {
  std::vector<std::vector<std::uint64_t>> out(table.size());
  for (std::size_t i = 0; i < table.size(); ++i) {
    out[i].reserve(table[i].values.size());
    for (const auto& v : table[i].values) out[i].push_back(F.image(v));
  }
  return out;
}

// ------------------------------------------------------------ representations

RepresentationMatrices::RepresentationMatrices(GroupPtr G, std::size_t dim, std::vector<Matrix> generator_images,
                                               std::vector<std::string> variables)
    : group_(std::move(G)), dim_(dim), gen_images_(std::move(generator_images)), variables_(std::move(variables)) {
  const auto& gens = group_->generators();
  if (gen_images_.size() != gens.size()) {
    throw InputError("representation has " + std::to_string(gen_images_.size()) + " generator images but the group has " +
                     std::to_string(gens.size()) + " generators");
  }
  for (const auto& m : gen_images_) {
    if (m.rows() != dim_ || m.cols() != dim_) throw InputError("representation matrix has the wrong shape");
    for (std::size_t i = 0; i < dim_; ++i) {
      for (std::size_t j = 0; j < dim_; ++j) modulus_ = lcm_u64(modulus_, m(i, j).modulus());
    }
  }
  if (variables_.empty()) {
    for (std::size_t i = 0; i < dim_; ++i) variables_.push_back("x" + std::to_string(i + 1));
  }
  if (variables_.size() != dim_) throw InputError("number of variable names differs from the dimension");
  const std::size_t n = group_->order();
  images_.assign(n, Matrix());
  std::vector<bool> have(n, false);
  images_[0] = Matrix::identity(dim_);
  have[0] = true;
  std::vector<Elem> queue{0};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const Elem x = queue[i];
    for (std::size_t g = 0; g < gens.size(); ++g) {
      const Elem y = group_->mul(x, gens[g]);
      Matrix img = images_[x] * gen_images_[g];
      if (!have[y]) {
        have[y] = true;
        images_[y] = std::move(img);
        queue.push_back(y);
      } else if (images_[y] != img) {
        throw InputError("generator images do not define a representation of the group");
      }
    }
  }
  if (queue.size() != n) throw InternalError("group generators do not generate the group");
}

ClassFunction RepresentationMatrices::character() const {
  const auto& cls = group_->classes();
  ClassFunction chi{group_, std::vector<Cyclotomic>(cls.count())};
  for (std::size_t c = 0; c < cls.count(); ++c) chi.values[c] = images_[cls.representatives[c]].trace();
  return chi;
}

Subgroup RepresentationMatrices::kernel() const {
  const Matrix id = Matrix::identity(dim_);
  std::vector<Elem> ker;
  for (Elem g = 0; g < group_->order(); ++g) {
    if (images_[g] == id) ker.push_back(g);
  }
  return Subgroup(group_, std::move(ker));
}

}  // namespace ncinv
