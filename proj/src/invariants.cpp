#include "ncinv/invariants.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <unordered_map>

namespace ncinv {

const char* to_string(Field f) { return f == Field::Real ? "real" : "complex"; }

namespace {

using Vec = std::vector<Cyclotomic>;
using Perm = std::vector<std::size_t>;

const Cyclotomic& imag_unit() {
  static const Cyclotomic i = Cyclotomic::root_of_unity(4, 1);
  return i;
}

bool vec_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Cyclotomic& c) { return c.is_zero(); });
}

Vec vscale(const Cyclotomic& s, const Vec& v) {
  Vec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
  return r;
}

Vec vadd(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec vsub(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

std::size_t first_nonzero(const Vec& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) return i;
  }
  throw InternalError("zero vector where an eigenvector was expected");
}

Vec normalise(const Vec& v) { return vscale(v[first_nonzero(v)].inverse(), v); }

// lexicographic on coordinates
int compare_vec(const Vec& a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    const int c = Cyclotomic::compare_in(a[i], b[i]);
    if (c != 0) return c;
  }
  return 0;
}

// conj(sum c_i y_i) = sum conj(c_i) y_{J[i]}
Vec apply_J(const Perm& J, const Vec& v) {
  Vec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[J[i]] = v[i].conjugate();
  return r;
}

Vec fix_J(const Perm& J, const Vec& u) {
  const Vec ju = apply_J(J, u);
  if (ju == u) return u;
  if (vec_zero(vadd(ju, u))) return vscale(imag_unit(), u);
  return vadd(u, ju);
}

bool is_real_representation(const RepresentationMatrices& pi) {
  for (const auto& m : pi.generator_images()) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        if (!m(i, j).is_real()) return false;
      }
    }
  }
  return true;
}

Matrix weighted_sum(const RepresentationMatrices& pi, const std::vector<Elem>& elems, const std::vector<Cyclotomic>& w,
                    const Cyclotomic& factor) {
  Matrix acc(pi.dim(), pi.dim());
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (!w[i].is_zero()) acc = acc + w[i] * pi.image(elems[i]);
  }
  return factor * acc;
}

// linear characters of an abelian normal subgroup
struct NData {
  EmbeddedSubgroup emb;
  std::shared_ptr<const CharacterTable> table;
  std::size_t k = 0;
  std::vector<Vec> values;  // [mu][local element]
  std::vector<std::vector<std::size_t>> mult;
  std::vector<std::size_t> inv;
  std::vector<Matrix> projector;

  NData(const Subgroup& N, const RepresentationMatrices& pi) : emb(EmbeddedSubgroup::make(N)) {
    table = std::make_shared<const CharacterTable>(CharacterTable::compute(emb.group));
    k = N.order();
    if (table->size() != k) throw InternalError("normal subgroup used for eigenvectors is not abelian");
    const auto& cls = emb.group->classes();
    values.assign(k, Vec(k));
    for (std::size_t mu = 0; mu < k; ++mu) {
      for (std::size_t e = 0; e < k; ++e) values[mu][e] = (*table)[mu].values[cls.class_of[e]];
    }
    mult.assign(k, std::vector<std::size_t>(k));
    inv.assign(k, 0);
    for (std::size_t a = 0; a < k; ++a) {
      Vec c(k);
      for (std::size_t e = 0; e < k; ++e) c[e] = values[a][e].conjugate();
      inv[a] = index_of(c);
      for (std::size_t b = 0; b < k; ++b) {
        Vec p(k);
        for (std::size_t e = 0; e < k; ++e) p[e] = values[a][e] * values[b][e];
        mult[a][b] = index_of(p);
      }
    }
    const Cyclotomic invk = Cyclotomic(Rational(1, static_cast<unsigned long>(k)));
    for (std::size_t mu = 0; mu < k; ++mu) {
      Vec w(k);
      for (std::size_t e = 0; e < k; ++e) w[e] = values[mu][e].conjugate();
      projector.push_back(weighted_sum(pi, emb.embedding, w, invk));
    }
  }

  std::size_t index_of(const Vec& v) const {
    for (std::size_t mu = 0; mu < k; ++mu) {
      if (values[mu] == v) return mu;
    }
    throw InternalError("product of linear characters not found");
  }

  // character n -> mu(g^-1 n g)
  std::size_t act(const FiniteGroup& G, Elem g, std::size_t mu) const {
    Vec v(k);
    const Elem gi = G.inv(g);
    for (std::size_t e = 0; e < k; ++e) v[e] = values[mu][emb.local[G.mul(G.mul(gi, emb.embedding[e]), g)]];
    return index_of(v);
  }

  bool is_eigen(const RepresentationMatrices& pi, const Vec& v, std::size_t mu) const {
    for (std::size_t e = 0; e < k; ++e) {
      if (ncinv::apply(pi.image(emb.embedding[e]), v) != vscale(values[mu][e], v)) return false;
    }
    return true;
  }
};

// N-eigenbasis of the subspace spanned by `span`; with J, conjugate characters
// get literally conjugate vectors and real characters fixed ones.
std::vector<std::pair<Vec, std::size_t>> eigenbasis(const Matrix& span, const NData& nd, const Perm* J) {
  std::vector<std::pair<Vec, std::size_t>> out;
  std::vector<std::vector<Vec>> per(nd.k);
  for (std::size_t mu = 0; mu < nd.k; ++mu) {
    auto cols = column_basis(nd.projector[mu] * span);
    for (auto& c : cols) c = normalise(c);
    if (J) {
      const std::size_t c = nd.inv[mu];
      if (c < mu) {
        for (const auto& v : per[c]) per[mu].push_back(apply_J(*J, v));
      } else if (c == mu) {
        std::vector<Vec> chosen;
        for (const auto& u : cols) {
          if (chosen.size() == cols.size()) break;
          const Vec ju = apply_J(*J, u);
          std::vector<Vec> cands;
          if (ju == u) {
            cands = {u};
          } else if (vec_zero(vadd(ju, u))) {
            cands = {vscale(imag_unit(), u)};
          } else {
            cands = {vadd(u, ju), vscale(imag_unit(), vsub(u, ju))};
          }
          for (auto& f : cands) {
            if (chosen.size() == cols.size()) break;
            auto trial = chosen;
            trial.push_back(f);
            if (rank(from_columns(trial, f.size())) == trial.size()) chosen = std::move(trial);
          }
        }
        if (chosen.size() != cols.size()) throw InternalError("no conjugation-fixed eigenbasis found");
        per[mu] = std::move(chosen);
      } else {
        per[mu] = std::move(cols);
      }
    } else {
      per[mu] = std::move(cols);
    }
    for (const auto& v : per[mu]) out.emplace_back(v, mu);
  }
  return out;
}

std::string letter_name(std::size_t level, std::size_t rank, std::size_t count) {
  if (level == 1) {
    if (count <= 26) return std::string(1, static_cast<char>('a' + rank));
    return "y" + std::to_string(rank + 1);
  }
  if (level == 2) return "w" + std::to_string(rank + 1);
  return "u" + std::to_string(level) + "_" + std::to_string(rank + 1);
}

std::string wrap(const std::string& s) { return s.find(' ') == std::string::npos ? s : "(" + s + ")"; }

struct LevelState {
  GroupPtr G;
  std::shared_ptr<const RepresentationMatrices> rep;
  std::vector<NCExpr> vars;       // in the original variables
  std::vector<std::string> names;  // display names of the current variables
  std::optional<Perm> J;
};

struct LevelOutput {
  std::vector<NCExpr> words;
  std::vector<std::string> word_names;
  std::optional<Perm> J;
  LevelState next;  // filled when a quotient is given
};

// One recursion level: eigen-letters for N, the word list, and the action of G/N on it.
LevelOutput run_level(const LevelState& s, const Subgroup& N, const CharacterTable& table_G,
                      const std::vector<std::size_t>& b_part, const QuotientGroup* Q, std::size_t level,
                      LevelSummary& summary) {
  const FiniteGroup& G = *s.G;
  const RepresentationMatrices& pi = *s.rep;
  const std::size_t d = pi.dim();
  const NData nd(N, pi);
  const std::size_t k = nd.k;
  const Perm* J = s.J ? &*s.J : nullptr;

  std::vector<Elem> all(G.order());
  for (Elem g = 0; g < G.order(); ++g) all[g] = g;

  // b_mu for every nontrivial mu, one orbit per constituent of pi_B
  std::vector<std::optional<Vec>> b(k);
  for (auto chi : b_part) {
    const auto restricted = decompose(restrict(table_G[chi], nd.emb), *nd.table);
    std::vector<std::size_t> orbit;
    for (std::size_t mu = 0; mu < k; ++mu) {
      if (restricted[mu] > 0) orbit.push_back(mu);
    }
    const std::size_t assigned = std::count_if(orbit.begin(), orbit.end(), [&](std::size_t mu) { return b[mu].has_value(); });
    if (assigned == orbit.size()) continue;
    if (assigned != 0) throw InternalError("pi_B orbits overlap");
    const std::size_t mu0 = orbit.front();

    Vec w(G.order());
    for (Elem g = 0; g < G.order(); ++g) w[g] = table_G[chi].values[G.classes().class_of[g]].conjugate();
    const Matrix E = weighted_sum(pi, all, w, table_G[chi].degree() * Cyclotomic(Rational(1, static_cast<unsigned long>(G.order()))));
    const auto U = column_basis(E * nd.projector[mu0]);
    if (U.empty()) throw InternalError("pi_B constituent missing from the representation");
    Vec base = normalise(U.front());
    if (J) {
      const std::size_t c0 = nd.inv[mu0];
      if (c0 == mu0) {
        base = fix_J(*J, base);
      } else if (std::find(orbit.begin(), orbit.end(), c0) != orbit.end() && U.size() > 1) {
        Elem t1 = 0;
        while (nd.act(G, t1, mu0) != c0) ++t1;
        const Matrix Tinv = pi.image(G.inv(t1));
        auto A = [&](const Vec& u) { return ncinv::apply(Tinv, apply_J(*J, u)); };
        const Vec AA = A(A(base));
        const std::size_t p = first_nonzero(base);
        const Cyclotomic c = AA[p] / base[p];
        if (AA != vscale(c, base) || c != Cyclotomic(1)) {
          throw InputError("real pairing unavailable: a real constituent of multiplicity > 1 admits no conjugation-stable copy");
        }
        const Vec f = vadd(base, A(base));
        base = vec_zero(f) ? vscale(imag_unit(), base) : f;
      }
    }
    for (Elem g = 0; g < G.order(); ++g) {
      const std::size_t mu = nd.act(G, g, mu0);
      if (b[mu]) continue;
      Vec v = ncinv::apply(pi.image(g), base);
      if (J) {
        const std::size_t c = nd.inv[mu];
        if (b[c]) {
          b[mu] = apply_J(*J, *b[c]);
          continue;
        }
        b[mu] = c == mu ? fix_J(*J, normalise(v)) : normalise(v);
      } else {
        b[mu] = normalise(v);
      }
    }
    if (J) {
      for (auto mu : orbit) {
        if (!b[nd.inv[mu]]) b[nd.inv[mu]] = apply_J(*J, *b[mu]);
      }
    }
  }
  if (b[0]) throw InternalError("pi_B meets the trivial character of N");
  for (std::size_t mu = 1; mu < k; ++mu) {
    if (!b[mu]) throw InternalError("pi_B misses a nontrivial character of N");
    if (!nd.is_eigen(pi, *b[mu], mu)) throw InternalError("b vector is not an eigenvector");
  }

  // V_J: complement of V_B under the invariant Hermitian form
  std::vector<Vec> bcols;
  for (std::size_t mu = 1; mu < k; ++mu) bcols.push_back(*b[mu]);
  const Matrix VB = from_columns(bcols, d);
  Matrix H(d, d);
  for (Elem g = 0; g < G.order(); ++g) H = H + pi.image(g).conjugate_transpose() * pi.image(g);
  const auto vj = nullspace(VB.conjugate_transpose() * H);
  if (vj.size() + (k - 1) != d) throw InternalError("pi_J has the wrong dimension");
  const auto vletters = vj.empty() ? std::vector<std::pair<Vec, std::size_t>>{} : eigenbasis(from_columns(vj, d), nd, J);
  if (vletters.size() != vj.size()) throw InternalError("projector rank differs from the multiplicity");

  // letters: ids 0..k-2 are b_1..b_{k-1}, then the v's
  struct LetterData {
    Vec coords;
    std::size_t mu;
  };
  std::vector<LetterData> letters;
  for (std::size_t mu = 1; mu < k; ++mu) letters.push_back({*b[mu], mu});
  for (const auto& [v, mu] : vletters) letters.push_back({v, mu});
  const std::size_t L = letters.size();
  auto bid = [&](std::size_t mu) { return mu - 1; };

  std::vector<std::size_t> order(L);
  for (std::size_t i = 0; i < L; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return compare_vec(letters[x].coords, letters[y].coords) > 0; });
  std::vector<std::size_t> rank_of(L);
  for (std::size_t r = 0; r < L; ++r) rank_of[order[r]] = r;

  std::vector<std::string> lname(L);
  std::vector<NCExpr> lexpr(L);
  std::vector<NCExpr> leaves;
  for (std::size_t i = 0; i < d; ++i) leaves.push_back(NCExpr::variable(i));
  summary.letter_names.clear();
  summary.letter_definitions.clear();
  for (std::size_t r = 0; r < L; ++r) {
    const std::size_t id = order[r];
    lname[id] = letter_name(level, r, L);
    lexpr[id] = NCExpr::linear(letters[id].coords, s.vars);
    summary.letter_names.push_back(lname[id]);
    summary.letter_definitions.push_back(NCExpr::linear(letters[id].coords, leaves).str(s.names));
  }

  std::optional<Perm> letterJ;
  if (J) {
    Perm lj(L);
    for (std::size_t i = 0; i < L; ++i) {
      const Vec c = apply_J(*J, letters[i].coords);
      std::size_t hit = L;
      for (std::size_t t = 0; t < L && hit == L; ++t) {
        if (letters[t].coords == c) hit = t;
      }
      if (hit == L) throw InternalError("conjugate of an eigen-letter is not a letter");
      lj[i] = hit;
    }
    letterJ = std::move(lj);
  }

  // words
  std::vector<std::vector<std::size_t>> words;
  for (std::size_t chi = 1; chi < k; ++chi) {
    for (std::size_t mu = 1; mu < k; ++mu) {
      std::vector<std::size_t> w{bid(chi), bid(mu)};
      const std::size_t r = nd.inv[nd.mult[chi][mu]];
      if (r != 0) w.push_back(bid(r));
      words.push_back(std::move(w));
    }
  }
  for (std::size_t theta = 0; theta < k; ++theta) {
    for (std::size_t v = k - 1; v < L; ++v) {
      std::vector<std::size_t> w;
      if (theta != 0) w.push_back(bid(theta));
      w.push_back(v);
      const std::size_t r = nd.inv[nd.mult[theta][letters[v].mu]];
      if (r != 0) w.push_back(bid(r));
      words.push_back(std::move(w));
    }
  }
  std::sort(words.begin(), words.end(), [&](const auto& x, const auto& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (rank_of[x[i]] != rank_of[y[i]]) return rank_of[x[i]] < rank_of[y[i]];
    }
    return false;
  });
  const std::size_t W = words.size();
  summary.group_order = G.order();
  summary.subgroup_order = k;
  summary.variables_in = d;
  summary.generators_out = W;
  summary.count_ok = W == k * (d - 1) + 1;
  if (!summary.count_ok) throw InternalError("word count violates |N|(n-1)+1");

  std::map<std::vector<std::size_t>, std::size_t> word_index;
  for (std::size_t i = 0; i < W; ++i) word_index[words[i]] = i;

  LevelOutput out;
  for (const auto& w : words) {
    std::vector<NCExpr> f;
    std::string nm;
    for (auto id : w) {
      f.push_back(lexpr[id]);
      nm += (nm.empty() ? "" : " ") + lname[id];
    }
    out.words.push_back(NCExpr::product(f));
    out.word_names.push_back(nm);
  }
  if (letterJ) {
    Perm wj(W);
    for (std::size_t i = 0; i < W; ++i) {
      std::vector<std::size_t> img;
      for (auto id : words[i]) img.push_back((*letterJ)[id]);
      auto it = word_index.find(img);
      if (it == word_index.end()) throw InternalError("conjugate of a word is not in the word list");
      wj[i] = it->second;
    }
    out.J = std::move(wj);
  }

  if (!Q) {
    summary.monomial = true;
    summary.character_matches = true;
    return out;
  }

  // action of G/N on the words through lifts of the quotient generators
  std::vector<Vec> vcols;
  for (std::size_t v = k - 1; v < L; ++v) vcols.push_back(letters[v].coords);
  Matrix Vm, Vleft;
  if (!vcols.empty()) {
    Vm = from_columns(vcols, d);
    Vleft = inverse(Vm.conjugate_transpose() * Vm) * Vm.conjugate_transpose();
  }
  using Terms = std::vector<std::pair<Cyclotomic, std::size_t>>;
  std::vector<Matrix> mats;
  bool monomial = true;
  for (Elem gbar : Q->group->generators()) {
    const Elem g = Q->lift[gbar];
    std::vector<Terms> img(L);
    for (std::size_t mu = 1; mu < k; ++mu) {
      const Vec x = ncinv::apply(pi.image(g), *b[mu]);
      const std::size_t mu2 = nd.act(G, g, mu);
      const std::size_t p = first_nonzero(*b[mu2]);
      const Cyclotomic c = x[p] / (*b[mu2])[p];
      if (x != vscale(c, *b[mu2])) throw InternalError("G does not permute the b lines");
      img[bid(mu)] = {{c, bid(mu2)}};
    }
    for (std::size_t v = k - 1; v < L; ++v) {
      const Vec x = ncinv::apply(pi.image(g), letters[v].coords);
      const Vec co = ncinv::apply(Vleft, x);
      if (ncinv::apply(Vm, co) != x) throw InternalError("V_J is not G-stable");
      for (std::size_t t = 0; t < co.size(); ++t) {
        if (!co[t].is_zero()) img[v].emplace_back(co[t], k - 1 + t);
      }
    }
    Matrix M(W, W);
    for (std::size_t j = 0; j < W; ++j) {
      std::vector<std::pair<Cyclotomic, std::vector<std::size_t>>> acc{{Cyclotomic(1), {}}};
      for (auto id : words[j]) {
        std::vector<std::pair<Cyclotomic, std::vector<std::size_t>>> nxt;
        for (const auto& [c, pre] : acc) {
          for (const auto& [c2, l2] : img[id]) {
            auto w2 = pre;
            w2.push_back(l2);
            nxt.emplace_back(c * c2, std::move(w2));
          }
        }
        acc = std::move(nxt);
      }
      for (const auto& [c, w2] : acc) {
        auto it = word_index.find(w2);
        if (it == word_index.end()) throw InternalError("image of a word leaves the word list");
        M(it->second, j) += c;
      }
    }
    for (std::size_t i = 0; i < W && monomial; ++i) {
      std::size_t row = 0, col = 0;
      for (std::size_t j = 0; j < W; ++j) {
        row += M(i, j).is_zero() ? 0 : 1;
        col += M(j, i).is_zero() ? 0 : 1;
      }
      monomial = row == 1 && col == 1;
    }
    mats.push_back(std::move(M));
  }
  summary.monomial = monomial;

  std::vector<std::string> next_names;
  for (const auto& nm : out.word_names) next_names.push_back(wrap(nm));
  auto next_rep = std::make_shared<const RepresentationMatrices>(Q->group, W, std::move(mats), next_names);

  ClassFunction chiB = zero_function(s.G);
  for (auto c : b_part) chiB = chiB + table_G[c];
  const ClassFunction chi = pi.character();
  const ClassFunction expect = qpi_character(chi, chiB, chi - chiB, *Q);
  summary.character_matches = expect == next_rep->character();
  if (!summary.character_matches) throw InternalError("residual action differs from Q pi");

  out.next.G = Q->group;
  out.next.rep = next_rep;
  out.next.vars = out.words;
  out.next.names = next_names;
  out.next.J = out.J;
  return out;
}

struct Prepared {
  GroupPtr G;
  std::shared_ptr<const RepresentationMatrices> rep;
};

Prepared make_faithful(const RepresentationMatrices& pi, std::vector<std::string>& warnings) {
  const Subgroup K = pi.kernel();
  if (K.is_trivial()) return {pi.group(), std::make_shared<const RepresentationMatrices>(pi)};
  const QuotientGroup Q = quotient(pi.group(), K);
  std::vector<Matrix> mats;
  for (Elem g : Q.group->generators()) mats.push_back(pi.image(Q.lift[g]));
  std::ostringstream os;
  os << "the action has a kernel of order " << K.order() << "; synthesising for the faithful quotient of order "
     << Q.group->order();
  warnings.push_back(os.str());
  return {Q.group, std::make_shared<const RepresentationMatrices>(Q.group, pi.dim(), std::move(mats), pi.variables())};
}

std::vector<std::string> variable_names(const RepresentationMatrices& pi) {
  std::vector<std::string> names = pi.variables();
  for (std::size_t i = names.size(); i < pi.dim(); ++i) names.push_back("x" + std::to_string(i + 1));
  names.resize(pi.dim());
  return names;
}

GeneratorSet start_set(const RepresentationMatrices& pi, Field field) {
  GeneratorSet gs;
  gs.field = field;
  gs.variables = variable_names(pi);
  return gs;
}

void finish_set(GeneratorSet& gs, std::vector<NCExpr> words, std::vector<std::string> word_names,
                const std::optional<Perm>& J) {
  if (gs.field == Field::Real) {
    if (!J) throw InputError("real pairing unavailable: no conjugation structure on the generators");
    const std::vector<Cyclotomic> ones(words.size(), Cyclotomic(1));
    gs.generators = realify_generators(words, *J, ones, &word_names);
    gs.words = std::move(word_names);
    gs.conjugation.resize(gs.generators.size());
    for (std::size_t i = 0; i < gs.generators.size(); ++i) gs.conjugation[i] = i;
    gs.conjugation_scalars.assign(gs.generators.size(), Cyclotomic(1));
    const std::string prefix = gs.level <= 1 ? "w" : "r";
    for (std::size_t i = 0; i < gs.generators.size(); ++i) gs.names.push_back(prefix + std::to_string(i + 1));
  } else {
    gs.generators = std::move(words);
    gs.words = std::move(word_names);
    if (J) {
      gs.conjugation = *J;
      gs.conjugation_scalars.assign(gs.generators.size(), Cyclotomic(1));
    }
    for (std::size_t i = 0; i < gs.generators.size(); ++i) gs.names.push_back("g" + std::to_string(i + 1));
  }
  gs.residual = group_from_permutations(1, {{0}});
}

GeneratorSet trivial_set(const RepresentationMatrices& pi, Field field, std::vector<std::string> warnings) {
  GeneratorSet gs = start_set(pi, field);
  gs.warnings = std::move(warnings);
  std::vector<NCExpr> vars;
  Perm J(pi.dim());
  for (std::size_t i = 0; i < pi.dim(); ++i) {
    vars.push_back(NCExpr::variable(i));
    J[i] = i;
  }
  finish_set(gs, vars, gs.variables, J);
  return gs;
}

// Schreier words over the eigenbasis, for actions that are not complete over A
GeneratorSet schreier_fallback(const Prepared& prep, Field field, bool real_structure, GeneratorSet gs) {
  const auto& pi = *prep.rep;
  const NData nd(whole_group(prep.G), pi);
  Perm ident(pi.dim());
  for (std::size_t i = 0; i < ident.size(); ++i) ident[i] = i;
  Matrix id = Matrix::identity(pi.dim());
  auto basis = eigenbasis(id, nd, real_structure ? &ident : nullptr);
  std::stable_sort(basis.begin(), basis.end(), [](const auto& x, const auto& y) { return compare_vec(x.first, y.first) > 0; });
  const std::size_t n = basis.size();
  std::vector<std::size_t> chars;
  std::vector<NCExpr> leaves, letters;
  for (std::size_t i = 0; i < pi.dim(); ++i) leaves.push_back(NCExpr::variable(i));
  std::vector<std::string> lnames;
  LevelSummary sum;
  for (std::size_t i = 0; i < n; ++i) {
    chars.push_back(basis[i].second);
    letters.push_back(NCExpr::linear(basis[i].first, leaves));
    lnames.push_back(letter_name(1, i, n));
    sum.letter_names.push_back(lnames.back());
    sum.letter_definitions.push_back(letters.back().str(gs.variables));
  }
  // cosets of the kernel = characters reachable from the trivial one
  std::vector<std::size_t> coset_char{0};
  std::map<std::size_t, std::size_t> coset_of{{0, 0}};
  for (std::size_t i = 0; i < coset_char.size(); ++i) {
    for (auto c : chars) {
      const std::size_t t = nd.mult[coset_char[i]][c];
      if (coset_of.emplace(t, coset_char.size()).second) coset_char.push_back(t);
    }
  }
  if (coset_char.size() != nd.k) throw InternalError("eigen-characters do not generate the dual of a faithful action");
  const auto res = schreier_generators(n, coset_char.size(), [&](std::size_t c, std::size_t g) {
    return coset_of.at(nd.mult[coset_char[c]][chars[g]]);
  });
  std::vector<NCExpr> words;
  std::vector<std::string> names;
  for (const auto& w : res.generators) {
    std::vector<NCExpr> f;
    for (const auto& l : w.letters()) f.push_back(l.exp > 0 ? letters[l.gen] : NCExpr::inverse(letters[l.gen]));
    words.push_back(NCExpr::product(f));
    names.push_back(w.str(lnames));
  }
  std::optional<Perm> J;
  if (real_structure) {
    Perm lj(n);
    for (std::size_t i = 0; i < n; ++i) {
      const Vec c = apply_J(ident, basis[i].first);
      std::size_t hit = n;
      for (std::size_t t = 0; t < n && hit == n; ++t) {
        if (basis[t].first == c) hit = t;
      }
      if (hit == n) throw InternalError("conjugate of an eigenvector is not in the basis");
      lj[i] = hit;
    }
    Perm wj(res.generators.size());
    bool closed = true;
    for (std::size_t i = 0; i < res.generators.size() && closed; ++i) {
      std::vector<Letter> img;
      for (const auto& l : res.generators[i].letters()) img.push_back(Letter{lj[l.gen], l.exp});
      const FreeWord fw(img);
      auto it = std::find(res.generators.begin(), res.generators.end(), fw);
      closed = it != res.generators.end();
      if (closed) wj[i] = static_cast<std::size_t>(it - res.generators.begin());
    }
    if (closed) J = std::move(wj);
  }
  if (field == Field::Real && !J) {
    throw InputError("real pairing unavailable: the Schreier generating set is not closed under conjugation");
  }
  sum.group_order = prep.G->order();
  sum.subgroup_order = prep.G->order();
  sum.variables_in = pi.dim();
  sum.generators_out = words.size();
  sum.count_ok = words.size() == prep.G->order() * (pi.dim() - 1) + 1;
  sum.monomial = true;
  gs.levels.push_back(sum);
  gs.level = 1;
  gs.uses_inverses = true;
  gs.warnings.push_back("the action is not complete over the abelian group; Schreier words with inverses are used");
  finish_set(gs, std::move(words), std::move(names), J);
  return gs;
}

GeneratorSet run_chain(const Prepared& prep, const CompletenessReport& report, bool real_structure,
                       GeneratorSet gs) {
  LevelState s;
  s.G = prep.G;
  s.rep = prep.rep;
  for (std::size_t i = 0; i < prep.rep->dim(); ++i) s.vars.push_back(NCExpr::variable(i));
  s.names = gs.variables;
  if (real_structure) {
    Perm ident(prep.rep->dim());
    for (std::size_t i = 0; i < ident.size(); ++i) ident[i] = i;
    s.J = ident;
  }
  LevelOutput last;
  for (std::size_t l = 0; l < report.levels.size(); ++l) {
    const auto& lvl = report.levels[l];
    if (lvl.group.get() != s.G.get()) throw InternalError("completeness chain and synthesis disagree on the group");
    LevelSummary summary;
    const bool final_level = l + 1 == report.levels.size();
    last = run_level(s, Subgroup(s.G, lvl.subgroup), *lvl.table, lvl.b_part, final_level ? nullptr : lvl.quotient.get(),
                     l + 1, summary);
    gs.levels.push_back(summary);
    if (!final_level) s = last.next;
  }
  gs.level = report.levels.size();
  finish_set(gs, std::move(last.words), std::move(last.word_names), last.J);
  return gs;
}

}  // namespace

IsotypicBasis isotypic_basis(const RepresentationMatrices& pi, const Subgroup& N) {
  if (N.parent().get() != pi.group().get()) throw InputError("subgroup of a different group");
  if (!is_abelian(N)) throw InputError("isotypic basis needs an abelian subgroup");
  const NData nd(N, pi);
  const auto mults = decompose(restrict(pi.character(), nd.emb), *nd.table);
  Perm ident(pi.dim());
  for (std::size_t i = 0; i < ident.size(); ++i) ident[i] = i;
  auto basis = eigenbasis(Matrix::identity(pi.dim()), nd, is_real_representation(pi) ? &ident : nullptr);
  std::vector<long> count(nd.k, 0);
  for (const auto& [v, mu] : basis) ++count[mu];
  for (std::size_t mu = 0; mu < nd.k; ++mu) {
    if (count[mu] != mults[mu]) throw InternalError("projector rank differs from the multiplicity");
  }
  std::stable_sort(basis.begin(), basis.end(), [](const auto& x, const auto& y) { return compare_vec(x.first, y.first) > 0; });
  IsotypicBasis out;
  out.table = nd.table;
  std::vector<NCExpr> leaves;
  for (std::size_t i = 0; i < pi.dim(); ++i) leaves.push_back(NCExpr::variable(i));
  for (auto& [v, mu] : basis) {
    LabeledVector lv;
    lv.expr = NCExpr::linear(v, leaves);
    lv.coords = std::move(v);
    lv.character = mu;
    out.vectors.push_back(std::move(lv));
  }
  return out;
}

GeneratorSet abelian_invariant_generators(const RepresentationMatrices& pi, Field field) {
  if (!pi.group()->is_abelian()) throw InputError("abelian synthesis needs an abelian group");
  std::vector<std::string> warnings;
  const Prepared prep = make_faithful(pi, warnings);
  if (prep.G->order() == 1) return trivial_set(pi, field, warnings);
  const bool real_pi = is_real_representation(*prep.rep);
  if (field == Field::Real && !real_pi) throw InputError("real synthesis needs a real representation");
  GeneratorSet gs = start_set(pi, field);
  gs.warnings = warnings;
  gs.acting_order = prep.G->order();

  const auto table = std::make_shared<const CharacterTable>(CharacterTable::compute(prep.G));
  const auto mults = decompose(prep.rep->character(), *table);
  bool complete_over_A = true;
  for (std::size_t i = 1; i < mults.size(); ++i) complete_over_A = complete_over_A && mults[i] > 0;
  if (!complete_over_A) return schreier_fallback(prep, field, real_pi, std::move(gs));

  CompletenessReport report;
  report.verdict = true;
  CompletenessLevel lvl;
  lvl.group = prep.G;
  lvl.table = table;
  const Subgroup A = whole_group(prep.G);
  lvl.subgroup = A.elements();
  for (std::size_t i = 0; i < mults.size(); ++i) {
    if (mults[i] > 0) lvl.support.push_back(i);
    if (i > 0) lvl.b_part.push_back(i);
  }
  lvl.j_part = lvl.support;
  report.levels.push_back(lvl);
  return run_chain(prep, report, real_pi, std::move(gs));
}

GeneratorSet complete_invariant_generators(const RepresentationMatrices& pi, Field field) {
  std::vector<std::string> warnings;
  const Prepared prep = make_faithful(pi, warnings);
  if (prep.G->order() == 1) return trivial_set(pi, field, warnings);
  const bool real_pi = is_real_representation(*prep.rep);
  if (field == Field::Real && !real_pi) throw InputError("real synthesis needs a real representation");
  GeneratorSet gs = start_set(pi, field);
  gs.warnings = warnings;
  gs.acting_order = prep.G->order();

  bool real_structure = false;
  CompletenessReport report;
  if (real_pi) {
    CompletenessOptions opts;
    opts.conjugation_closed = true;
    report = is_complete(*prep.rep, opts);
    real_structure = report.verdict;
  }
  if (!real_structure) {
    report = is_complete(*prep.rep);
    if (!report.verdict) throw NotCompleteError("the representation is not complete", report);
    if (field == Field::Real) {
      throw InputError("real pairing unavailable: no conjugation-closed pi_B choice completes the representation");
    }
    if (real_pi) gs.warnings.push_back("no conjugation-closed pi_B choice; conjugation data omitted");
  }
  return run_chain(prep, report, real_structure, std::move(gs));
}

GeneratorSet invariant_generators(const RepresentationMatrices& pi, Field field) {
  return pi.group()->is_abelian() ? abelian_invariant_generators(pi, field) : complete_invariant_generators(pi, field);
}

std::vector<NCExpr> realify_generators(const std::vector<NCExpr>& gens, const std::vector<std::size_t>& conjugation,
                                       const std::vector<Cyclotomic>& scalars, std::vector<std::string>* words) {
  const std::size_t n = gens.size();
  if (conjugation.size() != n || scalars.size() != n) throw InputError("conjugation data does not match the generators");
  const Cyclotomic& I = imag_unit();
  std::vector<NCExpr> out;
  std::vector<std::string> out_words;
  std::vector<bool> done(n, false);
  auto word = [&](std::size_t i) { return words ? (*words)[i] : std::string(); };
  auto scaled = [&](const Cyclotomic& s, const std::string& w) {
    return s == Cyclotomic(1) ? w : "(" + s.str() + ")*" + wrap(w);
  };
  for (std::size_t i = 0; i < n; ++i) {
    if (done[i]) continue;
    const std::size_t j = conjugation[i];
    if (j >= n || conjugation[j] != i) throw InputError("conjugation data is not an involution");
    const Cyclotomic& s = scalars[i];
    done[i] = done[j] = true;
    if (j == i) {
      if (s == Cyclotomic(1)) {
        out.push_back(gens[i]);
        out_words.push_back(word(i));
      } else {
        const Cyclotomic f = Cyclotomic(1) + s;
        out.push_back(f.is_zero() ? NCExpr::scale(I, gens[i]) : NCExpr::scale(f, gens[i]));
        out_words.push_back(f.is_zero() ? "i " + wrap(word(i)) : scaled(f, word(i)));
      }
      continue;
    }
    const NCExpr partner = NCExpr::scale(s, gens[j]);
    out.push_back(NCExpr::sum({gens[i], partner}));
    out.push_back(NCExpr::scale(I, NCExpr::sum({gens[i], NCExpr::scale(Cyclotomic(-1), partner)})));
    out_words.push_back(word(i) + " + " + scaled(s, word(j)));
    out_words.push_back("i(" + word(i) + " - " + scaled(s, word(j)) + ")");
  }
  // duplicates and zeros
  std::vector<NCExpr> kept;
  std::vector<std::string> kept_words;
  std::unordered_map<std::string, bool> seen;
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i].is_zero() || !seen.emplace(out[i].key(), true).second) continue;
    kept.push_back(out[i]);
    kept_words.push_back(out_words[i]);
  }
  if (kept.size() != n) throw InternalError("realification changed the number of generators");
  if (words) *words = std::move(kept_words);
  return kept;
}

InvarianceReport verify_invariance(const GeneratorSet& gens, const RepresentationMatrices& pi, std::size_t trials,
                                   std::size_t dim, std::uint64_t seed) {
  InvarianceReport rep;
  rep.count_ok = gens.generators.size() == gens.expected_count();
  if (!rep.count_ok) {
    std::ostringstream os;
    os << "count law: " << gens.generators.size() << " generators, expected " << gens.expected_count();
    rep.failures.push_back(os.str());
  }
  if (gens.variables.size() != pi.dim()) throw InputError("generator set and representation disagree on the variables");
  const FiniteGroup& G = *pi.group();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
  auto sample = [&] {
    std::vector<Matrix> xs;
    for (std::size_t v = 0; v < pi.dim(); ++v) {
      Matrix m(dim, dim);
      for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
          Rational q(num(rng), den(rng));
          q.canonicalize();
          m(i, j) = Cyclotomic(q);
        }
      }
      xs.push_back(std::move(m));
    }
    return xs;
  };
  std::vector<bool> flagged(gens.generators.size(), false);
  for (std::size_t t = 0; t < trials; ++t) {
    for (int attempt = 0;; ++attempt) {
      try {
        const auto X = sample();
        MatrixEvaluator base(X);
        std::vector<Matrix> values;
        for (const auto& g : gens.generators) values.push_back(base(g));
        if (gens.field == Field::Real) {
          for (std::size_t i = 0; i < values.size(); ++i) {
            for (std::size_t r = 0; r < dim; ++r) {
              for (std::size_t c = 0; c < dim; ++c) {
                if (!values[i](r, c).is_real()) {
                  if (rep.real_ok) {
                    rep.failures.push_back("generator " + gens.names.at(i) + " takes a non-real value on a real tuple");
                  }
                  rep.real_ok = false;
                }
              }
            }
          }
        }
        for (Elem e = 0; e < G.order(); ++e) {
          const Matrix& P = pi.image(e);
          std::vector<Matrix> Y;
          for (std::size_t j = 0; j < pi.dim(); ++j) {
            Matrix acc(dim, dim);
            for (std::size_t i = 0; i < pi.dim(); ++i) {
              if (!P(i, j).is_zero()) acc = acc + P(i, j) * X[i];
            }
            Y.push_back(std::move(acc));
          }
          MatrixEvaluator moved(Y);
          for (std::size_t i = 0; i < gens.generators.size(); ++i) {
            ++rep.checks;
            if (moved(gens.generators[i]) != values[i] && !flagged[i]) {
              flagged[i] = true;
              const std::string label = e < G.labels().size() ? G.labels()[e] : "g" + std::to_string(e);
              rep.failures.push_back("generator " + (i < gens.names.size() ? gens.names[i] : std::to_string(i)) +
                                     " is not invariant under element " + std::to_string(e) + " (" + label + ")");
            }
          }
        }
        break;
      } catch (const ArithmeticError&) {
        if (attempt >= 5) throw;  // singular samples keep recurring
      }
    }
    ++rep.trials;
  }
  rep.passed = rep.failures.empty();
  return rep;
}

json export_generators(const GeneratorSet& gs) {
  json j;
  j["field"] = to_string(gs.field);
  j["levels"] = gs.level;
  j["variables"] = gs.variables;
  j["acting_order"] = gs.acting_order;
  j["expected_count"] = gs.expected_count();
  j["count"] = gs.generators.size();
  j["uses_inverses"] = gs.uses_inverses;
  j["warnings"] = gs.warnings;
  json lv = json::array();
  for (const auto& l : gs.levels) {
    json x;
    x["group_order"] = l.group_order;
    x["subgroup_order"] = l.subgroup_order;
    x["variables_in"] = l.variables_in;
    x["generators_out"] = l.generators_out;
    x["count_ok"] = l.count_ok;
    x["monomial"] = l.monomial;
    x["character_matches"] = l.character_matches;
    json letters = json::array();
    for (std::size_t i = 0; i < l.letter_names.size(); ++i) {
      letters.push_back({{"name", l.letter_names[i]}, {"definition", l.letter_definitions[i]}});
    }
    x["letters"] = letters;
    lv.push_back(x);
  }
  j["recursion"] = lv;
  std::vector<std::size_t> roots;
  j["nodes"] = expressions_to_json(gs.generators, roots);
  json g = json::array();
  for (std::size_t i = 0; i < gs.generators.size(); ++i) {
    json x;
    x["name"] = gs.names[i];
    x["word"] = i < gs.words.size() ? gs.words[i] : "";
    x["root"] = roots[i];
    if (gs.generators[i].dag_size() <= 64 && gs.generators[i].degree() <= 9) x["infix"] = gs.generators[i].str(gs.variables);
    g.push_back(x);
  }
  j["generators"] = g;
  if (!gs.conjugation.empty()) {
    json c = json::array();
    for (std::size_t i = 0; i < gs.conjugation.size(); ++i) {
      c.push_back({{"image", gs.conjugation[i]}, {"scalar", to_json(gs.conjugation_scalars[i])}});
    }
    j["conjugation"] = c;
  }
  return j;
}

}  // namespace ncinv
