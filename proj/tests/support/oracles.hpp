#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ncinv/chartheory.hpp"
#include "ncinv/decide.hpp"
#include "ncinv/freegroup.hpp"
#include "ncinv/group.hpp"

// Brute-force oracles: elementwise floating-point evaluation, independent of
// the class-level exact code paths they are compared against.
namespace ncinv::testing {

using cd = std::complex<double>;
using Failures = std::vector<std::string>;

inline constexpr double kTol = 1e-6;

inline std::vector<cd> element_values(const ClassFunction& f) {
  const auto& cls = f.group->classes();
  std::vector<cd> by_class(f.values.size());
  for (std::size_t c = 0; c < by_class.size(); ++c) by_class[c] = f.values[c].to_complex();
  std::vector<cd> out(f.group->order());
  for (std::size_t g = 0; g < out.size(); ++g) out[g] = by_class[cls.class_of[g]];
  return out;
}

/// Mean of a * conj(b) over the listed positions.
inline cd mean_product(const std::vector<cd>& a, const std::vector<cd>& b, const std::vector<Elem>& over) {
  cd s = 0;
  for (Elem g : over) s += a[g] * std::conj(b[g]);
  return s / static_cast<double>(over.size());
}

inline bool near_integer(cd z, long* out = nullptr) {
  const double r = std::round(z.real());
  if (std::abs(z.real() - r) > kTol || std::abs(z.imag()) > kTol) return false;
  if (out) *out = static_cast<long>(r);
  return true;
}

inline std::vector<Elem> all_elements(const GroupPtr& G) {
  std::vector<Elem> v(G->order());
  std::iota(v.begin(), v.end(), Elem{0});
  return v;
}

/// Linear characters of an abelian N as value vectors on the parent's elements
/// (zero outside N), cross-checked to be homomorphisms.
struct LinearCharacters {
  std::vector<std::vector<cd>> values;
  std::vector<ClassFunction> exact;  // on N as a group
};

inline LinearCharacters linear_characters(const EmbeddedSubgroup& sub, const CharacterTable& tN, Failures& fail) {
  LinearCharacters out;
  const GroupPtr& G = sub.parent();
  for (const auto& mu : tN.irreducibles()) {
    const auto local = element_values(mu);
    std::vector<cd> v(G->order(), 0.0);
    for (std::size_t i = 0; i < local.size(); ++i) v[sub.embedding[i]] = local[i];
    out.values.push_back(std::move(v));
    out.exact.push_back(mu);
  }
  if (out.values.size() != sub.group->order()) fail.push_back("Irr(N) count differs from |N|");
  const auto& N = sub.subgroup.elements();
  for (std::size_t k = 0; k < out.values.size(); ++k) {
    const auto& v = out.values[k];
    for (Elem a : N) {
      for (Elem b : N) {
        if (std::abs(v[G->mul(a, b)] - v[a] * v[b]) > kTol) {
          fail.push_back("character " + std::to_string(k) + " of N is not a homomorphism");
          goto next;
        }
      }
    }
  next:;
  }
  return out;
}

// ------------------------------------------------------------------ tables

inline Failures check_orthogonality(const CharacterTable& t) {
  Failures f;
  const GroupPtr& G = t.group();
  const auto& cls = G->classes();
  const std::size_t k = t.size();
  if (k != cls.count()) f.push_back("number of irreducibles differs from the class count");
  // exact row relations
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const Cyclotomic ip = inner_product(t[i], t[j]);
      if (ip != Cyclotomic(i == j ? 1L : 0L)) f.push_back("row relation fails for " + std::to_string(i) + "," + std::to_string(j));
    }
  }
  // exact column relations
  for (std::size_t c = 0; c < k; ++c) {
    for (std::size_t d = 0; d < k; ++d) {
      Cyclotomic s;
      for (std::size_t i = 0; i < k; ++i) s += t[i].values[c] * t[i].values[d].conjugate();
      const long expect = c == d ? static_cast<long>(G->order() / cls.sizes[c]) : 0L;
      if (s != Cyclotomic(expect)) f.push_back("column relation fails for " + std::to_string(c) + "," + std::to_string(d));
    }
  }
  // elementwise floating row relations and degree sum
  const auto all = all_elements(G);
  std::vector<std::vector<cd>> ev;
  for (std::size_t i = 0; i < k; ++i) ev.push_back(element_values(t[i]));
  double deg2 = 0;
  for (std::size_t i = 0; i < k; ++i) {
    deg2 += std::norm(ev[i][0]);
    for (std::size_t j = 0; j <= i; ++j) {
      if (std::abs(mean_product(ev[i], ev[j], all) - cd(i == j ? 1.0 : 0.0)) > kTol) {
        f.push_back("elementwise row relation fails for " + std::to_string(i) + "," + std::to_string(j));
      }
    }
  }
  if (std::abs(deg2 - static_cast<double>(G->order())) > kTol) f.push_back("sum of squared degrees differs from |G|");
  // degrees
  for (std::size_t i = 0; i < k; ++i) {
    if (!t[i].values[0].as_integer() || *t[i].values[0].as_integer() <= 0) f.push_back("degree is not a positive integer");
  }
  return f;
}

/// <Ind mu, chi>_G = <mu, chi|_N>_N for every mu in Irr(N), chi in Irr(G).
inline Failures check_frobenius(const CharacterTable& t, const Subgroup& N) {
  Failures f;
  const auto sub = EmbeddedSubgroup::make(N);
  const auto tN = CharacterTable::compute(sub.group);
  const auto lin = linear_characters(sub, tN, f);
  const auto all = all_elements(t.group());
  std::vector<std::vector<cd>> ev;
  std::vector<ClassFunction> res;
  for (const auto& chi : t.irreducibles()) {
    ev.push_back(element_values(chi));
    res.push_back(restrict(chi, sub));
  }
  for (std::size_t m = 0; m < lin.exact.size(); ++m) {
    const ClassFunction ind = induce(lin.exact[m], sub);
    const auto ind_v = element_values(ind);
    for (std::size_t i = 0; i < t.size(); ++i) {
      const Cyclotomic lhs = inner_product(ind, t[i]);
      const Cyclotomic rhs = inner_product(lin.exact[m], res[i]);
      if (lhs != rhs) f.push_back("exact reciprocity fails for mu " + std::to_string(m) + ", chi " + std::to_string(i));
      // elementwise: <chi|_N, mu>_N
      long brute = -1;
      if (!near_integer(mean_product(ev[i], lin.values[m], N.elements()), &brute) || Cyclotomic(brute) != rhs) {
        f.push_back("elementwise restriction multiplicity disagrees for mu " + std::to_string(m) + ", chi " +
                    std::to_string(i));
      }
      long brute_ind = -1;
      if (!near_integer(mean_product(ind_v, ev[i], all), &brute_ind) || brute_ind != brute) {
        f.push_back("elementwise induced multiplicity disagrees for mu " + std::to_string(m) + ", chi " +
                    std::to_string(i));
      }
    }
  }
  return f;
}

/// Constituents of chi|_N form one G-orbit and share one multiplicity e, with e |orbit| = chi(1).
inline Failures check_clifford(const CharacterTable& t, const Subgroup& N) {
  Failures f;
  const GroupPtr& G = t.group();
  const auto sub = EmbeddedSubgroup::make(N);
  const auto tN = CharacterTable::compute(sub.group);
  const auto lin = linear_characters(sub, tN, f);
  const std::size_t r = lin.values.size();
  // conjugation action mu^g(n) = mu(g n g^-1) on the generators of G
  std::vector<std::size_t> parent(r);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (Elem g : G->generators()) {
    for (std::size_t m = 0; m < r; ++m) {
      std::size_t hit = r;
      for (std::size_t k = 0; k < r && hit == r; ++k) {
        bool same = true;
        for (Elem n : N.elements()) {
          if (std::abs(lin.values[m][G->mul(G->mul(g, n), G->inv(g))] - lin.values[k][n]) > kTol) {
            same = false;
            break;
          }
        }
        if (same) hit = k;
      }
      if (hit == r) {
        f.push_back("conjugate of a character of N is not a character of N");
        return f;
      }
      parent[find(m)] = find(hit);
    }
  }
  for (std::size_t i = 0; i < t.size(); ++i) {
    const auto ev = element_values(t[i]);
    std::map<std::size_t, std::vector<long>> by_orbit;
    for (std::size_t m = 0; m < r; ++m) {
      long mult = 0;
      if (!near_integer(mean_product(ev, lin.values[m], N.elements()), &mult) || mult < 0) {
        f.push_back("non-integral restriction multiplicity");
        continue;
      }
      if (mult > 0) by_orbit[find(m)].push_back(mult);
    }
    if (by_orbit.size() != 1) {
      f.push_back("restriction of chi " + std::to_string(i) + " meets " + std::to_string(by_orbit.size()) + " orbits");
      continue;
    }
    const auto& ms = by_orbit.begin()->second;
    std::size_t orbit = 0;
    for (std::size_t m = 0; m < r; ++m) orbit += find(m) == by_orbit.begin()->first;
    const bool equal = std::all_of(ms.begin(), ms.end(), [&](long v) { return v == ms.front(); });
    long deg = 0;
    near_integer(ev[0], &deg);
    if (!equal || ms.size() != orbit || ms.front() * static_cast<long>(orbit) != deg) {
      f.push_back("restriction of chi " + std::to_string(i) + " is not e times a full orbit");
    }
  }
  return f;
}

// ------------------------------------------------------------------ decisions

/// Definition: every irreducible restricts multiplicity-freely or as a multiple of the trivial character.
inline bool brute_unramified(const CharacterTable& t, const Subgroup& N) {
  for (const auto& chi : t.irreducibles()) {
    const auto ev = element_values(chi);
    bool trivial = true;
    double norm = 0;
    for (Elem n : N.elements()) {
      norm += std::norm(ev[n]);
      trivial = trivial && std::abs(ev[n] - ev[0]) < kTol;
    }
    norm /= static_cast<double>(N.order());
    // for abelian N, |chi|_N|^2 = sum of squared multiplicities, which equals chi(1) iff all are <= 1
    if (!trivial && std::abs(norm - ev[0].real()) > kTol) return false;
  }
  return true;
}

/// Definition: every linear character of N lies under some irreducible with multiplicity-free restriction.
inline bool brute_pseudo(const CharacterTable& t, const Subgroup& N, Failures& fail) {
  const auto sub = EmbeddedSubgroup::make(N);
  const auto tN = CharacterTable::compute(sub.group);
  const auto lin = linear_characters(sub, tN, fail);
  std::vector<std::vector<cd>> ev;
  std::vector<bool> mf;
  for (const auto& chi : t.irreducibles()) {
    ev.push_back(element_values(chi));
    double norm = 0;
    for (Elem n : N.elements()) norm += std::norm(ev.back()[n]);
    mf.push_back(std::abs(norm / static_cast<double>(N.order()) - ev.back()[0].real()) < kTol);
  }
  for (const auto& mu : lin.values) {
    bool found = false;
    for (std::size_t i = 0; i < ev.size() && !found; ++i) {
      found = mf[i] && mean_product(ev[i], mu, N.elements()).real() > 0.5;
    }
    if (!found) return false;
  }
  return true;
}

/// Library definition check, inertia check and the brute definition agree for both properties.
inline Failures check_definition_vs_inertia(const GroupContext& ctx, const Subgroup& N) {
  Failures f;
  const bool bu = brute_unramified(ctx.table(), N);
  const bool bp = brute_pseudo(ctx.table(), N, f);
  const bool lu = check_over(ctx, N, Property::Unramified).holds;
  const bool lp = check_over(ctx, N, Property::PseudoUnramified).holds;
  const bool iu = inertia_criterion(ctx, N, Property::Unramified);
  const bool ip = inertia_criterion(ctx, N, Property::PseudoUnramified);
  if (bu != lu || bu != iu) f.push_back("unramified verdicts disagree (brute/definition/inertia)");
  if (bp != lp || bp != ip) f.push_back("pseudo verdicts disagree (brute/definition/inertia)");
  if (bu && !bp) f.push_back("unramified over N but not pseudo-unramified over N");
  return f;
}

/// If G is unramified over N then [N,G] = N or [N,G] = G'.
inline Failures check_commutator_condition(const GroupContext& ctx, const Subgroup& N) {
  Failures f;
  if (!brute_unramified(ctx.table(), N)) return f;
  const Subgroup c = commutator(N, whole_group(ctx.group()));
  if (!(c == N) && !(c == ctx.derived())) f.push_back("unramified over N with [N,G] neither N nor G'");
  return f;
}

/// Exhaustive search over chains of abelian normal subgroups with the brute definition.
inline bool brute_totally(const GroupPtr& G, Property p, std::map<std::string, bool>& memo) {
  if (G->order() == 1) return true;
  const std::string key = G->table_key() + (p == Property::Unramified ? "u" : "p");
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  const auto t = CharacterTable::compute(G);
  bool ok = false;
  Failures ignored;
  for (const auto& N : abelian_normal_subgroups(G)) {
    const bool holds = p == Property::Unramified ? brute_unramified(t, N) : brute_pseudo(t, N, ignored);
    if (holds && brute_totally(quotient(G, N).group, p, memo)) {
      ok = true;
      break;
    }
  }
  memo[key] = ok;
  return ok;
}

/// Totally unramified implies totally pseudo-unramified; a positive certificate replays.
inline Failures check_totally_implication(const GroupPtr& G) {
  Failures f;
  const auto u = decide_totally(G, Property::Unramified);
  const auto p = decide_totally(G, Property::PseudoUnramified);
  if (u.verdict && !p.verdict) f.push_back("totally unramified but not totally pseudo-unramified");
  if (u.verdict && !replay_certificate(G, u)) f.push_back("unramified certificate does not replay");
  if (p.verdict && !replay_certificate(G, p)) f.push_back("pseudo certificate does not replay");
  return f;
}

/// Quotients of a totally unramified group are totally unramified.
inline Failures check_quotient_closure(const GroupPtr& G) {
  Failures f;
  if (!decide_totally(G, Property::Unramified).verdict) return f;
  for (const auto& M : normal_subgroups(G)) {
    if (M.is_trivial() || M.is_whole()) continue;
    if (!decide_totally(quotient(G, M).group, Property::Unramified).verdict) {
      f.push_back("quotient by a normal subgroup of order " + std::to_string(M.order()) + " is not totally unramified");
    }
  }
  return f;
}

// ------------------------------------------------------------------ free groups

struct SchreierInstance {
  std::size_t n = 0;
  AbelianTarget target;
  std::size_t order = 1;
};

/// Random surjection from F_n onto an abelian group of order <= 12.
inline SchreierInstance random_schreier_instance(std::mt19937_64& rng) {
  static const std::vector<std::vector<std::uint64_t>> shapes = {
      {1}, {2}, {3}, {4}, {5}, {6}, {7}, {8}, {9}, {10}, {11}, {12}, {2, 2}, {2, 4}, {2, 6}, {3, 3}, {2, 2, 2}};
  for (;;) {
    SchreierInstance inst;
    inst.n = 1 + rng() % 4;
    inst.target.invariants = shapes[rng() % shapes.size()];
    if (inst.target.invariants.size() > inst.n) continue;
    inst.order = 1;
    for (auto d : inst.target.invariants) inst.order *= d;
    for (std::size_t i = 0; i < inst.n; ++i) {
      std::vector<std::int64_t> img;
      for (auto d : inst.target.invariants) img.push_back(static_cast<std::int64_t>(rng() % d));
      inst.target.images.push_back(img);
    }
    // brute surjectivity: closure of the images
    std::vector<std::vector<std::int64_t>> seen = {std::vector<std::int64_t>(inst.target.invariants.size(), 0)};
    for (std::size_t k = 0; k < seen.size(); ++k) {
      for (const auto& img : inst.target.images) {
        auto s = seen[k];
        for (std::size_t j = 0; j < s.size(); ++j) s[j] = (s[j] + img[j]) % static_cast<std::int64_t>(inst.target.invariants[j]);
        if (std::find(seen.begin(), seen.end(), s) == seen.end()) seen.push_back(s);
      }
    }
    if (seen.size() == inst.order) return inst;
  }
}

inline FreeWord random_word(std::mt19937_64& rng, std::size_t n, std::size_t max_len) {
  std::vector<Letter> ls;
  const std::size_t len = rng() % (max_len + 1);
  for (std::size_t i = 0; i < len; ++i) ls.push_back(Letter{rng() % n, rng() % 2 ? 1 : -1});
  return FreeWord(ls);
}

inline bool brute_in_kernel(const FreeWord& w, const AbelianTarget& t) {
  std::vector<std::int64_t> s(t.invariants.size(), 0);
  for (const auto& l : w.letters()) {
    for (std::size_t j = 0; j < s.size(); ++j) s[j] += l.exp * t.images[l.gen][j];
  }
  for (std::size_t j = 0; j < s.size(); ++j) {
    if (s[j] % static_cast<std::int64_t>(t.invariants[j]) != 0) return false;
  }
  return true;
}

/// Schreier count |A|(n-1)+1, folded rank = count, index = |A|, membership agrees with evaluation.
inline Failures check_schreier_fold(std::uint64_t seed, std::size_t instances) {
  Failures f;
  std::mt19937_64 rng(seed);
  for (std::size_t k = 0; k < instances; ++k) {
    const auto inst = random_schreier_instance(rng);
    std::ostringstream tag;
    tag << "instance " << k << " (n=" << inst.n << ", |A|=" << inst.order << "): ";
    const auto res = kernel_generators(inst.n, inst.target);
    const std::size_t expect = inst.order * (inst.n - 1) + 1;
    if (res.generators.size() != expect) f.push_back(tag.str() + "generator count " + std::to_string(res.generators.size()));
    if (res.transversal.size() != inst.order) f.push_back(tag.str() + "transversal size");
    for (const auto& g : res.generators) {
      if (!brute_in_kernel(g, inst.target)) f.push_back(tag.str() + "generator outside the kernel");
    }
    const auto graph = fold(res.generators, inst.n);
    const auto ri = graph_rank_index(graph);
    if (ri.rank != expect) f.push_back(tag.str() + "folded rank " + std::to_string(ri.rank));
    if (ri.index != inst.order) f.push_back(tag.str() + "folded index differs from |A|");
    for (int trial = 0; trial < 40; ++trial) {
      const FreeWord w = random_word(rng, inst.n, 10);
      if (accepts(graph, w) != brute_in_kernel(w, inst.target)) {
        f.push_back(tag.str() + "membership disagrees on " + w.str());
        break;
      }
    }
  }
  return f;
}

inline std::string join_failures(const Failures& f, std::size_t limit = 5) {
  std::string s;
  for (std::size_t i = 0; i < f.size() && i < limit; ++i) s += (i ? "; " : "") + f[i];
  if (f.size() > limit) s += "; ... (" + std::to_string(f.size()) + " total)";
  return s;
}

}  // namespace ncinv::testing
