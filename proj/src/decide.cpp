#include "ncinv/decide.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>

#include "ncinv/errors.hpp"

namespace ncinv {

std::string to_string(Property p) { return p == Property::Unramified ? "unramified" : "pseudo-unramified"; }

namespace {

void require_abelian_normal(const Subgroup& N) {
  if (N.is_trivial()) throw InputError("the subgroup must be nontrivial");
  if (!is_abelian(N)) throw InputError("the subgroup must be abelian");
  if (!is_normal(N)) throw InputError("the subgroup must be normal");
}

long lift_count(const ModularField& F, std::uint64_t v, long bound) {
  const std::int64_t x = F.lift_signed(v);
  if (x < 0 || x > bound) throw InternalError("character multiplicity out of range");
  return static_cast<long>(x);
}

std::uint64_t field_exponent(const GroupPtr& G, const CharacterTable& t) {
  std::uint64_t E = G->exponent();
  for (const auto& chi : t.irreducibles()) {
    for (const auto& v : chi.values) E = lcm_u64(E, v.modulus());
  }
  return E;
}

std::size_t depth_bound(std::size_t order) {
  return static_cast<std::size_t>(std::log2(static_cast<double>(std::max<std::size_t>(order, 2)))) + 2;
}

}  // namespace

GroupContext::GroupContext(GroupPtr G)
    : GroupContext(G, std::make_shared<const CharacterTable>(CharacterTable::compute(G))) {}

GroupContext::GroupContext(GroupPtr G, std::shared_ptr<const CharacterTable> table)
    : group_(std::move(G)),
      table_(std::move(table)),
      field_(ModularField::wide(field_exponent(group_, *table_))),
      modular_(modular_values(*table_, field_)),
      derived_(derived_subgroup(group_)),
      centre_(center(group_)),
      nilpotent_(is_nilpotent(group_)) {}

std::shared_ptr<const GroupContext::SubgroupValues> GroupContext::subgroup_values(const Subgroup& H) const {
  {
    std::lock_guard lock(*cache_mutex_);
    if (auto it = subgroup_cache_.find(H.elements()); it != subgroup_cache_.end()) return it->second;
  }
  auto d = std::make_shared<SubgroupValues>();
  d->class_of.assign(group_->order(), SIZE_MAX);
  if (H.is_whole()) {
    d->values = modular_;
    d->class_of = group_->classes().class_of;
  } else {
    const EmbeddedSubgroup eH = EmbeddedSubgroup::make(H);
    d->values = modular_values(CharacterTable::compute(eH.group), field_);
    for (Elem h : H.elements()) d->class_of[h] = eH.group->classes().class_of[eH.local[h]];
  }
  std::lock_guard lock(*cache_mutex_);
  return subgroup_cache_.emplace(H.elements(), std::move(d)).first->second;
}

RestrictionData restriction_data(const GroupContext& ctx, const Subgroup& N) {
  RestrictionData rd{EmbeddedSubgroup::make(N), nullptr, {}};
  rd.table_N = std::make_shared<const CharacterTable>(CharacterTable::compute(rd.sub.group));
  const auto& F = ctx.field();
  const auto muvals = modular_values(*rd.table_N, F);
  const auto& nc = rd.sub.group->classes();
  const auto& gc = ctx.group()->classes();
  const auto& ninv = rd.table_N->inverse_class();
  std::vector<std::size_t> gclass(nc.count());
  for (std::size_t c = 0; c < nc.count(); ++c) gclass[c] = gc.class_of[rd.sub.embedding[nc.representatives[c]]];
  const std::uint64_t inv_order = F.inv(N.order() % F.q);
  const auto& chis = ctx.modular();
  rd.multiplicity.assign(chis.size(), std::vector<long>(muvals.size(), 0));
  for (std::size_t i = 0; i < chis.size(); ++i) {
    const long deg = ctx.table()[i].degree().as_integer()->get_si();
    for (std::size_t j = 0; j < muvals.size(); ++j) {
      std::uint64_t acc = 0;
      for (std::size_t c = 0; c < nc.count(); ++c) {
        acc = F.add(acc, F.mul(F.mul(nc.sizes[c] % F.q, chis[i][gclass[c]]), muvals[j][ninv[c]]));
      }
      rd.multiplicity[i][j] = lift_count(F, F.mul(acc, inv_order), deg);
    }
  }
  return rd;
}

namespace {

bool row_multiplicity_free(const std::vector<long>& row) {
  return std::all_of(row.begin(), row.end(), [](long m) { return m <= 1; });
}

bool row_trivial_multiple(const std::vector<long>& row) {
  for (std::size_t j = 1; j < row.size(); ++j) {
    if (row[j] != 0) return false;
  }
  return true;
}

OverResult unramified_from(const RestrictionData& rd) {
  OverResult r;
  r.holds = true;
  for (std::size_t i = 0; i < rd.multiplicity.size(); ++i) {
    const auto& row = rd.multiplicity[i];
    if (!row_multiplicity_free(row) && !row_trivial_multiple(row)) {
      r.holds = false;
      r.violating_character = i;
      break;
    }
  }
  return r;
}

OverResult pseudo_from(const RestrictionData& rd) {
  OverResult r;
  const std::size_t kn = rd.table_N->size();
  std::vector<bool> covered(kn, false);
  std::vector<bool> orbit_done(kn, false);
  for (std::size_t i = 0; i < rd.multiplicity.size(); ++i) {
    const auto& row = rd.multiplicity[i];
    if (!row_multiplicity_free(row)) continue;
    std::size_t first = kn;
    for (std::size_t j = 0; j < kn; ++j) {
      if (row[j] > 0) {
        covered[j] = true;
        if (first == kn) first = j;
      }
    }
    if (first < kn && !orbit_done[first]) {
      orbit_done[first] = true;
      r.choices.emplace_back(first, i);
    }
  }
  std::sort(r.choices.begin(), r.choices.end());
  r.holds = true;
  for (std::size_t j = 0; j < kn; ++j) {
    if (!covered[j]) {
      r.holds = false;
      r.orphan_linear = j;
      r.choices.clear();
      break;
    }
  }
  return r;
}

}  // namespace

OverResult is_unramified_over(const GroupContext& ctx, const Subgroup& N) {
  require_abelian_normal(N);
  return unramified_from(restriction_data(ctx, N));
}

OverResult is_pseudo_unramified_over(const GroupContext& ctx, const Subgroup& N) {
  require_abelian_normal(N);
  return pseudo_from(restriction_data(ctx, N));
}

OverResult check_over(const GroupContext& ctx, const Subgroup& N, Property p) {
  return p == Property::Unramified ? is_unramified_over(ctx, N) : is_pseudo_unramified_over(ctx, N);
}

bool inertia_criterion(const GroupContext& ctx, const Subgroup& N, Property p) {
  require_abelian_normal(N);
  const GroupPtr& G = ctx.group();
  const EmbeddedSubgroup sub = EmbeddedSubgroup::make(N);
  const CharacterTable tN = CharacterTable::compute(sub.group);
  const auto& F = ctx.field();
  const auto muvals = modular_values(tN, F);
  const std::uint64_t inv_order = F.inv(N.order() % F.q);
  for (std::size_t j = 0; j < tN.size(); ++j) {
    if (p == Property::Unramified && j == 0) continue;
    const auto data = ctx.subgroup_values(inertia_subgroup(tN[j], sub));
    const auto& psis = data->values;
    const auto& icls_of = data->class_of;
    const auto& nc = sub.group->classes();
    bool all_linear = true;
    bool some_linear = false;
    for (std::size_t s = 0; s < psis.size(); ++s) {
      std::uint64_t acc = 0;
      for (Elem n : N.elements()) {
        const std::size_t icls = icls_of[n];
        const Elem ninv = G->inv(n);
        const std::size_t ncls = nc.class_of[sub.local[ninv]];
        acc = F.add(acc, F.mul(psis[s][icls], muvals[j][ncls]));
      }
      acc = F.mul(acc, inv_order);
      if (acc == 0) continue;
      const bool linear = psis[s][0] == 1;
      all_linear = all_linear && linear;
      some_linear = some_linear || linear;
    }
    if (p == Property::Unramified && !all_linear) return false;
    if (p == Property::PseudoUnramified && !some_linear) return false;
  }
  return true;
}

std::set<std::string> fast_path_flags(const GroupContext& ctx, const Subgroup& N) {
  require_abelian_normal(N);
  std::set<std::string> flags;
  const GroupPtr& G = ctx.group();
  const std::size_t index = G->order() / N.order();
  {
    const QuotientGroup Q = quotient(G, N);
    for (Elem x = 0; x < Q.group->order(); ++x) {
      if (Q.group->element_order(x) == index) {
        flags.insert(tags::kUnramifiedSufficient);
        break;
      }
    }
  }
  if (!G->is_abelian() && N.is_subset_of(ctx.centre())) flags.insert(tags::kUnramifiedImpossible);
  const bool strictly_contains_derived = ctx.derived().is_subset_of(N) && ctx.derived().order() < N.order();
  if (ctx.nilpotent() && !G->is_abelian() && !strictly_contains_derived) flags.insert(tags::kSkip);
  const Subgroup NG = commutator(N, whole_group(G));
  if (!(NG == N) && !(NG == ctx.derived())) flags.insert(tags::kCommutatorNecessary);
  return flags;
}

// ---------------------------------------------------------------- totally

namespace {

using Chain = std::vector<CertificateLevel>;

struct TotalSearch {
  Property property;
  std::map<std::string, std::optional<Chain>> memo;
  std::set<std::string> prunes;
  std::size_t nodes = 0;
  std::size_t max_depth = 0;
  std::optional<Counterexample> counter;

  std::optional<Chain> solve(const std::shared_ptr<GroupContext>& ctx, std::size_t depth, bool top) {
    ++nodes;
    if (depth > max_depth) throw InternalError("decision recursion exceeded its depth bound");
    const GroupPtr& G = ctx->group();
    const std::string key = G->table_key();
    if (auto it = memo.find(key); it != memo.end()) {
      prunes.insert(tags::kMemo);
      return it->second;
    }
    std::optional<Chain> result;
    if (G->order() == 1) {
      result = Chain{};
    } else if (G->is_abelian()) {
      const Subgroup all = whole_group(G);
      CertificateLevel lvl{G->order(), all.elements(), {tags::kAbelian}, {}};
      if (property == Property::PseudoUnramified) lvl.choices = is_pseudo_unramified_over(*ctx, all).choices;
      result = Chain{lvl};
    } else {
      std::vector<Subgroup> candidates;
      const bool nilpotent_rule = property == Property::Unramified && ctx->nilpotent();
      if (nilpotent_rule) {
        prunes.insert(tags::kNilpotentMaximal);
        for (auto& M : maximal_abelian_normal_subgroups(G)) {
          if (ctx->derived().is_subset_of(M) && ctx->derived().order() < M.order()) candidates.push_back(std::move(M));
        }
      } else {
        candidates = abelian_normal_subgroups(G);
      }
      for (const auto& N : candidates) {
        OverResult r;
        std::vector<std::string> level_tags;
        if (property == Property::Unramified) {
          const auto flags = fast_path_flags(*ctx, N);
          if (flags.count(tags::kUnramifiedImpossible) || flags.count(tags::kSkip) ||
              flags.count(tags::kCommutatorNecessary)) {
            for (const auto& f : flags) {
              if (f != tags::kUnramifiedSufficient) prunes.insert(f);
            }
            continue;
          }
          if (flags.count(tags::kUnramifiedSufficient)) {
            prunes.insert(tags::kUnramifiedSufficient);
            level_tags.push_back(tags::kUnramifiedSufficient);
            r.holds = true;
          } else {
            r = is_unramified_over(*ctx, N);
          }
        } else {
          r = is_pseudo_unramified_over(*ctx, N);
        }
        if (!r.holds) {
          if (top && !counter) {
            counter = Counterexample{N.elements(), r.violating_character, r.orphan_linear, ""};
          }
          continue;
        }
        if (nilpotent_rule) level_tags.push_back(tags::kNilpotentMaximal);
        const QuotientGroup Q = quotient(G, N);
        auto qctx = std::make_shared<GroupContext>(Q.group, std::make_shared<const CharacterTable>(quotient_table(ctx->table(), Q)));
        auto sub = solve(qctx, depth + 1, false);
        if (sub) {
          Chain chain{CertificateLevel{G->order(), N.elements(), level_tags, r.choices}};
          chain.insert(chain.end(), sub->begin(), sub->end());
          result = std::move(chain);
          break;
        }
      }
    }
    memo[key] = result;
    return result;
  }
};

}  // namespace

DecisionCertificate decide_totally(const GroupPtr& G, Property p) {
  TotalSearch search{p, {}, {}, 0, depth_bound(G->order()), std::nullopt};
  auto ctx = std::make_shared<GroupContext>(G);
  auto chain = search.solve(ctx, 0, true);
  DecisionCertificate cert;
  cert.property = p;
  cert.verdict = chain.has_value();
  if (chain) cert.chain = std::move(*chain);
  cert.prunes_applied.assign(search.prunes.begin(), search.prunes.end());
  cert.nodes_explored = search.nodes;
  if (!cert.verdict) {
    cert.counterexample = search.counter;
    if (!cert.counterexample && p == Property::Unramified) {
      // candidates were all pruned: exhibit a failing subgroup explicitly
      for (const auto& N : abelian_normal_subgroups(G)) {
        const OverResult r = is_unramified_over(*ctx, N);
        if (!r.holds) {
          cert.counterexample = Counterexample{N.elements(), r.violating_character, std::nullopt,
                                               "pruned candidate, verified by the full check"};
          break;
        }
      }
    }
    if (cert.counterexample && cert.counterexample->note.empty()) {
      cert.counterexample->note = "fails at the top level";
    }
    if (!cert.counterexample) {
      cert.counterexample = Counterexample{{}, std::nullopt, std::nullopt, "every admissible subgroup fails in a quotient"};
    }
  }
  return cert;
}

DecisionCertificate is_totally_unramified(const GroupPtr& G) { return decide_totally(G, Property::Unramified); }
DecisionCertificate is_totally_pseudo_unramified(const GroupPtr& G) {
  return decide_totally(G, Property::PseudoUnramified);
}

bool replay_certificate(const GroupPtr& G, const DecisionCertificate& cert) {
  if (!cert.verdict) throw InputError("only positive certificates can be replayed");
  auto ctx = std::make_shared<GroupContext>(G);
  for (const auto& lvl : cert.chain) {
    const GroupPtr& H = ctx->group();
    if (H->order() != lvl.group_order) return false;
    for (Elem e : lvl.subgroup) {
      if (e >= H->order()) return false;
    }
    const Subgroup N(H, lvl.subgroup);
    if (N.is_trivial() || !is_abelian(N) || !is_normal(N)) return false;
    if (!check_over(*ctx, N, cert.property).holds) return false;
    const QuotientGroup Q = quotient(H, N);
    ctx = std::make_shared<GroupContext>(Q.group, std::make_shared<const CharacterTable>(quotient_table(ctx->table(), Q)));
  }
  return ctx->group()->order() == 1;
}

// ---------------------------------------------------------------- completeness

ClassFunction qpi_character(const ClassFunction& chi_pi, const ClassFunction& chi_B, const ClassFunction& chi_J,
                            const QuotientGroup& Q) {
  const GroupPtr& G = Q.parent;
  if (chi_pi.group.get() != G.get() || chi_B.group.get() != G.get() || chi_J.group.get() != G.get()) {
    throw InputError("characters must live on the parent of the quotient");
  }
  if (!(chi_B + chi_J == chi_pi)) throw InputError("chi_pi must equal chi_B + chi_J");
  const ClassFunction f = chi_pi + tensor(chi_B, chi_B) + Cyclotomic(2) * tensor(chi_B, chi_J) +
                          tensor(tensor(chi_B, chi_pi), chi_B);
  // character of the N-fixed part: g -> (1/|N|) sum_n f(gn)
  const auto& gc = G->classes();
  ClassFunction fixed = zero_function(G);
  for (std::size_t c = 0; c < gc.count(); ++c) {
    const Elem g = gc.representatives[c];
    Cyclotomic acc;
    for (Elem n : Q.kernel.elements()) acc += f.values[gc.class_of[G->mul(g, n)]];
    acc *= Rational(1, static_cast<long>(Q.kernel.order()));
    fixed.values[c] = acc;
  }
  return deflate(fixed, Q);
}

namespace {

using Support = std::vector<std::size_t>;

struct LevelInfo {
  std::shared_ptr<GroupContext> ctx;
  std::vector<Subgroup> candidates;
};

struct CompletenessSearch {
  std::map<std::pair<std::string, Support>, std::optional<std::vector<CompletenessLevel>>> memo;
  std::size_t nodes = 0;
  std::size_t max_nodes = 200000;
  bool conjugation_closed = false;

  // characters of G trivial on N, mapped to indices of the quotient table
  static std::vector<std::pair<std::size_t, std::size_t>> deflation_map(const GroupContext& ctx,
                                                                         const RestrictionData& rd,
                                                                         const QuotientGroup& Q,
                                                                         const CharacterTable& tQ) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    const auto& T = ctx.table();
    for (std::size_t i = 0; i < T.size(); ++i) {
      const long deg = T[i].degree().as_integer()->get_si();
      if (rd.multiplicity[i][0] == deg) out.emplace_back(i, tQ.index_of(deflate(T[i], Q)));
    }
    return out;
  }

  // support of [pi + B^2 + 2BJ + B pi B] trivial on N, with pi = B + S and J = S
  static std::vector<bool> q_support(const GroupContext& ctx, const std::vector<bool>& trivial_on_N, const Support& B,
                                     const Support& S) {
    const auto& F = ctx.field();
    const auto& vals = ctx.modular();
    const auto& gc = ctx.group()->classes();
    const auto& inv = ctx.table().inverse_class();
    const std::size_t k = gc.count();
    const std::uint64_t inv_order = F.inv(ctx.group()->order() % F.q);
    std::vector<bool> in(vals.size(), false);
    std::size_t remaining = 0;
    for (std::size_t t = 0; t < vals.size(); ++t) {
      if (trivial_on_N[t]) ++remaining;
    }
    for (auto s : S) {
      if (trivial_on_N[s] && !in[s]) {
        in[s] = true;
        --remaining;
      }
    }
    auto absorb = [&](const std::vector<std::uint64_t>& f) {
      for (std::size_t t = 0; t < vals.size() && remaining > 0; ++t) {
        if (!trivial_on_N[t] || in[t]) continue;
        std::uint64_t acc = 0;
        for (std::size_t c = 0; c < k; ++c) acc = F.add(acc, F.mul(F.mul(gc.sizes[c] % F.q, f[c]), vals[t][inv[c]]));
        if (F.mul(acc, inv_order) != 0) {
          in[t] = true;
          --remaining;
        }
      }
    };
    Support BS = S;
    for (auto b : B) {
      if (std::find(BS.begin(), BS.end(), b) == BS.end()) BS.push_back(b);
    }
    std::vector<std::uint64_t> prod(k), prod3(k);
    for (auto b1 : B) {
      for (auto x : BS) {
        if (remaining == 0) break;
        for (std::size_t c = 0; c < k; ++c) prod[c] = F.mul(vals[b1][c], vals[x][c]);
        absorb(prod);
        for (auto b2 : B) {
          if (remaining == 0) break;
          for (std::size_t c = 0; c < k; ++c) prod3[c] = F.mul(prod[c], vals[b2][c]);
          absorb(prod3);
        }
      }
    }
    return in;
  }

  static bool closed_under_conjugation(const GroupContext& ctx, const Support& B) {
    const auto& T = ctx.table();
    for (auto b : B) {
      if (!std::binary_search(B.begin(), B.end(), T.index_of(T[b].conjugate()))) return false;
    }
    return true;
  }

  std::optional<std::vector<CompletenessLevel>> solve(const std::shared_ptr<GroupContext>& ctx, const Support& S,
                                                      std::size_t depth) {
    if (++nodes > max_nodes) throw ResourceError("completeness search exceeded its node budget");
    const GroupPtr& G = ctx->group();
    const auto key = std::make_pair(G->table_key(), S);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::optional<std::vector<CompletenessLevel>> result;
    for (const auto& N : abelian_normal_subgroups(G)) {
      const RestrictionData rd = restriction_data(*ctx, N);
      const std::size_t kn = rd.table_N->size();
      // orbits of nontrivial linear characters and their admissible constituents
      std::map<std::size_t, std::vector<std::size_t>> orbit_candidates;
      std::vector<int> orbit_of(kn, -1);
      for (std::size_t i = 0; i < rd.multiplicity.size(); ++i) {
        const auto& row = rd.multiplicity[i];
        std::size_t first = kn;
        for (std::size_t j = 0; j < kn; ++j) {
          if (row[j] > 0 && first == kn) first = j;
        }
        if (first == 0) continue;  // lies over the trivial character
        for (std::size_t j = 0; j < kn; ++j) {
          if (row[j] > 0) orbit_of[j] = static_cast<int>(first);
        }
        orbit_candidates[first];
        if (row_multiplicity_free(row) && std::binary_search(S.begin(), S.end(), i)) {
          orbit_candidates[first].push_back(i);
        }
      }
      bool feasible = true;
      for (std::size_t j = 1; j < kn && feasible; ++j) feasible = orbit_of[j] >= 0;
      std::vector<std::vector<std::size_t>> options;
      for (auto& [rep, cands] : orbit_candidates) {
        if (cands.empty()) feasible = false;
        options.push_back(cands);
      }
      if (!feasible) continue;

      std::vector<bool> trivial_on_N(rd.multiplicity.size());
      for (std::size_t i = 0; i < rd.multiplicity.size(); ++i) trivial_on_N[i] = row_trivial_multiple(rd.multiplicity[i]);

      CompletenessLevel base;
      base.group = G;
      base.table = ctx->table_ptr();
      base.subgroup = N.elements();
      base.support = S;
      base.j_part = S;

      if (N.is_whole()) {
        // abelian: every nontrivial linear character is its own orbit
        base.b_part.clear();
        for (auto& o : options) base.b_part.push_back(o.front());
        std::sort(base.b_part.begin(), base.b_part.end());
        if (conjugation_closed && !closed_under_conjugation(*ctx, base.b_part)) continue;
        result = std::vector<CompletenessLevel>{base};
        break;
      }

      auto Q = std::make_shared<const QuotientGroup>(quotient(G, N));
      auto qctx =
          std::make_shared<GroupContext>(Q->group, std::make_shared<const CharacterTable>(quotient_table(ctx->table(), *Q)));
      const auto dmap = deflation_map(*ctx, rd, *Q, qctx->table());
      std::size_t n_trivial = dmap.size();

      std::vector<std::vector<bool>> failed;
      std::vector<std::size_t> pick(options.size(), 0);
      while (true) {
        Support B;
        for (std::size_t o = 0; o < options.size(); ++o) B.push_back(options[o][pick[o]]);
        std::sort(B.begin(), B.end());
        if (conjugation_closed && !closed_under_conjugation(*ctx, B)) {
          std::size_t o = 0;
          while (o < options.size() && ++pick[o] == options[o].size()) {
            pick[o] = 0;
            ++o;
          }
          if (o == options.size()) break;
          continue;
        }
        const auto in = q_support(*ctx, trivial_on_N, B, S);
        std::size_t count = 0;
        for (std::size_t t = 0; t < in.size(); ++t) count += in[t] ? 1 : 0;
        bool dominated = false;
        for (const auto& f : failed) {
          bool subset = true;
          for (std::size_t t = 0; t < in.size() && subset; ++t) subset = !in[t] || f[t];
          if (subset) {
            dominated = true;
            break;
          }
        }
        if (!dominated) {
          Support next;
          for (const auto& [gi, qi] : dmap) {
            if (in[gi]) next.push_back(qi);
          }
          std::sort(next.begin(), next.end());
          auto sub = solve(qctx, next, depth + 1);
          if (sub) {
            CompletenessLevel lvl = base;
            lvl.b_part = B;
            lvl.next_support = next;
            lvl.quotient = Q;
            std::vector<CompletenessLevel> levels{lvl};
            levels.insert(levels.end(), sub->begin(), sub->end());
            result = std::move(levels);
            break;
          }
          failed.push_back(in);
          if (count == n_trivial) break;  // no other choice can give more
        }
        std::size_t o = 0;
        while (o < options.size() && ++pick[o] == options[o].size()) {
          pick[o] = 0;
          ++o;
        }
        if (o == options.size()) break;
      }
      if (result) break;
    }
    memo[key] = result;
    return result;
  }
};

Support support_of(const std::vector<long>& mult) {
  Support s;
  for (std::size_t i = 0; i < mult.size(); ++i) {
    if (mult[i] > 0) s.push_back(i);
  }
  return s;
}

CompletenessReport run_completeness(const std::shared_ptr<GroupContext>& ctx, const Support& S,
                                    const CompletenessOptions& opts = {}) {
  CompletenessReport rep;
  if (ctx->group()->order() == 1) {
    rep.verdict = true;
    rep.reason = "trivial group";
    return rep;
  }
  CompletenessSearch search;
  search.max_nodes = opts.max_nodes;
  search.conjugation_closed = opts.conjugation_closed;
  auto levels = search.solve(ctx, S, 0);
  rep.nodes_explored = search.nodes;
  rep.verdict = levels.has_value();
  if (levels) {
    rep.levels = std::move(*levels);
    rep.reason = "accepting chain found";
  } else {
    rep.reason = "no abelian normal subgroup admits a complete split";
  }
  return rep;
}

}  // namespace

CompletenessReport is_complete(const GroupPtr& G, const ClassFunction& chi_pi, const CompletenessOptions& opts) {
  auto ctx = std::make_shared<GroupContext>(G);
  const auto mult = decompose(chi_pi, ctx->table());
  return run_completeness(ctx, support_of(mult), opts);
}

CompletenessReport is_complete(const RepresentationMatrices& pi, const CompletenessOptions& opts) {
  return is_complete(pi.group(), pi.character(), opts);
}

CompletenessReport is_complete_regular(const GroupPtr& G) {
  auto ctx = std::make_shared<GroupContext>(G);
  Support all(ctx->table().size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return run_completeness(ctx, all);
}

bool replay_completeness(const CompletenessReport& report) {
  if (!report.verdict) return false;
  for (std::size_t l = 0; l < report.levels.size(); ++l) {
    const auto& lvl = report.levels[l];
    const Subgroup N(lvl.group, lvl.subgroup);
    if (N.is_trivial() || !is_abelian(N) || !is_normal(N)) return false;
    const GroupContext ctx(lvl.group, lvl.table);
    const RestrictionData rd = restriction_data(ctx, N);
    std::vector<long> total(rd.table_N->size(), 0);
    for (auto b : lvl.b_part) {
      if (!std::binary_search(lvl.support.begin(), lvl.support.end(), b)) return false;
      for (std::size_t j = 0; j < total.size(); ++j) total[j] += rd.multiplicity[b][j];
    }
    if (total[0] != 0) return false;
    for (std::size_t j = 1; j < total.size(); ++j) {
      if (total[j] != 1) return false;
    }
    const bool last = l + 1 == report.levels.size();
    if (last != N.is_whole()) return false;
    if (!last) {
      const auto& nxt = report.levels[l + 1];
      if (nxt.support != lvl.next_support) return false;
      if (nxt.group.get() != lvl.quotient->group.get()) return false;
      std::vector<bool> triv(rd.multiplicity.size());
      for (std::size_t i = 0; i < triv.size(); ++i) triv[i] = row_trivial_multiple(rd.multiplicity[i]);
      const auto in = CompletenessSearch::q_support(ctx, triv, lvl.b_part, lvl.support);
      Support expect;
      for (const auto& [gi, qi] : CompletenessSearch::deflation_map(ctx, rd, *lvl.quotient, *nxt.table)) {
        if (in[gi]) expect.push_back(qi);
      }
      std::sort(expect.begin(), expect.end());
      if (expect != lvl.next_support) return false;
    }
  }
  return true;
}

}  // namespace ncinv
