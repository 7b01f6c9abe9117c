#include "ncinv/freegroup.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>
#include <numeric>
#include <sstream>

#include "ncinv/errors.hpp"

namespace ncinv {

FreeWord reduce(const std::vector<Letter>& letters) { return FreeWord(letters); }

FreeWord::FreeWord(std::vector<Letter> letters) {
  for (const auto& l : letters) {
    if (l.exp != 1 && l.exp != -1) throw InputError("letters must have exponent +1 or -1");
    if (!letters_.empty() && letters_.back().gen == l.gen && letters_.back().exp == -l.exp) {
      letters_.pop_back();
    } else {
      letters_.push_back(l);
    }
  }
}

FreeWord FreeWord::inverse() const {
  std::vector<Letter> inv(letters_.rbegin(), letters_.rend());
  for (auto& l : inv) l.exp = -l.exp;
  FreeWord w;
  w.letters_ = std::move(inv);
  return w;
}

FreeWord operator*(const FreeWord& a, const FreeWord& b) {
  std::vector<Letter> all = a.letters_;
  all.insert(all.end(), b.letters_.begin(), b.letters_.end());
  return FreeWord(std::move(all));
}

std::size_t letter_rank(const Letter& l, std::size_t n) { return l.exp > 0 ? l.gen : n + l.gen; }

bool operator<(const FreeWord& a, const FreeWord& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  std::size_t n = 0;
  for (const auto& l : a.letters_) n = std::max(n, l.gen + 1);
  for (const auto& l : b.letters_) n = std::max(n, l.gen + 1);
  for (std::size_t i = 0; i < a.length(); ++i) {
    const auto ra = letter_rank(a.letters_[i], n), rb = letter_rank(b.letters_[i], n);
    if (ra != rb) return ra < rb;
  }
  return false;
}

std::string FreeWord::str(const std::vector<std::string>& names) const {
  if (letters_.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) os << ' ';
    const auto& l = letters_[i];
    if (l.gen < names.size()) {
      os << names[l.gen];
    } else {
      os << 'x' << l.gen + 1;
    }
    if (l.exp < 0) os << "^-1";
  }
  return os.str();
}

FreeWord FreeWord::parse(const std::string& text, const std::vector<std::string>& names) {
  std::istringstream is(text);
  std::string tok;
  std::vector<Letter> letters;
  while (is >> tok) {
    if (tok == "1") continue;
    int exp = 1;
    if (tok.size() > 3 && tok.compare(tok.size() - 3, 3, "^-1") == 0) {
      exp = -1;
      tok.resize(tok.size() - 3);
    }
    auto it = std::find(names.begin(), names.end(), tok);
    if (it == names.end()) throw InputError("unknown generator name \"" + tok + "\"");
    letters.push_back(Letter{static_cast<std::size_t>(it - names.begin()), exp});
  }
  return FreeWord(std::move(letters));
}

SchreierResult schreier_generators(std::size_t n, std::size_t cosets,
                                   const std::function<std::size_t(std::size_t, std::size_t)>& step) {
  SchreierResult res;
  res.cosets = cosets;
  // inverse steps
  std::vector<std::vector<std::size_t>> fwd(cosets, std::vector<std::size_t>(n));
  std::vector<std::vector<std::size_t>> bwd(cosets, std::vector<std::size_t>(n, SIZE_MAX));
  for (std::size_t c = 0; c < cosets; ++c) {
    for (std::size_t g = 0; g < n; ++g) {
      const std::size_t d = step(c, g);
      if (d >= cosets) throw InternalError("coset action out of range");
      fwd[c][g] = d;
      bwd[d][g] = c;
    }
  }
  std::vector<std::size_t> order;
  std::vector<FreeWord> rep(cosets);
  std::vector<bool> seen(cosets, false);
  seen[0] = true;
  order.push_back(0);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const std::size_t c = order[i];
    for (std::size_t r = 0; r < 2 * n; ++r) {
      const bool positive = r < n;
      const std::size_t g = positive ? r : r - n;
      const std::size_t d = positive ? fwd[c][g] : bwd[c][g];
      if (d == SIZE_MAX || seen[d]) continue;
      seen[d] = true;
      rep[d] = rep[c] * FreeWord::generator(g, positive ? 1 : -1);
      order.push_back(d);
    }
  }
  if (order.size() != cosets) throw InputError("the action is not transitive");
  for (auto c : order) res.transversal.push_back(rep[c]);
  for (auto c : order) {
    for (std::size_t g = 0; g < n; ++g) {
      FreeWord w = rep[c] * FreeWord::generator(g) * rep[fwd[c][g]].inverse();
      if (!w.empty()) res.generators.push_back(std::move(w));
    }
  }
  return res;
}

namespace {

struct AbelianCosets {
  std::vector<std::vector<std::int64_t>> elements;
  std::map<std::vector<std::int64_t>, std::size_t> index;
};

std::vector<std::int64_t> normalise(std::vector<std::int64_t> v, const std::vector<std::uint64_t>& inv) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto d = static_cast<std::int64_t>(inv[i]);
    v[i] = ((v[i] % d) + d) % d;
  }
  return v;
}

void validate(std::size_t n, const AbelianTarget& t) {
  if (t.images.size() != n) throw InputError("need one image per free generator");
  for (auto d : t.invariants) {
    if (d == 0) throw InputError("invariant factors must be positive");
  }
  for (const auto& v : t.images) {
    if (v.size() != t.invariants.size()) throw InputError("image vector has the wrong length");
  }
}

AbelianCosets image_subgroup(std::size_t n, const AbelianTarget& t) {
  AbelianCosets ac;
  std::vector<std::int64_t> zero(t.invariants.size(), 0);
  ac.elements.push_back(zero);
  ac.index[zero] = 0;
  for (std::size_t i = 0; i < ac.elements.size(); ++i) {
    for (std::size_t g = 0; g < n; ++g) {
      std::vector<std::int64_t> v = ac.elements[i];
      for (std::size_t k = 0; k < v.size(); ++k) v[k] += t.images[g][k];
      v = normalise(std::move(v), t.invariants);
      if (ac.index.emplace(v, ac.elements.size()).second) ac.elements.push_back(std::move(v));
    }
  }
  return ac;
}

SchreierResult kernel_on(std::size_t n, const AbelianTarget& t, const AbelianCosets& ac) {
  return schreier_generators(n, ac.elements.size(), [&](std::size_t c, std::size_t g) {
    std::vector<std::int64_t> v = ac.elements[c];
    for (std::size_t k = 0; k < v.size(); ++k) v[k] += t.images[g][k];
    return ac.index.at(normalise(std::move(v), t.invariants));
  });
}

}  // namespace

SchreierResult kernel_generators(std::size_t n, const AbelianTarget& target) {
  validate(n, target);
  const auto ac = image_subgroup(n, target);
  std::uint64_t order = 1;
  for (auto d : target.invariants) order *= d;
  if (ac.elements.size() != order) {
    std::ostringstream os;
    os << "the map onto the abelian group is not surjective: the image has order " << ac.elements.size() << " of "
       << order << " (elements:";
    for (const auto& e : ac.elements) {
      os << " (";
      for (std::size_t k = 0; k < e.size(); ++k) os << (k ? "," : "") << e[k];
      os << ")";
    }
    os << ")";
    throw InputError(os.str());
  }
  return kernel_on(n, target, ac);
}

SchreierResult kernel_generators_on_image(std::size_t n, const AbelianTarget& target) {
  validate(n, target);
  return kernel_on(n, target, image_subgroup(n, target));
}

std::vector<std::int64_t> evaluate(const FreeWord& w, const AbelianTarget& target) {
  std::vector<std::int64_t> v(target.invariants.size(), 0);
  for (const auto& l : w.letters()) {
    for (std::size_t k = 0; k < v.size(); ++k) v[k] += l.exp * target.images[l.gen][k];
  }
  return normalise(std::move(v), target.invariants);
}

// ---------------------------------------------------------------- folding

SubgroupGraph fold(const std::vector<FreeWord>& generators, std::size_t n) {
  // bouquet of loops at the base point
  std::size_t nv = 1;
  std::vector<SubgroupGraph::Edge> edges;
  for (const auto& w : generators) {
    if (w.empty()) continue;
    std::size_t cur = 0;
    const auto& ls = w.letters();
    for (std::size_t i = 0; i < ls.size(); ++i) {
      if (ls[i].gen >= n) throw InputError("word uses a generator beyond the ambient rank");
      const std::size_t next = i + 1 == ls.size() ? 0 : nv++;
      if (ls[i].exp > 0) {
        edges.push_back({cur, ls[i].gen, next});
      } else {
        edges.push_back({next, ls[i].gen, cur});
      }
      cur = next;
    }
  }
  std::vector<std::size_t> parent(nv);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  bool changed = true;
  while (changed) {
    changed = false;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> out, in;
    for (const auto& e : edges) {
      const std::size_t f = find(e.from), t = find(e.to);
      auto [it, fresh] = out.emplace(std::make_pair(f, e.gen), t);
      if (!fresh && find(it->second) != t) {
        parent[std::max(find(it->second), t)] = std::min(find(it->second), t);
        changed = true;
        break;
      }
      auto [jt, fresh2] = in.emplace(std::make_pair(t, e.gen), f);
      if (!fresh2 && find(jt->second) != f) {
        parent[std::max(find(jt->second), f)] = std::min(find(jt->second), f);
        changed = true;
        break;
      }
    }
  }
  // relabel and deduplicate
  std::map<std::size_t, std::size_t> label;
  label[find(0)] = 0;
  for (std::size_t v = 0; v < nv; ++v) label.emplace(find(v), label.size());
  SubgroupGraph g;
  g.n = n;
  g.vertices = label.size();
  g.base = 0;
  std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
  for (const auto& e : edges) {
    const auto key = std::make_tuple(label[find(e.from)], e.gen, label[find(e.to)]);
    if (seen.insert(key).second) g.edges.push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key)});
  }
  // prune hanging vertices other than the base point
  bool pruned = true;
  std::vector<bool> alive(g.vertices, true);
  while (pruned) {
    pruned = false;
    std::vector<std::size_t> degree(g.vertices, 0);
    for (const auto& e : g.edges) {
      ++degree[e.from];
      ++degree[e.to];
    }
    for (std::size_t v = 0; v < g.vertices; ++v) {
      if (v != g.base && alive[v] && degree[v] <= 1) {
        alive[v] = false;
        pruned = true;
      }
    }
    g.edges.erase(std::remove_if(g.edges.begin(), g.edges.end(),
                                 [&](const SubgroupGraph::Edge& e) { return !alive[e.from] || !alive[e.to]; }),
                  g.edges.end());
  }
  std::vector<std::size_t> remap(g.vertices, SIZE_MAX);
  std::size_t count = 0;
  for (std::size_t v = 0; v < g.vertices; ++v) {
    if (alive[v]) remap[v] = count++;
  }
  for (auto& e : g.edges) {
    e.from = remap[e.from];
    e.to = remap[e.to];
  }
  g.vertices = count;
  return g;
}

RankIndex graph_rank_index(const SubgroupGraph& g) {
  RankIndex r;
  r.rank = g.edges.size() + 1 - g.vertices;
  std::vector<std::size_t> outdeg(g.vertices, 0), indeg(g.vertices, 0);
  for (const auto& e : g.edges) {
    ++outdeg[e.from];
    ++indeg[e.to];
  }
  bool complete = g.n > 0;
  for (std::size_t v = 0; v < g.vertices && complete; ++v) complete = outdeg[v] == g.n && indeg[v] == g.n;
  r.index = complete ? g.vertices : kInfiniteIndex;
  return r;
}

bool accepts(const SubgroupGraph& g, const FreeWord& w) {
  std::size_t cur = g.base;
  for (const auto& l : w.letters()) {
    bool moved = false;
    for (const auto& e : g.edges) {
      if (e.gen != l.gen) continue;
      if (l.exp > 0 && e.from == cur) {
        cur = e.to;
        moved = true;
        break;
      }
      if (l.exp < 0 && e.to == cur) {
        cur = e.from;
        moved = true;
        break;
      }
    }
    if (!moved) return false;
  }
  return cur == g.base;
}

bool same_subgroup(const std::vector<FreeWord>& a, const std::vector<FreeWord>& b, std::size_t n) {
  const SubgroupGraph ga = fold(a, n), gb = fold(b, n);
  for (const auto& w : b) {
    if (!accepts(ga, w)) return false;
  }
  for (const auto& w : a) {
    if (!accepts(gb, w)) return false;
  }
  return true;
}

}  // namespace ncinv
