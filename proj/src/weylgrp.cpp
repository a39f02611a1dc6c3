#include "springer/weylgrp.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <limits>
#include <map>
#include <optional>
#include <set>

#include "springer/error.hpp"

namespace springer {

namespace {

std::optional<std::uint64_t> budget_override;

}  // namespace

PermGroup::PermGroup(int degree, std::vector<Perm> generators, const std::vector<int>& base_hint)
    : degree_(degree) {
  if (degree < 1 || degree > 256) throw ArgumentError("permutation degree must be in 1..256");
  for (auto& g : generators) {
    if (static_cast<int>(g.size()) != degree) throw ArgumentError("generator has wrong degree");
    if (!is_identity(g)) gens_.push_back(std::move(g));
  }

  // Initial base: the hint, extended until no generator fixes it pointwise.
  std::vector<int> base;
  for (int b : base_hint) {
    bool moved = false;
    for (const auto& g : gens_) moved = moved || g[b] != b;
    if (moved || true) base.push_back(b);
  }
  auto fixes_base = [&](const Perm& g) {
    for (int b : base)
      if (g[b] != b) return false;
    return true;
  };
  for (const auto& g : gens_)
    if (fixes_base(g))
      for (int x = 0; x < degree_; ++x)
        if (g[x] != x) {
          base.push_back(x);
          break;
        }

  levels_.resize(base.size());
  for (std::size_t l = 0; l < base.size(); ++l) {
    levels_[l].base = base[l];
    for (const auto& g : gens_) {
      bool fixes = true;
      for (std::size_t m = 0; m < l; ++m) fixes = fixes && g[base[m]] == base[m];
      if (fixes) levels_[l].gens.push_back(g);
    }
    compute_orbit(levels_[l]);
  }

  // Incremental Schreier-Sims: verify levels from the bottom up, restarting
  // below whenever a new strong generator appears.
  int i = static_cast<int>(levels_.size()) - 1;
  while (i >= 0) {
    bool restarted = false;
    Level& lv = levels_[i];
    for (std::size_t pi = 0; pi < lv.orbit.size() && !restarted; ++pi) {
      const int p = lv.orbit[pi];
      for (std::size_t si = 0; si < lv.gens.size(); ++si) {
        const Perm& s = lv.gens[si];
        Perm sg = compose(lv.trans_inv[lv.pos[s[p]]], compose(s, lv.trans[pi]));
        auto [h, j] = strip(std::move(sg), i + 1);
        if (is_identity(h)) continue;
        if (j == static_cast<int>(levels_.size())) {
          Level nl;
          for (int x = 0; x < degree_; ++x)
            if (h[x] != x) {
              nl.base = x;
              break;
            }
          levels_.push_back(nl);
        }
        for (int m = i + 1; m <= j; ++m) {
          levels_[m].gens.push_back(h);
          compute_orbit(levels_[m]);
        }
        i = j;
        restarted = true;
        break;
      }
    }
    if (!restarted) --i;
  }

  order_ = 1;
  for (const auto& lv : levels_) order_ *= lv.orbit.size();
}

void PermGroup::compute_orbit(Level& lv) const {
  lv.orbit.assign(1, lv.base);
  lv.pos.assign(degree_, -1);
  lv.pos[lv.base] = 0;
  lv.trans.assign(1, identity_perm(degree_));
  for (std::size_t k = 0; k < lv.orbit.size(); ++k) {
    const int q = lv.orbit[k];
    for (const auto& s : lv.gens) {
      const int r = s[q];
      if (lv.pos[r] >= 0) continue;
      lv.pos[r] = static_cast<int>(lv.orbit.size());
      lv.orbit.push_back(r);
      lv.trans.push_back(compose(s, lv.trans[k]));
    }
  }
  lv.trans_inv.clear();
  for (const auto& t : lv.trans) lv.trans_inv.push_back(inverse(t));
}

std::pair<Perm, int> PermGroup::strip(Perm h, int from) const {
  for (int l = from; l < static_cast<int>(levels_.size()); ++l) {
    const int p = h[levels_[l].base];
    const int d = levels_[l].pos[p];
    if (d < 0) return {std::move(h), l};
    h = compose(levels_[l].trans_inv[d], h);
  }
  return {std::move(h), static_cast<int>(levels_.size())};
}

std::vector<int> PermGroup::base() const {
  std::vector<int> b;
  for (const auto& lv : levels_) b.push_back(lv.base);
  return b;
}

std::vector<int> PermGroup::transversal_sizes() const {
  std::vector<int> s;
  for (const auto& lv : levels_) s.push_back(static_cast<int>(lv.orbit.size()));
  return s;
}

bool PermGroup::contains(const Perm& p) const {
  if (static_cast<int>(p.size()) != degree_) return false;
  auto [h, j] = strip(p, 0);
  return is_identity(h);
}

Perm PermGroup::element(std::uint64_t index) const {
  if (index >= order_) throw ArgumentError("element index out of range");
  Cursor c;
  set_cursor(c, index);
  return c.perm();
}

void PermGroup::set_cursor(Cursor& c, std::uint64_t index) const {
  const int k = static_cast<int>(levels_.size());
  c.degree_ = degree_;
  c.index_ = index;
  c.ptrs_.resize(k);
  for (int l = k - 1; l >= 0; --l) {
    const std::uint64_t r = levels_[l].orbit.size();
    c.ptrs_[l] = levels_[l].trans[index % r].data();
    index /= r;
  }
}

Perm PermGroup::Cursor::perm() const {
  Perm p(degree_);
  for (int x = 0; x < degree_; ++x) p[x] = static_cast<Point>(apply(x));
  return p;
}

std::uint64_t PermGroup::index_of(const Perm& p) const {
  std::vector<int> images;
  for (const auto& lv : levels_) images.push_back(p[lv.base]);
  const std::uint64_t idx = index_from_base_images(images);
  if (idx == std::numeric_limits<std::uint64_t>::max() || element(idx) != p)
    throw ArgumentError("permutation is not in the group");
  return idx;
}

std::uint64_t PermGroup::index_from_base_images(std::vector<int>& y) const {
  const int k = static_cast<int>(levels_.size());
  std::uint64_t idx = 0;
  for (int l = 0; l < k; ++l) {
    const Level& lv = levels_[l];
    const int d = lv.pos[y[l]];
    if (d < 0) return std::numeric_limits<std::uint64_t>::max();
    idx = idx * lv.orbit.size() + static_cast<std::uint64_t>(d);
    const Point* inv = lv.trans_inv[d].data();
    for (int m = l + 1; m < k; ++m) y[m] = inv[y[m]];
  }
  return idx;
}

std::uint64_t enumeration_budget() {
  if (budget_override) return *budget_override;
  if (const char* env = std::getenv("SPRINGER_ENUM_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 4000000;
}

void set_enumeration_budget(std::uint64_t budget) {
  if (budget == 0) throw ArgumentError("enumeration budget must be positive");
  budget_override = budget;
}

void require_within_budget(std::uint64_t order, const std::string& what) {
  if (order > enumeration_budget())
    throw BudgetExceededError(what + " of order " + std::to_string(order) +
                              " is too large for brute force (budget " +
                              std::to_string(enumeration_budget()) + ")");
}

RawClassTable conjugacy_classes_bruteforce(const PermGroup& g) {
  require_within_budget(g.order(), "group");
  const std::uint64_t n = g.order();
  const std::vector<int> base = g.base();
  const int k = static_cast<int>(base.size());
  const auto& gens = g.generators();

  // pre[s][j] = s^{-1}(b_j); conjugate y_j = s(x(s^{-1}(b_j))).
  std::vector<std::vector<int>> pre(gens.size(), std::vector<int>(k));
  for (std::size_t s = 0; s < gens.size(); ++s) {
    const Perm inv = inverse(gens[s]);
    for (int j = 0; j < k; ++j) pre[s][j] = inv[base[j]];
  }

  std::vector<bool> seen(n, false);
  std::vector<std::uint64_t> queue;
  std::vector<int> y(k);
  PermGroup::Cursor cur;
  RawClassTable table;
  table.group_order = n;
  std::vector<std::uint64_t> min_index;
  for (std::uint64_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    seen[start] = true;
    queue.assign(1, start);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      g.set_cursor(cur, queue[qi]);
      for (std::size_t s = 0; s < gens.size(); ++s) {
        for (int j = 0; j < k; ++j) y[j] = gens[s][cur.apply(pre[s][j])];
        const std::uint64_t t = g.index_from_base_images(y);
        if (!seen[t]) {
          seen[t] = true;
          queue.push_back(t);
        }
      }
    }
    RawClass c;
    c.representative = g.element(start);
    c.size = queue.size();
    c.element_order = perm_order(c.representative);
    table.classes.push_back(std::move(c));
    min_index.push_back(start);
  }
  std::vector<std::size_t> idx(table.classes.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    const auto& x = table.classes[a];
    const auto& z = table.classes[b];
    if (x.element_order != z.element_order) return x.element_order < z.element_order;
    if (x.size != z.size) return x.size < z.size;
    return min_index[a] < min_index[b];
  });
  RawClassTable sorted;
  sorted.group_order = n;
  for (std::size_t i : idx) sorted.classes.push_back(std::move(table.classes[i]));
  return sorted;
}

PermGroup group_from_type(const RootSystem& rs) {
  std::vector<int> base(rs.rank());
  for (int i = 0; i < rs.rank(); ++i) base[i] = i;
  const int n = std::max(1, rs.num_roots());
  return PermGroup(n, rs.reflections(), base);
}

PermGroup parabolic_subgroup(const RootSystem& rs, const std::vector<int>& J) {
  std::vector<Perm> gens;
  for (int j : J) gens.push_back(rs.reflection(j));
  std::vector<int> base(rs.rank());
  for (int i = 0; i < rs.rank(); ++i) base[i] = i;
  return PermGroup(std::max(1, rs.num_roots()), gens, base);
}

Perm longest_element(const RootSystem& rs, const std::vector<int>& J) {
  Perm w = identity_perm(rs.num_roots());
  for (;;) {
    bool grew = false;
    for (int j : J)
      if (rs.is_positive(w[j])) {
        w = compose(w, rs.reflection(j));
        grew = true;
      }
    if (!grew) return w;
  }
}

ParabolicNormalizer parabolic_normalizer(const RootSystem& rs, const std::vector<int>& J0) {
  std::vector<int> J = J0;
  std::sort(J.begin(), J.end());
  const int n = rs.num_roots();
  // path[K] maps J onto K (as sets of simple roots).
  std::map<std::vector<int>, Perm> path;
  std::deque<std::vector<int>> queue;
  path.emplace(J, identity_perm(n));
  queue.push_back(J);
  std::vector<Perm> loops;
  std::set<Perm> loop_set;
  while (!queue.empty()) {
    const std::vector<int> K = queue.front();
    queue.pop_front();
    const Perm wK = longest_element(rs, K);
    for (int s = 0; s < rs.rank(); ++s) {
      if (std::find(K.begin(), K.end(), s) != K.end()) continue;
      std::vector<int> Ks = K;
      Ks.push_back(s);
      std::sort(Ks.begin(), Ks.end());
      const Perm nu = compose(longest_element(rs, Ks), wK);
      std::vector<int> K2;
      for (int k : K) {
        const int img = nu[k];
        if (img >= rs.rank()) throw ConsistencyError("groupoid arrow does not map simple roots to simple roots");
        K2.push_back(img);
      }
      std::sort(K2.begin(), K2.end());
      const Perm step = compose(nu, path.at(K));
      auto it = path.find(K2);
      if (it == path.end()) {
        path.emplace(K2, step);
        queue.push_back(K2);
      } else {
        Perm loop = compose(inverse(it->second), step);
        if (!is_identity(loop) && loop_set.insert(loop).second) loops.push_back(std::move(loop));
      }
    }
  }
  ParabolicNormalizer out;
  out.J = J;
  for (const auto& [K, p] : path) out.conjugates.push_back(K);
  std::vector<int> base(rs.rank());
  for (int i = 0; i < rs.rank(); ++i) base[i] = i;
  out.complement = PermGroup(std::max(1, n), loops, base);
  return out;
}

RawClassTable normalizer_quotient_classes(const RootSystem& rs, const std::vector<int>& J) {
  return conjugacy_classes_bruteforce(parabolic_normalizer(rs, J).complement);
}

std::uint64_t normalizer_order_bruteforce(const RootSystem& rs, const PermGroup& w,
                                          const std::vector<int>& J) {
  require_within_budget(w.order(), "Weyl group");
  std::vector<bool> inJ(rs.num_roots(), false);
  for (int r : rs.subsystem_roots(J)) inJ[r] = true;
  std::uint64_t count = 0;
  w.for_each([&](const PermGroup::Cursor& c) {
    for (int j : J)
      if (!inJ[c.apply(j)]) return;
    ++count;
  });
  return count;
}

bool parabolics_conjugate_bruteforce(const RootSystem& rs, const PermGroup& w,
                                     const std::vector<int>& J, const std::vector<int>& K) {
  require_within_budget(w.order(), "Weyl group");
  if (J.size() != K.size()) return false;
  std::vector<bool> inK(rs.num_roots(), false);
  for (int r : rs.subsystem_roots(K)) inK[r] = true;
  bool found = false;
  w.for_each([&](const PermGroup::Cursor& c) {
    if (found) return;
    for (int j : J)
      if (!inK[c.apply(j)]) return;
    found = true;
  });
  return found;
}

}  // namespace springer
