#include "springer/levis.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

#include "springer/data.hpp"
#include "springer/error.hpp"
#include "springer/weylgrp.hpp"

namespace springer {

namespace {

int family_rank(Family f) {
  switch (f) {
    case Family::E: return 0;
    case Family::F: return 1;
    case Family::G: return 2;
    case Family::D: return 3;
    case Family::C: return 4;
    case Family::B: return 5;
    case Family::A: return 6;
  }
  return 7;
}

}  // namespace

std::vector<LeviComponent> levi_components(const RootSystem& rs, const std::vector<int>& J) {
  const Family ambient = rs.type().is_irreducible() ? rs.type().simple().family : Family::A;
  const bool mark_short = ambient == Family::F || ambient == Family::G;
  std::vector<LeviComponent> parts;
  for (const auto& comp : rs.components(J)) {
    SimpleType t = rs.component_type(comp);
    bool tilde = mark_short && t.family == Family::A && rs.is_short(comp.front());
    parts.push_back({t, tilde, comp});
  }
  std::stable_sort(parts.begin(), parts.end(), [](const LeviComponent& a, const LeviComponent& b) {
    if (family_rank(a.type.family) != family_rank(b.type.family))
      return family_rank(a.type.family) < family_rank(b.type.family);
    if (a.type.rank != b.type.rank) return a.type.rank > b.type.rank;
    return a.tilde < b.tilde;
  });
  return parts;
}

namespace {

std::string base_name(const RootSystem& rs, const std::vector<int>& J) {
  if (J.empty()) return "T";
  const std::vector<LeviComponent> parts = levi_components(rs, J);
  std::string out;
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j].type == parts[i].type && parts[j].tilde == parts[i].tilde) ++j;
    if (!out.empty()) out += "+";
    if (j - i > 1) out += std::to_string(j - i);
    if (parts[i].tilde) out += "~";
    out += parts[i].type.name();
    i = j;
  }
  return out;
}

bool inside(const std::vector<int>& small, const std::vector<int>& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace

std::vector<LeviCandidate> enumerate_levi_classes(const RootSystem& rs) {
  const int r = rs.rank();
  if (r > 8) throw ArgumentError("Levi enumeration is limited to rank 8");
  std::set<std::vector<int>> seen;
  std::vector<LeviCandidate> out;
  // Subsets in order of size, then lexicographically, so the first member of
  // each class is its smallest representative.
  std::vector<std::vector<int>> subsets;
  for (int mask = 0; mask < (1 << r); ++mask) {
    std::vector<int> J;
    for (int i = 0; i < r; ++i)
      if (mask >> i & 1) J.push_back(i);
    subsets.push_back(J);
  }
  std::sort(subsets.begin(), subsets.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  for (const auto& J : subsets) {
    if (seen.count(J)) continue;
    ParabolicNormalizer pn = parabolic_normalizer(rs, J);
    for (const auto& K : pn.conjugates) seen.insert(K);
    LeviCandidate c;
    c.type = rs.subdiagram_type(J);
    c.name = base_name(rs, J);
    c.simple_roots = J;
    c.conjugates = pn.conjugates;
    std::sort(c.conjugates.begin(), c.conjugates.end());
    c.normalizer_quotient_order = pn.complement.order();
    out.push_back(std::move(c));
  }
  // Classes sharing a name are told apart by primes. In E7 the class that
  // meets the E6 subdiagram (nodes 1..6) gets one prime.
  std::map<std::string, std::vector<std::size_t>> by_name;
  for (std::size_t i = 0; i < out.size(); ++i) by_name[out[i].name].push_back(i);
  for (auto& [name, idx] : by_name) {
    if (idx.size() == 1) continue;
    if (idx.size() != 2 || rs.type() != CartanType(Family::E, 7))
      throw ConsistencyError("unexpected split Levi class " + name + " in " + rs.type().name());
    auto meets_e6 = [&](const LeviCandidate& c) {
      for (const auto& K : c.conjugates)
        if (std::all_of(K.begin(), K.end(), [](int k) { return k < 6; })) return true;
      return false;
    };
    const bool a = meets_e6(out[idx[0]]), b = meets_e6(out[idx[1]]);
    if (a == b) throw ConsistencyError("cannot separate split Levi class " + name);
    out[idx[a ? 0 : 1]].name = "(" + name + ")'";
    out[idx[a ? 1 : 0]].name = "(" + name + ")''";
  }
  std::stable_sort(out.begin(), out.end(), [](const LeviCandidate& a, const LeviCandidate& b) {
    if (a.semisimple_rank() != b.semisimple_rank()) return a.semisimple_rank() < b.semisimple_rank();
    return a.name < b.name;
  });
  return out;
}

namespace {

struct LeviData {
  std::map<std::string, std::map<std::string, std::string>> quotient;  // type -> name -> spec
  std::map<std::string, std::string> nontrivial_support;               // type -> Levi name
};

const LeviData& levi_data() {
  static const LeviData data = [] {
    LeviData d;
    for (const std::string& rec : data_records("levis.txt")) {
      std::vector<std::string> f = split_fields(rec);
      if (f.size() == 4 && f[0] == "levi") {
        if (!d.quotient[f[1]].emplace(f[2], f[3]).second)
          throw DataError("levis.txt: duplicate record " + f[1] + " " + f[2]);
      } else if (f.size() == 3 && f[0] == "support") {
        d.nontrivial_support[f[1]] = f[2];
      } else {
        throw DataError("levis.txt: malformed record: " + rec);
      }
    }
    return d;
  }();
  return data;
}

void require_exceptional(const CartanType& g) {
  if (!g.is_irreducible() || !g.is_exceptional())
    throw TypeError("expected an exceptional type, got " + (g.is_torus() ? std::string("T") : g.name()));
}

std::vector<LeviClass> build_levi_classes(const CartanType& g) {
  RootSystem rs(g);
  const LeviData& data = levi_data();
  auto it = data.quotient.find(g.name());
  if (it == data.quotient.end()) throw DataError("levis.txt has no records for " + g.name());
  std::vector<LeviCandidate> cands = enumerate_levi_classes(rs);
  if (cands.size() != it->second.size())
    throw DataError("levis.txt: " + g.name() + " lists " + std::to_string(it->second.size()) +
                    " classes, the root system has " + std::to_string(cands.size()));
  std::vector<LeviClass> out;
  for (auto& c : cands) {
    auto s = it->second.find(c.name);
    if (s == it->second.end()) throw DataError("levis.txt: no record for " + g.name() + " " + c.name);
    LeviClass lc;
    static_cast<LeviCandidate&>(lc) = std::move(c);
    lc.normalizer_quotient = GroupSpec::parse(s->second);
    if (lc.normalizer_quotient.order() != lc.normalizer_quotient_order)
      throw DataError("levis.txt: " + g.name() + " " + lc.name + " has order " +
                      std::to_string(lc.normalizer_quotient.order()) + ", expected " +
                      std::to_string(lc.normalizer_quotient_order));
    out.push_back(std::move(lc));
  }
  auto sup = data.nontrivial_support.find(g.name());
  if (sup != data.nontrivial_support.end()) {
    const LeviClass* base = nullptr;
    for (const auto& lc : out)
      if (lc.name == sup->second) base = &lc;
    if (!base) throw DataError("levis.txt: unknown support Levi " + sup->second);
    const auto base_conj = base->conjugates;
    for (auto& lc : out) {
      for (const auto& K : lc.conjugates)
        for (const auto& B : base_conj)
          if (inside(B, K)) lc.supports_nontrivial_character = true;
    }
  }
  return out;
}

}  // namespace

const std::vector<LeviClass>& levi_classes(const CartanType& g) {
  require_exceptional(g);
  static std::mutex mu;
  static std::map<std::string, std::vector<LeviClass>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(g.name());
  if (it == cache.end()) it = cache.emplace(g.name(), build_levi_classes(g)).first;
  return it->second;
}

const LeviClass& find_levi(const CartanType& g, const std::string& name) {
  for (const auto& lc : levi_classes(g))
    if (lc.name == name) return lc;
  throw ArgumentError("no Levi class " + name + " in " + g.name());
}

std::vector<HowlettCheck> verify_howlett(const CartanType& g) {
  RootSystem rs(g);
  std::vector<HowlettCheck> out;
  for (const auto& lc : levi_classes(g)) {
    HowlettCheck h;
    h.levi = lc.name;
    h.spec = lc.normalizer_quotient.name();
    ParabolicNormalizer pn = parabolic_normalizer(rs, lc.simple_roots);
    h.order_ok = pn.complement.order() == lc.normalizer_quotient.order();
    if (pn.complement.order() <= enumeration_budget()) {
      h.checked_by_enumeration = true;
      h.stats_ok = class_stats_from_table(conjugacy_classes_bruteforce(pn.complement)) ==
                   class_stats(lc.normalizer_quotient);
    }
    out.push_back(std::move(h));
  }
  return out;
}

SylowClass sylow_class_search(const CartanType& g, std::uint64_t l) {
  require_prime(l);
  RootSystem rs(g);
  const int r = rs.rank();
  const int target = l_valuation(weyl_order(g), l);
  std::vector<std::vector<int>> best;
  for (int mask = 0; mask < (1 << r); ++mask) {
    std::vector<int> J;
    for (int i = 0; i < r; ++i)
      if (mask >> i & 1) J.push_back(i);
    if (l_valuation(weyl_order(rs.subdiagram_type(J)), l) != target) continue;
    if (!best.empty() && J.size() > best.front().size()) continue;
    if (!best.empty() && J.size() < best.front().size()) best.clear();
    best.push_back(J);
  }
  SylowClass out;
  out.type = rs.subdiagram_type(best.front());
  out.whole_group = static_cast<int>(best.front().size()) == r;
  for (const auto& J : best)
    if (rs.subdiagram_type(J) != out.type)
      throw ConsistencyError("Sylow search found Levis of different types in " + g.name());
  if (g.is_irreducible() && g.is_exceptional()) {
    std::set<std::string> names;
    for (const auto& J : best)
      for (const auto& lc : levi_classes(g))
        if (std::binary_search(lc.conjugates.begin(), lc.conjugates.end(), J)) names.insert(lc.name);
    if (names.size() != 1) throw ConsistencyError("Sylow search found several Levi classes in " + g.name());
    out.name = *names.begin();
  } else {
    out.name = out.type.is_torus() ? "T" : out.type.name();
  }
  return out;
}

CartanType sylow_class_formula(const SimpleType& t, std::uint64_t l) {
  require_prime(l);
  validate(t);
  if (!t.is_classical()) throw TypeError("digit formula needs a classical type, got " + t.name());
  int n = t.family == Family::A ? t.rank + 1 : t.rank;
  if (t.family != Family::A && l == 2) return CartanType({t});
  std::vector<SimpleType> parts;
  std::vector<int> digits = base_l_digits(static_cast<std::uint64_t>(n), l);
  std::uint64_t power = 1;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i > 0)
      for (int k = 0; k < digits[i]; ++k) parts.push_back({Family::A, static_cast<int>(power) - 1});
    power *= l;
  }
  return CartanType(parts);
}

SylowClass sylow_class(const CartanType& g, std::uint64_t l) {
  if (!g.is_irreducible()) throw TypeError("sylow_class needs an irreducible type");
  if (g.is_exceptional()) return sylow_class_search(g, l);
  SylowClass out;
  out.type = sylow_class_formula(g.simple(), l);
  out.whole_group = out.type == g;
  out.name = out.type.is_torus() ? "T" : out.type.name();
  return out;
}

std::string sylow_formula_text(Family f, std::uint64_t l) {
  if (f != Family::A && l == 2) return "G";
  return "b1*A_{l-1}+b2*A_{l^2-1}+...";
}

bool oreg_is_cuspidal(const CartanType& g, std::uint64_t l) { return sylow_class(g, l).whole_group; }

const LeviClass& minimal_cuspidal_levi(const CartanType& g, CentralCharacter chi) {
  require_exceptional(g);
  if (chi == CentralCharacter::Trivial) return levi_classes(g).front();
  if (center_order(g) == 1)
    throw ArgumentError(g.name() + " has trivial centre; no nontrivial central character");
  const auto& sup = levi_data().nontrivial_support;
  auto it = sup.find(g.name());
  if (it == sup.end()) throw DataError("levis.txt has no support record for " + g.name());
  return find_levi(g, it->second);
}

}  // namespace springer
