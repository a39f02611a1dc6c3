#include "springer/cuspidal.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <set>
#include <mutex>
#include <tuple>

#include "springer/data.hpp"
#include "springer/error.hpp"

namespace springer {

std::string status_name(PairStatus s) {
  switch (s) {
    case PairStatus::Proven: return "proven";
    case PairStatus::Conjectural: return "conjectural";
    case PairStatus::Unresolved: return "unresolved";
  }
  return "?";
}

std::string CuspidalDatum::text() const { return "(" + levi + "," + orbit + "," + local_system + ")"; }

std::string CuspidalEntry::text() const {
  if (status != PairStatus::Unresolved) return pair.text();
  std::string s = "one of {";
  for (std::size_t i = 0; i < candidates.size(); ++i) s += (i ? ", " : "") + candidates[i].text();
  return s + "}";
}

std::vector<PairLabel> CuspidalReport::known_pairs() const {
  std::vector<PairLabel> out;
  for (const auto& e : entries)
    if (e.status != PairStatus::Unresolved) out.push_back(e.pair);
  return out;
}

std::size_t CuspidalReport::unresolved_slots() const {
  return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(), [](const CuspidalEntry& e) {
    return e.status == PairStatus::Unresolved;
  }));
}

namespace {

struct Char0Pair {
  std::string orbit;
  std::string local_system;
  CentralCharacter chi;
};

struct SupportRecord {
  std::string levi;
  std::string orbit;
};

struct CuspidalData {
  std::map<std::string, std::vector<Char0Pair>> char0;
  // (type, l or 0 for the default) -> records
  std::map<std::pair<std::string, std::uint64_t>, std::vector<SupportRecord>> support;
  std::map<std::tuple<std::string, std::uint64_t, CentralCharacter>, std::vector<PairLabel>> resolved;
  std::set<std::tuple<std::string, std::uint64_t, CentralCharacter>> distinct;
};

std::uint64_t parse_l(const std::string& s) { return s == "*" ? 0 : std::stoull(s); }

const CuspidalData& cuspidal_data() {
  static const CuspidalData data = [] {
    CuspidalData d;
    for (const std::string& rec : data_records("cuspidal.txt")) {
      std::vector<std::string> f = split_fields(rec);
      if (f[0] == "char0" && f.size() == 5) {
        d.char0[f[1]].push_back({f[2], f[3], parse_character(f[4])});
      } else if (f[0] == "support" && f.size() == 5) {
        d.support[{f[1], parse_l(f[2])}].push_back({f[3], f[4]});
      } else if (f[0] == "resolved" && f.size() == 6) {
        CentralCharacter chi = parse_character(f[3]);
        d.resolved[{f[1], parse_l(f[2]), chi}].push_back({f[4], f[5], chi});
      } else if (f[0] == "distinct" && f.size() == 4) {
        d.distinct.insert({f[1], parse_l(f[2]), parse_character(f[3])});
      } else {
        throw DataError("cuspidal.txt: malformed record: " + rec);
      }
    }
    return d;
  }();
  return data;
}

struct Option {
  std::string orbit;
  std::string local_system;
  PairStatus status;
};

std::vector<Option> component_options(const SimpleType& t, std::uint64_t l) {
  std::vector<Option> out;
  if (t.family == Family::A) {
    if (classical_cuspidal_count(t, l) == 1) out.push_back({"[" + std::to_string(t.rank + 1) + "]", "triv", PairStatus::Proven});
  } else if (t.is_classical()) {
    if (l == 2) {
      for (const auto& p : classical_distinguished_partitions(t)) {
        std::string s = "[";
        for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
        out.push_back({s + "]", "triv", PairStatus::Proven});
      }
    }
  } else {
    for (const auto& e : classify_cuspidal_pairs(CartanType({t}), l, CentralCharacter::Trivial).entries) {
      if (e.status == PairStatus::Unresolved) out.push_back({"?", "?", PairStatus::Unresolved});
      else out.push_back({e.pair.orbit, e.pair.local_system, e.status});
    }
  }
  return out;
}

PairStatus weaker(PairStatus a, PairStatus b) { return static_cast<int>(a) > static_cast<int>(b) ? a : b; }

// "[2] x [2] x [2]" -> "[2]^3". Parts are (component, orbit); only equal
// components with equal orbits are grouped, so A1+~A1 stays "[2] x [2]".
std::string join_orbits(const std::vector<std::pair<std::string, std::string>>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    if (!out.empty()) out += " x ";
    out += parts[i].second;
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

using Key = std::tuple<std::string, std::uint64_t, CentralCharacter>;

std::recursive_mutex& memo_mutex() {
  static std::recursive_mutex mu;
  return mu;
}

std::map<Key, std::unique_ptr<InductionTable>>& memo() {
  static std::map<Key, std::unique_ptr<InductionTable>> m;
  return m;
}

void require_exceptional(const CartanType& g) {
  if (!g.is_irreducible() || !g.is_exceptional())
    throw TypeError("expected an exceptional type, got " + (g.is_torus() ? std::string("T") : g.name()));
}

CuspidalReport classify(const CartanType& g, std::uint64_t l, CentralCharacter chi, std::size_t count) {
  const CuspidalData& d = cuspidal_data();
  CuspidalReport rep;
  rep.count = count;
  auto add = [&](PairLabel p, PairStatus s) {
    for (const auto& e : rep.entries)
      if (e.pair == p) return;
    rep.entries.push_back({s, std::move(p), {}});
  };
  auto label = [&](const std::string& orbit, const std::string& local) {
    const NilpotentOrbit& o = find_orbit(g, orbit);
    const bool bare = chi == CentralCharacter::Nontrivial && o.a_bar.kind() == GroupSpec::Kind::Trivial;
    return PairLabel{orbit, bare ? "" : local, chi};
  };
  // Modular reductions of the characteristic-zero cuspidal pairs.
  if (auto it = d.char0.find(g.name()); it != d.char0.end())
    for (const auto& c : it->second) {
      if (reduce_character(g, l, c.chi) != chi) continue;
      const NilpotentOrbit& o = find_orbit(g, c.orbit);
      add(label(c.orbit, reduce_linear(o.a_bar, l, c.local_system)), PairStatus::Proven);
    }
  // The regular orbit is cuspidal exactly when the Sylow class is G.
  if (chi == CentralCharacter::Trivial && oreg_is_cuspidal(g, l)) add(label(g.name(), "triv"), PairStatus::Proven);
  if (auto it = d.resolved.find({g.name(), l, chi}); it != d.resolved.end())
    for (const auto& p : it->second) add(label(p.orbit, p.local_system), PairStatus::Proven);
  if (rep.entries.size() > count)
    throw ConsistencyError("more known cuspidal pairs than the count for " + g.name() + " l=" + std::to_string(l));
  if (d.distinct.count({g.name(), l, chi}))
    for (const auto& o : orbit_table(g))
      if (o.distinguished && rep.entries.size() < count) add(label(o.label, "triv"), PairStatus::Conjectural);
  // Larger orbits first, as in the tables.
  std::map<std::string, int> position;
  for (const auto& o : orbit_table(g)) position.emplace(o.label, static_cast<int>(position.size()));
  std::stable_sort(rep.entries.begin(), rep.entries.end(), [&](const CuspidalEntry& a, const CuspidalEntry& b) {
    if (a.status != b.status) return a.status < b.status;
    return position[a.pair.orbit] > position[b.pair.orbit];
  });
  if (rep.entries.size() < count) {
    std::vector<PairLabel> cands;
    const auto known = rep.known_pairs();
    for (const auto& p : pairs(g, l, chi))
      if (find_orbit(g, p.orbit).distinguished && std::find(known.begin(), known.end(), p) == known.end())
        cands.push_back(p);
    std::stable_sort(cands.begin(), cands.end(), [&](const PairLabel& a, const PairLabel& b) {
      return position[a.orbit] > position[b.orbit];
    });
    while (rep.entries.size() < count) rep.entries.push_back({PairStatus::Unresolved, {}, cands});
  }
  return rep;
}

}  // namespace

std::vector<std::pair<CuspidalDatum, PairStatus>> levi_cuspidal_data(const CartanType& g, const LeviClass& levi,
                                                                     std::uint64_t l, CentralCharacter chi) {
  std::vector<std::pair<CuspidalDatum, PairStatus>> out;
  if (chi == CentralCharacter::Nontrivial) {
    const auto& sup = cuspidal_data().support;
    auto it = sup.find({g.name(), l});
    if (it == sup.end()) it = sup.find({g.name(), 0});
    if (it == sup.end()) return out;
    for (const auto& r : it->second)
      if (r.levi == levi.name) out.push_back({{levi.name, r.orbit, "chi", chi}, PairStatus::Proven});
    return out;
  }
  if (levi.type.is_torus()) {
    out.push_back({{"T", "0", "triv", chi}, PairStatus::Proven});
    return out;
  }
  RootSystem rs(g);
  std::vector<std::vector<Option>> opts;
  std::vector<std::string> component_names;
  for (const auto& c : levi_components(rs, levi.simple_roots)) {
    component_names.push_back((c.tilde ? "~" : "") + c.type.name());
    opts.push_back(component_options(c.type, l));
    if (opts.back().empty()) return out;
  }
  std::vector<std::size_t> idx(opts.size(), 0);
  for (;;) {
    std::vector<std::pair<std::string, std::string>> orbits;
    std::vector<std::string> locals;
    PairStatus st = PairStatus::Proven;
    for (std::size_t i = 0; i < opts.size(); ++i) {
      const Option& o = opts[i][idx[i]];
      orbits.emplace_back(component_names[i], o.orbit);
      if (o.local_system != "triv") locals.push_back(o.local_system);
      st = weaker(st, o.status);
    }
    std::string local = "triv";
    if (!locals.empty()) {
      local.clear();
      for (std::size_t i = 0; i < locals.size(); ++i) local += (i ? " x " : "") + locals[i];
    }
    out.push_back({{levi.name, join_orbits(orbits), local, chi}, st});
    std::size_t k = opts.size();
    while (k > 0) {
      --k;
      if (++idx[k] < opts[k].size()) break;
      idx[k] = 0;
      if (k == 0) return out;
    }
    if (opts.empty()) return out;
  }
}

const InductionTable& induction_table(const CartanType& g, std::uint64_t l, CentralCharacter chi) {
  require_exceptional(g);
  require_valid_character(g, l, chi);
  std::lock_guard<std::recursive_mutex> lock(memo_mutex());
  const Key key{g.name(), l, chi};
  if (auto it = memo().find(key); it != memo().end()) return *it->second;

  auto t = std::make_unique<InductionTable>();
  t->type = g;
  t->l = l;
  t->chi = chi;
  t->total = pairs_count(g, l, chi);
  std::size_t used = 0;
  for (const auto& levi : levi_classes(g)) {
    if (levi.type == g) continue;
    if (chi == CentralCharacter::Nontrivial && !levi.supports_nontrivial_character) {
      if (!levi_cuspidal_data(g, levi, l, chi).empty())
        throw DataError("cuspidal.txt: " + levi.name + " cannot carry nontrivial central character in " + g.name());
      continue;
    }
    const std::size_t size = count_l_regular(levi.normalizer_quotient, l);
    for (auto& [datum, status] : levi_cuspidal_data(g, levi, l, chi)) {
      t->series.push_back({datum, levi.normalizer_quotient, size, status});
      used += size;
    }
  }
  if (used > t->total)
    throw ConsistencyError("series sizes exceed the number of pairs for " + g.name() + " l=" + std::to_string(l));
  t->cuspidal = classify(g, l, chi, t->total - used);
  return *memo().emplace(key, std::move(t)).first->second;
}

std::size_t cuspidal_count(const CartanType& g, std::uint64_t l, CentralCharacter chi) {
  return induction_table(g, l, chi).cuspidal.count;
}

const CuspidalReport& classify_cuspidal_pairs(const CartanType& g, std::uint64_t l, CentralCharacter chi) {
  return induction_table(g, l, chi).cuspidal;
}

bool good_prime(const CartanType& g, std::uint64_t l) {
  require_prime(l);
  if (!g.is_irreducible()) throw TypeError("prime conditions need a quasi-simple type");
  const SimpleType& t = g.simple();
  switch (t.family) {
    case Family::A: return true;
    case Family::B:
    case Family::C:
    case Family::D: return l > 2;
    case Family::E: return t.rank == 8 ? l > 5 : l > 3;
    case Family::F:
    case Family::G: return l > 3;
  }
  return false;
}

bool very_good_prime(const CartanType& g, std::uint64_t l) {
  if (!good_prime(g, l)) return false;
  if (g.simple().family == Family::A) return static_cast<std::uint64_t>(g.simple().rank + 1) % l != 0;
  return true;
}

bool rather_good(const CartanType& g, std::uint64_t l) {
  return good_prime(g, l) && static_cast<std::uint64_t>(center_order(g)) % l != 0;
}

bool easy(const CartanType& g, std::uint64_t l) {
  require_prime(l);
  return weyl_order(g) % l != 0;
}

std::string big_enough_condition(const CartanType& g) {
  if (!g.is_irreducible()) throw TypeError("big_enough_condition needs a quasi-simple type");
  const SimpleType& t = g.simple();
  validate(t);
  const std::string fourth = "k contains all fourth roots of unity";
  switch (t.family) {
    case Family::A:
      return t.rank + 1 >= 3 ? "k contains all " + std::to_string(t.rank + 1) + "-th roots of unity" : "no condition";
    case Family::B:
      return t.rank == 7 || t.rank >= 9 ? fourth : "no condition";
    case Family::D:
      return t.rank == 5 || t.rank == 7 || t.rank == 9 || t.rank == 11 || t.rank >= 13 ? fourth : "no condition";
    case Family::E:
      return t.rank == 6 ? "k contains all third roots of unity" : "no condition";
    default:
      return "no condition";
  }
}

}  // namespace springer
