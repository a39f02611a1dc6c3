#include "springer/orbits.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "springer/data.hpp"
#include "springer/error.hpp"

namespace springer {

namespace {

struct OrbitData {
  std::map<std::string, std::vector<NilpotentOrbit>> orbits;
  std::map<std::string, ClosureGraph> closure;
};

const OrbitData& orbit_data() {
  static const OrbitData data = [] {
    OrbitData d;
    for (const std::string& rec : data_records("orbits.txt")) {
      std::vector<std::string> f = split_fields(rec);
      if (f.size() == 6 && f[0] == "orbit") {
        auto& list = d.orbits[f[1]];
        for (const auto& o : list)
          if (o.label == f[2]) throw DataError("orbits.txt: duplicate orbit " + f[1] + " " + f[2]);
        list.push_back({f[2], GroupSpec::parse(f[3]), f[4] == "1", f[5] == "1"});
      } else if (f.size() == 4 && f[0] == "edge") {
        d.closure[f[1]].edges.emplace_back(f[2], f[3]);
      } else {
        throw DataError("orbits.txt: malformed record: " + rec);
      }
    }
    for (auto& [type, graph] : d.closure) {
      const auto& list = d.orbits.at(type);
      for (const auto& o : list) graph.orbits.push_back(o.label);
      for (const auto& [a, b] : graph.edges) {
        auto known = [&](const std::string& x) {
          return std::find(graph.orbits.begin(), graph.orbits.end(), x) != graph.orbits.end();
        };
        if (!known(a) || !known(b) || a == b) throw DataError("orbits.txt: bad edge " + a + " > " + b);
      }
    }
    return d;
  }();
  return data;
}

void require_exceptional(const CartanType& g) {
  if (!g.is_irreducible() || !g.is_exceptional())
    throw TypeError("orbit tables exist only for exceptional types, got " +
                    (g.is_torus() ? std::string("T") : g.name()));
}

int sym_degree(const GroupSpec& a) {
  if (a.kind() == GroupSpec::Kind::Trivial) return 1;
  if (a.kind() == GroupSpec::Kind::Sym) return a.n();
  throw ArgumentError("local systems are only named for trivial and symmetric component groups, got " + a.name());
}

std::string partition_text(const std::vector<int>& p) {
  std::string s;
  for (int x : p) s += std::to_string(x);
  return s;
}

struct LocalSystemData {
  std::map<std::pair<std::string, std::uint64_t>, std::map<std::string, std::string>> beta;
  std::map<std::pair<std::string, std::uint64_t>, std::vector<std::pair<std::string, std::string>>> below;
};

const LocalSystemData& local_system_data() {
  static const LocalSystemData data = [] {
    LocalSystemData d;
    for (const std::string& rec : data_records("local_systems.txt")) {
      std::vector<std::string> f = split_fields(rec);
      if (f.size() != 5) throw DataError("local_systems.txt: malformed record: " + rec);
      auto key = std::make_pair(f[1], static_cast<std::uint64_t>(std::stoull(f[2])));
      if (f[0] == "beta") d.beta[key][f[3]] = f[4];
      else if (f[0] == "below") d.below[key].emplace_back(f[3], f[4]);
      else throw DataError("local_systems.txt: malformed record: " + rec);
    }
    return d;
  }();
  return data;
}

bool divides_order(const GroupSpec& a, std::uint64_t l) { return a.order() % l == 0; }

}  // namespace

const std::vector<NilpotentOrbit>& orbit_table(const CartanType& g) {
  require_exceptional(g);
  const auto& d = orbit_data();
  auto it = d.orbits.find(g.name());
  if (it == d.orbits.end()) throw DataError("orbits.txt has no records for " + g.name());
  return it->second;
}

const NilpotentOrbit& find_orbit(const CartanType& g, const std::string& label) {
  for (const auto& o : orbit_table(g))
    if (o.label == label) return o;
  throw ArgumentError("no orbit " + label + " in " + g.name());
}

std::vector<std::vector<int>> l_regular_partitions(int n, std::uint64_t l) {
  std::vector<std::vector<int>> out;
  for (auto& p : partitions(n)) {
    bool ok = true;
    for (std::size_t i = 0; i < p.size();) {
      std::size_t j = i;
      while (j < p.size() && p[j] == p[i]) ++j;
      if (j - i >= l) ok = false;
      i = j;
    }
    if (ok) out.push_back(p);
  }
  return out;
}

std::vector<int> l_regularization(const std::vector<int>& lambda, std::uint64_t l) {
  // Node (i, j) lies on ladder i + (l-1) j (0-based); every node moves to the
  // highest free position of its ladder.
  const int step = static_cast<int>(l) - 1;
  std::map<int, int> per_ladder;
  for (std::size_t i = 0; i < lambda.size(); ++i)
    for (int j = 0; j < lambda[i]; ++j) ++per_ladder[static_cast<int>(i) + step * j];
  std::vector<int> rows;
  for (const auto& [ladder, count] : per_ladder) {
    int placed = 0;
    for (int j = ladder / step; j >= 0 && placed < count; --j) {
      const int i = ladder - step * j;
      if (static_cast<int>(rows.size()) <= i) rows.resize(i + 1, 0);
      ++rows[i];
      ++placed;
    }
    if (placed < count) throw ConsistencyError("ladder overflow in l-regularization");
  }
  std::vector<int> out;
  for (int r : rows)
    if (r > 0) out.push_back(r);
  if (!std::is_sorted(out.rbegin(), out.rend())) throw ConsistencyError("l-regularization is not a partition");
  return out;
}

std::vector<std::string> ordinary_irreps(const GroupSpec& a) {
  const int n = sym_degree(a);
  std::vector<std::string> out;
  for (const auto& p : partitions(n)) {
    if (p.size() == 1) out.push_back("triv");
    else if (static_cast<int>(p.size()) == n) out.push_back("eps");
    else out.push_back("chi" + partition_text(p));
  }
  return out;
}

std::vector<std::string> modular_irreps(const GroupSpec& a, std::uint64_t l) {
  require_prime(l);
  const int n = sym_degree(a);
  const std::vector<int> sign = l_regularization(std::vector<int>(n, 1), l);
  std::vector<std::string> out;
  for (const auto& p : l_regular_partitions(n, l)) {
    if (p.size() == 1) out.push_back("triv");
    else if (p == sign) out.push_back("eps");
    else out.push_back("phi" + partition_text(p));
  }
  return out;
}

std::string beta_image(const GroupSpec& a, std::uint64_t l, const std::string& modular) {
  const auto names = modular_irreps(a, l);
  if (std::find(names.begin(), names.end(), modular) == names.end())
    throw ArgumentError("no modular irreducible " + modular + " of " + a.name() + " in characteristic " +
                        std::to_string(l));
  if (!divides_order(a, l)) return modular.rfind("phi", 0) == 0 ? "chi" + modular.substr(3) : modular;
  const auto& d = local_system_data().beta;
  auto it = d.find({a.name(), l});
  if (it == d.end() || !it->second.count(modular))
    throw DataError("no tabulated map for " + a.name() + " in characteristic " + std::to_string(l));
  return it->second.at(modular);
}

std::optional<std::string> beta_preimage(const GroupSpec& a, std::uint64_t l, const std::string& ordinary) {
  for (const auto& m : modular_irreps(a, l))
    if (beta_image(a, l, m) == ordinary) return m;
  return std::nullopt;
}

bool local_system_leq(const GroupSpec& a, std::uint64_t l, const std::string& smaller, const std::string& larger) {
  if (smaller == larger) return true;
  if (!divides_order(a, l)) return false;
  const auto& d = local_system_data().below;
  auto it = d.find({a.name(), l});
  if (it == d.end()) return false;
  std::vector<std::string> frontier{smaller};
  std::set<std::string> seen{smaller};
  while (!frontier.empty()) {
    std::string x = frontier.back();
    frontier.pop_back();
    for (const auto& [s, b] : it->second)
      if (s == x && seen.insert(b).second) {
        if (b == larger) return true;
        frontier.push_back(b);
      }
  }
  return false;
}

std::string reduce_linear(const GroupSpec& a, std::uint64_t l, const std::string& ordinary) {
  if (ordinary == "triv") return "triv";
  if (ordinary != "eps") throw ArgumentError("not a linear character: " + ordinary);
  const int n = sym_degree(a);
  if (n < 2) throw ArgumentError("the trivial group has no sign character");
  return l_regularization(std::vector<int>(n, 1), l).size() == 1 ? "triv" : "eps";
}

CentralCharacter reduce_character(const CartanType& g, std::uint64_t l, CentralCharacter chi) {
  if (chi == CentralCharacter::Trivial) return chi;
  return character_valid(g, l, chi) ? chi : CentralCharacter::Trivial;
}

std::string PairLabel::text() const {
  std::string ls = local_system;
  if (character == CentralCharacter::Nontrivial) ls = local_system.empty() ? "chi" : local_system + " x chi";
  return "(" + orbit + "," + ls + ")";
}

std::vector<PairLabel> pairs(const CartanType& g, std::uint64_t l, CentralCharacter chi) {
  require_exceptional(g);
  require_valid_character(g, l, chi);
  std::vector<PairLabel> out;
  for (const auto& o : orbit_table(g)) {
    if (chi == CentralCharacter::Nontrivial && !o.has_central_factor) continue;
    const bool bare = chi == CentralCharacter::Nontrivial && o.a_bar.kind() == GroupSpec::Kind::Trivial;
    for (const auto& m : modular_irreps(o.a_bar, l)) out.push_back({o.label, bare ? "" : m, chi});
  }
  return out;
}

std::size_t pairs_count(const CartanType& g, std::uint64_t l, CentralCharacter chi) {
  require_exceptional(g);
  require_valid_character(g, l, chi);
  std::size_t total = 0;
  for (const auto& o : orbit_table(g)) {
    if (chi == CentralCharacter::Nontrivial && !o.has_central_factor) continue;
    total += count_l_regular(o.a_bar, l);
  }
  return total;
}

std::vector<std::vector<int>> classical_distinguished_partitions(const SimpleType& t) {
  validate(t);
  int size = 0;
  bool odd = true;
  switch (t.family) {
    case Family::B: size = 2 * t.rank + 1; break;
    case Family::C: size = 2 * t.rank; odd = false; break;
    case Family::D: size = 2 * t.rank; break;
    default: throw TypeError("distinguished partitions are listed for types B, C, D only");
  }
  std::vector<std::vector<int>> out;
  for (auto& p : partitions(size)) {
    bool ok = true;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if ((p[i] % 2 == 1) != odd) ok = false;
      if (i > 0 && p[i] == p[i - 1]) ok = false;
    }
    if (ok) out.push_back(p);
  }
  return out;
}

int classical_cuspidal_count(const SimpleType& t, std::uint64_t l) {
  require_prime(l);
  validate(t);
  if (!t.is_classical()) throw TypeError("expected a classical type, got " + t.name());
  if (t.rank > 8) throw ArgumentError("classical cuspidal counts are supported up to rank 8");
  if (t.family == Family::A) {
    std::uint64_t n = static_cast<std::uint64_t>(t.rank) + 1;
    while (n % l == 0) n /= l;
    return n == 1 ? 1 : 0;
  }
  if (l != 2) return 0;
  return static_cast<int>(classical_distinguished_partitions(t).size());
}

bool ClosureGraph::contains(const std::string& larger, const std::string& smaller) const {
  if (larger == smaller) return true;
  std::vector<std::string> frontier{larger};
  std::set<std::string> seen{larger};
  while (!frontier.empty()) {
    std::string x = frontier.back();
    frontier.pop_back();
    for (const auto& [a, b] : edges)
      if (a == x && seen.insert(b).second) {
        if (b == smaller) return true;
        frontier.push_back(b);
      }
  }
  return false;
}

bool ClosureGraph::covers(const std::string& orbit) const {
  for (const auto& [a, b] : edges)
    if (a == orbit || b == orbit) return true;
  return false;
}

const ClosureGraph& closure_graph(const CartanType& g) {
  require_exceptional(g);
  const auto& d = orbit_data();
  auto it = d.closure.find(g.name());
  if (it == d.closure.end()) throw DataError("orbits.txt has no closure edges for " + g.name());
  return it->second;
}

std::vector<std::string> minimal_distinguished_orbits(const CartanType& g) {
  const ClosureGraph& cg = closure_graph(g);
  std::vector<std::string> dist;
  for (const auto& o : orbit_table(g))
    if (o.distinguished) dist.push_back(o.label);
  std::vector<std::string> out;
  for (const auto& x : dist) {
    bool minimal = true;
    for (const auto& y : dist)
      if (y != x && cg.contains(x, y)) minimal = false;
    if (minimal) out.push_back(x);
  }
  return out;
}

}  // namespace springer
