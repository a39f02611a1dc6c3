#include "springer/classdata.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <mutex>
#include <numeric>

#include "springer/data.hpp"
#include "springer/error.hpp"

namespace springer {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view s, std::string_view whole) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || v < 1)
    throw ArgumentError("malformed group spec: " + std::string(whole));
  return v;
}

int kind_rank(GroupSpec::Kind k) {
  switch (k) {
    case GroupSpec::Kind::Weyl: return 0;
    case GroupSpec::Kind::Wreath2: return 1;
    case GroupSpec::Kind::Sym: return 2;
    case GroupSpec::Kind::Cyclic: return 3;
    case GroupSpec::Kind::Explicit: return 4;
    default: return 5;
  }
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::uint64_t lcm_of(const std::vector<int>& parts, std::uint64_t scale, std::uint64_t start) {
  std::uint64_t m = start;
  for (int p : parts) m = std::lcm(m, scale * static_cast<std::uint64_t>(p));
  return m;
}

// Product over part sizes i of m^{a_i} a_i! where m = factor * i.
std::uint64_t centralizer_part(const std::vector<int>& parts, std::uint64_t factor) {
  std::map<int, int> mult;
  for (int p : parts) ++mult[p];
  std::uint64_t z = 1;
  for (auto [p, a] : mult) {
    for (int k = 0; k < a; ++k) z *= factor * static_cast<std::uint64_t>(p);
    z *= factorial(a);
  }
  return z;
}

std::mutex cache_mutex;
std::map<std::string, ClassStats>& cache() {
  static std::map<std::string, ClassStats> c;
  return c;
}

}  // namespace

GroupSpec GroupSpec::trivial() { return GroupSpec(); }

GroupSpec GroupSpec::cyclic(int n) {
  if (n < 1) throw ArgumentError("cyclic group order must be positive");
  GroupSpec g;
  g.kind_ = Kind::Cyclic;
  g.n_ = n;
  return normalized(std::move(g));
}

GroupSpec GroupSpec::sym(int n) {
  if (n < 1) throw ArgumentError("symmetric group degree must be positive");
  GroupSpec g;
  g.kind_ = Kind::Sym;
  g.n_ = n;
  return normalized(std::move(g));
}

GroupSpec GroupSpec::weyl(const CartanType& t) {
  std::vector<GroupSpec> f;
  for (const auto& s : t.factors()) {
    validate(s);
    GroupSpec g;
    g.kind_ = Kind::Weyl;
    g.weyl_ = s;
    f.push_back(normalized(std::move(g)));
  }
  return product(std::move(f));
}

GroupSpec GroupSpec::wreath2(GroupSpec h) {
  GroupSpec g;
  g.kind_ = Kind::Wreath2;
  g.children_.push_back(std::move(h));
  return normalized(std::move(g));
}

GroupSpec GroupSpec::product(std::vector<GroupSpec> factors) {
  GroupSpec g;
  g.kind_ = Kind::Product;
  g.children_ = std::move(factors);
  return normalized(std::move(g));
}

GroupSpec GroupSpec::explicit_perm(PermGroup p, std::string label) {
  GroupSpec g;
  g.kind_ = Kind::Explicit;
  g.perm_ = std::make_shared<const PermGroup>(std::move(p));
  g.label_ = label.empty() ? "<" + std::to_string(g.perm_->order()) + ">" : std::move(label);
  return g;
}

GroupSpec GroupSpec::normalized(GroupSpec g) {
  switch (g.kind_) {
    case Kind::Cyclic:
      if (g.n_ == 1) return GroupSpec();
      if (g.n_ == 2) g.kind_ = Kind::Sym;
      return g;
    case Kind::Sym:
      if (g.n_ == 1) return GroupSpec();
      return g;
    case Kind::Weyl:
      if (g.weyl_.family == Family::A) {
        GroupSpec s;
        s.kind_ = Kind::Sym;
        s.n_ = g.weyl_.rank + 1;
        return s;
      }
      return g;
    case Kind::Wreath2:
      if (g.children_.at(0).kind_ == Kind::Trivial) return GroupSpec();
      return g;
    case Kind::Product: {
      std::vector<GroupSpec> flat;
      for (auto& c : g.children_) {
        if (c.kind_ == Kind::Product)
          for (auto& cc : c.children_) flat.push_back(cc);
        else if (c.kind_ != Kind::Trivial)
          flat.push_back(c);
      }
      if (flat.empty()) return GroupSpec();
      if (flat.size() == 1) return flat[0];
      std::stable_sort(flat.begin(), flat.end(), [](const GroupSpec& a, const GroupSpec& b) {
        if (kind_rank(a.kind_) != kind_rank(b.kind_)) return kind_rank(a.kind_) < kind_rank(b.kind_);
        if (a.order() != b.order()) return a.order() > b.order();
        return a.name() < b.name();
      });
      g.children_ = std::move(flat);
      return g;
    }
    default:
      return g;
  }
}

GroupSpec GroupSpec::parse(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.empty()) throw ArgumentError("empty group spec");
  // Split on top-level " x ".
  std::vector<std::string_view> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (depth < 0) throw ArgumentError("unbalanced parentheses in group spec: " + std::string(s));
    if (depth == 0 && s[i] == 'x' && i > 0 && i + 1 < s.size() && s[i - 1] == ' ' && s[i + 1] == ' ') {
      parts.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  if (depth != 0) throw ArgumentError("unbalanced parentheses in group spec: " + std::string(s));
  parts.push_back(trim(s.substr(start)));
  if (parts.size() > 1) {
    std::vector<GroupSpec> f;
    for (auto p : parts) f.push_back(parse(p));
    return product(std::move(f));
  }
  if (s == "1") return trivial();
  if (s.size() > 1 && s[0] == 'C' && s[1] != '(') return cyclic(parse_int(s.substr(1), s));
  if (s.size() > 1 && s[0] == 'S') return sym(parse_int(s.substr(1), s));
  if (s.size() > 3 && s.substr(0, 2) == "W(" && s.back() == ')') {
    CartanType t;
    try {
      t = CartanType::parse(s.substr(2, s.size() - 3));
    } catch (const TypeError& e) {
      throw ArgumentError("malformed group spec: " + std::string(s) + " (" + e.what() + ")");
    }
    return weyl(t);
  }
  if (s.size() > 5 && s.substr(0, 4) == "Wr2(" && s.back() == ')') return wreath2(parse(s.substr(4, s.size() - 5)));
  throw ArgumentError("malformed group spec: " + std::string(s));
}

std::uint64_t GroupSpec::order() const {
  switch (kind_) {
    case Kind::Trivial: return 1;
    case Kind::Cyclic: return static_cast<std::uint64_t>(n_);
    case Kind::Sym: return factorial(n_);
    case Kind::Weyl: return weyl_order(weyl_);
    case Kind::Wreath2: {
      const std::uint64_t h = children_[0].order();
      return 2 * h * h;
    }
    case Kind::Product: {
      std::uint64_t o = 1;
      for (const auto& c : children_) o *= c.order();
      return o;
    }
    case Kind::Explicit: return perm_->order();
  }
  return 1;
}

std::string GroupSpec::name() const {
  switch (kind_) {
    case Kind::Trivial: return "1";
    case Kind::Cyclic: return "C" + std::to_string(n_);
    case Kind::Sym: return "S" + std::to_string(n_);
    case Kind::Weyl: return "W(" + weyl_.name() + ")";
    case Kind::Wreath2: return "Wr2(" + children_[0].name() + ")";
    case Kind::Product: {
      std::string out;
      for (const auto& c : children_) out += (out.empty() ? "" : " x ") + c.name();
      return out;
    }
    case Kind::Explicit: return label_;
  }
  return "1";
}

void ClassStats::normalize() { std::sort(entries.begin(), entries.end()); }

ClassStats class_stats_from_table(const RawClassTable& t) {
  ClassStats s;
  s.group_order = t.group_order;
  for (const auto& c : t.classes) s.entries.emplace_back(c.element_order, c.size);
  s.normalize();
  return s;
}

std::vector<std::vector<int>> partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rest, int maxpart) -> void {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(rest, maxpart); p >= 1; --p) {
      cur.push_back(p);
      self(self, rest - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

ClassStats sym_class_stats(int n) {
  ClassStats s;
  s.group_order = factorial(n);
  for (const auto& lam : partitions(n))
    s.entries.emplace_back(lcm_of(lam, 1, 1), s.group_order / centralizer_part(lam, 1));
  s.normalize();
  return s;
}

namespace {

template <class F>
void for_each_bipartition(int n, F&& f) {
  for (int a = 0; a <= n; ++a) {
    const auto pl = a == 0 ? std::vector<std::vector<int>>{{}} : partitions(a);
    const auto pm = n - a == 0 ? std::vector<std::vector<int>>{{}} : partitions(n - a);
    for (const auto& lam : pl)
      for (const auto& mu : pm) f(lam, mu);
  }
}

}  // namespace

ClassStats hyperoctahedral_class_stats(int n) {
  ClassStats s;
  s.group_order = (std::uint64_t{1} << n) * factorial(n);
  for_each_bipartition(n, [&](const std::vector<int>& lam, const std::vector<int>& mu) {
    const std::uint64_t z = centralizer_part(lam, 2) * centralizer_part(mu, 2);
    s.entries.emplace_back(lcm_of(mu, 2, lcm_of(lam, 1, 1)), s.group_order / z);
  });
  s.normalize();
  return s;
}

ClassStats type_d_class_stats(int n) {
  ClassStats s;
  const std::uint64_t bn = (std::uint64_t{1} << n) * factorial(n);
  s.group_order = bn / 2;
  for_each_bipartition(n, [&](const std::vector<int>& lam, const std::vector<int>& mu) {
    if (mu.size() % 2 != 0) return;
    const std::uint64_t size = bn / (centralizer_part(lam, 2) * centralizer_part(mu, 2));
    const std::uint64_t ord = lcm_of(mu, 2, lcm_of(lam, 1, 1));
    const bool split = mu.empty() && std::all_of(lam.begin(), lam.end(), [](int p) { return p % 2 == 0; });
    if (split) {
      s.entries.emplace_back(ord, size / 2);
      s.entries.emplace_back(ord, size / 2);
    } else {
      s.entries.emplace_back(ord, size);
    }
  });
  s.normalize();
  return s;
}

ClassStats wreath2_class_stats(const ClassStats& h) {
  ClassStats s;
  s.group_order = 2 * h.group_order * h.group_order;
  const auto& e = h.entries;
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (std::size_t j = i; j < e.size(); ++j) {
      const std::uint64_t size = i == j ? e[i].second * e[i].second : 2 * e[i].second * e[j].second;
      s.entries.emplace_back(std::lcm(e[i].first, e[j].first), size);
    }
    // ((g,h),swap) squares to (gh,hg); its order is twice that of gh.
    s.entries.emplace_back(2 * e[i].first, h.group_order * e[i].second);
  }
  s.normalize();
  return s;
}

ClassStats product_class_stats(const ClassStats& a, const ClassStats& b) {
  ClassStats s;
  s.group_order = a.group_order * b.group_order;
  for (const auto& x : a.entries)
    for (const auto& y : b.entries) s.entries.emplace_back(std::lcm(x.first, y.first), x.second * y.second);
  s.normalize();
  return s;
}

const ClassStats& e8_class_stats() {
  static const ClassStats stats = [] {
    ClassStats s;
    s.group_order = weyl_order(SimpleType{Family::E, 8});
    std::uint64_t total = 0;
    for (const auto& rec : data_records("e8_classes.txt")) {
      const auto comma = rec.find(',');
      if (comma == std::string::npos) throw DataError("e8_classes.txt: malformed record " + rec);
      std::uint64_t o = 0, z = 0;
      auto r1 = std::from_chars(rec.data(), rec.data() + comma, o);
      auto r2 = std::from_chars(rec.data() + comma + 1, rec.data() + rec.size(), z);
      if (r1.ec != std::errc() || r2.ec != std::errc() || o == 0 || z == 0)
        throw DataError("e8_classes.txt: malformed record " + rec);
      if (s.group_order % o != 0 || s.group_order % z != 0)
        throw DataError("e8_classes.txt: record does not divide the group order: " + rec);
      total += z;
      s.entries.emplace_back(o, z);
    }
    if (s.entries.size() != 112 || total != s.group_order)
      throw DataError("e8_classes.txt: class sizes do not sum to |W(E8)|");
    s.normalize();
    return s;
  }();
  return stats;
}

namespace {

ClassStats weyl_leaf_stats(const SimpleType& t) {
  switch (t.family) {
    case Family::A: return sym_class_stats(t.rank + 1);
    case Family::B:
    case Family::C: return hyperoctahedral_class_stats(t.rank);
    case Family::D: return type_d_class_stats(t.rank);
    case Family::E:
      if (t.rank == 8) return e8_class_stats();
      [[fallthrough]];
    default: {
      const RootSystem rs{CartanType(std::vector<SimpleType>{t})};
      return class_stats_from_table(conjugacy_classes_bruteforce(group_from_type(rs)));
    }
  }
}

ClassStats compute_stats(const GroupSpec& g) {
  switch (g.kind()) {
    case GroupSpec::Kind::Trivial: return ClassStats{1, {{1, 1}}};
    case GroupSpec::Kind::Cyclic: {
      ClassStats s;
      s.group_order = static_cast<std::uint64_t>(g.n());
      for (int k = 0; k < g.n(); ++k)
        s.entries.emplace_back(static_cast<std::uint64_t>(g.n() / std::gcd(k, g.n())), 1);
      s.normalize();
      return s;
    }
    case GroupSpec::Kind::Sym: return sym_class_stats(g.n());
    case GroupSpec::Kind::Weyl: return weyl_leaf_stats(g.weyl_type());
    case GroupSpec::Kind::Wreath2: return wreath2_class_stats(class_stats(g.children()[0]));
    case GroupSpec::Kind::Product: {
      ClassStats s{1, {{1, 1}}};
      for (const auto& c : g.children()) s = product_class_stats(s, class_stats(c));
      return s;
    }
    case GroupSpec::Kind::Explicit:
      return class_stats_from_table(conjugacy_classes_bruteforce(*g.perm_group()));
  }
  throw ArgumentError("unsupported group spec");
}

}  // namespace

ClassStats class_stats(const GroupSpec& g) {
  if (g.kind() == GroupSpec::Kind::Explicit) return compute_stats(g);
  const std::string key = g.name();
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache().find(key);
    if (it != cache().end()) return it->second;
  }
  ClassStats s = compute_stats(g);
  std::lock_guard<std::mutex> lock(cache_mutex);
  return cache().emplace(key, std::move(s)).first->second;
}

std::size_t count_l_regular(const ClassStats& s, std::uint64_t l) {
  require_prime(l);
  std::size_t n = 0;
  for (const auto& e : s.entries)
    if (e.first % l != 0) ++n;
  return n;
}

std::size_t count_l_regular(const GroupSpec& g, std::uint64_t l) { return count_l_regular(class_stats(g), l); }

std::size_t count_l_singular(const GroupSpec& g, std::uint64_t l) {
  const ClassStats s = class_stats(g);
  return s.num_classes() - count_l_regular(s, l);
}

}  // namespace springer
