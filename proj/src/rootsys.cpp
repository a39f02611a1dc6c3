#include "springer/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <utility>

#include "springer/error.hpp"

namespace springer {

namespace {

int family_priority(Family f) {
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

bool factor_before(const SimpleType& a, const SimpleType& b) {
  if (family_priority(a.family) != family_priority(b.family))
    return family_priority(a.family) < family_priority(b.family);
  return a.rank > b.rank;
}

struct Diagram {
  std::vector<int> sqlen;
  std::vector<std::pair<int, int>> edges;
};

Diagram diagram_of(const SimpleType& t) {
  const int n = t.rank;
  Diagram d;
  d.sqlen.assign(n, 2);
  auto path = [&](int upto) {
    for (int i = 0; i + 1 < upto; ++i) d.edges.emplace_back(i, i + 1);
  };
  switch (t.family) {
    case Family::A:
      path(n);
      break;
    case Family::B:
      path(n);
      for (int i = 0; i + 1 < n; ++i) d.sqlen[i] = 4;
      break;
    case Family::C:
      path(n);
      d.sqlen[n - 1] = 4;
      break;
    case Family::D:
      path(n - 1);
      d.edges.emplace_back(n - 3, n - 1);
      break;
    case Family::E:
      d.edges = {{0, 2}, {2, 3}, {3, 4}, {1, 3}};
      for (int i = 4; i + 1 < n; ++i) d.edges.emplace_back(i, i + 1);
      break;
    case Family::F:
      path(4);
      d.sqlen = {4, 4, 2, 2};
      break;
    case Family::G:
      path(2);
      d.sqlen = {2, 6};
      break;
  }
  return d;
}

}  // namespace

std::string SimpleType::name() const {
  return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

bool SimpleType::is_classical() const {
  return family == Family::A || family == Family::B || family == Family::C ||
         family == Family::D;
}

void validate(const SimpleType& t) {
  bool ok = false;
  switch (t.family) {
    case Family::A: ok = t.rank >= 1; break;
    case Family::B: ok = t.rank >= 2; break;
    case Family::C: ok = t.rank >= 3; break;
    case Family::D: ok = t.rank >= 4; break;
    case Family::E: ok = t.rank >= 6 && t.rank <= 8; break;
    case Family::F: ok = t.rank == 4; break;
    case Family::G: ok = t.rank == 2; break;
  }
  if (!ok) throw TypeError("invalid Cartan type " + t.name());
}

CartanType::CartanType(std::vector<SimpleType> factors) : factors_(std::move(factors)) {
  for (const auto& f : factors_) validate(f);
  std::stable_sort(factors_.begin(), factors_.end(), factor_before);
}

CartanType CartanType::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty() || s == "T" || s == "1") return CartanType();
  std::vector<SimpleType> out;
  std::size_t i = 0;
  while (i < s.size()) {
    int mult = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
      mult = mult * 10 + (s[i++] - '0');
    if (mult == 0) mult = 1;
    if (i >= s.size() || std::string("ABCDEFG").find(s[i]) == std::string::npos)
      throw TypeError("cannot parse Cartan type '" + std::string(text) + "'");
    const Family f = static_cast<Family>(s[i++]);
    int rank = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
      rank = rank * 10 + (s[i++] - '0');
    if (rank == 0) throw TypeError("missing rank in '" + std::string(text) + "'");
    for (int k = 0; k < mult; ++k) out.push_back({f, rank});
    if (i < s.size()) {
      if (s[i] != '+' && s[i] != 'x')
        throw TypeError("cannot parse Cartan type '" + std::string(text) + "'");
      ++i;
    }
  }
  return CartanType(std::move(out));
}

int CartanType::rank() const {
  int r = 0;
  for (const auto& f : factors_) r += f.rank;
  return r;
}

bool CartanType::is_exceptional() const {
  return is_irreducible() && !factors_[0].is_classical();
}

const SimpleType& CartanType::simple() const {
  if (!is_irreducible()) throw TypeError("type " + name() + " is not irreducible");
  return factors_[0];
}

std::string CartanType::name() const {
  if (factors_.empty()) return "T";
  std::string out;
  for (std::size_t i = 0; i < factors_.size();) {
    std::size_t j = i;
    while (j < factors_.size() && factors_[j] == factors_[i]) ++j;
    if (!out.empty()) out += "+";
    if (j - i > 1) out += std::to_string(j - i);
    out += factors_[i].name();
    i = j;
  }
  return out;
}

std::vector<int> degrees(const SimpleType& t) {
  validate(t);
  const int n = t.rank;
  std::vector<int> d;
  switch (t.family) {
    case Family::A:
      for (int i = 2; i <= n + 1; ++i) d.push_back(i);
      break;
    case Family::B:
    case Family::C:
      for (int i = 1; i <= n; ++i) d.push_back(2 * i);
      break;
    case Family::D:
      for (int i = 1; i < n; ++i) d.push_back(2 * i);
      d.push_back(n);
      break;
    case Family::E:
      if (n == 6) d = {2, 5, 6, 8, 9, 12};
      if (n == 7) d = {2, 6, 8, 10, 12, 14, 18};
      if (n == 8) d = {2, 8, 12, 14, 18, 20, 24, 30};
      break;
    case Family::F: d = {2, 6, 8, 12}; break;
    case Family::G: d = {2, 6}; break;
  }
  return d;
}

std::uint64_t weyl_order(const SimpleType& t) {
  std::uint64_t o = 1;
  for (int d : degrees(t)) o *= static_cast<std::uint64_t>(d);
  return o;
}

std::uint64_t weyl_order(const CartanType& t) {
  std::uint64_t o = 1;
  for (const auto& f : t.factors()) o *= weyl_order(f);
  return o;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

void require_prime(std::uint64_t l) {
  if (!is_prime(l)) throw ArgumentError(std::to_string(l) + " is not a prime");
}

int l_valuation(std::uint64_t n, std::uint64_t l) {
  require_prime(l);
  if (n == 0) throw ArgumentError("valuation of zero");
  int v = 0;
  while (n % l == 0) {
    n /= l;
    ++v;
  }
  return v;
}

std::vector<int> base_l_digits(std::uint64_t n, std::uint64_t l) {
  require_prime(l);
  if (n == 0) throw ArgumentError("base-l digits need n >= 1");
  std::vector<int> out;
  for (; n > 0; n /= l) out.push_back(static_cast<int>(n % l));
  return out;
}

RootSystem::RootSystem(const CartanType& t) : type_(t), rank_(t.rank()) {
  cartan_.assign(rank_, std::vector<int>(rank_, 0));
  sqlen_.assign(rank_, 2);
  int offset = 0;
  for (const auto& f : t.factors()) {
    const Diagram d = diagram_of(f);
    for (int i = 0; i < f.rank; ++i) sqlen_[offset + i] = d.sqlen[i];
    for (auto [a, b] : d.edges) {
      const int i = offset + a, j = offset + b;
      const int ip = -std::max(sqlen_[i], sqlen_[j]) / 2;
      cartan_[i][j] = 2 * ip / sqlen_[j];
      cartan_[j][i] = 2 * ip / sqlen_[i];
    }
    offset += f.rank;
  }
  for (int i = 0; i < rank_; ++i) cartan_[i][i] = 2;

  // Orbit of the simple roots under the simple reflections.
  std::vector<std::vector<int>> all;
  std::map<std::vector<int>, int> seen;
  std::deque<std::vector<int>> queue;
  for (int i = 0; i < rank_; ++i) {
    std::vector<int> v(rank_, 0);
    v[i] = 1;
    seen.emplace(v, 0);
    queue.push_back(v);
  }
  while (!queue.empty()) {
    std::vector<int> v = queue.front();
    queue.pop_front();
    all.push_back(v);
    for (int j = 0; j < rank_; ++j) {
      int p = 0;
      for (int i = 0; i < rank_; ++i) p += v[i] * cartan_[i][j];
      std::vector<int> w = v;
      w[j] -= p;
      if (seen.emplace(w, 0).second) queue.push_back(w);
    }
  }
  std::vector<std::vector<int>> pos;
  for (auto& v : all) {
    bool positive = false;
    for (int c : v)
      if (c > 0) positive = true;
    if (positive) pos.push_back(v);
  }
  auto ht = [](const std::vector<int>& v) {
    int h = 0;
    for (int c : v) h += c;
    return h;
  };
  std::sort(pos.begin(), pos.end(), [&](const auto& a, const auto& b) {
    if (ht(a) != ht(b)) return ht(a) < ht(b);
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
  });
  npos_ = static_cast<int>(pos.size());
  if (2 * npos_ > 256) throw TypeError("root system " + t.name() + " too large");
  roots_ = pos;
  for (const auto& v : pos) {
    std::vector<int> w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) w[i] = -v[i];
    roots_.push_back(w);
  }
  for (int r = 0; r < num_roots(); ++r) index_.emplace(roots_[r], r);

  const int nr = num_roots();
  add_.assign(static_cast<std::size_t>(nr) * nr, -1);
  for (int r = 0; r < nr; ++r)
    for (int s = 0; s < nr; ++s) {
      std::vector<int> v(rank_);
      for (int i = 0; i < rank_; ++i) v[i] = roots_[r][i] + roots_[s][i];
      add_[r * nr + s] = static_cast<std::int16_t>(find(v));
    }

  reflections_.reserve(rank_);
  for (int j = 0; j < rank_; ++j) reflections_.push_back(reflection_of_root(j));

  parent_.assign(npos_, -1);
  step_.assign(npos_, -1);
  for (int r = rank_; r < npos_; ++r)
    for (int j = 0; j < rank_ && parent_[r] < 0; ++j) {
      std::vector<int> v = roots_[r];
      v[j] -= 1;
      const int p = find(v);
      if (p >= 0 && is_positive(p)) {
        parent_[r] = p;
        step_[r] = j;
      }
    }
}

bool RootSystem::is_short(int i) const {
  std::vector<int> all(rank_);
  for (int j = 0; j < rank_; ++j) all[j] = j;
  for (const auto& comp : components(all)) {
    if (std::find(comp.begin(), comp.end(), i) == comp.end()) continue;
    for (int j : comp)
      if (sqlen_[j] > sqlen_[i]) return true;
  }
  return false;
}

int RootSystem::find(const std::vector<int>& coeffs) const {
  auto it = index_.find(coeffs);
  return it == index_.end() ? -1 : it->second;
}

int RootSystem::height(int r) const {
  int h = 0;
  for (int c : roots_[r]) h += c;
  return h;
}

int RootSystem::pairing(int r, int j) const {
  int p = 0;
  for (int i = 0; i < rank_; ++i) p += roots_[r][i] * cartan_[i][j];
  return p;
}

int RootSystem::inner(int r, int t) const {
  // (alpha_i, alpha_j) = cartan(i, j) * |alpha_j|^2 / 2.
  int s = 0;
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j)
      s += roots_[r][i] * roots_[t][j] * cartan_[i][j] * sqlen_[j] / 2;
  return s;
}

Perm RootSystem::reflection_of_root(int r) const {
  const int nr = num_roots();
  const int rr = inner(r, r);
  Perm p(nr);
  for (int x = 0; x < nr; ++x) {
    const int c = 2 * inner(x, r) / rr;
    std::vector<int> v = roots_[x];
    for (int i = 0; i < rank_; ++i) v[i] -= c * roots_[r][i];
    const int y = find(v);
    if (y < 0) throw ConsistencyError("reflection does not preserve the root set");
    p[x] = static_cast<Point>(y);
  }
  return p;
}

Perm RootSystem::extend_from_simple_images(const std::vector<int>& images) const {
  Perm p(num_roots());
  for (int i = 0; i < rank_; ++i) p[i] = static_cast<Point>(images[i]);
  for (int r = rank_; r < npos_; ++r) {
    const int y = add(p[parent_[r]], p[step_[r]]);
    if (y < 0) throw ConsistencyError("simple-root images do not define a Weyl group element");
    p[r] = static_cast<Point>(y);
  }
  for (int r = 0; r < npos_; ++r) p[r + npos_] = static_cast<Point>(negate(p[r]));
  return p;
}

std::vector<int> RootSystem::subsystem_roots(const std::vector<int>& J) const {
  std::vector<bool> in(rank_, false);
  for (int j : J) in[j] = true;
  std::vector<int> out;
  for (int r = 0; r < num_roots(); ++r) {
    bool ok = true;
    for (int i = 0; i < rank_; ++i)
      if (roots_[r][i] != 0 && !in[i]) ok = false;
    if (ok) out.push_back(r);
  }
  return out;
}

std::vector<std::vector<int>> RootSystem::components(const std::vector<int>& J) const {
  std::vector<std::vector<int>> out;
  std::vector<bool> done(rank_, false);
  std::vector<bool> in(rank_, false);
  for (int j : J) in[j] = true;
  for (int j : J) {
    if (done[j]) continue;
    std::vector<int> comp;
    std::vector<int> stack{j};
    done[j] = true;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int w = 0; w < rank_; ++w)
        if (in[w] && !done[w] && cartan_[v][w] != 0) {
          done[w] = true;
          stack.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(comp);
  }
  std::sort(out.begin(), out.end());
  return out;
}

SimpleType RootSystem::component_type(const std::vector<int>& comp) const {
  const int n = static_cast<int>(comp.size());
  if (n == 1) return {Family::A, 1};
  std::vector<int> deg(n, 0);
  int bond = 1;
  int bu = -1, bv = -1;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b || cartan_[comp[a]][comp[b]] == 0) continue;
      ++deg[a];
      const int m = cartan_[comp[a]][comp[b]] * cartan_[comp[b]][comp[a]];
      if (m > 1) {
        bond = m;
        bu = a;
        bv = b;
      }
    }
  if (bond == 3) return {Family::G, 2};
  if (bond == 2) {
    if (n == 2) return {Family::B, 2};
    const bool end_u = deg[bu] == 1, end_v = deg[bv] == 1;
    if (!end_u && !end_v) return {Family::F, 4};
    const int e = end_u ? bu : bv;
    const int other = end_u ? bv : bu;
    // B_n has its unique short root at the end of the double bond.
    if (sqlen_[comp[e]] < sqlen_[comp[other]]) return {Family::B, n};
    return {Family::C, n};
  }
  int branch = -1;
  for (int a = 0; a < n; ++a)
    if (deg[a] == 3) branch = a;
  if (branch < 0) return {Family::A, n};
  std::vector<int> arms;
  for (int a = 0; a < n; ++a) {
    if (a == branch || cartan_[comp[a]][comp[branch]] == 0) continue;
    int len = 1, prev = branch, cur = a;
    for (;;) {
      int next = -1;
      for (int b = 0; b < n; ++b)
        if (b != prev && b != cur && cartan_[comp[cur]][comp[b]] != 0) next = b;
      if (next < 0) break;
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return {Family::D, n};
  return {Family::E, n};
}

CartanType RootSystem::subdiagram_type(const std::vector<int>& J) const {
  std::vector<SimpleType> f;
  for (const auto& c : components(J)) f.push_back(component_type(c));
  return CartanType(std::move(f));
}

}  // namespace springer
