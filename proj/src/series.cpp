#include "springer/series.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <regex>
#include <set>
#include <sstream>

#include "springer/data.hpp"
#include "springer/error.hpp"
#include "springer/levis.hpp"

namespace springer {

namespace {

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

PairLabel char0_label(const CartanType& g, const std::string& orbit, const std::string& local, CentralCharacter chi) {
  const NilpotentOrbit& o = find_orbit(g, orbit);
  const bool bare = chi == CentralCharacter::Nontrivial && o.a_bar.kind() == GroupSpec::Kind::Trivial;
  if (bare && local != "triv") throw DataError("orbit " + orbit + " has no local system " + local);
  return {orbit, bare ? "" : local, chi};
}

}  // namespace

DecompositionMatrix parse_decomposition_matrix(std::string_view text) {
  DecompositionMatrix dm;
  std::istringstream in{std::string(text)};
  std::string line;
  std::set<std::string> seen;
  struct RawRow {
    std::string ordinary, orbit, local, entries;
  };
  std::vector<RawRow> raw;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> f = split_fields(line);
    const std::string& key = f[0];
    if (key == "row") {
      if (f.size() != 5) throw DataError("decomposition row needs 5 fields: " + line);
      raw.push_back({f[1], f[2], f[3], f[4]});
      continue;
    }
    if (f.size() != 2) throw DataError("malformed decomposition record: " + line);
    if (!seen.insert(key).second) throw DataError("repeated field " + key);
    if (key == "id") dm.id = f[1];
    else if (key == "type") dm.type = CartanType::parse(f[1]);
    else if (key == "ell") dm.l = std::stoull(f[1]);
    else if (key == "character") dm.character = parse_character(f[1]);
    else if (key == "levi") dm.levi = f[1];
    else if (key == "group") dm.group = GroupSpec::parse(f[1]);
    else if (key == "partial") dm.partial = f[1] == "yes";
    else if (key == "columns") {
      std::istringstream cs(f[1]);
      for (std::string c; cs >> c;) dm.columns.push_back(c);
    } else throw DataError("unknown decomposition field " + key);
  }
  for (const char* k : {"id", "type", "ell", "character", "levi", "group", "columns"})
    if (!seen.count(k)) throw DataError(std::string("decomposition matrix lacks field ") + k);
  for (const auto& r : raw) {
    DecompositionRow row;
    row.ordinary = r.ordinary;
    row.char0 = char0_label(dm.type, r.orbit, r.local, dm.character);
    std::istringstream es(r.entries);
    for (std::string e; es >> e;) row.entries.push_back(e == "." ? 0 : std::stoi(e));
    if (row.entries.size() != dm.columns.size())
      throw DataError("row " + r.ordinary + " has " + std::to_string(row.entries.size()) + " entries, expected " +
                      std::to_string(dm.columns.size()));
    dm.rows.push_back(std::move(row));
  }
  return dm;
}

namespace {

const std::map<std::string, DecompositionMatrix>& matrices() {
  static const std::map<std::string, DecompositionMatrix> all = [] {
    std::map<std::string, DecompositionMatrix> m;
    for (const std::string& name : embedded_file_names()) {
      if (name.rfind("decomposition/", 0) != 0) continue;
      DecompositionMatrix dm = parse_decomposition_matrix(verified_file(name));
      const std::string id = dm.id;
      if (!m.emplace(id, std::move(dm)).second) throw DataError("duplicate decomposition matrix " + id);
    }
    return m;
  }();
  return all;
}

}  // namespace

std::vector<std::string> decomposition_matrix_ids() {
  std::vector<std::string> out;
  for (const auto& [id, dm] : matrices()) out.push_back(id);
  return out;
}

const DecompositionMatrix& decomposition_matrix(const std::string& id) {
  auto it = matrices().find(id);
  if (it == matrices().end()) throw ArgumentError("no decomposition matrix " + id);
  return it->second;
}

BasicSetResult basic_set(const DecompositionMatrix& dm) {
  BasicSetResult res;
  const CentralCharacter reduced = reduce_character(dm.type, dm.l, dm.character);
  const ClosureGraph& cg = closure_graph(dm.type);
  std::set<std::size_t> used;
  for (std::size_t c = 0; c < dm.columns.size(); ++c) {
    std::size_t top = dm.rows.size();
    for (std::size_t r = 0; r < dm.rows.size(); ++r)
      if (dm.rows[r].entries[c] != 0) {
        top = r;
        break;
      }
    if (top == dm.rows.size()) throw DataError(dm.id + ": column " + dm.columns[c] + " is zero");
    if (dm.rows[top].entries[c] != 1)
      throw DataError(dm.id + ": topmost entry of column " + dm.columns[c] + " is not 1");
    if (!used.insert(top).second) throw DataError(dm.id + ": two columns share row " + dm.rows[top].ordinary);
    res.beta.push_back(top);

    const PairLabel& p = dm.rows[top].char0;
    const NilpotentOrbit& o = find_orbit(dm.type, p.orbit);
    const std::string ordinary = p.local_system.empty() ? "triv" : p.local_system;
    std::optional<std::string> modular = beta_preimage(o.a_bar, dm.l, ordinary);
    if (!modular) throw DataError(dm.id + ": " + p.text() + " has no modular counterpart");
    const bool bare = reduced == CentralCharacter::Nontrivial && o.a_bar.kind() == GroupSpec::Kind::Trivial;
    res.modular_series.push_back({p.orbit, bare ? "" : *modular, reduced});

    // Every other nonzero row must lie below the chosen one: its orbit
    // contains the chosen orbit in its closure, or on the same orbit its
    // local system is smaller.
    for (std::size_t r = top + 1; r < dm.rows.size(); ++r) {
      if (dm.rows[r].entries[c] == 0) continue;
      const PairLabel& q = dm.rows[r].char0;
      bool ok = false;
      if (q.orbit == p.orbit) {
        const std::string a = q.local_system.empty() ? "triv" : q.local_system;
        if (!local_system_leq(o.a_bar, dm.l, a, ordinary))
          throw DataError(dm.id + ": row " + dm.rows[r].ordinary + " is not below " + dm.rows[top].ordinary);
        ok = true;
      } else if (cg.contains(q.orbit, p.orbit)) {
        ok = true;
      } else if (cg.contains(p.orbit, q.orbit)) {
        throw DataError(dm.id + ": row " + dm.rows[r].ordinary + " lies above " + dm.rows[top].ordinary);
      }
      if (ok) ++res.order_checked;
      else res.order_uncovered.push_back(dm.columns[c] + ": " + dm.rows[r].ordinary);
    }
  }
  return res;
}

std::vector<PairLabel> full_e7_chi_series() { return basic_set(decomposition_matrix("E7.l3.chi")).modular_series; }

std::string series_status_name(SeriesStatus s) {
  switch (s) {
    case SeriesStatus::Determined: return "determined";
    case SeriesStatus::Expected: return "expected";
    case SeriesStatus::Undetermined: return "undetermined";
  }
  return "?";
}

std::string PictureSeries::label() const { return datum ? datum->text() : "cuspidal"; }

bool CorrespondencePicture::complete() const {
  return std::all_of(series.begin(), series.end(),
                     [](const PictureSeries& s) { return s.status != SeriesStatus::Undetermined; });
}

std::string bala_carter_levi(const std::string& orbit) {
  if (orbit == "0") return "T";
  static const std::regex decoration(R"(\((a|b)\d\))");
  return std::regex_replace(orbit, decoration, "");
}

bool levi_contains(const CartanType& g, const std::string& larger, const std::string& smaller) {
  const LeviClass& big = find_levi(g, larger);
  const LeviClass& small = find_levi(g, smaller);
  for (const auto& K : big.conjugates)
    for (const auto& S : small.conjugates)
      if (std::includes(K.begin(), K.end(), S.begin(), S.end())) return true;
  return false;
}

namespace {

struct SeriesData {
  std::string status;
  bool complement = false;
  std::vector<std::pair<std::string, std::string>> members;
};

const std::map<std::tuple<std::string, std::uint64_t, CentralCharacter, std::string>, SeriesData>& series_data() {
  static const auto data = [] {
    std::map<std::tuple<std::string, std::uint64_t, CentralCharacter, std::string>, SeriesData> d;
    for (const std::string& rec : data_records("series.txt")) {
      std::vector<std::string> f = split_fields(rec);
      if (f.size() != 7 || f[0] != "series") throw DataError("series.txt: malformed record: " + rec);
      SeriesData s;
      s.status = f[5];
      if (s.status != "determined" && s.status != "expected") throw DataError("series.txt: bad status " + f[5]);
      if (f[6] == "*") {
        s.complement = true;
      } else {
        for (const std::string& m : split_fields(f[6], ';')) {
          auto colon = m.rfind(':');
          if (colon == std::string::npos) throw DataError("series.txt: bad member " + m);
          s.members.emplace_back(m.substr(0, colon), m.substr(colon + 1));
        }
      }
      d[{f[1], std::stoull(f[2]), parse_character(f[3]), f[4]}] = s;
    }
    return d;
  }();
  return data;
}

}  // namespace

CorrespondencePicture correspondence_picture(const CartanType& g, std::uint64_t l, CentralCharacter chi) {
  const InductionTable& table = induction_table(g, l, chi);
  const std::vector<PairLabel> all = pairs(g, l, chi);
  CorrespondencePicture pic;
  pic.type = g;
  pic.l = l;
  pic.chi = chi;

  auto make_label = [&](const std::string& orbit, const std::string& local) {
    const NilpotentOrbit& o = find_orbit(g, orbit);
    const bool bare = chi == CentralCharacter::Nontrivial && o.a_bar.kind() == GroupSpec::Kind::Trivial;
    PairLabel p{orbit, bare ? "" : local, chi};
    if (std::find(all.begin(), all.end(), p) == all.end())
      throw DataError("series data names an unknown pair " + p.text() + " in " + g.name());
    return p;
  };

  std::vector<std::size_t> complement_slots;
  for (const SeriesRecord& rec : table.series) {
    PictureSeries s;
    s.datum = rec.datum;
    s.size = rec.size;
    for (const auto& [id, dm] : matrices()) {
      if (dm.type != g || dm.l != l || dm.levi != rec.datum.levi) continue;
      if (reduce_character(g, l, dm.character) != chi) continue;
      BasicSetResult bs = basic_set(dm);
      if (bs.modular_series.size() == rec.size) {
        s.members = bs.modular_series;
        s.status = SeriesStatus::Determined;
        s.source = "table " + id;
      }
    }
    auto it = series_data().find({g.name(), l, chi, rec.datum.levi});
    if (s.status == SeriesStatus::Undetermined && it != series_data().end()) {
      const SeriesData& d = it->second;
      s.source = "data";
      if (d.complement) {
        complement_slots.push_back(pic.series.size());
        s.status = SeriesStatus::Determined;
      } else {
        for (const auto& [o, ls] : d.members) s.members.push_back(make_label(o, ls));
        s.status = d.status == "determined" ? SeriesStatus::Determined : SeriesStatus::Expected;
      }
    }
    pic.series.push_back(std::move(s));
  }
  {
    PictureSeries s;
    s.size = table.cuspidal.count;
    s.source = "cuspidal";
    bool all_proven = true, any_open = false;
    for (const auto& e : table.cuspidal.entries) {
      if (e.status == PairStatus::Unresolved) any_open = true;
      else s.members.push_back(e.pair);
      if (e.status != PairStatus::Proven) all_proven = false;
    }
    if (any_open) {
      s.status = SeriesStatus::Undetermined;
    } else {
      s.status = all_proven ? SeriesStatus::Determined : SeriesStatus::Expected;
    }
    pic.series.push_back(std::move(s));
  }

  // A single series left open is what the others leave over.
  std::vector<std::size_t> open = complement_slots;
  for (std::size_t i = 0; i < pic.series.size(); ++i)
    if (pic.series[i].status == SeriesStatus::Undetermined) open.push_back(i);
  std::sort(open.begin(), open.end());
  open.erase(std::unique(open.begin(), open.end()), open.end());
  if (open.size() == 1 && pic.series[open[0]].datum) {
    PictureSeries& target = pic.series[open[0]];
    std::set<PairLabel> taken;
    bool all_determined = true;
    for (std::size_t i = 0; i < pic.series.size(); ++i) {
      if (i == open[0]) continue;
      taken.insert(pic.series[i].members.begin(), pic.series[i].members.end());
      if (pic.series[i].status != SeriesStatus::Determined) all_determined = false;
    }
    target.members.clear();
    for (const auto& p : all)
      if (!taken.count(p)) target.members.push_back(p);
    const bool was_data = target.source == "data";
    if (!was_data) target.source = "complement";
    target.status = all_determined || was_data ? SeriesStatus::Determined : SeriesStatus::Expected;
  } else {
    for (std::size_t i : complement_slots) pic.series[i].status = SeriesStatus::Undetermined;
  }

  // Bookkeeping checks.
  std::set<PairLabel> seen;
  for (const auto& s : pic.series) {
    if (s.status != SeriesStatus::Undetermined && s.members.size() != s.size)
      throw ConsistencyError(g.name() + ": series " + s.label() + " has " + std::to_string(s.members.size()) +
                             " members, expected " + std::to_string(s.size));
    for (const auto& p : s.members) {
      if (std::find(all.begin(), all.end(), p) == all.end())
        throw ConsistencyError(g.name() + ": " + p.text() + " is not a pair with this central character");
      if (!seen.insert(p).second) throw ConsistencyError(g.name() + ": " + p.text() + " lies in two series");
      if (s.datum && s.datum->levi != "T" && !levi_contains(g, bala_carter_levi(p.orbit), s.datum->levi))
        throw ConsistencyError(g.name() + ": " + p.text() + " violates the Levi rule for " + s.label());
    }
  }
  return pic;
}

}  // namespace springer
