#include "springer/tables.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <regex>
#include <set>
#include <sstream>

#include "springer/classdata.hpp"
#include "springer/cuspidal.hpp"
#include "springer/data.hpp"
#include "springer/error.hpp"
#include "springer/levis.hpp"
#include "springer/orbits.hpp"
#include "springer/series.hpp"

namespace springer {

namespace {

const std::vector<std::string> kExceptional = {"G2", "F4", "E6", "E7", "E8"};
const std::vector<std::pair<std::string, std::uint64_t>> kTable1Columns = {{"2", 2}, {"3", 3}, {"5", 5}, {"ge7", 7}};

std::string chi_key(CentralCharacter chi) {
  return chi == CentralCharacter::Trivial ? "chi_trivial" : "chi_nontrivial";
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string cell_string(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
  if (v.is_null()) return "";
  return v.dump();
}

std::vector<std::string> texts(const std::vector<PairLabel>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.text());
  return out;
}

std::string table1_cell(const CartanType& g, std::uint64_t l, CentralCharacter chi) {
  if (!character_valid(g, l, chi)) return "-";
  return std::to_string(cuspidal_count(g, l, chi));
}

std::vector<std::uint64_t> primes_dividing(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

const Json& golden(std::string_view name) {
  static std::mutex mu;
  static std::map<std::string, Json, std::less<>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(name);
  if (it != cache.end()) return it->second;
  const std::string file = "golden/" + std::string(name) + ".json";
  Json j;
  try {
    j = Json::parse(embedded_file(file));
  } catch (const Json::exception& e) {
    throw DataError(file + ": " + e.what());
  }
  return cache.emplace(std::string(name), std::move(j)).first->second;
}

Report table1_report() {
  Report r{"table1", Json::object()};
  for (const std::string& t : kExceptional) {
    const CartanType g = CartanType::parse(t);
    std::vector<CentralCharacter> chis = {CentralCharacter::Trivial};
    if (center_order(g) > 1) chis.push_back(CentralCharacter::Nontrivial);
    for (CentralCharacter chi : chis)
      for (const auto& [col, l] : kTable1Columns) {
        const std::string v = table1_cell(g, l, chi);
        r.doc[t][chi_key(chi)][col] = v == "-" ? Json(v) : Json(std::stoi(v));
      }
  }
  return r;
}

Report sylow_report() {
  Report r{"sylow", Json::object()};
  for (const std::string& t : kExceptional) {
    const CartanType g = CartanType::parse(t);
    for (std::uint64_t l : primes_dividing(weyl_order(g))) r.doc[t][std::to_string(l)] = sylow_class(g, l).name;
  }
  r.doc["A"]["any"] = sylow_formula_text(Family::A, 3);
  for (const auto& [name, f] : {std::pair{"B", Family::B}, {"C", Family::C}, {"D", Family::D}}) {
    r.doc[name]["2"] = sylow_formula_text(f, 2);
    r.doc[name]["odd"] = sylow_formula_text(f, 3);
  }
  return r;
}

Report appendix_report(const CartanType& g, std::uint64_t l, CentralCharacter chi) {
  require_valid_character(g, l, chi);
  const InductionTable& table = induction_table(g, l, chi);
  Report r{"appendix", Json::object()};
  r.doc["type"] = g.name();
  r.doc["ell"] = l;
  r.doc["chi"] = character_name(chi);
  r.doc["rows"] = Json::array();
  for (const SeriesRecord& s : table.series)
    r.doc["rows"].push_back({{"levi", s.datum.levi},
                             {"datum", s.datum.text()},
                             {"quotient", s.quotient.name()},
                             {"size", s.size},
                             {"status", status_name(s.status)}});
  Json entries = Json::array();
  bool complete = true;
  for (const CuspidalEntry& e : table.cuspidal.entries) {
    entries.push_back({{"status", status_name(e.status)}, {"pair", e.text()}});
    if (e.status != PairStatus::Proven) complete = false;
  }
  r.doc["cuspidal"] = {{"count", table.cuspidal.count}, {"complete", complete}, {"entries", entries}};
  r.doc["total"] = table.total;
  return r;
}

Report series_report(const CartanType& g, std::uint64_t l, CentralCharacter chi, const std::string& datum) {
  require_valid_character(g, l, chi);
  const CorrespondencePicture pic = correspondence_picture(g, l, chi);
  Report r{"series", Json::object()};
  r.doc["type"] = g.name();
  r.doc["ell"] = l;
  r.doc["chi"] = character_name(chi);
  r.doc["complete"] = pic.complete();
  r.doc["series"] = Json::array();
  for (const PictureSeries& s : pic.series) {
    const std::string levi = s.datum ? s.datum->levi : g.name();
    if (!datum.empty() && datum != s.label() && datum != levi && !(datum == "cuspidal" && !s.datum)) continue;
    r.doc["series"].push_back({{"label", s.label()},
                               {"levi", levi},
                               {"size", s.size},
                               {"status", series_status_name(s.status)},
                               {"source", s.source},
                               {"members", texts(s.members)}});
  }
  if (!datum.empty() && r.doc["series"].empty())
    throw ArgumentError("no series " + datum + " for " + g.name() + " at l=" + std::to_string(l));
  return r;
}

Report classify_report(const CartanType& g, std::uint64_t l, CentralCharacter chi) {
  require_valid_character(g, l, chi);
  const CuspidalReport& rep = classify_cuspidal_pairs(g, l, chi);
  Report r{"classify", Json::object()};
  r.doc["type"] = g.name();
  r.doc["ell"] = l;
  r.doc["chi"] = character_name(chi);
  r.doc["count"] = rep.count;
  r.doc["good"] = good_prime(g, l);
  r.doc["rather_good"] = rather_good(g, l);
  r.doc["easy"] = easy(g, l);
  r.doc["regular_orbit_cuspidal"] = oreg_is_cuspidal(g, l);
  r.doc["entries"] = Json::array();
  for (const CuspidalEntry& e : rep.entries)
    r.doc["entries"].push_back({{"status", status_name(e.status)}, {"pair", e.text()}});
  return r;
}

// Verification.

namespace {

Check make_check(std::string group, std::string item, std::string expected, std::string computed) {
  Check c{std::move(group), std::move(item), std::move(expected), std::move(computed), false};
  c.match = c.expected == c.computed;
  return c;
}

// Set difference rendering, so a mismatch shows only the differing cells.
void diff_lines(const std::vector<std::string>& expected, const std::vector<std::string>& computed, Check& c) {
  std::multiset<std::string> e(expected.begin(), expected.end()), k(computed.begin(), computed.end());
  c.match = e == k;
  std::vector<std::string> only_e, only_k;
  std::set_difference(e.begin(), e.end(), k.begin(), k.end(), std::back_inserter(only_e));
  std::set_difference(k.begin(), k.end(), e.begin(), e.end(), std::back_inserter(only_k));
  if (c.match) {
    c.expected = c.computed = std::to_string(expected.size()) + " cells";
  } else {
    c.expected = join(only_e, "; ");
    c.computed = join(only_k, "; ");
  }
}

std::vector<std::string> golden_appendix_lines(const Json& t) {
  std::vector<std::string> out;
  for (const Json& row : t["rows"]) {
    const std::string q = GroupSpec::parse(row["quotient"].get<std::string>()).name();
    const std::string size = std::to_string(row["size"].get<int>());
    if (row.contains("unnamed")) {
      for (int i = 0; i < row["unnamed"].get<int>(); ++i)
        out.push_back("open " + row["levi"].get<std::string>() + " | " + q + " | " + size);
    } else {
      out.push_back(row["datum"].get<std::string>() + " | " + q + " | " + size);
    }
  }
  const Json& c = t["cuspidal"];
  std::vector<std::string> named = c["named"].get<std::vector<std::string>>();
  std::sort(named.begin(), named.end());
  out.push_back("cuspidal " + std::to_string(c["count"].get<int>()) + (c["complete"].get<bool>() ? "" : " incl.") +
                " {" + join(named, ", ") + "}");
  out.push_back("total " + std::to_string(t["total"].get<int>()));
  return out;
}

std::vector<std::string> computed_appendix_lines(const InductionTable& table) {
  std::vector<std::string> out;
  std::size_t sum = table.cuspidal.count;
  for (const SeriesRecord& s : table.series) {
    const std::string tail = " | " + s.quotient.name() + " | " + std::to_string(s.size);
    out.push_back(s.status == PairStatus::Proven ? s.datum.text() + tail : "open " + s.datum.levi + tail);
    sum += s.size;
  }
  std::vector<std::string> named;
  bool complete = true;
  for (const CuspidalEntry& e : table.cuspidal.entries) {
    if (e.status == PairStatus::Proven) named.push_back(e.pair.text());
    else complete = false;
  }
  std::sort(named.begin(), named.end());
  out.push_back("cuspidal " + std::to_string(table.cuspidal.count) + (complete ? "" : " incl.") + " {" +
                join(named, ", ") + "}");
  out.push_back("total " + std::to_string(table.total));
  if (sum != table.total) out.push_back("sizes sum to " + std::to_string(sum));
  return out;
}

}  // namespace

std::vector<Check> verify_table1() {
  std::vector<Check> out;
  const Json& gold = golden("table1");
  for (const auto& [t, by_chi] : gold.items()) {
    const CartanType g = CartanType::parse(t);
    for (const auto& [ck, cells] : by_chi.items()) {
      const CentralCharacter chi = ck == "chi_trivial" ? CentralCharacter::Trivial : CentralCharacter::Nontrivial;
      for (const auto& [col, l] : kTable1Columns) {
        std::string computed = table1_cell(g, l, chi);
        if (col == "ge7") {
          const std::string at11 = table1_cell(g, 11, chi);
          if (at11 != computed) computed = "l=7:" + computed + " l=11:" + at11;
        }
        out.push_back(make_check("table1", t + " " + ck + " l=" + col, cell_string(cells.at(col)), computed));
      }
    }
  }
  return out;
}

CartanType evaluate_sylow_text(std::string_view text, const SimpleType& t, std::uint64_t l) {
  if (text == "G") return CartanType({t});
  static const std::regex term(R"(b(\d+)\*A_\{l(?:\^(\d+))?-1\})");
  std::vector<std::string> terms;
  std::string s(text);
  for (std::size_t pos = 0;;) {
    const std::size_t plus = s.find('+', pos);
    terms.push_back(s.substr(pos, plus == std::string::npos ? std::string::npos : plus - pos));
    if (plus == std::string::npos) break;
    pos = plus + 1;
  }
  const bool open_ended = !terms.empty() && terms.back() == "...";
  if (open_ended) terms.pop_back();
  std::vector<int> listed;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    std::smatch m;
    if (!std::regex_match(terms[i], m, term)) throw ArgumentError("bad Sylow term '" + terms[i] + "'");
    const int idx = std::stoi(m[1].str());
    const int power = m[2].matched ? std::stoi(m[2].str()) : 1;
    if (idx != power || idx != static_cast<int>(i) + 1) throw ArgumentError("Sylow term out of sequence: " + terms[i]);
    listed.push_back(idx);
  }
  const int n = t.family == Family::A ? t.rank + 1 : t.rank;
  const std::vector<int> digits = base_l_digits(static_cast<std::uint64_t>(n), l);
  std::vector<SimpleType> parts;
  std::uint64_t power = 1;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i > 0) {
      const bool covered = open_ended || static_cast<int>(i) <= static_cast<int>(listed.size());
      if (!covered && digits[i] > 0) throw ArgumentError("Sylow text has no term for digit " + std::to_string(i));
      for (int k = 0; k < digits[i]; ++k) parts.push_back({Family::A, static_cast<int>(power) - 1});
    }
    power *= l;
  }
  return CartanType(parts);
}

std::vector<Check> verify_table2() {
  std::vector<Check> out;
  const Json& gold = golden("sylow");
  const Report rep = sylow_report();
  for (const auto& [t, cells] : gold.items()) {
    std::vector<std::string> exp, got;
    for (const auto& [l, v] : cells.items()) {
      exp.push_back(l + ":" + v.get<std::string>());
      got.push_back(l + ":" + (rep.doc.contains(t) && rep.doc[t].contains(l) ? rep.doc[t][l].get<std::string>() : "?"));
    }
    if (t.size() == 1) {
      // Classical row: the text must evaluate to the formula and agree with
      // the search branch for small ranks.
      const Family f = CartanType::parse(t + "4").simple().family;
      const int lo = f == Family::C ? 3 : f == Family::D ? 4 : f == Family::B ? 2 : 1;
      for (int n = lo; n <= 8; ++n)
        for (std::uint64_t l : {2, 3, 5, 7}) {
          const SimpleType st{f, n};
          const std::string text = rep.doc[t].contains("any") ? rep.doc[t]["any"].get<std::string>()
                                   : l == 2                   ? rep.doc[t]["2"].get<std::string>()
                                                              : rep.doc[t]["odd"].get<std::string>();
          const CartanType parsed = evaluate_sylow_text(text, st, l);
          const CartanType formula = sylow_class_formula(st, l);
          const CartanType searched = sylow_class_search(CartanType({st}), l).type;
          if (!(parsed == formula && formula == searched))
            got.push_back("disagree " + st.name() + " l=" + std::to_string(l) + ": text " + parsed.name() +
                          ", formula " + formula.name() + ", search " + searched.name());
        }
    }
    out.push_back(make_check("table2", t, join(exp, " "), join(got, " ")));
  }
  return out;
}

std::vector<Check> verify_appendix() {
  std::vector<Check> out;
  const Json& gold = golden("appendix");
  for (const auto& [key, t] : gold["tables"].items()) {
    const CartanType g = CartanType::parse(t["type"].get<std::string>());
    const CentralCharacter chi = parse_character(t["chi"].get<std::string>());
    const std::vector<std::string> expected = golden_appendix_lines(t);
    for (std::uint64_t l : t["primes"].get<std::vector<std::uint64_t>>()) {
      Check c{"appendix", key + " l=" + std::to_string(l), "", "", false};
      diff_lines(expected, computed_appendix_lines(induction_table(g, l, chi)), c);
      out.push_back(std::move(c));
    }
  }
  return out;
}

std::vector<Check> verify_basic_sets() {
  std::vector<Check> out;
  for (const auto& [id, pairs_json] : golden("basic_sets").items()) {
    const auto expected = pairs_json.get<std::vector<std::string>>();
    std::string computed;
    try {
      computed = join(texts(basic_set(decomposition_matrix(id)).modular_series), "; ");
    } catch (const Error& e) {
      computed = std::string("error: ") + e.what();
    }
    out.push_back(make_check("basic_set", id, join(expected, "; "), computed));
  }
  return out;
}

std::vector<Check> verify_lemma() {
  std::vector<Check> out;
  for (const auto& [t, by_l] : golden("lemma").items()) {
    const CartanType g = CartanType::parse(t);
    for (const auto& [ls, v] : by_l.items()) {
      const std::uint64_t l = std::stoull(ls);
      const LeviClass& levi = find_levi(g, sylow_class(g, l).name);
      const std::size_t quotient_classes = class_stats(levi.normalizer_quotient).num_classes();
      const std::size_t singular = count_l_singular(GroupSpec::weyl(g), l);
      const std::string e = std::to_string(v.get<int>());
      out.push_back(make_check("lemma", t + " l=" + ls + " (" + levi.name + ")", "quotient " + e + ", singular " + e,
                               "quotient " + std::to_string(quotient_classes) + ", singular " +
                                   std::to_string(singular)));
    }
  }
  return out;
}

std::vector<Check> verify_all_checks() {
  std::vector<Check> all;
  for (auto f : {verify_table1, verify_table2, verify_appendix, verify_basic_sets, verify_lemma}) {
    auto part = f();
    all.insert(all.end(), part.begin(), part.end());
  }
  return all;
}

Report verify_report(const std::vector<Check>& checks) {
  Report r{"verify", Json::object()};
  bool ok = true;
  r.doc["checks"] = Json::array();
  r.doc["summary"] = Json::object();
  for (const Check& c : checks) {
    r.doc["checks"].push_back(
        {{"group", c.group}, {"item", c.item}, {"expected", c.expected}, {"computed", c.computed}, {"match", c.match}});
    Json& s = r.doc["summary"][c.group];
    if (!s.contains("total")) s = {{"passed", 0}, {"total", 0}};
    s["total"] = s["total"].get<int>() + 1;
    if (c.match) s["passed"] = s["passed"].get<int>() + 1;
    ok = ok && c.match;
  }
  r.doc["ok"] = ok;
  return r;
}

bool report_ok(const Report& r) {
  if (r.kind != "verify") return true;
  return r.doc.value("ok", false);
}

// Rendering.

std::string emit_json(const Report& r) { return r.doc.dump(2) + "\n"; }

Report parse_json_report(std::string_view kind, std::string_view text) {
  try {
    return Report{std::string(kind), Json::parse(text)};
  } catch (const Json::exception& e) {
    throw ArgumentError(std::string("malformed report JSON: ") + e.what());
  }
}

FlatTable flat_table(const Report& r) {
  FlatTable t;
  const Json& d = r.doc;
  if (r.kind == "table1") {
    t.columns = {"type", "chi", "l=2", "l=3", "l=5", "l>=7"};
    for (const std::string& g : kExceptional) {
      if (!d.contains(g)) continue;
      for (const auto& [ck, cells] : d[g].items()) {
        std::vector<std::string> row = {g, ck == "chi_trivial" ? "trivial" : "nontrivial"};
        for (const auto& [col, l] : kTable1Columns) row.push_back(cell_string(cells[col]));
        t.rows.push_back(row);
      }
    }
  } else if (r.kind == "sylow") {
    t.columns = {"type", "l", "sylow_class"};
    for (const auto& [g, cells] : d.items())
      for (const auto& [l, v] : cells.items()) t.rows.push_back({g, l, cell_string(v)});
  } else if (r.kind == "appendix") {
    t.columns = {"levi", "datum", "quotient", "size", "status"};
    for (const Json& row : d["rows"])
      t.rows.push_back({cell_string(row["levi"]), cell_string(row["datum"]), cell_string(row["quotient"]),
                        cell_string(row["size"]), cell_string(row["status"])});
    for (const Json& e : d["cuspidal"]["entries"])
      t.rows.push_back({cell_string(d["type"]), cell_string(e["pair"]), "1", "1", cell_string(e["status"])});
  } else if (r.kind == "series") {
    t.columns = {"series", "size", "status", "source", "members"};
    for (const Json& s : d["series"]) {
      std::vector<std::string> members;
      for (const Json& m : s["members"]) members.push_back(m.get<std::string>());
      t.rows.push_back({cell_string(s["label"]), cell_string(s["size"]), cell_string(s["status"]),
                        cell_string(s["source"]), join(members, "; ")});
    }
  } else if (r.kind == "classify") {
    t.columns = {"status", "pair"};
    for (const Json& e : d["entries"]) t.rows.push_back({cell_string(e["status"]), cell_string(e["pair"])});
  } else if (r.kind == "verify") {
    t.columns = {"group", "item", "result", "expected", "computed"};
    for (const Json& c : d["checks"])
      t.rows.push_back({cell_string(c["group"]), cell_string(c["item"]), c["match"].get<bool>() ? "PASS" : "FAIL",
                        cell_string(c["expected"]), cell_string(c["computed"])});
  } else if (!d.empty()) {
    throw ArgumentError("no flat view for report kind " + r.kind);
  }
  return t;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_line(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) out += (i ? "," : "") + csv_field(fields[i]);
  return out + "\n";
}

}  // namespace

std::string emit_csv(const Report& r) {
  const FlatTable t = flat_table(r);
  if (t.columns.empty()) return "";
  std::string out = csv_line(t.columns);
  for (const auto& row : t.rows) out += csv_line(row);
  return out;
}

FlatTable parse_csv(std::string_view text) {
  std::vector<std::vector<std::string>> lines;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false, any = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
      continue;
    }
    if (c == '"') {
      quoted = true;
      any = true;
    } else if (c == ',') {
      row.push_back(std::move(field));
      field.clear();
      any = true;
    } else if (c == '\n') {
      row.push_back(std::move(field));
      field.clear();
      lines.push_back(std::move(row));
      row.clear();
      any = false;
    } else if (c != '\r') {
      field += c;
      any = true;
    }
  }
  if (quoted) throw ArgumentError("unterminated quoted CSV field");
  if (any) {
    row.push_back(std::move(field));
    lines.push_back(std::move(row));
  }
  FlatTable t;
  if (lines.empty()) return t;
  t.columns = lines.front();
  t.rows.assign(lines.begin() + 1, lines.end());
  for (const auto& r : t.rows)
    if (r.size() != t.columns.size()) throw ArgumentError("CSV row width differs from header");
  return t;
}

std::string emit_text(const Report& r) {
  std::ostringstream out;
  const Json& d = r.doc;
  if (r.kind == "verify") {
    for (const Json& c : d["checks"]) {
      const bool ok = c["match"].get<bool>();
      out << (ok ? "PASS " : "FAIL ") << c["group"].get<std::string>() << ": " << c["item"].get<std::string>() << "\n";
      if (!ok) {
        out << "  expected: " << c["expected"].get<std::string>() << "\n";
        out << "  computed: " << c["computed"].get<std::string>() << "\n";
      }
    }
    for (const auto& [g, s] : d["summary"].items())
      out << g << ": " << s["passed"].get<int>() << "/" << s["total"].get<int>() << " match\n";
    out << (d.value("ok", false) ? "all checks match\n" : "MISMATCH\n");
    return out.str();
  }
  if (r.kind == "appendix" || r.kind == "series" || r.kind == "classify")
    out << d["type"].get<std::string>() << ", l=" << d["ell"].get<std::uint64_t>() << ", "
        << d["chi"].get<std::string>() << " central character\n";
  const FlatTable t = flat_table(r);
  std::vector<std::size_t> width(t.columns.size());
  for (std::size_t i = 0; i < t.columns.size(); ++i) width[i] = t.columns[i].size();
  for (const auto& row : t.rows)
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  auto line = [&](const std::vector<std::string>& row) {
    std::string s;
    for (std::size_t i = 0; i < row.size(); ++i) {
      s += row[i];
      if (i + 1 < row.size()) s += std::string(width[i] - row[i].size() + 2, ' ');
    }
    out << s << "\n";
  };
  if (!t.columns.empty()) line(t.columns);
  for (const auto& row : t.rows) line(row);
  if (r.kind == "appendix")
    out << "cuspidal pairs: " << d["cuspidal"]["count"].get<int>() << (d["cuspidal"]["complete"].get<bool>() ? "" : " (incl.)")
        << ", total: " << d["total"].get<int>() << "\n";
  if (r.kind == "classify") out << "cuspidal pairs: " << d["count"].get<int>() << "\n";
  return out.str();
}

}  // namespace springer
