#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "springer/character.hpp"
#include "springer/rootsys.hpp"

namespace springer {

using Json = nlohmann::json;

// A report is a JSON document; text and CSV are renderings of its flat view.
struct Report {
  std::string kind;  // "table1", "sylow", "appendix", "series", "classify", "verify"
  Json doc = Json::object();

  bool operator==(const Report&) const = default;
};

struct FlatTable {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  bool operator==(const FlatTable&) const = default;
};

Report table1_report();
Report sylow_report();
Report appendix_report(const CartanType& g, std::uint64_t l, CentralCharacter chi);
Report series_report(const CartanType& g, std::uint64_t l, CentralCharacter chi, const std::string& datum = "");
Report classify_report(const CartanType& g, std::uint64_t l, CentralCharacter chi);

// One compared cell of a verification run.
struct Check {
  std::string group;  // "table1", "table2", "appendix", "basic_set", "lemma"
  std::string item;
  std::string expected;
  std::string computed;
  bool match = false;
};

std::vector<Check> verify_table1();
std::vector<Check> verify_table2();
std::vector<Check> verify_appendix();
std::vector<Check> verify_basic_sets();
std::vector<Check> verify_lemma();
std::vector<Check> verify_all_checks();
Report verify_report(const std::vector<Check>& checks);
bool report_ok(const Report& r);  // false if any check in a verify report failed

// Canonical JSON: sorted keys, two-space indent, trailing newline.
std::string emit_json(const Report& r);
Report parse_json_report(std::string_view kind, std::string_view text);
FlatTable flat_table(const Report& r);
std::string emit_csv(const Report& r);
FlatTable parse_csv(std::string_view text);
std::string emit_text(const Report& r);

// Classical Sylow entry "b1*A_{l-1}+b2*A_{l^2-1}+..." or "G", evaluated at
// rank n and prime l.
CartanType evaluate_sylow_text(std::string_view text, const SimpleType& t, std::uint64_t l);

// Golden data compiled into the library.
const Json& golden(std::string_view name);  // "appendix", "table1", "sylow", "basic_sets", "lemma"

}  // namespace springer
