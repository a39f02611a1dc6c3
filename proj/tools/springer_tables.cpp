// Command-line front end: regenerates the tables and diffs them against the
// golden data.
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "springer/error.hpp"
#include "springer/tables.hpp"

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

std::string render(const springer::Report& r, const std::string& format) {
  if (format == "json") return springer::emit_json(r);
  if (format == "csv") return springer::emit_csv(r);
  return springer::emit_text(r);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cuspidal data and induction series of exceptional groups"};
  app.require_subcommand(1);
  std::string format = "text";
  std::string out_path;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "csv", "json"}));
  app.add_option("--out", out_path, "Write the report to this file");

  std::string type, chi = "trivial", datum;
  unsigned long long ell = 0;
  auto add_target = [&](CLI::App* cmd, bool with_datum) {
    cmd->add_option("--type", type, "Exceptional type: G2, F4, E6, E7, E8")->required();
    cmd->add_option("--ell", ell, "Characteristic, a prime")->required();
    cmd->add_option("--chi", chi, "Central character")->check(CLI::IsMember({"trivial", "nontrivial"}));
    if (with_datum) cmd->add_option("--datum", datum, "Series label or Levi name, or \"cuspidal\"");
  };

  auto* report = app.add_subcommand("report", "Regenerate a table");
  report->require_subcommand(1);
  report->fallthrough();
  auto* table1 = report->add_subcommand("table1", "Counts of cuspidal pairs");
  auto* sylow = report->add_subcommand("sylow", "Sylow classes of Levi subgroups");
  auto* appendix = report->add_subcommand("appendix", "Cuspidal data and induction series sizes");
  add_target(appendix, false);
  for (auto* c : {table1, sylow, appendix}) c->fallthrough();
  auto* series = app.add_subcommand("series", "Members of the induction series");
  add_target(series, true);
  auto* classify = app.add_subcommand("classify", "Cuspidal pairs with their status");
  add_target(classify, false);
  auto* verify = app.add_subcommand("verify", "Recompute everything and compare with the golden data");
  bool all = false;
  verify->add_flag("--all", all, "Run every check")->required();
  for (auto* c : {series, classify, verify}) c->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  springer::Report r;
  try {
    const auto target = [&] { return springer::CartanType::parse(type); };
    const auto character = [&] { return springer::parse_character(chi); };
    if (table1->parsed()) r = springer::table1_report();
    else if (sylow->parsed()) r = springer::sylow_report();
    else if (appendix->parsed()) r = springer::appendix_report(target(), ell, character());
    else if (series->parsed()) r = springer::series_report(target(), ell, character(), datum);
    else if (classify->parsed()) r = springer::classify_report(target(), ell, character());
    else r = springer::verify_report(springer::verify_all_checks());
  } catch (const springer::TypeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const springer::ArgumentError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const springer::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMismatch;
  }

  const std::string text = render(r, format);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f || !(f << text)) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return kExitUsage;
    }
  }
  if (!springer::report_ok(r)) {
    if (format != "text") {
      // The diff goes to stderr so structured output stays parseable.
      for (const auto& c : r.doc["checks"])
        if (!c["match"].get<bool>())
          std::cerr << "mismatch " << c["group"].get<std::string>() << " " << c["item"].get<std::string>()
                    << ": expected " << c["expected"].get<std::string>() << ", computed "
                    << c["computed"].get<std::string>() << "\n";
    }
    return kExitMismatch;
  }
  return 0;
}
