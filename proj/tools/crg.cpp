#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "crg/cli.hpp"

namespace {

constexpr int kUsageError = 2;

crg::Rational parse_sample(const std::string& text) {
  crg::Rational x;
  if (x.set_str(text, 10) != 0) throw std::invalid_argument("--m expects a rational such as 7 or 22/7");
  x.canonicalize();
  return x;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Discriminants and monodromy checks for complex reflection groups"};
  app.require_subcommand(1);

  std::string group, format = "text", suite = "all", sample, which, fixture;
  bool timings = false, force = false;
  int e_max = 9, r_max = 5;

  auto* disc = app.add_subcommand("discriminants", "discriminant of the quadratic form, per class");
  disc->add_option("--group", group, "group specification, e.g. G(3,3,3) or E6")->required();
  disc->add_option("--format", format, "text|json|csv");

  auto* ver = app.add_subcommand("verify", "run verification suites on one group");
  ver->add_option("--group", group, "group specification")->required();
  ver->add_option("--suite", suite, "core|spectral|tensor|parabolic|dihedral|krammer|all");
  ver->add_option("--m", sample, "sample value for the spectral and tensor checks");
  ver->add_option("--format", format, "text|json|csv");
  ver->add_flag("--timings", timings, "report elapsed time per check");
  ver->add_flag("--force", force, "run tensor checks on classes larger than 12");

  auto* tab = app.add_subcommand("tables", "regress a shipped table fixture");
  tab->add_option("--which", which, "1|2|prop81")->required()->check(CLI::IsMember({"1", "2", "prop81"}));
  tab->add_option("--fixture", fixture, "fixture path (default: data dir tables.json)");

  auto* conj = app.add_subcommand("conjecture", "scan G(e,e,r) for odd e against the conjectured formula");
  conj->add_option("--e-max", e_max, "largest e")->check(CLI::PositiveNumber);
  conj->add_option("--r-max", r_max, "largest r")->check(CLI::PositiveNumber);
  conj->add_option("--format", format, "text|json|csv");

  app.add_subcommand("list-groups", "show the accepted group names");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  const std::string dir = crg::data_dir();
  try {
    if (*disc) {
      crg::OutputFormat f = crg::parse_format(format);
      crg::GroupSpec spec = crg::parse_group(group, dir);
      std::cout << crg::format_discriminants(spec, crg::build_group(spec, dir), f);
      return 0;
    }
    if (*ver) {
      crg::OutputFormat f = crg::parse_format(format);
      crg::GroupSpec spec = crg::parse_group(group, dir);
      crg::VerifyOptions opt;
      opt.suite = suite;
      opt.force_tensor = force;
      if (!sample.empty()) opt.m = parse_sample(sample);
      crg::VerifyReport report = crg::verify(spec, opt, dir);
      std::cout << crg::format_verify(report, f, timings);
      return report.passed() ? 0 : 1;
    }
    if (*tab) {
      std::string path = fixture.empty() ? dir + "/tables.json" : fixture;
      auto matches = crg::check_table(crg::load_table_rows(path), which, dir);
      bool ok = true;
      for (const auto& m : matches) {
        ok = ok && m.matched;
        std::cout << (m.matched ? (m.sign_matched ? "match     " : "match(+-) ") : "MISMATCH  ") << m.row.group
                  << " |c| = " << m.row.class_size << "  table: " << crg::render_row(m.row)
                  << "  computed: " << m.computed << "\n";
      }
      std::cout << matches.size() << " rows, " << (ok ? "all matched" : "mismatches found") << "\n";
      return ok ? 0 : 1;
    }
    if (*conj) {
      std::cout << crg::format_conjecture(e_max, r_max, crg::parse_format(format));
      return 0;
    }
    std::cout << crg::list_groups(dir);
    return 0;
  } catch (const std::invalid_argument& e) {
    std::cerr << "crg: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "crg: " << e.what() << "\n";
    return 1;
  }
}
