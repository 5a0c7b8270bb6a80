#include <random>

#include "crg/cli.hpp"
#include "doctest.h"

using namespace crg;

namespace {

GroupSpec series(int m, int p, int r) {
  GroupSpec s;
  s.kind = GroupSpec::Kind::Series;
  s.m = m;
  s.p = p;
  s.r = r;
  return s;
}

GroupSpec coxeter(CoxeterType t, int rank = 0) {
  GroupSpec s;
  s.kind = GroupSpec::Kind::Coxeter;
  s.type = t;
  s.rank = rank;
  return s;
}

std::size_t error_position(const std::string& text) {
  try {
    parse_group(text);
  } catch (const GroupSpecError& e) {
    return e.position();
  }
  FAIL("expected a parse error for " << text);
  return 0;
}

std::string error_message(const std::string& text) {
  try {
    parse_group(text);
  } catch (const GroupSpecError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("parsing group names") {
  CHECK(parse_group("G(3,3,4)") == series(3, 3, 4));
  CHECK(parse_group(" G( 4 , 2 , 3 ) ") == series(4, 2, 3));
  CHECK(parse_group("G23") == coxeter(CoxeterType::H3));
  CHECK(parse_group("G28") == coxeter(CoxeterType::F4));
  CHECK(parse_group("G30") == coxeter(CoxeterType::H4));
  CHECK(parse_group("G35") == coxeter(CoxeterType::E6));
  CHECK(parse_group("G36") == coxeter(CoxeterType::E7));
  CHECK(parse_group("G37") == coxeter(CoxeterType::E8));
  CHECK(parse_group("I2(7)") == coxeter(CoxeterType::I2, 7));
  CHECK(parse_group("B3") == coxeter(CoxeterType::B, 3));
  GroupSpec g12 = parse_group("G12");
  CHECK(g12.kind == GroupSpec::Kind::Exceptional);
  CHECK(g12.index == 12);
}

TEST_CASE("parse errors") {
  CHECK(error_message("G(6,2,3)").find("pseudo-reflection series unsupported") != std::string::npos);
  CHECK(error_message("G(4,3,2)").find("divide") != std::string::npos);
  CHECK(error_message("G25") == "no generator data for G25");
  CHECK(error_position("G(3,3") == 5);
  CHECK(error_position("G(3;3,3)") == 3);
  CHECK(error_position("X5") == 0);
  CHECK(error_position("A3x") == 2);
  CHECK(error_position("I2()") == 3);
  CHECK_THROWS_AS(parse_group("D1"), GroupSpecError);
  CHECK_THROWS_AS(parse_group(""), GroupSpecError);
}

TEST_CASE("parse and render are inverse") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> small(1, 12), kind(0, 3);
  const std::vector<CoxeterType> fixed = {CoxeterType::H3, CoxeterType::H4, CoxeterType::F4,
                                          CoxeterType::E6, CoxeterType::E7, CoxeterType::E8};
  for (int trial = 0; trial < 300; ++trial) {
    GroupSpec spec;
    switch (kind(rng)) {
      case 0: {
        int p = small(rng), r = small(rng) + 1;
        spec = series(p * (1 + trial % 2), p, r);
        break;
      }
      case 1: {
        const CoxeterType types[] = {CoxeterType::A, CoxeterType::B, CoxeterType::D, CoxeterType::I2};
        CoxeterType t = types[trial % 4];
        spec = coxeter(t, small(rng) + 1);
        break;
      }
      case 2:
        spec = coxeter(fixed[static_cast<std::size_t>(trial) % fixed.size()]);
        break;
      default:
        spec.kind = GroupSpec::Kind::Exceptional;
        spec.index = available_exceptional(data_dir()).at(static_cast<std::size_t>(trial) % 9);
    }
    CAPTURE(render(spec));
    CHECK(parse_group(render(spec)) == spec);
  }
}

TEST_CASE("exceptional data files") {
  std::vector<int> expected = {12, 13, 22, 24, 27, 29, 31, 33, 34};
  CHECK(available_exceptional(data_dir()) == expected);
  CHECK(build_group(parse_group("G13")).classes.size() == 2);
  CHECK(list_groups(data_dir()).find("G23=H3") != std::string::npos);
}

TEST_CASE("discriminant output") {
  GroupSpec spec = parse_group("G(3,3,3)");
  ReflectionGroupData g = build_group(spec);
  std::string json = format_discriminants(spec, g, OutputFormat::Json);
  CHECK(json ==
        R"j({"group":"G(3,3,3)","reflections":9,"classes":[{"sign":-1,"factors":[[9,1],[0,8]],"remainder":[1],"size":9}]})j"
        "\n");
  CHECK(format_discriminants(spec, build_group(spec), OutputFormat::Json) == json);
  CHECK(format_discriminants(spec, g, OutputFormat::Csv) == "group,class,size,sign,factors,remainder\nG(3,3,3),0,9,-1,9:1 0:8,1\n");
  CHECK(format_discriminants(spec, g, OutputFormat::Text).find("-(m-9)m^8") != std::string::npos);
  CHECK_THROWS_AS(parse_format("yaml"), std::invalid_argument);
}

TEST_CASE("verify") {
  VerifyOptions opt;
  VerifyReport a2 = verify(parse_group("A2"), opt, data_dir());
  CHECK(a2.passed());
  std::set<std::string> names;
  for (const auto& c : a2.checks) CHECK(names.insert(c.name).second);
  for (const char* name : {"integrability", "equivariance", "t_scalar", "discriminant", "n_c", "spectrum",
                           "burnside[0]", "ds_table[0]", "tensor_square[0]", "parabolic", "krammer_braid"})
    CHECK(names.count(name) == 1);

  const std::string j1 = format_verify(a2, OutputFormat::Json, false);
  const std::string j2 = format_verify(verify(parse_group("A2"), opt, data_dir()), OutputFormat::Json, false);
  CHECK(j1 == j2);
  CHECK(j1.find("seconds") == std::string::npos);
  CHECK(format_verify(a2, OutputFormat::Json, true).find("seconds") != std::string::npos);

  opt.suite = "dihedral";
  VerifyReport i5 = verify(parse_group("I2(5)"), opt, data_dir());
  REQUIRE(i5.checks.size() == 1);
  CHECK(i5.checks[0].status == CheckStatus::Pass);

  opt.suite = "core";
  VerifyReport b3 = verify(parse_group("B3"), opt, data_dir());
  CHECK(b3.passed());
  CHECK(std::any_of(b3.checks.begin(), b3.checks.end(),
                    [](const CheckEntry& c) { return c.name == "bn_model" && c.status == CheckStatus::Pass; }));

  opt.suite = "tensor";
  VerifyReport h3 = verify(parse_group("H3"), opt, data_dir());
  CHECK(h3.checks.front().status == CheckStatus::Skipped);

  opt.suite = "nonsense";
  CHECK_THROWS_AS(verify(parse_group("A2"), opt, data_dir()), std::invalid_argument);
  opt.suite = "spectral";
  opt.m = Rational(1);
  CHECK_THROWS_AS(verify(parse_group("A2"), opt, data_dir()), std::invalid_argument);
}

TEST_CASE("table fixtures") {
  auto rows = load_table_rows(data_dir() + "/tables.json");
  CHECK(rows.size() == 134);
  for (const auto& r : rows) {
    long degree = 0;
    for (const auto& [root, mult] : r.factors) degree += mult;
    CHECK(degree == static_cast<long>(r.class_size));
  }
  auto matches = check_table(rows, "2", data_dir());
  CHECK(matches.size() == 57);
  for (const auto& m : matches) {
    CAPTURE(m.row.group);
    CHECK(m.matched);
    CHECK(m.sign_matched);
  }
  // A forged row is reported as a mismatch.
  TableRow forged = rows.front();
  forged.which = "forged";
  forged.factors.front().first += 1;
  auto bad = check_table({forged}, "forged", data_dir());
  REQUIRE(bad.size() == 1);
  CHECK_FALSE(bad[0].matched);
  CHECK_THROWS(load_table_rows("/nonexistent/tables.json"));
}

TEST_CASE("conjecture report") {
  std::string text = format_conjecture(5, 4, OutputFormat::Text);
  CHECK(text.find("G(3,3,3)") != std::string::npos);
  CHECK(text.find("G(5,5,4)") != std::string::npos);
  CHECK(format_conjecture(5, 4, OutputFormat::Json) == format_conjecture(5, 4, OutputFormat::Json));
}
