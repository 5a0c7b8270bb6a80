#include "crg/cli.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include <json.hpp>

#include "crg/algebra_span.hpp"
#include "crg/arrangement.hpp"
#include "crg/infinitesimal_rep.hpp"
#include "crg/krammer.hpp"
#include "crg/quadratic_form.hpp"
#include "crg/tensor_square.hpp"

#ifndef CRG_DEFAULT_DATA_DIR
#define CRG_DEFAULT_DATA_DIR "data"
#endif

namespace crg {

using ordered_json = nlohmann::ordered_json;

std::string data_dir() {
  if (const char* env = std::getenv("CRG_DATA_DIR"); env && *env) return env;
  return CRG_DEFAULT_DATA_DIR;
}

namespace {

const std::map<int, CoxeterType> kCoxeterAliases = {
    {23, CoxeterType::H3}, {28, CoxeterType::F4}, {30, CoxeterType::H4},
    {35, CoxeterType::E6}, {36, CoxeterType::E7}, {37, CoxeterType::E8},
};

const std::vector<std::pair<std::string, CoxeterType>> kFixedCoxeter = {
    {"H3", CoxeterType::H3}, {"H4", CoxeterType::H4}, {"F4", CoxeterType::F4},
    {"E6", CoxeterType::E6}, {"E7", CoxeterType::E7}, {"E8", CoxeterType::E8},
};

std::string exceptional_path(const std::string& dir, int index) {
  return dir + "/exceptional/G" + std::to_string(index) + ".json";
}

class SpecParser {
 public:
  SpecParser(std::string_view text, const std::string& dir) : s_(text), dir_(dir) {}

  GroupSpec parse() {
    skip_space();
    GroupSpec spec;
    if (accept("G(")) {
      spec.kind = GroupSpec::Kind::Series;
      spec.m = integer();
      expect(',');
      spec.p = integer();
      expect(',');
      spec.r = integer();
      expect(')');
      finish();
      validate_series(spec);
      return spec;
    }
    if (accept("I2(")) {
      spec.kind = GroupSpec::Kind::Coxeter;
      spec.type = CoxeterType::I2;
      std::size_t at = pos_;
      spec.rank = integer();
      expect(')');
      finish();
      if (spec.rank < 2) throw GroupSpecError("I2(e) needs e >= 2", at);
      return spec;
    }
    for (const auto& [name, type] : kFixedCoxeter) {
      if (accept(name)) {
        finish();
        spec.kind = GroupSpec::Kind::Coxeter;
        spec.type = type;
        return spec;
      }
    }
    if (pos_ < s_.size() && (s_[pos_] == 'A' || s_[pos_] == 'B' || s_[pos_] == 'D')) {
      char letter = s_[pos_++];
      std::size_t at = pos_;
      spec.kind = GroupSpec::Kind::Coxeter;
      spec.rank = integer();
      finish();
      int minimum = 1;
      if (letter == 'A') spec.type = CoxeterType::A;
      if (letter == 'B') spec.type = CoxeterType::B;
      if (letter == 'D') {
        spec.type = CoxeterType::D;
        minimum = 2;
      }
      if (spec.rank < minimum)
        throw GroupSpecError(std::string(1, letter) + " needs rank >= " + std::to_string(minimum), at);
      return spec;
    }
    if (accept("G")) {
      std::size_t at = pos_;
      int index = integer();
      finish();
      if (auto it = kCoxeterAliases.find(index); it != kCoxeterAliases.end()) {
        spec.kind = GroupSpec::Kind::Coxeter;
        spec.type = it->second;
        return spec;
      }
      if (!std::filesystem::exists(exceptional_path(dir_, index)))
        throw GroupSpecError("no generator data for G" + std::to_string(index), at);
      spec.kind = GroupSpec::Kind::Exceptional;
      spec.index = index;
      return spec;
    }
    throw GroupSpecError("syntax error at position " + std::to_string(pos_) + ": expected a group name", pos_);
  }

 private:
  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(std::string_view token) {
    if (s_.substr(pos_, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }
  void expect(char c) {
    skip_space();
    if (pos_ >= s_.size() || s_[pos_] != c)
      throw GroupSpecError("syntax error at position " + std::to_string(pos_) + ": expected '" + c + "'", pos_);
    ++pos_;
    skip_space();
  }
  int integer() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_ || pos_ - start > 6)
      throw GroupSpecError("syntax error at position " + std::to_string(start) + ": expected an integer", start);
    int v = std::stoi(std::string(s_.substr(start, pos_ - start)));
    skip_space();
    return v;
  }
  void finish() {
    skip_space();
    if (pos_ != s_.size())
      throw GroupSpecError("syntax error at position " + std::to_string(pos_) + ": unexpected trailing input", pos_);
  }
  static void validate_series(const GroupSpec& spec) {
    if (spec.m < 1 || spec.p < 1 || spec.r < 1) throw GroupSpecError("G(m,p,r) needs positive parameters", 2);
    if (spec.m % spec.p != 0) throw GroupSpecError("G(m,p,r) needs p to divide m", 2);
    int q = spec.m / spec.p;
    if (q != 1 && q != 2)
      throw GroupSpecError("pseudo-reflection series unsupported (m/p = " + std::to_string(q) + ")", 2);
    if (q == 1 && (spec.r == 1 || (spec.m == 1 && spec.r < 2)))
      throw GroupSpecError("G(" + std::to_string(spec.m) + "," + std::to_string(spec.p) + ",1) has no reflections", 2);
  }

  std::string_view s_;
  std::string dir_;
  std::size_t pos_ = 0;
};

std::string coxeter_name(CoxeterType t) {
  for (const auto& [name, type] : kFixedCoxeter)
    if (type == t) return name;
  return "";
}

}  // namespace

GroupSpec parse_group(std::string_view text, const std::string& dir) { return SpecParser(text, dir).parse(); }
GroupSpec parse_group(std::string_view text) { return parse_group(text, data_dir()); }

std::string render(const GroupSpec& spec) {
  switch (spec.kind) {
    case GroupSpec::Kind::Series:
      return "G(" + std::to_string(spec.m) + "," + std::to_string(spec.p) + "," + std::to_string(spec.r) + ")";
    case GroupSpec::Kind::Exceptional:
      return "G" + std::to_string(spec.index);
    case GroupSpec::Kind::Coxeter:
      switch (spec.type) {
        case CoxeterType::A: return "A" + std::to_string(spec.rank);
        case CoxeterType::B: return "B" + std::to_string(spec.rank);
        case CoxeterType::D: return "D" + std::to_string(spec.rank);
        case CoxeterType::I2: return "I2(" + std::to_string(spec.rank) + ")";
        default: return coxeter_name(spec.type);
      }
  }
  return "";
}

ReflectionGroupData build_group(const GroupSpec& spec, const std::string& dir) {
  switch (spec.kind) {
    case GroupSpec::Kind::Series:
      return build_series(spec.m, spec.p, spec.r);
    case GroupSpec::Kind::Coxeter:
      return build_coxeter(spec.type, spec.rank);
    case GroupSpec::Kind::Exceptional:
      return build_from_generators(load_generator_file(exceptional_path(dir, spec.index)));
  }
  throw std::logic_error("unknown group kind");
}

ReflectionGroupData build_group(const GroupSpec& spec) { return build_group(spec, data_dir()); }

std::vector<int> available_exceptional(const std::string& dir) {
  std::vector<int> out;
  std::error_code ec;
  for (const auto& entry : std::filesystem::directory_iterator(dir + "/exceptional", ec)) {
    std::string name = entry.path().filename().string();
    if (name.size() > 6 && name[0] == 'G' && name.ends_with(".json")) {
      std::string digits = name.substr(1, name.size() - 6);
      if (!digits.empty() && std::all_of(digits.begin(), digits.end(), ::isdigit)) out.push_back(std::stoi(digits));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "";
}

bool VerifyReport::passed() const {
  return std::none_of(checks.begin(), checks.end(), [](const CheckEntry& c) { return c.status == CheckStatus::Fail; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"core", "spectral", "tensor", "parabolic", "dihedral", "krammer", "all"};
  return names;
}

namespace {

struct Skip {
  std::string why;
};

using CheckFn = std::function<CheckResult()>;

class Runner {
 public:
  explicit Runner(VerifyReport& report) : report_(report) {}

  void run(const std::string& name, const CheckFn& fn) {
    CheckEntry entry;
    entry.name = name;
    auto start = std::chrono::steady_clock::now();
    try {
      CheckResult r = fn();
      entry.status = r.passed ? CheckStatus::Pass : CheckStatus::Fail;
      entry.detail = r.detail;
    } catch (const Skip& s) {
      entry.status = CheckStatus::Skipped;
      entry.detail = s.why;
    } catch (const std::exception& e) {
      entry.status = CheckStatus::Fail;
      entry.detail = e.what();
    }
    entry.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report_.checks.push_back(std::move(entry));
  }

  void skip(const std::string& name, const std::string& why) {
    report_.checks.push_back(CheckEntry{name, CheckStatus::Skipped, why, 0.0});
  }

 private:
  VerifyReport& report_;
};

std::string class_label(const std::string& base, std::size_t c) { return base + "[" + std::to_string(c) + "]"; }

CheckResult combine(std::vector<std::pair<std::string, CheckResult>> parts) {
  std::string detail;
  for (auto& [label, r] : parts) {
    if (!r.passed) return CheckResult::fail(label + ": " + r.detail);
    if (!detail.empty()) detail += "; ";
    detail += label + (r.detail.empty() ? "" : ": " + r.detail);
  }
  return {true, detail};
}

const std::vector<Rational>& sample_values() {
  static const std::vector<Rational> values = {Rational(7), Rational(22, 7)};
  return values;
}

std::optional<int> type_a_strands(const GroupSpec& spec) {
  if (spec.kind == GroupSpec::Kind::Coxeter && spec.type == CoxeterType::A) return spec.rank + 1;
  if (spec.kind == GroupSpec::Kind::Series && spec.m == 1 && spec.p == 1) return spec.r;
  return std::nullopt;
}

std::optional<int> dihedral_order(const GroupSpec& spec) {
  if (spec.kind == GroupSpec::Kind::Coxeter && spec.type == CoxeterType::I2) return spec.rank;
  if (spec.kind == GroupSpec::Kind::Series && spec.m == spec.p && spec.r == 2) return spec.m;
  return std::nullopt;
}

std::optional<int> type_b_rank(const GroupSpec& spec) {
  if (spec.kind == GroupSpec::Kind::Coxeter && spec.type == CoxeterType::B) return spec.rank;
  if (spec.kind == GroupSpec::Kind::Series && spec.m == 2 && spec.p == 1) return spec.r;
  return std::nullopt;
}

void run_core(Runner& run, const GroupSpec& spec, const std::shared_ptr<const ReflectionGroupData>& g,
              const VerifyOptions& opt) {
  const bool symbolic = g->size() <= opt.symbolic_limit;
  std::optional<SymbolicRep> sym;
  sym = build_rep(g);
  std::vector<SampledRep> sampled;
  if (!symbolic)
    for (const auto& m0 : sample_values()) sampled.push_back(build_rep_at(g, m0));
  auto per_mode = [&](auto check) -> CheckResult {
    if (symbolic) {
      CheckResult r = check(*sym);
      r.detail = "symbolic" + (r.detail.empty() ? "" : ", " + r.detail);
      return r;
    }
    std::vector<std::pair<std::string, CheckResult>> parts;
    for (const auto& rep : sampled) parts.emplace_back("m = " + rep.m.get_str(), check(rep));
    return combine(std::move(parts));
  };

  run.run("discriminant", [&] {
    std::string detail;
    for (std::size_t c = 0; c < g->classes.size(); ++c) {
      if (!detail.empty()) detail += "; ";
      detail += "|c| = " + std::to_string(g->classes[c].size()) + ": " + discriminant(*g, c).to_string();
    }
    return CheckResult{true, detail};
  });
  run.run("n_c", [&] {
    std::vector<std::pair<std::string, CheckResult>> parts;
    for (std::size_t c = 0; c < g->classes.size(); ++c) {
      NcReport r = check_n_c(*g, c);
      parts.emplace_back(class_label("c", c), CheckResult{r.passed, "N(c) = " + std::to_string(r.n_c)});
    }
    return combine(std::move(parts));
  });
  FlatTable flats = codim2_flats(*g);
  run.run("integrability", [&] { return per_mode([&](const auto& rep) { return check_integrability(rep, flats); }); });
  run.run("equivariance", [&] { return per_mode([&](const auto& rep) { return check_equivariance(rep); }); });
  run.run("t_scalar", [&] {
    std::vector<std::pair<std::string, CheckResult>> parts;
    for (std::size_t c = 0; c < g->classes.size(); ++c) parts.emplace_back(class_label("c", c), check_T_scalar(*sym, c));
    CheckResult r = combine(std::move(parts));
    r.detail = "symbolic; " + r.detail;
    return r;
  });
  run.run("rep_identities", [&] { return per_mode([&](const auto& rep) { return check_rep_identities(rep); }); });
  run.run("dual", [&] { return per_mode([&](const auto& rep) { return dual_check(rep); }); });
  if (auto n = type_b_rank(spec); n && *n >= 2)
    run.run("bn_model", [&] { return bn_model_check(*n); });
  else
    run.skip("bn_model", "not of type B");
}

void run_spectral(Runner& run, const std::shared_ptr<const ReflectionGroupData>& g, const VerifyOptions& opt) {
  const Rational m0 = opt.m.value_or(Rational(5));
  if (g->size() > opt.symbolic_limit) {
    run.skip("spectrum", "more than " + std::to_string(opt.symbolic_limit) + " reflections");
  } else {
    SymbolicRep rep = build_rep(g);
    run.run("spectrum", [&] {
      std::vector<std::pair<std::string, CheckResult>> parts;
      for (std::size_t c = 0; c < g->classes.size(); ++c)
        parts.emplace_back(class_label("s", g->classes[c][0]), spectrum_check(rep, g->classes[c][0], m0));
      CheckResult r = combine(std::move(parts));
      r.detail = "m = " + m0.get_str() + "; " + r.detail;
      return r;
    });
  }
  for (std::size_t c = 0; c < g->classes.size(); ++c) {
    const std::size_t d = g->classes[c].size();
    if (d > 15) {
      run.skip(class_label("burnside", c), "|c| = " + std::to_string(d) + " > 15");
      continue;
    }
    run.run(class_label("burnside", c), [&] {
      auto class_mats = [&](const Rational& x) {
        SampledRep rep = build_rep_at(g, x);
        std::vector<RationalMatrix> mats;
        for (std::size_t s : g->classes[c]) mats.push_back(restrict_to_class(rep, rep.t_mats[s], c).to_dense(0));
        return mats;
      };
      const long n_c = class_stats(*g, c).n;
      std::size_t generic = algebra_dimension(class_mats(Rational(n_c + 2)));
      std::string detail = "m = " + std::to_string(n_c + 2) + ": " + std::to_string(generic);
      bool ok = generic == d * d;
      for (const auto& [root, mult] : discriminant(*g, c).factors) {
        (void)mult;
        if (root == -1) continue;
        // The radical of the form is invariant, so a proper nonzero radical
        // bounds the algebra strictly below d^2.
        const Rational x(root);
        auto mats = class_mats(x);
        bool below = is_proper_invariant_subspace(mats, kernel_at(*g, c, x));
        auto lower = algebra_dimension_mod_p(mats, kSpanPrime);
        detail += ", m = " + std::to_string(root) + ": " + (below ? "< full" : "not certified");
        if (lower) detail += " (>= " + std::to_string(*lower) + ")";
        ok = ok && below;
      }
      detail += ", full = " + std::to_string(d * d);
      return CheckResult{ok, detail};
    });
  }
}

void run_tensor(Runner& run, const std::shared_ptr<const ReflectionGroupData>& g, const VerifyOptions& opt) {
  std::optional<SymbolicRep> sym;
  std::map<Rational, SampledRep> reps;
  auto rep_at = [&](const Rational& x) -> const SampledRep& {
    auto it = reps.find(x);
    if (it == reps.end()) it = reps.emplace(x, build_rep_at(g, x)).first;
    return it->second;
  };
  std::vector<std::optional<Rational>> sample(g->classes.size());
  std::vector<std::pair<std::size_t, std::size_t>> commuting, crossing;
  for (std::size_t c = 0; c < g->classes.size(); ++c) {
    const auto& members = g->classes[c];
    const std::size_t d = members.size();
    if (d > 12 && !opt.force_tensor) {
      run.skip(class_label("ds_table", c), "|c| = " + std::to_string(d) + " > 12 (use --force)");
      run.skip(class_label("tensor_square", c), "|c| = " + std::to_string(d) + " > 12 (use --force)");
      continue;
    }
    auto excluded = excluded_tensor_values(*g, c);
    auto is_excluded = [&](const Rational& x) { return std::find(excluded.begin(), excluded.end(), x) != excluded.end(); };
    Rational m0 = opt.m.value_or(Rational(7));
    if (!opt.m)
      while (is_excluded(m0)) m0 += 1;
    if (!is_excluded(m0)) sample[c] = m0;
    if (!sym) sym = build_rep(g);
    run.run(class_label("ds_table", c), [&] { return ds_table_check(*sym, members[0], c); });
    run.run(class_label("tensor_square", c), [&] {
      if (!sample[c]) throw Skip{"m = " + m0.get_str() + " is excluded for this class"};
      TensorSquareReport r = tensor_square_check(rep_at(*sample[c]), c);
      if (r.skipped) throw Skip{r.detail};
      return CheckResult{r.passed, "m = " + sample[c]->get_str() + "; " + r.detail};
    });
    for (std::size_t k = 1; k < d; ++k)
      (g->commute(members[0], members[k]) ? commuting : crossing).emplace_back(c, members[k]);
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t k = 0; pairs.size() < 5 && (k < crossing.size() || k < commuting.size()); ++k) {
    if (k < crossing.size()) pairs.push_back(crossing[k]);
    if (k < commuting.size() && pairs.size() < 5) pairs.push_back(commuting[k]);
  }
  for (const auto& [c, u] : pairs) {
    const std::size_t s = g->classes[c][0];
    run.run("psu_membership[" + std::to_string(s) + "," + std::to_string(u) + "]", [&, c = c, u = u] {
      if (!sample[c]) throw Skip{"no admissible sample value for this class"};
      CheckResult r = psu_membership_check(rep_at(*sample[c]), c, s, u);
      r.detail = "m = " + sample[c]->get_str() + "; " + r.detail;
      return r;
    });
  }
}

void run_parabolic(Runner& run, const std::shared_ptr<const ReflectionGroupData>& g) {
  run.run("parabolic", [&] {
    if (g->size() < 2) throw Skip{"a single reflection has no proper parabolic"};
    std::vector<std::size_t> seed = {0};
    if (g->rank >= 3) {
      for (std::size_t u = 1; u < g->size(); ++u) {
        if (g->commute(0, u)) continue;
        auto r0 = parabolic_reflections(*g, {0, u});
        if (r0.size() < g->size()) {
          seed = {0, u};
          break;
        }
      }
    }
    CheckResult r = parabolic_restriction_check(build_rep(g), seed);
    r.detail = "seed size " + std::to_string(seed.size()) + ", " + r.detail;
    return r;
  });
}

}  // namespace

VerifyReport verify(const GroupSpec& spec, const VerifyOptions& opt, const std::string& dir) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), opt.suite) == names.end())
    throw std::invalid_argument("unknown suite '" + opt.suite + "'");
  auto wants = [&](const char* s) { return opt.suite == "all" || opt.suite == s; };
  if (opt.m && *opt.m == 1 && wants("spectral"))
    throw std::invalid_argument("m = 1 is rejected: t_s is not semisimple there");
  auto g = std::make_shared<const ReflectionGroupData>(build_group(spec, dir));
  VerifyReport report;
  report.group = render(spec);
  Runner run(report);
  if (wants("core")) run_core(run, spec, g, opt);
  if (wants("spectral")) run_spectral(run, g, opt);
  if (wants("tensor")) run_tensor(run, g, opt);
  if (wants("parabolic")) run_parabolic(run, g);
  if (wants("dihedral")) {
    auto e = dihedral_order(spec);
    if (e && *e % 2 == 1 && *e >= 3)
      run.run("dihedral_m0", [&] { return dihedral_m0_check(*e); });
    else
      run.skip("dihedral_m0", "not a dihedral group of odd order parameter");
  }
  if (wants("krammer")) {
    if (auto n = type_a_strands(spec); n && *n >= 2) {
      KrammerModel model = build_krammer(*n);
      run.run("krammer_braid", [&] { return check_braid_relations(model); });
      run.run("krammer_inverse", [&] { return check_inverses(model); });
      run.run("krammer_cubic", [&] { return cubic_specialization_check(model); });
    } else {
      run.skip("krammer", "not of type A");
    }
  }
  return report;
}

OutputFormat parse_format(const std::string& s) {
  if (s == "text") return OutputFormat::Text;
  if (s == "json") return OutputFormat::Json;
  if (s == "csv") return OutputFormat::Csv;
  throw std::invalid_argument("unknown format '" + s + "'");
}

namespace {

ordered_json rational_json(const Rational& x) {
  if (x.get_den() == 1 && x.get_num().fits_slong_p()) return x.get_num().get_si();
  return x.get_str();
}

ordered_json factors_json(const std::vector<std::pair<long, int>>& factors) {
  ordered_json out = ordered_json::array();
  for (const auto& [root, mult] : factors) out.push_back({root, mult});
  return out;
}

std::string csv_factors(const std::vector<std::pair<long, int>>& factors) {
  std::string s;
  for (const auto& [root, mult] : factors) s += (s.empty() ? "" : " ") + std::to_string(root) + ":" + std::to_string(mult);
  return s;
}

}  // namespace

std::string format_discriminants(const GroupSpec& spec, const ReflectionGroupData& g, OutputFormat format) {
  std::ostringstream out;
  std::vector<Discriminant> ds;
  for (std::size_t c = 0; c < g.classes.size(); ++c) ds.push_back(discriminant(g, c));
  switch (format) {
    case OutputFormat::Json: {
      ordered_json classes = ordered_json::array();
      for (std::size_t c = 0; c < ds.size(); ++c) {
        ordered_json rem = ordered_json::array();
        for (const auto& x : ds[c].remainder.coeffs()) rem.push_back(rational_json(x));
        classes.push_back({{"sign", ds[c].sign},
                           {"factors", factors_json(ds[c].factors)},
                           {"remainder", rem},
                           {"size", g.classes[c].size()}});
      }
      ordered_json doc = {{"group", render(spec)}, {"reflections", g.size()}, {"classes", classes}};
      out << doc.dump() << "\n";
      break;
    }
    case OutputFormat::Csv:
      out << "group,class,size,sign,factors,remainder\n";
      for (std::size_t c = 0; c < ds.size(); ++c)
        out << render(spec) << "," << c << "," << g.classes[c].size() << "," << ds[c].sign << ","
            << csv_factors(ds[c].factors) << "," << ds[c].remainder.to_string() << "\n";
      break;
    case OutputFormat::Text:
      out << render(spec) << ": " << g.size() << " reflections, " << g.classes.size() << " class"
          << (g.classes.size() == 1 ? "" : "es") << "\n";
      for (std::size_t c = 0; c < ds.size(); ++c)
        out << "  class " << c << " (|c| = " << g.classes[c].size() << "): " << ds[c].to_string() << "\n";
      break;
  }
  return out.str();
}

std::string format_verify(const VerifyReport& report, OutputFormat format, bool timings) {
  std::ostringstream out;
  if (format == OutputFormat::Json) {
    ordered_json checks = ordered_json::array();
    for (const auto& c : report.checks) {
      ordered_json e = {{"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}};
      if (timings) e["seconds"] = c.seconds;
      checks.push_back(std::move(e));
    }
    ordered_json doc = {{"group", report.group}, {"passed", report.passed()}, {"checks", checks}};
    out << doc.dump() << "\n";
    return out.str();
  }
  if (format == OutputFormat::Csv) {
    out << "group,check,status" << (timings ? ",seconds" : "") << "\n";
    for (const auto& c : report.checks) {
      out << report.group << "," << c.name << "," << to_string(c.status);
      if (timings) out << "," << c.seconds;
      out << "\n";
    }
    return out.str();
  }
  out << report.group << "\n";
  for (const auto& c : report.checks) {
    std::string status = c.status == CheckStatus::Pass ? "PASS" : c.status == CheckStatus::Fail ? "FAIL" : "SKIP";
    out << "  " << status << "  " << c.name;
    if (timings) {
      std::ostringstream t;
      t.setf(std::ios::fixed);
      t.precision(3);
      t << c.seconds;
      out << " (" << t.str() << " s)";
    }
    if (!c.detail.empty()) out << "  " << c.detail;
    out << "\n";
  }
  out << (report.passed() ? "all checks passed" : "some checks failed") << "\n";
  return out.str();
}

std::vector<TableRow> load_table_rows(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open fixture " + path);
  nlohmann::json doc = nlohmann::json::parse(in);
  std::vector<TableRow> rows;
  for (const auto& r : doc.at("rows")) {
    TableRow row;
    row.which = r.at("which").get<std::string>();
    row.group = r.at("group").get<std::string>();
    row.class_size = r.at("class_size").get<std::size_t>();
    row.sign = r.at("sign").get<int>();
    for (const auto& f : r.at("factors")) row.factors.emplace_back(f.at(0).get<long>(), f.at(1).get<int>());
    row.sign_normalized = r.value("sign_normalized", false);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string render_row(const TableRow& row) {
  Discriminant d;
  d.sign = row.sign;
  d.factors = row.factors;
  d.remainder = ParamPoly(1);
  return d.to_string();
}

std::vector<TableMatch> check_table(const std::vector<TableRow>& rows, const std::string& which,
                                    const std::string& dir) {
  std::vector<std::string> order;
  std::map<std::string, std::vector<TableRow>> by_group;
  for (const auto& r : rows) {
    if (r.which != which) continue;
    if (!by_group.count(r.group)) order.push_back(r.group);
    by_group[r.group].push_back(r);
  }
  std::vector<TableMatch> out;
  for (const auto& name : order) {
    ReflectionGroupData g = build_group(parse_group(name, dir), dir);
    std::vector<Discriminant> ds;
    for (std::size_t c = 0; c < g.classes.size(); ++c) ds.push_back(discriminant(g, c));
    std::vector<char> used(ds.size(), 0);
    for (const auto& row : by_group[name]) {
      TableMatch m;
      m.row = row;
      const bool up_to_sign = row.sign_normalized || row.which == "prop81";
      long candidate = -1;
      for (std::size_t c = 0; c < ds.size(); ++c) {
        if (used[c] || g.classes[c].size() != row.class_size) continue;
        bool factors_ok = ds[c].factors == row.factors && ds[c].remainder == ParamPoly(1);
        bool sign_ok = ds[c].sign == row.sign;
        if (factors_ok && (sign_ok || up_to_sign)) {
          candidate = static_cast<long>(c);
          m.matched = true;
          m.sign_matched = sign_ok;
          if (sign_ok) break;
        } else if (candidate < 0 && !m.matched) {
          m.computed = ds[c].to_string();
        }
      }
      if (m.matched) {
        used[static_cast<std::size_t>(candidate)] = 1;
        m.computed = ds[static_cast<std::size_t>(candidate)].to_string();
      } else if (m.computed.empty()) {
        m.computed = "no unused class of size " + std::to_string(row.class_size);
      }
      out.push_back(std::move(m));
    }
  }
  return out;
}

std::string format_conjecture(int e_max, int r_max, OutputFormat format) {
  std::vector<ConjectureCase> cases = conjecture_scan(e_max, r_max);
  std::ostringstream out;
  if (format == OutputFormat::Json) {
    ordered_json arr = ordered_json::array();
    for (const auto& c : cases)
      arr.push_back({{"e", c.e},
                     {"r", c.r},
                     {"reflections", c.reflections},
                     {"computed", c.computed.to_string()},
                     {"match_up_to_sign", c.matches_up_to_sign},
                     {"sign_match", c.sign_matches}});
    out << ordered_json{{"cases", arr}}.dump() << "\n";
    return out.str();
  }
  if (format == OutputFormat::Csv) {
    out << "e,r,reflections,computed,match_up_to_sign,sign_match\n";
    for (const auto& c : cases)
      out << c.e << "," << c.r << "," << c.reflections << "," << c.computed.to_string() << ","
          << c.matches_up_to_sign << "," << c.sign_matches << "\n";
    return out.str();
  }
  for (const auto& c : cases) {
    out << "G(" << c.e << "," << c.e << "," << c.r << ") |R| = " << c.reflections << ": " << c.computed.to_string()
        << "  " << (c.matches_up_to_sign ? (c.sign_matches ? "matches" : "matches up to sign") : "MISMATCH") << "\n";
  }
  return out.str();
}

std::string list_groups(const std::string& dir) {
  std::ostringstream out;
  out << "series:      G(m,p,r) with p | m and m/p in {1,2}\n";
  out << "coxeter:     A<n>, B<n>, D<n>, I2(<e>), H3, H4, F4, E6, E7, E8\n";
  out << "aliases:    ";
  for (const auto& [index, type] : kCoxeterAliases) out << " G" << index << "=" << coxeter_name(type);
  out << "\nexceptional:";
  for (int k : available_exceptional(dir)) out << " G" << k;
  out << "\n";
  return out.str();
}

}  // namespace crg
