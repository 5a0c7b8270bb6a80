#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "crg/rational.hpp"
#include "crg/reflection_group.hpp"

namespace crg {

class GroupSpecError : public std::invalid_argument {
 public:
  GroupSpecError(const std::string& what, std::size_t position)
      : std::invalid_argument(what), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

struct GroupSpec {
  enum class Kind { Series, Coxeter, Exceptional };
  Kind kind = Kind::Series;
  int m = 1, p = 1, r = 1;             // Series
  CoxeterType type = CoxeterType::A;   // Coxeter
  int rank = 0;                        // A/B/D rank, I2 parameter
  int index = 0;                       // Exceptional

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

// Directory holding exceptional/ and tables.json: $CRG_DATA_DIR if set.
std::string data_dir();

// spec := "G(" INT "," INT "," INT ")" | ("A"|"B"|"D") INT | "I2(" INT ")"
//       | "H3" | "H4" | "F4" | "E6" | "E7" | "E8" | "G" INT
// G23, G28, G30, G35, G36, G37 resolve to their Coxeter names; other
// exceptional indices need a generator file under data_dir/exceptional.
GroupSpec parse_group(std::string_view text, const std::string& dir);
GroupSpec parse_group(std::string_view text);
std::string render(const GroupSpec& spec);

ReflectionGroupData build_group(const GroupSpec& spec, const std::string& dir);
ReflectionGroupData build_group(const GroupSpec& spec);

// Indices with a shipped generator file, ascending.
std::vector<int> available_exceptional(const std::string& dir);

enum class CheckStatus { Pass, Fail, Skipped };
std::string to_string(CheckStatus s);

struct CheckEntry {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;
  double seconds = 0.0;
};

struct VerifyReport {
  std::string group;
  std::vector<CheckEntry> checks;

  bool passed() const;
};

struct VerifyOptions {
  std::string suite = "all";
  // Sample value for the spectral and tensor checks (defaults 5 and 7).
  std::optional<Rational> m;
  bool force_tensor = false;
  std::size_t symbolic_limit = 60;
};

const std::vector<std::string>& suite_names();
VerifyReport verify(const GroupSpec& spec, const VerifyOptions& options, const std::string& dir);

enum class OutputFormat { Text, Json, Csv };
OutputFormat parse_format(const std::string& s);

std::string format_discriminants(const GroupSpec& spec, const ReflectionGroupData& g, OutputFormat format);
std::string format_verify(const VerifyReport& report, OutputFormat format, bool timings);

struct TableRow {
  std::string which;
  std::string group;
  std::size_t class_size = 0;
  int sign = 1;
  std::vector<std::pair<long, int>> factors;
  bool sign_normalized = false;
};

struct TableMatch {
  TableRow row;
  bool matched = false;
  bool sign_matched = false;
  std::string computed;
};

std::vector<TableRow> load_table_rows(const std::string& path);
std::string render_row(const TableRow& row);
// Matches every row of the selected table against freshly computed
// discriminants. Rows marked sign-normalized, and all closed-form rows,
// compare up to sign.
std::vector<TableMatch> check_table(const std::vector<TableRow>& rows, const std::string& which,
                                    const std::string& dir);

std::string format_conjecture(int e_max, int r_max, OutputFormat format);
std::string list_groups(const std::string& dir);

}  // namespace crg
