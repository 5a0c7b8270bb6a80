#include <fstream>
#include <sstream>
#include <stdexcept>

#include "crg/reflection_group.hpp"
#include "json.hpp"

namespace crg {

GeneratorFile parse_generator_file(const std::string& json_text) {
  using nlohmann::json;
  json j = json::parse(json_text);
  GeneratorFile f;
  f.name = j.at("name").get<std::string>();
  f.rank = j.at("rank").get<int>();
  f.conductor = j.at("conductor").get<int>();
  f.expected_reflection_count = j.at("expected_reflection_count").get<std::size_t>();
  if (j.contains("order")) f.order = j.at("order").dump();
  if (f.rank < 1) throw std::invalid_argument("generator file: rank must be positive");
  if (f.conductor < 1) throw std::invalid_argument("unknown conductor " + std::to_string(f.conductor));
  const auto phi = static_cast<std::size_t>(euler_phi(f.conductor));
  const auto n = static_cast<std::size_t>(f.rank);
  for (const auto& g : j.at("generators")) {
    if (g.size() != n * n) throw std::invalid_argument("generator file: matrix entry count does not match rank");
    std::vector<CycNum> entries;
    for (const auto& e : g) {
      const auto& num = e.at("num");
      if (num.size() != phi) throw std::invalid_argument("generator file: entry length does not match conductor");
      Integer den(e.at("den").dump());
      if (den <= 0) throw std::invalid_argument("generator file: denominator must be positive");
      std::vector<Rational> c;
      for (const auto& x : num) c.push_back(make_rational(Integer(x.dump()), den));
      entries.emplace_back(f.conductor, std::move(c));
    }
    f.generators.emplace_back(n, n, std::move(entries));
  }
  return f;
}

GeneratorFile load_generator_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open generator file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_generator_file(ss.str());
}

}  // namespace crg
