#include "cubmot/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "cubmot/error.hpp"
#include "cubmot/instances.hpp"
#include "cubmot/realization.hpp"

namespace cubmot {

using nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), ErrorKind::config, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Rational json_rational(const json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long>());
  fail(ErrorKind::config, "rationals must be \"p/q\" strings or integers, got " + v.dump());
}

Matrix gram_from_json(const json& j) {
  const json& rows = j.is_object() ? j.at("gram") : j;
  require(rows.is_array() && !rows.empty(), ErrorKind::config, "gram must be a non-empty array of rows");
  const std::size_t n = rows.size();
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    require(rows[i].is_array() && rows[i].size() == n, ErrorKind::config,
            "gram row " + std::to_string(i) + " must have " + std::to_string(n) + " entries");
    for (std::size_t k = 0; k < n; ++k) m(i, k) = json_rational(rows[i][k]);
  }
  require(m.is_symmetric(), ErrorKind::config, "gram must be symmetric");
  require(m.determinant() != 0, ErrorKind::config, "gram must be non-degenerate");
  return m;
}

Matrix gram_entry(const json& v, std::uint64_t seed) {
  if (v.is_string()) return resolve_gram(v.get<std::string>(), seed);
  return gram_from_json(v);
}

std::uint64_t json_seed(const json& v) {
  if (v.is_number_unsigned() || v.is_number_integer()) return v.get<std::uint64_t>();
  require(v.is_string(), ErrorKind::config, "seed must be an integer or a decimal string");
  try {
    return std::stoull(v.get<std::string>());
  } catch (const std::exception&) {
    fail(ErrorKind::config, "seed is not a decimal integer: " + v.dump());
  }
}

int json_count(const json& v, const char* key, int lo, int hi) {
  require(v.is_number_integer(), ErrorKind::config, std::string(key) + " must be an integer");
  int n = v.get<int>();
  require(n >= lo && n <= hi, ErrorKind::config,
          std::string(key) + " must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return n;
}

}  // namespace

Matrix parse_gram_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorKind::config, std::string("gram file is not valid JSON: ") + e.what());
  }
  try {
    return gram_from_json(j);
  } catch (const json::exception& e) {
    fail(ErrorKind::config, std::string("gram file: ") + e.what());
  }
}

Matrix resolve_gram(const std::string& spec, std::uint64_t seed) {
  if (spec == "default") return default_prim_gram();
  if (spec == "random") {
    Rng rng(seed);
    return random_nondegenerate_gram(rng, 22);
  }
  return parse_gram_json(read_file(spec));
}

SuiteOptions load_options(const std::optional<std::string>& config_path, const std::optional<std::string>& gram,
                          const std::optional<std::uint64_t>& seed) {
  SuiteOptions o = SuiteOptions::defaults();
  if (config_path) {
    json j;
    try {
      j = json::parse(read_file(*config_path));
    } catch (const json::exception& e) {
      fail(ErrorKind::config, std::string("config is not valid JSON: ") + e.what());
    }
    require(j.is_object(), ErrorKind::config, "config must be a JSON object");
    static const std::set<std::string> known{"seed", "gram", "second_gram", "witt_instances", "gamma_instances",
                                             "gamma_max_alg"};
    for (const auto& [k, v] : j.items()) require(known.count(k) > 0, ErrorKind::config, "unknown config key: " + k);
    try {
      if (j.contains("seed")) o.seed = json_seed(j["seed"]);
      if (j.contains("gram")) o.gram = gram_entry(j["gram"], o.seed);
      if (j.contains("second_gram")) o.second_gram = gram_entry(j["second_gram"], o.seed + 1);
      if (j.contains("witt_instances")) o.witt_instances = json_count(j["witt_instances"], "witt_instances", 1, 100000);
      if (j.contains("gamma_instances")) o.gamma_instances = json_count(j["gamma_instances"], "gamma_instances", 1, 10000);
      if (j.contains("gamma_max_alg")) o.gamma_max_alg = json_count(j["gamma_max_alg"], "gamma_max_alg", 0, 3);
    } catch (const json::exception& e) {
      fail(ErrorKind::config, std::string("config: ") + e.what());
    }
  }
  if (seed) o.seed = *seed;
  if (gram) o.gram = resolve_gram(*gram, o.seed);
  require(o.second_gram != o.gram, ErrorKind::config, "second_gram must differ from gram");
  require(o.gram.rows() >= 3, ErrorKind::config, "the primitive space needs rank >= 3");
  return o;
}

}  // namespace cubmot
