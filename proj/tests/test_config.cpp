#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "cubmot/config.hpp"
#include "cubmot/error.hpp"
#include "cubmot/realization.hpp"

using namespace cubmot;

namespace {

std::string write_temp(const std::string& name, const std::string& text) {
  auto p = std::filesystem::temp_directory_path() / ("cubmot_test_" + name);
  std::ofstream(p) << text;
  return p.string();
}

ErrorKind kind_of(const auto& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::internal;
}

}  // namespace

TEST_CASE("Gram JSON parsing") {
  CHECK(parse_gram_json(R"([["1/2", 0], [0, "-3"]])") == Matrix{{rat(1, 2), 0}, {0, -3}});
  CHECK(parse_gram_json(R"({"gram": [[2, 1], [1, 2]]})") == Matrix{{2, 1}, {1, 2}});
  CHECK(kind_of([] { parse_gram_json("[[1, 2], [3]]"); }) == ErrorKind::config);
  CHECK(kind_of([] { parse_gram_json("not json"); }) == ErrorKind::config);
  CHECK(kind_of([] { parse_gram_json(R"([["0.5"]])"); }) == ErrorKind::config);
}

TEST_CASE("Gram resolution") {
  CHECK(resolve_gram("default", 1) == default_prim_gram());
  Matrix r1 = resolve_gram("random", 5), r2 = resolve_gram("random", 5);
  CHECK(r1 == r2);
  CHECK(r1.rows() == 22);
  CHECK(r1.is_symmetric());
  CHECK(r1.determinant() != 0);
  std::string path = write_temp("gram.json", "[[1, 0], [0, 1]]");
  CHECK(resolve_gram(path, 0) == Matrix::identity(2));
  CHECK(kind_of([] { resolve_gram("/nonexistent/gram.json", 0); }) == ErrorKind::config);
}

TEST_CASE("config files and overrides") {
  std::string cfg = write_temp("cfg.json", R"({"seed": 9, "witt_instances": 3, "gram": "random"})");
  SuiteOptions o = load_options(cfg, std::nullopt, std::nullopt);
  CHECK(o.seed == 9);
  CHECK(o.witt_instances == 3);
  CHECK(o.gram == resolve_gram("random", 9));
  SuiteOptions o2 = load_options(cfg, std::string("default"), std::uint64_t{4});
  CHECK(o2.seed == 4);
  CHECK(o2.gram == default_prim_gram());
  SuiteOptions d = load_options(std::nullopt, std::nullopt, std::nullopt);
  CHECK(d.gram == default_prim_gram());
  CHECK(d.witt_instances == 200);

  std::string unknown = write_temp("unknown.json", R"({"sead": 1})");
  CHECK(kind_of([&] { load_options(unknown, std::nullopt, std::nullopt); }) == ErrorKind::config);
  std::string badtype = write_temp("badtype.json", R"({"witt_instances": "many"})");
  CHECK(kind_of([&] { load_options(badtype, std::nullopt, std::nullopt); }) == ErrorKind::config);
  std::string asym = write_temp("asym.json", R"({"gram": [[1, 2], [0, 1]]})");
  CHECK(kind_of([&] { load_options(asym, std::nullopt, std::nullopt); }) == ErrorKind::config);
}
