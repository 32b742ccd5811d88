#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "tracediv/cli.hpp"
#include "tracediv/config.hpp"
#include "tracediv/criterion.hpp"

#include <json.hpp>

using namespace tracediv;
namespace fs = std::filesystem;

namespace {

fs::path write_temp(const std::string& name, const std::string& content) {
  const fs::path path = fs::temp_directory_path() / name;
  std::ofstream out(path);
  out << content;
  return path;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const char* kSimplexToml = R"(# the [7,3] simplex code as a trace code
[field]
p = 2
e = 1
m = 3

[matrix]
rows = [
  ["a^0", "a^1", "a^2", "a^3", "a^4", "a^5", "a^6"],
]
)";

}  // namespace

TEST_CASE("config parsing") {
  const ConfigDoc doc = parse_config(R"(
# comment
[field]
p = 2
e = 1   # trailing comment
poly = [1, 1,
        0, 1]

[matrix]
rows = [["0", "a^3", [1, 0, 1], 1]]
)");
  CHECK(doc.require("field", "p").integer == 2);
  CHECK(doc.require("field", "poly").array.size() == 4);
  CHECK(doc.require("matrix", "rows").array[0].array.size() == 4);
  CHECK(doc.find("field", "missing") == nullptr);
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_config("[field\np = 2\n");
    CHECK(false);
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::ParseError);
    CHECK(std::string(err.what()).find("line 1") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_config("key 2\n"), Error);
  CHECK_THROWS_AS(parse_config("key = [1, 2\n"), Error);
}

TEST_CASE("element literals") {
  const FieldTower t = FieldTower::build(2, 1, 3);
  ConfigValue v;
  v.type = ConfigValue::Type::String;
  v.string = "a^3";
  CHECK(parse_element(t, v) == FieldElement::from_log(3));
  v.string = "0";
  CHECK(parse_element(t, v).is_zero());
  v.string = "a^";
  CHECK_THROWS_AS((void)parse_element(t, v), Error);
  v.string = "b^2";
  CHECK_THROWS_AS((void)parse_element(t, v), Error);

  ConfigValue i;
  i.type = ConfigValue::Type::Integer;
  i.integer = 1;
  CHECK(parse_element(t, i) == t.one());
}

TEST_CASE("matrix config round trip") {
  const ConfigDoc doc = parse_config(kSimplexToml);
  const LoadedMatrix loaded = matrix_from_config(doc, FieldTower::kDefaultTableLimit);
  CHECK(loaded.matrix.k == 1);
  CHECK(loaded.matrix.n == 7);
  CHECK(criterion_valuation(loaded.matrix).valuation == Valuation::finite(2));
}

TEST_CASE("abelian and polynomial configs") {
  const ConfigDoc doc = parse_config(R"(
[field]
p = 2
e = 1

[group]
orders = [7]

[code]
nonzeros = [[1]]
)");
  const AbelianCodeSpec spec = abelian_from_config(doc);
  CHECK(spec.group == std::vector<uint64_t>{7});
  CHECK(spec.nonzeros == std::vector<std::vector<uint64_t>>{{1}});

  const ConfigDoc pdoc = parse_config(R"(
[field]
p = 2
e = 1
m = 2

[poly]
k = 2
terms = [["a^0", [1, 1]], ["a^1", [0, 3]]]
)");
  const LoadedPolynomial loaded = polynomial_from_config(pdoc, FieldTower::kDefaultTableLimit);
  CHECK(loaded.poly.k() == 2);
  CHECK(loaded.poly.degree() == 3);
}

TEST_CASE("cli run exit codes and determinism") {
  const fs::path matrix = write_temp("tracediv_simplex.toml", kSimplexToml);

  RunConfig config;
  config.command = RunConfig::Command::Valuation;
  config.input_path = matrix.string();
  config.oracle = true;
  config.format = "json";
  config.out_path = (fs::temp_directory_path() / "tracediv_report_a.json").string();
  CHECK(run(config) == 0);

  // identical config and seed give byte-identical reports modulo timing
  RunConfig again = config;
  again.out_path = (fs::temp_directory_path() / "tracediv_report_b.json").string();
  CHECK(run(again) == 0);
  nlohmann::json a = nlohmann::json::parse(slurp(config.out_path));
  nlohmann::json b = nlohmann::json::parse(slurp(again.out_path));
  CHECK(a["crosscheck"]["match"] == true);
  CHECK(a["result"]["valuation"]["display"] == "2");
  a.erase("timing_ms");
  b.erase("timing_ms");
  CHECK(a.dump() == b.dump());

  // malformed element literal: exit 2 with a parse diagnostic
  const fs::path bad = write_temp("tracediv_bad.toml", R"(
[field]
p = 2
e = 1
m = 3

[matrix]
rows = [["a^"]]
)");
  RunConfig broken = config;
  broken.input_path = bad.string();
  broken.out_path.clear();
  CHECK(run(broken) == 2);

  RunConfig missing = config;
  missing.input_path = "/nonexistent/file.toml";
  missing.out_path.clear();
  CHECK(run(missing) == 2);
}

TEST_CASE("cli verify subcommand") {
  RunConfig config;
  config.command = RunConfig::Command::Verify;
  config.suites = {"stickelberger"};
  config.q_filter = 9;
  config.format = "json";
  config.out_path = (fs::temp_directory_path() / "tracediv_verify.json").string();
  CHECK(run(config) == 0);
  const nlohmann::json j = nlohmann::json::parse(slurp(config.out_path));
  CHECK(j["pass"] == true);
  CHECK(j["suites"][0]["rows"].size() == 8);  // q = 9: i in [0, 7]
  for (const auto& row : j["suites"][0]["rows"]) {
    CHECK(row["pass"] == true);
    CHECK(row.contains("S_p"));
    CHECK(row.contains("measured_valuation"));
  }
}
