#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tracediv {

// Exit status contract: 0 success, 1 mathematical cross-check failed,
// 2 input or execution error.
struct RunConfig {
  enum class Command { Valuation, Abelian, ArtinSchreier, Verify };

  Command command = Command::Valuation;
  std::string input_path;

  bool oracle = false;
  bool weights = false;
  bool mceliece = false;
  bool expand_cosets = false;
  bool bounds = false;
  bool count = false;
  std::optional<std::pair<uint64_t, int>> search_extremal;  // (d, k)
  uint64_t search_budget = 20000;

  uint64_t seed = 0;
  int workers = 0;  // 0: TRACEDIV_WORKERS or 1
  uint64_t enumeration_limit = uint64_t{1} << 24;
  uint64_t tuple_limit = uint64_t{1} << 24;
  uint64_t table_limit = uint64_t{1} << 20;

  std::string format = "human";  // human | json | csv
  std::string out_path;          // empty: stdout

  std::vector<std::string> suites;  // verify selectors
  std::optional<int> q_filter;
};

int run(const RunConfig& config);

}  // namespace tracediv
