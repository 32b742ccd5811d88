#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace tracediv {

struct SuiteLine {
  std::string label;
  bool pass = true;
  std::string detail;
};

struct SuiteReport {
  std::string name;
  bool pass = true;
  std::vector<SuiteLine> lines;
  nlohmann::json data = nlohmann::json::array();

  void add(const std::string& label, bool ok, const std::string& detail = "") {
    lines.push_back({label, ok, detail});
    pass = pass && ok;
  }
};

// Stickelberger: nu_pi(g(T^{-i})) = S_p(i) for every i, plus the norm
// identity nu(g(T^{-i})) + nu(g(T^{i})) = e.
SuiteReport suite_stickelberger(const std::vector<int>& qs = {2, 3, 4, 5, 7, 8, 9, 16});

// Additive-character expansion holds exactly on all of F_q.
SuiteReport suite_fourier(const std::vector<int>& qs = {2, 3, 4, 5, 8, 9});

// Tensor powers of the character matrix preserve vector valuations.
SuiteReport suite_transform_invariance(uint64_t seed = 23, int vectors_per_config = 200);

// criterion_valuation == bruteforce_valuation on random generator matrices.
SuiteReport suite_oracle_equivalence(uint64_t seed = 42, int instances = 500, int workers = 1);

// The [7,3] simplex code: criterion, oracle, the cyclic program, and the
// multiset statistic agree at 2.
SuiteReport suite_simplex_anchor();

// Cyclic three-way agreement over the (n, p) grid, one or two cosets.
SuiteReport suite_abelian_threeway();

// Exhaustive soundness of the counting bounds over F_4 (q = 2, m = 2).
SuiteReport suite_bounds_chain();

// Homogeneous tightness witnesses for coprime-degree instances.
SuiteReport suite_tightness_g1(uint64_t seed = 7, uint64_t budget = 20000);

// Degree-set program equals the exhaustive minimum measured valuation.
SuiteReport suite_program_equivalence();

// Point counts over the prime field modulo the classical divisibility floor.
SuiteReport suite_ax_corollary();

// Identical (valuation, argmin) with 1 and 8 workers.
SuiteReport suite_determinism(uint64_t seed = 42, int instances = 500);

}  // namespace tracediv
