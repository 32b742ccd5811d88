#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "tracediv/field_tower.hpp"
#include "tracediv/valuation.hpp"

namespace tracediv {

// k x n matrix over F_{q^m}; a generalized generator matrix of the trace code
// it induces over F_q. Zero rows and columns are permitted.
struct GeneratorMatrix {
  const FieldTower* tower = nullptr;
  int k = 0, n = 0;
  std::vector<FieldElement> entries;  // row-major

  static GeneratorMatrix make(const FieldTower& tower, int k, int n,
                              std::vector<FieldElement> entries);

  FieldElement at(int i, int j) const { return entries[static_cast<size_t>(i) * n + j]; }
};

struct Codeword {
  std::vector<FieldElement> coords;  // length n, values in the F_q subfield
  int weight = 0;
};

// Coordinate j is Tr_{q^m/q}(sum_i alpha_i g_{ij}).
Codeword trace_codeword(const GeneratorMatrix& g, std::span<const FieldElement> alpha);

struct BruteforceResult {
  Valuation valuation;                 // Infinite when the trace code is {0}
  std::vector<FieldElement> witness;   // minimizing alpha, lexicographically first
  bool degenerate = false;
  uint64_t enumerated = 0;
};

// Exact minimum of nu_p(wt(c(alpha))) over nonzero-weight codewords, by full
// enumeration of alpha in lexicographic log order.
BruteforceResult bruteforce_valuation(const GeneratorMatrix& g,
                                      uint64_t enumeration_limit = uint64_t{1} << 24,
                                      int workers = 1);

struct WeightDistribution {
  std::map<int, uint64_t> counts;  // weight -> number of distinct codewords
  uint64_t multiplicity = 1;       // alpha-vectors per codeword (kernel size)
};

WeightDistribution weight_distribution(const GeneratorMatrix& g,
                                       uint64_t enumeration_limit = uint64_t{1} << 24);

}  // namespace tracediv
