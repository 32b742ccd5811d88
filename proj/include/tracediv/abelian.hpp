#pragma once

#include <cstdint>
#include <vector>

#include "tracediv/criterion.hpp"
#include "tracediv/field_tower.hpp"
#include "tracediv/trace_code.hpp"

namespace tracediv {

// Abelian code over F_q, q = p^e, on the group Z_{n_1} x ... x Z_{n_h} with
// exponent coprime to q, described by its nonzero tuples s_1..s_k.
struct AbelianCodeSpec {
  std::vector<uint64_t> group;  // n_1..n_h
  int p = 0, e = 0;
  std::vector<std::vector<uint64_t>> nonzeros;  // tuples s_i, entries mod n_l
};

// q-orbit closure of the nonzero tuples (componentwise s -> q*s mod n_l),
// deduplicated in generation order.
std::vector<std::vector<uint64_t>> expand_cosets(const AbelianCodeSpec& spec);

// Derived arithmetic context: m = ord_N(q), the tower (p, e, m), and the
// chosen roots gamma_l = beta^((q^m - 1)/n_l) for the tower's primitive beta.
struct AbelianContext {
  AbelianCodeSpec spec;  // nonzeros already expanded when requested
  uint64_t exponent = 1;
  int m = 1;
  FieldTower tower;
  std::vector<FieldElement> gammas;
  bool cosets_expanded = false;
};

AbelianContext build_abelian_context(const AbelianCodeSpec& spec, bool expand = false,
                                     uint64_t table_limit = FieldTower::kDefaultTableLimit);

// k x |A| generalized generator matrix with columns indexed by j in A in
// row-major mixed-radix order (last group coordinate fastest):
// entry(i, j) = prod_l gamma_l^{s_{i,l} j_l}.
GeneratorMatrix build_trace_representation(const AbelianContext& ctx);

// The Delsarte-McEliece program: minimize (1/(p-1)) sum_i S_p(r_i) - e over
// r in [0, q^m-1]^k with |r| = 0 mod (q-1), |r| > 0, and
// sum_i r_i s_{i,l} = 0 mod n_l for every l. No p-adic arithmetic is needed:
// the inner sum is |A| on the feasible set. The |r| > 0 constraint is
// enforced even though the printed program omits it (r = 0 would give -e).
CriterionResult delsarte_mceliece_valuation(const AbelianContext& ctx,
                                            uint64_t tuple_limit = uint64_t{1} << 24);

struct McElieceResult {
  uint64_t ell = 0;
  uint64_t exponent = 0;              // ceil(ell/(p-1)) - 1; equals ell - 1 for p = 2
  std::vector<uint64_t> witness;      // exponents from the coset union summing to 0 mod n
};

// Classical cyclic prime-field statistic: ell is the shortest positive length
// of a multiset of nonzeros (as exponents from the q-coset union) with
// product 1; every weight is divisible by p^{ceil(ell/(p-1)) - 1}.
McElieceResult mceliece_ell(const AbelianCodeSpec& spec);

}  // namespace tracediv
