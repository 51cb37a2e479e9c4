#pragma once

#include <string>
#include <vector>

#include "mf/formspace.hpp"
#include "mf/qexpansion.hpp"

namespace mf {

// Normalized Eisenstein expansion for k in {2, 4, 6}.  E2 is quasi-modular
// and is only ever consumed inside the weight-2 level-2 combination below.
QExpansion eisenstein(long k, long precision);

struct RingGenerator {
    std::string name;
    long weight;
    QExpansion series;
};

// Free polynomial generators of the graded ring of modular forms:
//   SL2Z      -> E4 (wt 4), E6 (wt 6)
//   Gamma0_2  -> X2 = 2 E2(2 tau) - E2(tau) (wt 2), E4 (wt 4)
//   Gamma0_4  -> theta^4 (wt 2), F = sum_{n odd} sigma(n) q^n (wt 2)
std::vector<RingGenerator> ring_generators(GroupLabel group, long precision);

// Echelon basis of M_k as weight-k monomials in the ring generators.  The
// rank is checked against the closed-form dimension.
FormSpace basis_M(GroupLabel group, long k, long precision = 0);

// S_k = c * M_{k-w} for the principal cusp ideal generator c of weight w:
//   SL2Z: Delta (w=12); Gamma0_2: eta(tau)^8 eta(2tau)^8 (w=8);
//   Gamma0_4: eta(2tau)^12 (w=6).
FormSpace basis_S(GroupLabel group, long k, long precision = 0);

// Cusp forms of level 1 transforming under the nontrivial real character:
// eta(tau)^12 * M_{k-6}(SL2Z) on the half grid; empty for k < 6.
FormSpace basis_S_chi(long k, long precision = 0);

// The cusp ideal generator for a group, at the given precision.
QExpansion cusp_ideal_generator(GroupLabel group, long precision);
long cusp_ideal_weight(GroupLabel group);

// Coefficients a_1..a_nmax of q * prod(1 - q^{2n})^12 as exact int64,
// computed through the lacunary cube series (sum (-1)^j (2j+1) q^{j^2+j})^4.
// O(N sqrt N); used where hundreds of thousands of coefficients are needed.
// Cross-checked against eta_product on a prefix at construction.
std::vector<long long> eta2_pow12_coefficients(long nmax);

}  // namespace mf
