#pragma once

// Test-only oracles, kept independent of the library implementation paths
// they are used to check: dense polynomial arithmetic instead of sparse maps,
// factor-by-factor products instead of pentagonal series, lattice-point
// counts instead of divisor identities.

#include <vector>

#include "mf/qexpansion.hpp"
#include "mf/rational.hpp"

namespace oracle {

// Dense coefficient vectors indexed by plain q-exponent.
using Dense = std::vector<mf::Rational>;

Dense dense_mul(const Dense& a, const Dense& b, long nmax);
Dense dense_pow(const Dense& a, long e, long nmax);

// prod_{m>=1} (1 - q^{d m})^e by multiplying one binomial factor at a time
// (e >= 0).
Dense dense_eta_factor(long d, long e, long nmax);

// Coefficients of theta^4 = (sum_{n in Z} q^{n^2})^4 by counting
// representations as sums of four squares.
std::vector<long> theta4_by_lattice_count(long nmax);

long sigma_by_enumeration(long n, long power = 1);

// dim M_k(SL2Z) as the number of monomials E4^a E6^b with 4a + 6b = k.
long dim_sl2z_by_monomial_count(long k);

// Dense -> sparse comparison helper: does f agree with a through q^nmax?
bool matches_dense(const mf::QExpansion& f, const Dense& a, long nmax);

}  // namespace oracle
