#pragma once

#include <cstdint>

#include "mf/report.hpp"

namespace mf {

// Character classification: exactly six characters of PSL2(Z), exactly two
// real, the nontrivial real one has chi(S) = chi(T) = -1, and chi evaluates
// to 1 on random elements of Gamma(2).
CheckReport verify_lemma_2_1(std::uint64_t seed, long gamma2_samples = 200);

// Word decompositions recompose exactly: random elements of the subgroup
// generated by {T^2, ST^4S, -I} through decompose_gamma0_4, and random
// SL2(Z) matrices through the S,T Euclidean decomposition; the character
// is 1 on both generators.
CheckReport verify_prop_2_2(std::uint64_t seed, long gamma04_samples = 500,
                            long sl2_samples = 1000);

}  // namespace mf
