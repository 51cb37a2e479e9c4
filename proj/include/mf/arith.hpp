#pragma once

#include <vector>

#include "mf/rational.hpp"

namespace mf {

// Sum of all positive divisors of n.
Integer sigma(long n);

// Sum of the odd positive divisors of n.
Integer sigma_odd(long n);

// Sum of k-th powers of positive divisors of n.
Integer sigma_k(long n, long k);

std::vector<long> divisors(long n);

bool is_prime(long n);

// Odd primes <= bound, ascending.
std::vector<long> odd_primes_up_to(long bound);

}  // namespace mf
