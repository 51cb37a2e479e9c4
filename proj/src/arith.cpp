#include "mf/arith.hpp"

#include <stdexcept>

namespace mf {

std::vector<long> divisors(long n) {
    if (n < 1) throw std::invalid_argument("divisors: n must be positive");
    std::vector<long> small, large;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    }
    for (auto it = large.rbegin(); it != large.rend(); ++it) small.push_back(*it);
    return small;
}

Integer sigma(long n) { return sigma_k(n, 1); }

Integer sigma_odd(long n) {
    Integer s = 0;
    for (long d : divisors(n))
        if (d % 2 == 1) s += d;
    return s;
}

Integer sigma_k(long n, long k) {
    Integer s = 0;
    for (long d : divisors(n)) s += integer_pow(Integer(d), static_cast<unsigned long>(k));
    return s;
}

bool is_prime(long n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (long d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

std::vector<long> odd_primes_up_to(long bound) {
    std::vector<long> out;
    for (long p = 3; p <= bound; p += 2)
        if (is_prime(p)) out.push_back(p);
    return out;
}

}  // namespace mf
