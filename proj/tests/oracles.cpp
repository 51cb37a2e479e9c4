#include "oracles.hpp"

#include <cmath>

namespace oracle {

using mf::Rational;

Dense dense_mul(const Dense& a, const Dense& b, long nmax) {
    Dense c(nmax + 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (mf::is_zero(a[i])) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            if (static_cast<long>(i + j) > nmax) break;
            c[i + j] += a[i] * b[j];
        }
    }
    return c;
}

Dense dense_pow(const Dense& a, long e, long nmax) {
    Dense r(nmax + 1, Rational(0));
    r[0] = 1;
    for (long i = 0; i < e; ++i) r = dense_mul(r, a, nmax);
    return r;
}

Dense dense_eta_factor(long d, long e, long nmax) {
    Dense base(nmax + 1, Rational(0));
    base[0] = 1;
    for (long m = 1; d * m <= nmax; ++m) {
        Dense factor(nmax + 1, Rational(0));
        factor[0] = 1;
        factor[d * m] = -1;
        base = dense_mul(base, factor, nmax);
    }
    return dense_pow(base, e, nmax);
}

std::vector<long> theta4_by_lattice_count(long nmax) {
    long r = static_cast<long>(std::sqrt(static_cast<double>(nmax))) + 1;
    std::vector<long> counts(nmax + 1, 0);
    for (long a = -r; a <= r; ++a)
        for (long b = -r; b <= r; ++b) {
            if (a * a + b * b > nmax) continue;
            for (long c = -r; c <= r; ++c) {
                long s3 = a * a + b * b + c * c;
                if (s3 > nmax) continue;
                for (long d = -r; d <= r; ++d) {
                    long s = s3 + d * d;
                    if (s <= nmax) ++counts[s];
                }
            }
        }
    return counts;
}

long sigma_by_enumeration(long n, long power) {
    long total = 0;
    for (long d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        long pd = 1;
        for (long i = 0; i < power; ++i) pd *= d;
        total += pd;
    }
    return total;
}

long dim_sl2z_by_monomial_count(long k) {
    if (k < 0 || k % 2 != 0) return 0;
    long count = 0;
    for (long b = 0; 6 * b <= k; ++b)
        if ((k - 6 * b) % 4 == 0) ++count;
    return count;
}

bool matches_dense(const mf::QExpansion& f, const Dense& a, long nmax) {
    if (f.grid() != mf::Grid::Integer) return false;
    if (f.precision() <= 2 * nmax) return false;
    for (long n = 0; n <= nmax; ++n) {
        Rational expected = n < static_cast<long>(a.size()) ? a[n] : Rational(0);
        if (f.coeff(n) != expected) return false;
    }
    return true;
}

}  // namespace oracle
