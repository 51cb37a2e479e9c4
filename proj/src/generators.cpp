#include "mf/generators.hpp"

#include <algorithm>

#include "mf/arith.hpp"
#include "mf/errors.hpp"

namespace mf {

QExpansion eisenstein(long k, long precision) {
    long a;
    switch (k) {
        case 2: a = -24; break;
        case 4: a = 240; break;
        case 6: a = -504; break;
        default: throw UnsupportedWeight("eisenstein: k must be 2, 4 or 6");
    }
    std::map<long, Rational> coeffs{{0, Rational(1)}};
    for (long n = 1; 2 * n < precision; ++n) {
        Rational c(a);
        c *= Rational(sigma_k(n, k - 1));
        coeffs[2 * n] = c;
    }
    return QExpansion(Grid::Integer, precision, std::move(coeffs));
}

namespace {

// theta = sum_{n in Z} q^{n^2}
QExpansion theta_series(long precision) {
    std::map<long, Rational> coeffs{{0, Rational(1)}};
    for (long n = 1; 2 * n * n < precision; ++n) coeffs[2 * n * n] = 2;
    return QExpansion(Grid::Integer, precision, std::move(coeffs));
}

// F = sum_{n odd} sigma(n) q^n
QExpansion odd_sigma_series(long precision) {
    std::map<long, Rational> coeffs;
    for (long n = 1; 2 * n < precision; n += 2) coeffs[2 * n] = Rational(sigma(n));
    return QExpansion(Grid::Integer, precision, std::move(coeffs));
}

}  // namespace

std::vector<RingGenerator> ring_generators(GroupLabel group, long precision) {
    switch (group) {
        case GroupLabel::SL2Z:
            return {{"E4", 4, eisenstein(4, precision)}, {"E6", 6, eisenstein(6, precision)}};
        case GroupLabel::Gamma0_2: {
            QExpansion e2 = eisenstein(2, precision);
            QExpansion x2 = sub(scalar_mul(Rational(2), rescale_variable(e2, 2, precision)),
                                truncate(e2, precision));
            return {{"X2", 2, x2}, {"E4", 4, eisenstein(4, precision)}};
        }
        case GroupLabel::Gamma0_4:
            return {{"theta4", 2, pow(theta_series(precision), 4)},
                    {"F", 2, odd_sigma_series(precision)}};
    }
    throw Error("unknown group label");
}

FormSpace basis_M(GroupLabel group, long k, long precision) {
    if (k % 2 != 0) throw OddWeight("basis_M: weight must be even");
    if (precision <= 0) precision = default_precision(group, k);

    FormSpace space;
    space.group = group;
    space.weight = k;
    space.character = CharacterLabel::Trivial;
    space.sturm = sturm_twice_exp(group, k);
    if (k < 0) return space;

    std::vector<RingGenerator> gens = ring_generators(group, precision);
    const long w1 = gens[0].weight, w2 = gens[1].weight;

    std::vector<QExpansion> monomials;
    for (long b = 0; b * w2 <= k; ++b) {
        if ((k - b * w2) % w1 != 0) continue;
        long a = (k - b * w2) / w1;
        monomials.push_back(mul(pow(gens[0].series, a), pow(gens[1].series, b)));
    }
    space.basis = echelonize(monomials);

    long expected = dim_M(group, k);
    if (space.dimension() != expected)
        throw DimensionMismatch("basis_M(" + group_to_string(group) + ", " + std::to_string(k) +
                                "): rank " + std::to_string(space.dimension()) + " != closed-form " +
                                std::to_string(expected));
    return space;
}

long cusp_ideal_weight(GroupLabel group) {
    switch (group) {
        case GroupLabel::SL2Z: return 12;
        case GroupLabel::Gamma0_2: return 8;
        case GroupLabel::Gamma0_4: return 6;
    }
    throw Error("unknown group label");
}

QExpansion cusp_ideal_generator(GroupLabel group, long precision) {
    switch (group) {
        case GroupLabel::SL2Z: return eta_product({{1, 24}}, precision);
        case GroupLabel::Gamma0_2: return eta_product({{1, 8}, {2, 8}}, precision);
        case GroupLabel::Gamma0_4: return eta_product({{2, 12}}, precision);
    }
    throw Error("unknown group label");
}

FormSpace basis_S(GroupLabel group, long k, long precision) {
    if (k % 2 != 0) throw OddWeight("basis_S: weight must be even");
    if (precision <= 0) precision = default_precision(group, k);

    FormSpace space;
    space.group = group;
    space.weight = k;
    space.character = CharacterLabel::Trivial;
    space.sturm = sturm_twice_exp(group, k);

    long w = cusp_ideal_weight(group);
    if (k - w < 0) return space;

    QExpansion c = cusp_ideal_generator(group, precision);
    FormSpace interior = basis_M(group, k - w, precision);
    std::vector<QExpansion> products;
    for (const auto& f : interior.basis) products.push_back(mul(c, f));
    space.basis = echelonize(products);

    long expected = dim_S(group, k);
    if (space.dimension() != expected)
        throw DimensionMismatch("basis_S(" + group_to_string(group) + ", " + std::to_string(k) +
                                "): rank " + std::to_string(space.dimension()) + " != closed-form " +
                                std::to_string(expected));
    return space;
}

FormSpace basis_S_chi(long k, long precision) {
    if (k % 2 != 0) throw OddWeight("basis_S_chi: weight must be even");
    if (precision <= 0) precision = default_precision_chi(k);

    FormSpace space;
    space.group = GroupLabel::SL2Z;
    space.weight = k;
    space.character = CharacterLabel::Chi;
    space.sturm = sturm_twice_exp_chi(k);
    if (k < 6) return space;

    QExpansion eta12 = eta_product({{1, 12}}, precision);
    FormSpace interior = basis_M(GroupLabel::SL2Z, k - 6, precision);
    std::vector<QExpansion> products;
    for (const auto& f : interior.basis) products.push_back(mul(eta12, f));
    space.basis = echelonize(products);

    if (space.dimension() != dim_S_chi(k))
        throw DimensionMismatch("basis_S_chi(" + std::to_string(k) + "): rank " +
                                std::to_string(space.dimension()) + " != dim M_{k-6}(SL2Z)");
    return space;
}

std::vector<long long> eta2_pow12_coefficients(long nmax) {
    if (nmax < 1) throw Error("eta2_pow12_coefficients: nmax must be positive");
    // q prod(1-q^{2n})^12 = q J(q)^4 with J = sum_{j>=0} (-1)^j (2j+1) q^{j^2+j}.
    const long len = nmax;  // coefficients of J^4 for exponents 0..nmax-1
    std::vector<long> jexp;
    std::vector<long long> jval;
    for (long j = 0; j * j + j < len; ++j) {
        jexp.push_back(j * j + j);
        jval.push_back((j % 2 == 0 ? 1LL : -1LL) * (2 * j + 1));
    }

    std::vector<__int128> acc(len, 0);
    for (size_t i = 0; i < jexp.size(); ++i)
        for (size_t j = 0; j < jexp.size(); ++j) {
            long e = jexp[i] + jexp[j];
            if (e >= len) break;
            acc[e] += static_cast<__int128>(jval[i]) * jval[j];
        }
    std::vector<long long> j2(len);
    for (long i = 0; i < len; ++i) j2[i] = static_cast<long long>(acc[i]);

    auto sparse_mul = [&](const std::vector<long long>& dense) {
        std::vector<__int128> out(len, 0);
        for (size_t i = 0; i < jexp.size(); ++i) {
            long e0 = jexp[i];
            long long v = jval[i];
            for (long e = 0; e + e0 < len; ++e)
                if (dense[e] != 0) out[e + e0] += static_cast<__int128>(v) * dense[e];
        }
        std::vector<long long> narrowed(len);
        for (long e = 0; e < len; ++e) {
            const __int128 x = out[e];
            constexpr __int128 lim = static_cast<__int128>(1) << 62;
            if (x > lim || x < -lim) throw Error("eta2_pow12_coefficients: coefficient overflow");
            narrowed[e] = static_cast<long long>(x);
        }
        return narrowed;
    };
    std::vector<long long> j3 = sparse_mul(j2);
    std::vector<long long> j4 = sparse_mul(j3);

    std::vector<long long> a(nmax + 1, 0);
    for (long n = 1; n <= nmax; ++n) a[n] = j4[n - 1];

    // Cross-check a prefix against the generic eta-product pipeline.
    long check = std::min<long>(nmax, 40);
    QExpansion ref = eta_product({{2, 12}}, 2 * check + 2);
    for (long n = 1; n <= check; ++n)
        if (Rational(static_cast<long>(a[n])) != ref.coeff(n))
            throw Error("eta2_pow12_coefficients: fast path disagrees with eta_product at n=" +
                        std::to_string(n));
    return a;
}

}  // namespace mf
