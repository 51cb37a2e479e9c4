#include "mf/formspace.hpp"

#include <algorithm>

#include "mf/errors.hpp"

namespace mf {

std::string group_to_string(GroupLabel g) {
    switch (g) {
        case GroupLabel::SL2Z: return "sl2z";
        case GroupLabel::Gamma0_2: return "g0_2";
        case GroupLabel::Gamma0_4: return "g0_4";
    }
    throw Error("unknown group label");
}

GroupLabel group_from_string(const std::string& s) {
    if (s == "sl2z") return GroupLabel::SL2Z;
    if (s == "g0_2") return GroupLabel::Gamma0_2;
    if (s == "g0_4") return GroupLabel::Gamma0_4;
    throw ParseError("unknown group '" + s + "' (expected sl2z, g0_2 or g0_4)");
}

std::string character_to_string(CharacterLabel c) {
    return c == CharacterLabel::Trivial ? "trivial" : "chi";
}

CharacterLabel character_from_string(const std::string& s) {
    if (s == "trivial") return CharacterLabel::Trivial;
    if (s == "chi") return CharacterLabel::Chi;
    throw ParseError("unknown character '" + s + "' (expected trivial or chi)");
}

long group_index(GroupLabel g) {
    switch (g) {
        case GroupLabel::SL2Z: return 1;
        case GroupLabel::Gamma0_2: return 3;
        case GroupLabel::Gamma0_4: return 6;
    }
    throw Error("unknown group label");
}

long sturm_twice_exp(GroupLabel g, long k) {
    long idx = group_index(g);
    long ceil_bound = (k * idx + 11) / 12;
    return 2 * ceil_bound + 20;
}

long sturm_twice_exp_chi(long k) { return k / 2 + 20; }

long default_precision(GroupLabel g, long k) { return 5 * sturm_twice_exp(g, k); }

long default_precision_chi(long k) { return 5 * sturm_twice_exp(GroupLabel::Gamma0_4, k); }

long FormSpace::precision() const {
    if (basis.empty()) return 0;
    long p = basis.front().precision();
    for (const auto& f : basis) p = std::min(p, f.precision());
    return p;
}

Grid FormSpace::grid() const { return basis.empty() ? Grid::Integer : basis.front().grid(); }

std::vector<QExpansion> echelonize(const std::vector<QExpansion>& vecs) {
    std::vector<const QExpansion*> nonzero;
    for (const auto& f : vecs)
        if (!f.is_zero()) nonzero.push_back(&f);
    if (nonzero.empty()) return {};

    Grid grid = nonzero.front()->grid();
    long p = nonzero.front()->precision();
    for (const QExpansion* f : nonzero) {
        if (f->grid() != grid) throw GridError("echelonize: mixed exponent grids");
        p = std::min(p, f->precision());
    }

    QMatrix m(static_cast<long>(nonzero.size()), p);
    for (size_t i = 0; i < nonzero.size(); ++i)
        for (const auto& [e, v] : nonzero[i]->coeffs())
            if (e < p) m.at(static_cast<long>(i), e) = v;

    std::vector<long> pivots = rref(m);
    std::vector<QExpansion> out;
    for (size_t r = 0; r < pivots.size(); ++r) {
        std::map<long, Rational> coeffs;
        for (long e = 0; e < p; ++e)
            if (!is_zero(m.at(static_cast<long>(r), e))) coeffs[e] = m.at(static_cast<long>(r), e);
        out.emplace_back(grid, p, std::move(coeffs));
    }
    return out;
}

std::optional<std::vector<Rational>> coordinates_in_basis(const std::vector<QExpansion>& basis,
                                                          const QExpansion& f,
                                                          long need_precision) {
    long p = f.precision();
    for (const auto& b : basis) p = std::min(p, b.precision());
    if (p < need_precision)
        throw InsufficientPrecision("coordinates_in_basis: determined only through " +
                                    std::to_string(p) + " < " + std::to_string(need_precision));
    // Reduced echelon basis: the coordinate on basis[i] is the coefficient of
    // f at that pivot.
    QExpansion residual = truncate(f, p);
    std::vector<Rational> coords;
    coords.reserve(basis.size());
    for (const auto& b : basis) {
        Rational c = residual.coeff2(b.leading_exponent2());
        coords.push_back(c);
        if (!is_zero(c)) residual = sub(residual, scalar_mul(c, truncate(b, p)));
    }
    if (!residual.is_zero()) return std::nullopt;
    return coords;
}

FormSpace truncate_space(const FormSpace& space, long p) {
    FormSpace out = space;
    for (auto& f : out.basis) f = truncate(f, p);
    return out;
}

bool spans_equal(const FormSpace& a, const FormSpace& b, long need_precision) {
    if (a.dimension() != b.dimension()) return false;
    if (a.dimension() == 0) return true;
    long p = std::min(a.precision(), b.precision());
    if (p < need_precision)
        throw InsufficientPrecision("spans_equal: common precision below requirement");
    std::vector<QExpansion> ea, eb;
    for (const auto& f : a.basis) ea.push_back(truncate(f, p));
    for (const auto& f : b.basis) eb.push_back(truncate(f, p));
    ea = echelonize(ea);
    eb = echelonize(eb);
    return ea == eb;
}

long dim_M(GroupLabel g, long k) {
    if (k < 0 || k % 2 != 0) return 0;
    switch (g) {
        case GroupLabel::SL2Z:
            if (k == 0) return 1;
            return (k % 12 == 2) ? k / 12 : k / 12 + 1;
        case GroupLabel::Gamma0_2:
            return k / 4 + 1;
        case GroupLabel::Gamma0_4:
            return k / 2 + 1;
    }
    throw Error("unknown group label");
}

long dim_S(GroupLabel g, long k) {
    if (k < 4 || k % 2 != 0) return 0;
    long eis = 0;
    switch (g) {
        case GroupLabel::SL2Z: eis = 1; break;
        case GroupLabel::Gamma0_2: eis = 2; break;
        case GroupLabel::Gamma0_4: eis = 3; break;
    }
    return std::max(0L, dim_M(g, k) - eis);
}

long dim_S_chi(long k) {
    if (k < 6 || k % 2 != 0) return 0;
    return dim_M(GroupLabel::SL2Z, k - 6);
}

}  // namespace mf
