#include "mf/qexpansion.hpp"

#include <algorithm>
#include <sstream>

#include "mf/errors.hpp"

namespace mf {

void QExpansion::validate() const {
    if (precision_ < 1) throw Error("QExpansion: precision must be positive");
    for (const auto& [m, v] : coeffs_) {
        (void)v;
        if (m < 0 || m >= precision_) throw Error("QExpansion: key outside [0, precision)");
        if (grid_ == Grid::Integer && m % 2 != 0)
            throw GridError("QExpansion: odd twice-exponent on the integer grid");
    }
}

void QExpansion::strip_zeros() {
    for (auto it = coeffs_.begin(); it != coeffs_.end();) {
        if (mf::is_zero(it->second))
            it = coeffs_.erase(it);
        else
            ++it;
    }
}

Rational QExpansion::coeff2(long m) const {
    auto it = coeffs_.find(m);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

long QExpansion::leading_exponent2() const {
    return coeffs_.empty() ? precision_ : coeffs_.begin()->first;
}

std::string QExpansion::to_string() const {
    if (coeffs_.empty()) return "0 + O(q^" + std::to_string(precision_ / 2) + ")";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, v] : coeffs_) {
        Rational av = abs(v);
        if (first) {
            if (sgn(v) < 0) out << "-";
            first = false;
        } else {
            out << (sgn(v) < 0 ? " - " : " + ");
        }
        bool unit = (av == 1) && m != 0;
        if (!unit) {
            out << av.get_num().get_str();
            if (av.get_den() != 1) out << "/" << av.get_den().get_str();
        }
        if (m != 0) {
            if (!unit) out << "*";
            out << "q";
            if (m != 2) {
                if (m % 2 == 0)
                    out << "^" << (m / 2);
                else
                    out << "^(" << m << "/2)";
            }
        }
    }
    out << " + O(q^";
    if (precision_ % 2 == 0)
        out << (precision_ / 2);
    else
        out << "(" << precision_ << "/2)";
    out << ")";
    return out.str();
}

namespace {

Grid common_grid(const QExpansion& a, const QExpansion& b, const char* op) {
    if (a.is_zero() && b.is_zero()) return Grid::Integer;
    if (a.is_zero()) return b.grid();
    if (b.is_zero()) return a.grid();
    if (a.grid() != b.grid())
        throw GridError(std::string(op) + ": operands live on different exponent grids");
    return a.grid();
}

bool all_keys_even(const std::map<long, Rational>& m) {
    return std::all_of(m.begin(), m.end(), [](const auto& kv) { return kv.first % 2 == 0; });
}

}  // namespace

QExpansion add(const QExpansion& a, const QExpansion& b) {
    Grid g = common_grid(a, b, "add");
    long p = std::min(a.precision(), b.precision());
    std::map<long, Rational> out;
    for (const auto& [m, v] : a.coeffs())
        if (m < p) out[m] = v;
    for (const auto& [m, v] : b.coeffs()) {
        if (m >= p) continue;
        auto [it, inserted] = out.emplace(m, v);
        if (!inserted) it->second += v;
    }
    return QExpansion(g, p, std::move(out));
}

QExpansion neg(const QExpansion& a) { return scalar_mul(Rational(-1), a); }

QExpansion sub(const QExpansion& a, const QExpansion& b) { return add(a, neg(b)); }

QExpansion scalar_mul(const Rational& c, const QExpansion& a) {
    if (is_zero(c)) return QExpansion(a.grid(), a.precision());
    std::map<long, Rational> out;
    for (const auto& [m, v] : a.coeffs()) out[m] = c * v;
    return QExpansion(a.grid(), a.precision(), std::move(out));
}

QExpansion mul(const QExpansion& a, const QExpansion& b) {
    long p = std::min(a.precision(), b.precision());
    if (a.is_zero() || b.is_zero()) return QExpansion(Grid::Integer, p);
    // The integer grid embeds in the half grid, so mixed products are total.
    Grid g = (a.grid() == Grid::Half || b.grid() == Grid::Half) ? Grid::Half : Grid::Integer;
    std::map<long, Rational> out;
    for (const auto& [ma, va] : a.coeffs()) {
        if (ma >= p) break;
        for (const auto& [mb, vb] : b.coeffs()) {
            long m = ma + mb;
            if (m >= p) break;
            auto [it, inserted] = out.emplace(m, va * vb);
            if (!inserted) it->second += va * vb;
        }
    }
    QExpansion result(g, p, std::move(out));
    return normalize_grid(result);
}

QExpansion pow(const QExpansion& a, long e) {
    if (e < 0) throw Error("pow: negative exponent; use invert_unit");
    std::map<long, Rational> one{{0, Rational(1)}};
    QExpansion result(Grid::Integer, a.precision(), std::move(one));
    QExpansion base = a;
    while (e > 0) {
        if (e & 1) result = mul(result, base);
        e >>= 1;
        if (e > 0) base = mul(base, base);
    }
    return result;
}

QExpansion invert_unit(const QExpansion& a) {
    Rational a0 = a.coeff2(0);
    if (is_zero(a0)) throw Error("invert_unit: constant term is zero");
    long p = a.precision();
    std::vector<Rational> inv(p);
    inv[0] = Rational(1) / a0;
    // v_m = -(1/a_0) sum_{j=1..m} a_j v_{m-j}
    for (long m = 1; m < p; ++m) {
        Rational acc(0);
        for (const auto& [j, aj] : a.coeffs()) {
            if (j == 0) continue;
            if (j > m) break;
            if (!is_zero(inv[m - j])) acc += aj * inv[m - j];
        }
        if (!is_zero(acc)) inv[m] = -acc / a0;
    }
    std::map<long, Rational> out;
    for (long m = 0; m < p; ++m)
        if (!is_zero(inv[m])) out[m] = inv[m];
    return QExpansion(a.grid(), p, std::move(out));
}

QExpansion rescale_variable(const QExpansion& f, long d, long cap) {
    if (d < 1) throw Error("rescale_variable: d must be >= 1");
    long p = std::min(f.precision() * d, cap);
    std::map<long, Rational> out;
    for (const auto& [m, v] : f.coeffs()) {
        long md = m * d;
        if (md < p) out[md] = v;
    }
    return normalize_grid(QExpansion(f.grid(), p, std::move(out)));
}

QExpansion translation_sign_action(const QExpansion& f, const Rational& t) {
    if (t != 1 && t != Rational(1, 2))
        throw Error("translation_sign_action: t must be 1 or 1/2");
    bool half = (t == Rational(1, 2));
    std::map<long, Rational> out;
    for (const auto& [m, v] : f.coeffs()) {
        long mt;  // m * t, which must be integral
        if (half) {
            if (m % 2 != 0)
                throw NonRealMultiplier(
                    "translation_sign_action: multiplier at twice-exponent " + std::to_string(m) +
                    " is not +-1");
            mt = m / 2;
        } else {
            mt = m;
        }
        out[m] = (mt % 2 == 0) ? v : -v;
    }
    return QExpansion(f.grid(), f.precision(), std::move(out));
}

QExpansion normalize_grid(const QExpansion& f) {
    if (f.grid() == Grid::Half && all_keys_even(f.coeffs()))
        return QExpansion(Grid::Integer, f.precision(), f.coeffs());
    return f;
}

QExpansion promote_to_half(const QExpansion& f) {
    return QExpansion(Grid::Half, f.precision(), f.coeffs());
}

QExpansion truncate(const QExpansion& f, long p) {
    long np = std::min(f.precision(), p);
    std::map<long, Rational> out;
    for (const auto& [m, v] : f.coeffs()) {
        if (m >= np) break;
        out[m] = v;
    }
    return QExpansion(f.grid(), np, std::move(out));
}

QExpansion shift_up(const QExpansion& f, long m0, Grid result_grid) {
    if (m0 < 0) throw Error("shift_up: negative shift");
    std::map<long, Rational> out;
    for (const auto& [m, v] : f.coeffs()) out[m + m0] = v;
    return QExpansion(result_grid, f.precision() + m0, std::move(out));
}

QExpansion euler_factor_product(long d, long precision) {
    if (d < 1) throw Error("euler_factor_product: d must be >= 1");
    // prod(1 - x^n) = sum_j (-1)^j x^{j(3j-1)/2}, x = q^d; twice-exponents.
    std::map<long, Rational> out{{0, Rational(1)}};
    for (long j = 1;; ++j) {
        long g1 = j * (3 * j - 1) / 2;
        long g2 = j * (3 * j + 1) / 2;
        long m1 = 2 * d * g1, m2 = 2 * d * g2;
        if (m1 >= precision && m2 >= precision) break;
        Rational s((j % 2 == 0) ? 1 : -1);
        if (m1 < precision) out[m1] = s;
        if (m2 < precision) out[m2] = s;
    }
    return QExpansion(Grid::Integer, precision, std::move(out));
}

QExpansion eta_product(const std::vector<std::pair<long, long>>& factors, long precision) {
    if (precision < 1) throw Error("eta_product: precision must be positive");
    long weighted = 0;  // sum d*e
    for (const auto& [d, e] : factors) {
        if (d < 1) throw Error("eta_product: d must be >= 1");
        weighted += d * e;
    }
    // Prefactor q^{weighted/24}; twice-exponent weighted/12.
    if (weighted < 0 || weighted % 12 != 0)
        throw PrefactorNotOnGrid("eta_product: prefactor exponent " + std::to_string(weighted) +
                                 "/24 is not a nonnegative half-integer");
    long m0 = weighted / 12;
    Grid grid = (m0 % 2 == 0) ? Grid::Integer : Grid::Half;
    if (m0 >= precision) return QExpansion(grid, precision);

    long pp = precision - m0;
    std::map<long, Rational> one{{0, Rational(1)}};
    QExpansion prod(Grid::Integer, pp, std::move(one));
    for (const auto& [d, e] : factors) {
        if (e == 0) continue;
        QExpansion base = euler_factor_product(d, pp);
        QExpansion powed = pow(base, e < 0 ? -e : e);
        if (e < 0) powed = invert_unit(powed);
        prod = mul(prod, powed);
    }
    return shift_up(prod, m0, grid);
}

}  // namespace mf
