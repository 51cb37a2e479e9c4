#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mf/rational.hpp"

namespace mf {

// Exponent grid of a truncated expansion in q = e^{2 pi i tau}.
// Exponents are stored doubled ("twice-exponent" m), so q^{m/2} covers both
// integer and half-integer powers with plain integer keys.
enum class Grid { Integer, Half };

// Truncated formal q-expansion with exact rational coefficients.
//
// Invariants:
//   - every key m satisfies 0 <= m < precision (twice-exponent units)
//   - Grid::Integer => all keys even
//   - no stored zero coefficients (equality is map equality)
// Values are immutable after construction; all operations are pure.
class QExpansion {
public:
    QExpansion() : grid_(Grid::Integer), precision_(1) {}

    QExpansion(Grid grid, long precision) : grid_(grid), precision_(precision) { validate(); }

    QExpansion(Grid grid, long precision, std::map<long, Rational> coeffs)
        : grid_(grid), precision_(precision), coeffs_(std::move(coeffs)) {
        strip_zeros();
        validate();
    }

    Grid grid() const { return grid_; }
    long precision() const { return precision_; }
    const std::map<long, Rational>& coeffs() const { return coeffs_; }

    // Coefficient at twice-exponent m (zero when absent).
    Rational coeff2(long m) const;
    // Coefficient of q^n (integer n).
    Rational coeff(long n) const { return coeff2(2 * n); }

    bool is_zero() const { return coeffs_.empty(); }

    // Smallest supported twice-exponent; precision() when zero.
    long leading_exponent2() const;

    bool operator==(const QExpansion& other) const = default;

    std::string to_string() const;

private:
    void validate() const;
    void strip_zeros();

    Grid grid_;
    long precision_;
    std::map<long, Rational> coeffs_;
};

inline constexpr long kPrecisionCap = 1L << 22;

// --- arithmetic -----------------------------------------------------------

// Coefficientwise sum at precision min(a.P, b.P).  A zero operand adopts the
// other grid; otherwise mismatched grids raise GridError.
QExpansion add(const QExpansion& a, const QExpansion& b);
QExpansion sub(const QExpansion& a, const QExpansion& b);
QExpansion neg(const QExpansion& a);
QExpansion scalar_mul(const Rational& c, const QExpansion& a);

// Cauchy product truncated to min(a.P, b.P).  Half x Half relabels to the
// integer grid when every result key is even; an integer-grid operand is
// embedded in the half grid when the grids are mixed.
QExpansion mul(const QExpansion& a, const QExpansion& b);

// f^e for e >= 0 by binary powering of truncated products.
QExpansion pow(const QExpansion& a, long e);

// Reciprocal of a series with nonzero constant term, by the truncated
// geometric-series recurrence.
QExpansion invert_unit(const QExpansion& a);

// q |-> q^d: key m moves to m*d, precision becomes min(P*d, cap).
QExpansion rescale_variable(const QExpansion& f, long d, long cap = kPrecisionCap);

// tau |-> tau + t for t in {1, 1/2}: coefficient at twice-exponent m picks up
// the factor (-1)^{m t}.  Raises NonRealMultiplier if m*t is not an integer
// for some supported m.
QExpansion translation_sign_action(const QExpansion& f, const Rational& t);

// Relabel a half-grid expansion whose support is entirely even as integer-grid.
QExpansion normalize_grid(const QExpansion& f);

// View an integer-grid expansion on the half grid (keys unchanged).
QExpansion promote_to_half(const QExpansion& f);

// Drop coefficients at twice-exponent >= p; precision becomes min(P, p).
QExpansion truncate(const QExpansion& f, long p);

// Multiply by q^{m0/2} (m0 >= 0 twice-exponent units); precision grows by m0.
QExpansion shift_up(const QExpansion& f, long m0, Grid result_grid);

// --- classical products ----------------------------------------------------

// q^{(1/24) sum d*e} * prod_{(d,e)} prod_{n>=1} (1 - q^{dn})^e, truncated at
// `precision` twice-exponent units.  The prefactor exponent must be a
// nonnegative half-integer (PrefactorNotOnGrid otherwise); the result lives
// on the half grid exactly when that exponent is a strict half-integer.
QExpansion eta_product(const std::vector<std::pair<long, long>>& factors, long precision);

// prod_{n>=1} (1 - q^{dn}) expanded by the pentagonal-number series.
QExpansion euler_factor_product(long d, long precision);

}  // namespace mf
