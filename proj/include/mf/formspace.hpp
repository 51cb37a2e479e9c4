#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mf/linalg.hpp"
#include "mf/qexpansion.hpp"

namespace mf {

enum class GroupLabel { SL2Z, Gamma0_2, Gamma0_4 };
enum class CharacterLabel { Trivial, Chi };

std::string group_to_string(GroupLabel g);
GroupLabel group_from_string(const std::string& s);
std::string character_to_string(CharacterLabel c);
CharacterLabel character_from_string(const std::string& s);

// Index in PSL2(Z): 1, 3, 6.
long group_index(GroupLabel g);

// Determination precision in twice-exponent units: 2*ceil(k*index/12) plus a
// +20 safety margin against operator precision shrinkage.
long sturm_twice_exp(GroupLabel g, long k);
long sturm_twice_exp_chi(long k);

// Spaces are built at 5x the Sturm precision so that T_3 and T_5 matrices
// stay determined after the operators shrink precision.
long default_precision(GroupLabel g, long k);
long default_precision_chi(long k);

// Weight-graded space of forms with a reduced-echelon basis ordered by
// strictly increasing pivot twice-exponent, leading coefficients 1.
struct FormSpace {
    GroupLabel group = GroupLabel::SL2Z;
    long weight = 0;
    CharacterLabel character = CharacterLabel::Trivial;
    std::vector<QExpansion> basis;
    long sturm = 1;

    long dimension() const { return static_cast<long>(basis.size()); }
    long precision() const;  // common basis precision; 0 when empty
    Grid grid() const;       // Grid::Integer when empty
};

// Reduced row echelon span of the given expansions at their common precision.
// All inputs must share a grid.
std::vector<QExpansion> echelonize(const std::vector<QExpansion>& vecs);

// Coordinates of f in an echelon basis, or nullopt if f is not in the span.
// Membership is decided exactly through min(f.precision, basis precision),
// which must be >= need_precision.
std::optional<std::vector<Rational>> coordinates_in_basis(const std::vector<QExpansion>& basis,
                                                          const QExpansion& f,
                                                          long need_precision);

// Truncate every basis element to precision p (keeps echelon form).
FormSpace truncate_space(const FormSpace& space, long p);

// Equality of spans, decided by comparing reduced-echelon bases truncated to
// a common precision >= need_precision.
bool spans_equal(const FormSpace& a, const FormSpace& b, long need_precision);

// --- closed-form dimensions (the cross-check oracle for every basis) -------

long dim_M(GroupLabel g, long k);
long dim_S(GroupLabel g, long k);
long dim_S_chi(long k);

}  // namespace mf
