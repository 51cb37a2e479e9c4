#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mf/formspace.hpp"
#include "mf/linalg.hpp"
#include "mf/qexpansion.hpp"
#include "mf/report.hpp"

namespace mf {

// T_p for an odd prime p not dividing the level, trivial character:
// coefficient at q^n of the image is a_{np} + p^{k-1} a_{n/p}.
// Output precision floor(P/p).
QExpansion apply_Tp(const QExpansion& f, long k, long p, long level);

// U_2 in the normalization where the coefficient action is a_n -> a_{2n};
// precision halves.
QExpansion apply_U2(const QExpansion& f);

struct OperatorLabel {
    enum class Kind { Tp, U2, Vd, TranslationHalf };
    Kind kind = Kind::Tp;
    long param = 0;  // p for Tp, d for Vd

    std::string to_string() const;
};

// Exact matrix of an operator in the basis order of a FormSpace; entries
// reproduce the action on each basis element through the Sturm precision.
struct OperatorMatrix {
    OperatorLabel label;
    long dim = 0;
    QMatrix entries;
};

OperatorMatrix operator_matrix(const FormSpace& space, const OperatorLabel& label);

// Echelon span of S_k(Gamma0(2)) together with its image under q -> q^2
// inside S_k(Gamma0(4)).  The dimension must equal
// 2 dim S_k(Gamma0(2)) - dim S_k(SL2Z); DimensionMismatch otherwise.
FormSpace oldspace_level4(long k, long precision = 0);

// Hecke-stable complement of the oldspace: split the characteristic
// polynomial of a separating operator (T_3, then T_3 + c T_5 for c = 1..9)
// into its old factor and the cofactor; when the two are coprime the
// newspace is the kernel of the cofactor evaluated at the operator.
// SeparationFailure if no candidate separates.
FormSpace newspace_level4(long k, long precision = 0);

// Matrix-level core of the charpoly split, exposed for direct testing:
// given candidate operators on the full space and their restrictions to the
// old subspace (as matrices), returns coordinates of a newspace basis and
// the index of the candidate used.
struct SplitResult {
    std::vector<std::vector<Rational>> kernel_coords;
    long candidate_used = -1;
};
SplitResult split_old_new(const std::vector<QMatrix>& candidates_full,
                          const std::vector<QMatrix>& candidates_old);

// U_2 kills every newspace basis vector, the support is odd-only, and
// translation by 1/2 acts as -1; failures list offending exponents.
CheckReport verify_lemma_3_1(long k, long precision = 0);

// The weight-8 pitfall vector h - a_2 V_2 h built from the level-2 newform:
// odd-supported and U_2-killed, yet old.
QExpansion odd_old_vector_weight8(long precision = 0);

// rescale_variable(basis_S_chi(k), 2) and newspace_level4(k) have identical
// reduced-echelon bases at Sturm precision, with dim = dim M_{k-6}(SL2Z).
CheckReport verify_theorem_1_2(long k, long precision = 0);

// Normalized Hecke eigenform with exact data.
struct Eigenform {
    long weight = 0;
    long level = 1;
    QExpansion coefficients;              // a_1 = 1
    std::map<long, Rational> eigenvalues;  // odd prime p -> a_p
    Rational a2;
};

// Rational-irreducible (or repeated-eigenvalue) block left unsplit.
struct EigenSubspace {
    long dim = 0;
    Poly minimal_polynomial;
};

struct EigenformExtraction {
    std::vector<Eigenform> eigenforms;
    std::vector<EigenSubspace> descriptors;
    OperatorLabel separator;
    long separator_shift = 0;  // c in T_3 + c T_5; 0 means plain T_3
};

// Splits a T_3-stable space along the rational eigenvalues of a separating
// operator.  Simple rational eigenvalues yield normalized eigenforms
// (validated: a_1 = 1, Hecke relation at odd primes, multiplicativity);
// repeated or irrational eigensystems come back as descriptors.
EigenformExtraction extract_rational_eigenforms(const FormSpace& space);

// Largest n with a_n determined by the stored coefficients.
long eigenform_coefficient_bound(const Eigenform& f);

}  // namespace mf
