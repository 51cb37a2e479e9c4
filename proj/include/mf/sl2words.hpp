#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "mf/rational.hpp"

namespace mf {

// Element of SL2(Z) with arbitrary-precision entries; ad - bc = 1 enforced
// where stated.  Determinant != 1 companions (W_N, V_N) live in `analytic`.
struct Mat2 {
    Integer a, b, c, d;

    Integer det() const { return a * d - b * c; }
    bool operator==(const Mat2& other) const = default;
};

Mat2 mat2_mul(const Mat2& x, const Mat2& y);
Mat2 mat2_neg(const Mat2& x);
Mat2 mat2_inverse_unimodular(const Mat2& x);

Mat2 mat2_identity();
Mat2 mat2_S();  // ((0,-1),(1,0))
Mat2 mat2_T();  // ((1,1),(0,1))

std::string mat2_to_string(const Mat2& m);
// Parses "[[a,b],[c,d]]" with optional whitespace.
Mat2 mat2_from_string(const std::string& text);

// --- words in S, T ----------------------------------------------------------

enum class Letter { S, T, Tinv };

// Signed reduced word: no adjacent S S (absorbed into the sign via S^2 = -I)
// and no adjacent T T^-1.
struct GroupWord {
    int sign = 1;  // +1 or -1
    std::vector<Letter> letters;

    bool operator==(const GroupWord& other) const = default;
};

// Appends one letter, keeping the word reduced.
void word_append(GroupWord& w, Letter l);
void word_append_T_power(GroupWord& w, const Integer& n);

Mat2 word_to_matrix(const GroupWord& w);

// Inverse of word_to_matrix by Euclidean reduction on the bottom row;
// the result recomposes to M exactly, sign included.
GroupWord matrix_to_word(const Mat2& m);

// Number of maximal-run syllables (each S, each T-run); the Euclidean
// decomposition keeps this linear in the entry bit length.
long word_syllable_count(const GroupWord& w);

// Textual form "-S T^-1 S", T-runs compressed as "T^5".
std::string word_to_string(const GroupWord& w);
GroupWord word_from_string(const std::string& text);

// --- characters of PSL2(Z) --------------------------------------------------

// Character determined by chi(T) = zeta_6^a; the relations force
// chi(S) = chi(T)^3 = (-1)^a.  Real exactly when a is 0 or 3; a = 3 is the
// distinguished character with chi(S) = chi(T) = -1.
struct Character {
    int a = 0;  // residue mod 6

    bool is_real() const { return a % 3 == 0; }
    bool is_trivial() const { return a == 0; }

    bool operator==(const Character& other) const = default;
};

std::vector<Character> enumerate_characters();
Character chi_character();  // a = 3

// Exponent e mod 6 with chi(M) = zeta_6^e, evaluated letterwise on a
// decomposition of M; the sign of M is invisible to PSL2(Z) characters.
int char_eval(const Character& chi, const Mat2& m);
int char_eval_word(const Character& chi, const GroupWord& w);

// "1", "-1", "zeta6^e".
std::string character_value_to_string(int exponent_mod6);

// --- congruence subgroups ----------------------------------------------------

enum class CongruenceGroup { Gamma0_2, Gamma0_4, Gamma_2 };

bool membership(const Mat2& m, CongruenceGroup g);

// --- the level-4 generator pair ---------------------------------------------

enum class G04Gen { TSquared, ST4S };

// Signed word over {T^2, ST^4S}; syllables carry nonzero exponents.
struct Gamma04Word {
    int sign = 1;
    std::vector<std::pair<G04Gen, long>> syllables;

    bool operator==(const Gamma04Word& other) const = default;
};

Mat2 gamma04_word_to_matrix(const Gamma04Word& w);

// Decomposition of an element of <T^2, ST4S, -I> over those generators:
// conjugate by V_2 into Gamma(2), reduce in the free group on ((1,2),(0,1))
// and ((1,0),(2,1)) by ping-pong on entry sizes, conjugate back.  Raises
// NotInGroup when M is outside Gamma0(4), or inside Gamma0(4) but outside
// the subgroup the pair generates (odd T-power part).
Gamma04Word decompose_gamma0_4(const Mat2& m);

// Textual form "-T^2 ST4S^-1", runs compressed as "T^6" (even T exponents).
std::string gamma04_word_to_string(const Gamma04Word& w);
Gamma04Word gamma04_word_from_string(const std::string& text);

// --- deterministic sampling --------------------------------------------------

using Rng = std::mt19937_64;

// Bounded draw with stable cross-platform behavior (plain modulo).
long rand_below(Rng& rng, long n);

GroupWord random_word(Rng& rng, long max_len);
// Random element of Gamma(2) as a word in T^2, S T^2 S, -I.
Mat2 random_gamma2_element(Rng& rng, long max_syllables);
// Random word over the level-4 generator pair (and sign).
Gamma04Word random_gamma04_word(Rng& rng, long max_syllables);

}  // namespace mf
