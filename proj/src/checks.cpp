#include "mf/checks.hpp"

#include "mf/errors.hpp"
#include "mf/sl2words.hpp"

namespace mf {

CheckReport verify_lemma_2_1(std::uint64_t seed, long gamma2_samples) {
    CheckReport report;
    report.check = "lemma-2-1";
    report.pass = true;
    report.details["seed"] = seed;

    std::vector<Character> chars = enumerate_characters();
    report.details["count"] = chars.size();
    if (chars.size() != 6) report.pass = false;

    long real_count = 0;
    for (const Character& c : chars)
        if (c.is_real()) ++real_count;
    report.details["real_count"] = real_count;
    if (real_count != 2) report.pass = false;

    Character chi = chi_character();
    GroupWord s_word, t_word;
    word_append(s_word, Letter::S);
    word_append(t_word, Letter::T);
    bool signs_ok = char_eval_word(chi, s_word) == 3 && char_eval_word(chi, t_word) == 3;
    report.details["chi_S_is_minus_one"] = signs_ok;
    if (!signs_ok) report.pass = false;

    // The well-definedness relations hold for all six characters.
    bool relations_ok = true;
    for (const Character& c : chars) {
        GroupWord ss = s_word;
        word_append(ss, Letter::S);  // reduces to -I
        GroupWord st3;
        for (int i = 0; i < 3; ++i) {
            word_append(st3, Letter::S);
            word_append(st3, Letter::T);
        }
        if (char_eval_word(c, ss) != 0 || char_eval_word(c, st3) != 0) relations_ok = false;
    }
    report.details["relations_hold"] = relations_ok;
    if (!relations_ok) report.pass = false;

    Rng rng(seed);
    long trivial_on_gamma2 = 0;
    for (long i = 0; i < gamma2_samples; ++i) {
        Mat2 m = random_gamma2_element(rng, 30);
        if (char_eval(chi, m) == 0) ++trivial_on_gamma2;
    }
    report.details["gamma2_samples"] = gamma2_samples;
    report.details["gamma2_trivial"] = trivial_on_gamma2;
    if (trivial_on_gamma2 != gamma2_samples) report.pass = false;

    return report;
}

CheckReport verify_prop_2_2(std::uint64_t seed, long gamma04_samples, long sl2_samples) {
    CheckReport report;
    report.check = "prop-2-2";
    report.pass = true;
    report.details["seed"] = seed;

    Rng rng(seed);
    Character chi = chi_character();

    long g04_ok = 0;
    for (long i = 0; i < gamma04_samples; ++i) {
        Gamma04Word w = random_gamma04_word(rng, 30);
        Mat2 m = gamma04_word_to_matrix(w);
        if (!membership(m, CongruenceGroup::Gamma0_4)) continue;
        Gamma04Word back = decompose_gamma0_4(m);
        if (gamma04_word_to_matrix(back) == m) ++g04_ok;
    }
    report.details["gamma04_samples"] = gamma04_samples;
    report.details["gamma04_roundtrips"] = g04_ok;
    if (g04_ok != gamma04_samples) report.pass = false;

    long sl2_ok = 0;
    long max_syllables = 0;
    for (long i = 0; i < sl2_samples; ++i) {
        GroupWord w = random_word(rng, 40);
        Mat2 m = word_to_matrix(w);
        GroupWord back = matrix_to_word(m);
        if (word_to_matrix(back) == m) ++sl2_ok;
        max_syllables = std::max(max_syllables, word_syllable_count(back));
    }
    report.details["sl2_samples"] = sl2_samples;
    report.details["sl2_roundtrips"] = sl2_ok;
    report.details["max_syllables"] = max_syllables;
    if (sl2_ok != sl2_samples) report.pass = false;

    // chi is trivial on both generators of the decomposition alphabet.
    Mat2 t2{1, 2, 0, 1};
    Mat2 st4s{-1, 0, 4, -1};
    bool chi_trivial = char_eval(chi, t2) == 0 && char_eval(chi, st4s) == 0;
    report.details["chi_trivial_on_generators"] = chi_trivial;
    if (!chi_trivial) report.pass = false;

    return report;
}

}  // namespace mf
