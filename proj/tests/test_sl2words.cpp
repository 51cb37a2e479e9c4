#include <doctest.h>

#include "mf/errors.hpp"
#include "mf/sl2words.hpp"

using namespace mf;

TEST_CASE("word_to_matrix basics") {
    GroupWord empty;
    CHECK(word_to_matrix(empty) == mat2_identity());

    GroupWord s;
    word_append(s, Letter::S);
    CHECK(word_to_matrix(s) == mat2_S());

    GroupWord w;  // -S T^-1 S = ((1,0),(1,1))
    w.sign = -1;
    word_append(w, Letter::S);
    word_append(w, Letter::Tinv);
    word_append(w, Letter::S);
    CHECK(word_to_matrix(w) == (Mat2{1, 0, 1, 1}));
}

TEST_CASE("word reduction") {
    GroupWord w;
    word_append(w, Letter::S);
    word_append(w, Letter::S);  // S S = -I
    CHECK(w.letters.empty());
    CHECK(w.sign == -1);

    GroupWord v;
    word_append(v, Letter::T);
    word_append(v, Letter::Tinv);
    CHECK(v.letters.empty());
    CHECK(v.sign == 1);
}

TEST_CASE("matrix_to_word round trips") {
    Mat2 t5 = mat2_identity();
    for (int i = 0; i < 5; ++i) t5 = mat2_mul(t5, mat2_T());
    GroupWord w = matrix_to_word(t5);
    CHECK(w.sign == 1);
    CHECK(w.letters == std::vector<Letter>(5, Letter::T));

    Mat2 lower{1, 0, 1, 1};
    GroupWord lw = matrix_to_word(lower);
    CHECK(word_to_matrix(lw) == lower);

    CHECK_THROWS_AS(matrix_to_word(Mat2{1, 0, 0, 2}), NonUnimodular);

    Rng rng(99);
    for (int i = 0; i < 1000; ++i) {
        GroupWord random_w = random_word(rng, 40);
        Mat2 m = word_to_matrix(random_w);
        GroupWord back = matrix_to_word(m);
        CHECK(word_to_matrix(back) == m);
    }
}

TEST_CASE("decomposition length stays linear in the entry bit size") {
    Rng rng(123);
    for (int i = 0; i < 300; ++i) {
        Mat2 m = word_to_matrix(random_word(rng, 40));
        GroupWord back = matrix_to_word(m);
        size_t bits = std::max({mpz_sizeinbase(m.a.get_mpz_t(), 2), mpz_sizeinbase(m.b.get_mpz_t(), 2),
                                mpz_sizeinbase(m.c.get_mpz_t(), 2), mpz_sizeinbase(m.d.get_mpz_t(), 2)});
        CHECK(word_syllable_count(back) <= 8 * static_cast<long>(bits) + 8);
    }
}

TEST_CASE("word text round trip") {
    GroupWord w;
    w.sign = -1;
    word_append(w, Letter::S);
    word_append(w, Letter::Tinv);
    word_append(w, Letter::S);
    CHECK(word_to_string(w) == "-S T^-1 S");
    CHECK(word_from_string("-S T^-1 S") == w);
    CHECK(word_from_string("T^5").letters == std::vector<Letter>(5, Letter::T));
    CHECK(word_from_string("S^2").sign == -1);
    CHECK(word_from_string("-I") == GroupWord{-1, {}});

    Rng rng(5);
    for (int i = 0; i < 100; ++i) {
        GroupWord v = random_word(rng, 25);
        CHECK(word_from_string(word_to_string(v)) == v);
    }
}

TEST_CASE("character enumeration") {
    auto chars = enumerate_characters();
    CHECK(chars.size() == 6);
    long real = 0, trivial = 0;
    for (const auto& c : chars) {
        if (c.is_real()) ++real;
        if (c.is_trivial()) ++trivial;
    }
    CHECK(real == 2);
    CHECK(trivial == 1);

    // independent enumeration over (chi(S), chi(ST)) value pairs: exponents
    // s in {0,3} and t in {0,2,4} with chi(T) = chi(S)^{-1} chi(ST)
    std::vector<int> seen;
    for (int s : {0, 3})
        for (int t : {0, 2, 4}) seen.push_back(((t - s) % 6 + 6) % 6);
    std::sort(seen.begin(), seen.end());
    CHECK(seen == std::vector<int>{0, 1, 2, 3, 4, 5});

    Character chi = chi_character();
    CHECK(chi.a == 3);
    CHECK(char_eval(chi, mat2_T()) == 3);  // chi(T) = -1
    CHECK(char_eval(chi, mat2_S()) == 3);  // chi(S) = -1
    CHECK(char_eval(chi, mat2_identity()) == 0);
}

TEST_CASE("characters are homomorphisms and respect the relations") {
    Rng rng(2718);
    auto chars = enumerate_characters();
    for (int i = 0; i < 1000; ++i) {
        GroupWord wa = random_word(rng, 12);
        GroupWord wb = random_word(rng, 12);
        Mat2 a = word_to_matrix(wa), b = word_to_matrix(wb);
        Mat2 ab = mat2_mul(a, b);
        for (const auto& chi : chars) {
            int ea = char_eval(chi, a), eb = char_eval(chi, b);
            CHECK(char_eval(chi, ab) == (ea + eb) % 6);
        }
    }
    // chi(S)^2 = chi((ST)^3) = 1 for all six
    for (const auto& chi : chars) {
        GroupWord s;
        word_append(s, Letter::S);
        CHECK((2 * char_eval_word(chi, s)) % 6 == 0);
        GroupWord st;
        word_append(st, Letter::S);
        word_append(st, Letter::T);
        CHECK((3 * char_eval_word(chi, st)) % 6 == 0);
    }
}

TEST_CASE("character value formatting") {
    CHECK(character_value_to_string(0) == "1");
    CHECK(character_value_to_string(3) == "-1");
    CHECK(character_value_to_string(2) == "zeta6^2");
}

TEST_CASE("chi is trivial on Gamma(2)") {
    Rng rng(31337);
    Character chi = chi_character();
    for (int i = 0; i < 200; ++i) {
        Mat2 m = random_gamma2_element(rng, 30);
        CHECK(membership(m, CongruenceGroup::Gamma_2));
        CHECK(char_eval(chi, m) == 0);
    }
}

TEST_CASE("membership") {
    Mat2 t2{1, 2, 0, 1};
    CHECK(membership(t2, CongruenceGroup::Gamma_2));
    CHECK(!membership(mat2_S(), CongruenceGroup::Gamma0_4));
    CHECK(!membership(mat2_T(), CongruenceGroup::Gamma_2));
    CHECK(membership(mat2_T(), CongruenceGroup::Gamma0_4));

    // S T^4 S multiplies out to ((-1,0),(-4,-1)) ... verified directly
    Mat2 st4s = mat2_mul(mat2_mul(mat2_S(), Mat2{1, 4, 0, 1}), mat2_S());
    CHECK(st4s == (Mat2{-1, 0, 4, -1}));
    CHECK(membership(st4s, CongruenceGroup::Gamma0_4));
    CHECK_THROWS_AS(membership(Mat2{2, 0, 0, 2}, CongruenceGroup::Gamma0_2), NonUnimodular);
}

TEST_CASE("gamma04 decomposition basics") {
    Gamma04Word t2 = decompose_gamma0_4(Mat2{1, 2, 0, 1});
    CHECK(gamma04_word_to_string(t2) == "T^2");

    Mat2 st4s{-1, 0, 4, -1};
    Gamma04Word w = decompose_gamma0_4(st4s);
    CHECK(gamma04_word_to_matrix(w) == st4s);
    CHECK(gamma04_word_to_string(w) == "ST4S");

    CHECK_THROWS_AS(decompose_gamma0_4(mat2_S()), NotInGroup);
    // T is in Gamma0(4) but outside <T^2, ST4S, -I>
    CHECK_THROWS_AS(decompose_gamma0_4(mat2_T()), NotInGroup);
}

TEST_CASE("gamma04 decomposition round trips") {
    Rng rng(4242);
    for (int i = 0; i < 500; ++i) {
        Gamma04Word w = random_gamma04_word(rng, 30);
        Mat2 m = gamma04_word_to_matrix(w);
        Gamma04Word back = decompose_gamma0_4(m);
        CHECK(gamma04_word_to_matrix(back) == m);
    }
}

TEST_CASE("gamma04 word text round trip") {
    Rng rng(7);
    for (int i = 0; i < 100; ++i) {
        Gamma04Word w = random_gamma04_word(rng, 10);
        Gamma04Word parsed = gamma04_word_from_string(gamma04_word_to_string(w));
        CHECK(gamma04_word_to_matrix(parsed) == gamma04_word_to_matrix(w));
    }
}

TEST_CASE("matrix text round trip") {
    // arbitrary-precision entries survive the text form
    Mat2 m{Integer("123456789012345678901234567890"), Integer(-7), Integer(4), Integer(1)};
    std::string text = mat2_to_string(m);
    CHECK(mat2_from_string(text) == m);
    CHECK_THROWS_AS(mat2_from_string("[[1,2],[3]]"), ParseError);
    CHECK(mat2_from_string(" [[ 1 , 0 ] , [ 4 , 1 ]] ") == (Mat2{1, 0, 4, 1}));
}
