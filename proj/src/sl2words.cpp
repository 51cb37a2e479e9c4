#include "mf/sl2words.hpp"

#include <cctype>
#include <sstream>

#include "mf/errors.hpp"

namespace mf {

Mat2 mat2_mul(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

Mat2 mat2_neg(const Mat2& x) { return {-x.a, -x.b, -x.c, -x.d}; }

Mat2 mat2_inverse_unimodular(const Mat2& x) {
    if (x.det() != 1) throw NonUnimodular("mat2_inverse_unimodular: det != 1");
    return {x.d, -x.b, -x.c, x.a};
}

Mat2 mat2_identity() { return {1, 0, 0, 1}; }
Mat2 mat2_S() { return {0, -1, 1, 0}; }
Mat2 mat2_T() { return {1, 1, 0, 1}; }

std::string mat2_to_string(const Mat2& m) {
    return "[[" + m.a.get_str() + "," + m.b.get_str() + "],[" + m.c.get_str() + "," +
           m.d.get_str() + "]]";
}

namespace {

void skip_ws(const std::string& s, size_t& i) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

void expect(const std::string& s, size_t& i, char c) {
    skip_ws(s, i);
    if (i >= s.size() || s[i] != c)
        throw ParseError(std::string("matrix parse: expected '") + c + "' at position " +
                         std::to_string(i));
    ++i;
}

Integer parse_integer(const std::string& s, size_t& i) {
    skip_ws(s, i);
    size_t start = i;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
        throw ParseError("matrix parse: expected integer at position " + std::to_string(start));
    return Integer(s.substr(start, i - start));
}

}  // namespace

Mat2 mat2_from_string(const std::string& text) {
    size_t i = 0;
    Mat2 m;
    expect(text, i, '[');
    expect(text, i, '[');
    m.a = parse_integer(text, i);
    expect(text, i, ',');
    m.b = parse_integer(text, i);
    expect(text, i, ']');
    expect(text, i, ',');
    expect(text, i, '[');
    m.c = parse_integer(text, i);
    expect(text, i, ',');
    m.d = parse_integer(text, i);
    expect(text, i, ']');
    expect(text, i, ']');
    skip_ws(text, i);
    if (i != text.size()) throw ParseError("matrix parse: trailing characters");
    return m;
}

void word_append(GroupWord& w, Letter l) {
    if (!w.letters.empty()) {
        Letter last = w.letters.back();
        if (last == Letter::S && l == Letter::S) {
            w.letters.pop_back();  // S S = -I
            w.sign = -w.sign;
            return;
        }
        if ((last == Letter::T && l == Letter::Tinv) || (last == Letter::Tinv && l == Letter::T)) {
            w.letters.pop_back();
            return;
        }
    }
    w.letters.push_back(l);
}

void word_append_T_power(GroupWord& w, const Integer& n) {
    if (abs(n) > 10000000)
        throw Error("word_append_T_power: translation exponent too large for an explicit word");
    Letter l = n >= 0 ? Letter::T : Letter::Tinv;
    for (Integer i = 0; i < abs(n); ++i) word_append(w, l);
}

Mat2 word_to_matrix(const GroupWord& w) {
    Mat2 m = mat2_identity();
    for (Letter l : w.letters) {
        switch (l) {
            case Letter::S: m = mat2_mul(m, mat2_S()); break;
            case Letter::T: m = mat2_mul(m, mat2_T()); break;
            case Letter::Tinv: m = mat2_mul(m, mat2_inverse_unimodular(mat2_T())); break;
        }
    }
    return w.sign < 0 ? mat2_neg(m) : m;
}

GroupWord matrix_to_word(const Mat2& m) {
    if (m.det() != 1) throw NonUnimodular("matrix_to_word: det != 1");

    // Euclidean reduction on the bottom row by right multiplications:
    //   M T^n : (c, d) -> (c, cn + d);  M S : (c, d) -> (d, -c).
    // Record the right factors; at c = 0 the remainder is +-T^m.
    Mat2 cur = m;
    std::vector<std::pair<char, Integer>> ops;  // ('T', n) or ('S', 0), applied left-to-right
    while (cur.c != 0) {
        if (cur.d != 0) {
            // n = -round(d / c) minimizes |d + c n|
            Integer q, r;
            mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), cur.d.get_mpz_t(), cur.c.get_mpz_t());
            if (2 * abs(r) > abs(cur.c)) q += 1;
            if (q != 0) {
                Integer n = -q;
                cur.b += cur.a * n;
                cur.d += cur.c * n;
                ops.emplace_back('T', n);
            }
        }
        // swap via S
        Mat2 next{cur.b, -cur.a, cur.d, -cur.c};
        cur = next;
        ops.emplace_back('S', 0);
    }

    // cur = [[a, b], [0, d]] with a d = 1.
    GroupWord w;
    if (cur.a == 1) {
        w.sign = 1;
        word_append_T_power(w, cur.b);
    } else {
        w.sign = -1;
        word_append_T_power(w, -cur.b);
    }
    // M = (+-T^x) * inverse(ops) reversed.
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
        if (it->first == 'T') {
            word_append_T_power(w, -it->second);
        } else {
            w.sign = -w.sign;  // S^{-1} = -S
            word_append(w, Letter::S);
        }
    }

    if (word_to_matrix(w) != m) throw Error("matrix_to_word: recomposition failed");
    return w;
}

long word_syllable_count(const GroupWord& w) {
    long count = 0;
    Letter prev = Letter::S;
    bool have_prev = false;
    for (Letter l : w.letters) {
        if (l == Letter::S) {
            ++count;
            have_prev = false;
        } else if (!have_prev || l != prev) {
            ++count;
            prev = l;
            have_prev = true;
        }
    }
    return count;
}

std::string word_to_string(const GroupWord& w) {
    std::ostringstream out;
    if (w.sign < 0) out << "-";
    if (w.letters.empty()) {
        out << "I";
        return out.str();
    }
    bool first = true;
    size_t i = 0;
    while (i < w.letters.size()) {
        if (!first) out << " ";
        first = false;
        if (w.letters[i] == Letter::S) {
            out << "S";
            ++i;
            continue;
        }
        long run = 0;
        Letter l = w.letters[i];
        while (i < w.letters.size() && w.letters[i] == l) {
            ++run;
            ++i;
        }
        long exp = (l == Letter::T) ? run : -run;
        if (exp == 1)
            out << "T";
        else
            out << "T^" << exp;
    }
    return out.str();
}

GroupWord word_from_string(const std::string& text) {
    GroupWord w;
    size_t i = 0;
    skip_ws(text, i);
    if (i < text.size() && text[i] == '-') {
        w.sign = -1;
        ++i;
    }
    while (i < text.size()) {
        skip_ws(text, i);
        if (i >= text.size()) break;
        char c = text[i];
        if (c == 'I') {
            ++i;
            continue;
        }
        if (c != 'S' && c != 'T') throw ParseError("word parse: unexpected character");
        ++i;
        long exp = 1;
        if (i < text.size() && text[i] == '^') {
            ++i;
            size_t start = i;
            if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (i == start) throw ParseError("word parse: missing exponent");
            exp = std::stol(text.substr(start, i - start));
        }
        if (c == 'S') {
            // S^n reduces via S^2 = -I
            long n = exp % 4;
            if (n < 0) n += 4;
            if (n >= 2) {
                w.sign = -w.sign;
                n -= 2;
            }
            if (n == 1) word_append(w, Letter::S);
        } else {
            word_append_T_power(w, exp);
        }
    }
    return w;
}

std::vector<Character> enumerate_characters() {
    std::vector<Character> out;
    for (int a = 0; a < 6; ++a) out.push_back(Character{a});
    return out;
}

Character chi_character() { return Character{3}; }

int char_eval_word(const Character& chi, const GroupWord& w) {
    long e = 0;
    for (Letter l : w.letters) {
        switch (l) {
            case Letter::S: e += 3L * chi.a; break;       // chi(S) = chi(T)^3
            case Letter::T: e += chi.a; break;
            case Letter::Tinv: e -= chi.a; break;
        }
    }
    e %= 6;
    if (e < 0) e += 6;
    return static_cast<int>(e);
}

int char_eval(const Character& chi, const Mat2& m) {
    return char_eval_word(chi, matrix_to_word(m));
}

std::string character_value_to_string(int exponent_mod6) {
    int e = ((exponent_mod6 % 6) + 6) % 6;
    if (e == 0) return "1";
    if (e == 3) return "-1";
    return "zeta6^" + std::to_string(e);
}

bool membership(const Mat2& m, CongruenceGroup g) {
    if (m.det() != 1) throw NonUnimodular("membership: det != 1");
    switch (g) {
        case CongruenceGroup::Gamma0_2: return m.c % 2 == 0;
        case CongruenceGroup::Gamma0_4: return m.c % 4 == 0;
        case CongruenceGroup::Gamma_2:
            return m.b % 2 == 0 && m.c % 2 == 0 && (m.a % 2 != 0) && (m.d % 2 != 0);
    }
    throw Error("unknown congruence group");
}

namespace {

Mat2 g04_T2() { return {1, 2, 0, 1}; }
// S T^4 S = -[[1,0],[-4,1]]
Mat2 g04_ST4S() { return {-1, 0, 4, -1}; }

Mat2 g04_gen_power(G04Gen g, long e) {
    Mat2 m = mat2_identity();
    Mat2 base = (g == G04Gen::TSquared) ? g04_T2() : g04_ST4S();
    Mat2 factor = e >= 0 ? base : mat2_inverse_unimodular(base);
    for (long i = 0; i < std::abs(e); ++i) m = mat2_mul(m, factor);
    return m;
}

}  // namespace

Mat2 gamma04_word_to_matrix(const Gamma04Word& w) {
    Mat2 m = mat2_identity();
    for (const auto& [g, e] : w.syllables) m = mat2_mul(m, g04_gen_power(g, e));
    return w.sign < 0 ? mat2_neg(m) : m;
}

Gamma04Word decompose_gamma0_4(const Mat2& m) {
    if (m.det() != 1) throw NonUnimodular("decompose_gamma0_4: det != 1");
    if (!membership(m, CongruenceGroup::Gamma0_4))
        throw NotInGroup("decompose_gamma0_4: matrix is not in Gamma0(4)");

    // Conjugate into Gamma(2): V2 M V2^{-1} = [[a, 2b], [c/2, d]].
    Mat2 g{m.a, 2 * m.b, m.c / 2, m.d};

    // Ping-pong in the free group on A = [[1,2],[0,1]], B = [[1,0],[2,1]]:
    // peel left factors A^{+-1}, B^{+-1} while max(|a|, |c|) shrinks.
    std::vector<std::pair<char, Integer>> syll;  // prefix product, left-to-right
    auto round_div = [](const Integer& num, const Integer& den) {
        Integer q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        if (2 * abs(r) > abs(den)) q += 1;
        return q;
    };
    while (g.c != 0) {
        if (abs(g.a) > abs(g.c)) {
            // A^{-n} g : a -> a - 2 n c
            Integer n = round_div(g.a, 2 * g.c);
            if (n == 0) throw Error("decompose_gamma0_4: reduction stalled");
            g.a -= 2 * n * g.c;
            g.b -= 2 * n * g.d;
            syll.emplace_back('A', n);
        } else {
            // B^{-n} g : c -> c - 2 n a
            Integer n = round_div(g.c, 2 * g.a);
            if (n == 0) throw Error("decompose_gamma0_4: reduction stalled");
            g.c -= 2 * n * g.a;
            g.d -= 2 * n * g.b;
            syll.emplace_back('B', n);
        }
    }
    // g = [[a, b], [0, d]] with a d = 1, b even: +- A^{b a / 2}.
    int sign = (g.a == 1) ? 1 : -1;
    Integer tail = g.a * g.b;  // so that g = sign * [[1, tail],[0,1]]
    if (tail % 2 != 0) throw Error("decompose_gamma0_4: terminal block escaped Gamma(2)");
    // The terminal A-power is the rightmost factor, so it goes last.
    if (tail != 0) syll.emplace_back('A', tail / 2);

    // Conjugate back: A -> T, B -> -(ST^4S)^{-1}.  A-exponents must be even
    // to land in <T^2, ST4S, -I>.
    Gamma04Word word;
    word.sign = sign;
    for (const auto& [kind, n] : syll) {
        if (n == 0) continue;
        if (!n.fits_slong_p() || abs(n) > 1000000)
            throw Error("decompose_gamma0_4: exponent overflow");
        long e = n.get_si();
        if (kind == 'A') {
            if (e % 2 != 0)
                throw NotInGroup(
                    "decompose_gamma0_4: element lies in Gamma0(4) but outside the subgroup "
                    "generated by T^2, ST^4S and -I (odd translation part)");
            word.syllables.emplace_back(G04Gen::TSquared, e / 2);
        } else {
            if (e % 2 != 0) word.sign = -word.sign;  // B = -(ST4S)^{-1}
            word.syllables.emplace_back(G04Gen::ST4S, -e);
        }
    }

    if (gamma04_word_to_matrix(word) != m)
        throw Error("decompose_gamma0_4: recomposition failed");
    return word;
}

std::string gamma04_word_to_string(const Gamma04Word& w) {
    std::ostringstream out;
    if (w.sign < 0) out << "-";
    if (w.syllables.empty()) {
        out << "I";
        return out.str();
    }
    bool first = true;
    for (const auto& [g, e] : w.syllables) {
        if (!first) out << " ";
        first = false;
        if (g == G04Gen::TSquared) {
            out << "T^" << (2 * e);
        } else {
            out << "ST4S";
            if (e != 1) out << "^" << e;
        }
    }
    return out.str();
}

Gamma04Word gamma04_word_from_string(const std::string& text) {
    Gamma04Word w;
    size_t i = 0;
    skip_ws(text, i);
    if (i < text.size() && text[i] == '-') {
        w.sign = -1;
        ++i;
    }
    while (i < text.size()) {
        skip_ws(text, i);
        if (i >= text.size()) break;
        G04Gen g;
        if (text.compare(i, 4, "ST4S") == 0) {
            g = G04Gen::ST4S;
            i += 4;
        } else if (text[i] == 'T') {
            g = G04Gen::TSquared;
            ++i;
        } else if (text[i] == 'I') {
            ++i;
            continue;
        } else {
            throw ParseError("gamma04 word parse: unexpected character");
        }
        long exp = 1;
        if (i < text.size() && text[i] == '^') {
            ++i;
            size_t start = i;
            if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (i == start) throw ParseError("gamma04 word parse: missing exponent");
            exp = std::stol(text.substr(start, i - start));
        } else if (g == G04Gen::TSquared) {
            throw ParseError("gamma04 word parse: T requires an even exponent");
        }
        if (g == G04Gen::TSquared) {
            if (exp % 2 != 0) throw ParseError("gamma04 word parse: T exponent must be even");
            if (exp != 0) w.syllables.emplace_back(g, exp / 2);
        } else if (exp != 0) {
            w.syllables.emplace_back(g, exp);
        }
    }
    return w;
}

long rand_below(Rng& rng, long n) { return static_cast<long>(rng() % static_cast<uint64_t>(n)); }

GroupWord random_word(Rng& rng, long max_len) {
    GroupWord w;
    if (rand_below(rng, 2) == 0) w.sign = -1;
    long len = 1 + rand_below(rng, max_len);
    for (long i = 0; i < len; ++i) {
        switch (rand_below(rng, 3)) {
            case 0: word_append(w, Letter::S); break;
            case 1: word_append(w, Letter::T); break;
            default: word_append(w, Letter::Tinv); break;
        }
    }
    return w;
}

Mat2 random_gamma2_element(Rng& rng, long max_syllables) {
    // Words in T^2, S T^2 S and -I.
    Mat2 a{1, 2, 0, 1};
    Mat2 b{-1, 0, 2, -1};  // S T^2 S
    Mat2 m = mat2_identity();
    long len = 1 + rand_below(rng, max_syllables);
    for (long i = 0; i < len; ++i) {
        switch (rand_below(rng, 5)) {
            case 0: m = mat2_mul(m, a); break;
            case 1: m = mat2_mul(m, mat2_inverse_unimodular(a)); break;
            case 2: m = mat2_mul(m, b); break;
            case 3: m = mat2_mul(m, mat2_inverse_unimodular(b)); break;
            default: m = mat2_neg(m); break;
        }
    }
    return m;
}

Gamma04Word random_gamma04_word(Rng& rng, long max_syllables) {
    Gamma04Word w;
    if (rand_below(rng, 2) == 0) w.sign = -1;
    long len = 1 + rand_below(rng, max_syllables);
    G04Gen prev = G04Gen::TSquared;
    bool have_prev = false;
    for (long i = 0; i < len; ++i) {
        G04Gen g = (rand_below(rng, 2) == 0) ? G04Gen::TSquared : G04Gen::ST4S;
        if (have_prev && g == prev) g = (g == G04Gen::TSquared) ? G04Gen::ST4S : G04Gen::TSquared;
        long e = 1 + rand_below(rng, 3);
        if (rand_below(rng, 2) == 0) e = -e;
        w.syllables.emplace_back(g, e);
        prev = g;
        have_prev = true;
    }
    return w;
}

}  // namespace mf
