#include <doctest.h>

#include <cmath>

#include "mf/arith.hpp"
#include "mf/errors.hpp"
#include "mf/generators.hpp"
#include "mf/heckeforms.hpp"
#include "oracles.hpp"

using namespace mf;

TEST_CASE("apply_Tp on the weight-6 newform") {
    QExpansion g = eta_product({{2, 12}}, 160);
    QExpansion image = apply_Tp(g, 6, 3, 4);
    // eigenvalue -12 read off at q^1
    CHECK(image.coeff(1) == -12);
    CHECK(image == truncate(scalar_mul(Rational(-12), g), image.precision()));

    CHECK(apply_Tp(QExpansion(Grid::Integer, 60), 6, 3, 4).is_zero());
    CHECK_THROWS_AS(apply_Tp(g, 6, 2, 4), Error);  // 2 is not an odd prime
}

TEST_CASE("apply_Tp errors") {
    QExpansion g = eta_product({{2, 12}}, 60);
    CHECK_THROWS_AS(apply_Tp(g, 6, 3, 3), PrimeDividesLevel);
    CHECK_THROWS_AS(apply_Tp(eta_product({{1, 12}}, 60), 6, 3, 1), GridError);
}

TEST_CASE("Hecke relation for Delta via double application of T3") {
    // tau(9) = tau(3)^2 - 3^11 tau(1), cross-checked against the dense
    // eta^24 oracle
    long nmax = 30;
    oracle::Dense d = oracle::dense_eta_factor(1, 24, nmax);
    // shift by one: Delta = q * prod(...)
    Rational tau3 = d[2], tau9 = d[8], tau2 = d[1];
    CHECK(tau9 == tau3 * tau3 - rational_pow(Rational(3), 11));

    QExpansion delta = eta_product({{1, 24}}, 80);
    QExpansion t3 = apply_Tp(delta, 12, 3, 1);
    CHECK(t3.coeff(1) == tau3);
    CHECK(t3.coeff(3) == tau9 + rational_pow(Rational(3), 11));  // a_9 + 3^11 a_1

    QExpansion u2 = apply_U2(delta);
    CHECK(u2.coeff(1) == tau2);
    CHECK(u2.coeff(1) == -24);
}

TEST_CASE("apply_U2") {
    QExpansion g = eta_product({{2, 12}}, 160);
    CHECK(apply_U2(g).is_zero());

    // section property U2(V2 h) = h
    QExpansion h = eta_product({{1, 8}, {2, 8}}, 80);
    QExpansion back = apply_U2(rescale_variable(h, 2));
    CHECK(back == truncate(h, back.precision()));
}

TEST_CASE("operator matrices") {
    FormSpace s6 = basis_S(GroupLabel::Gamma0_4, 6);
    OperatorMatrix t3 = operator_matrix(s6, {OperatorLabel::Kind::Tp, 3});
    REQUIRE(t3.dim == 1);
    CHECK(t3.entries.at(0, 0) == -12);

    FormSpace s4 = basis_S(GroupLabel::Gamma0_4, 4);
    OperatorMatrix empty = operator_matrix(s4, {OperatorLabel::Kind::U2, 0});
    CHECK(empty.dim == 0);

    FormSpace s12 = basis_S(GroupLabel::Gamma0_4, 12);
    QMatrix a3 = operator_matrix(s12, {OperatorLabel::Kind::Tp, 3}).entries;
    QMatrix a5 = operator_matrix(s12, {OperatorLabel::Kind::Tp, 5}).entries;
    CHECK(mat_mul(a3, a5) == mat_mul(a5, a3));

    // translation by 1/2 acts as -1 on the weight-6 newform
    OperatorMatrix th = operator_matrix(s6, {OperatorLabel::Kind::TranslationHalf, 0});
    CHECK(th.entries.at(0, 0) == -1);

    // asking for T7 at default precision must refuse rather than approximate
    CHECK_THROWS_AS(operator_matrix(s12, {OperatorLabel::Kind::Tp, 7}), InsufficientPrecision);
}

TEST_CASE("T3 and T5 matrices commute on S_k(Gamma0(4)) for k <= 24") {
    for (long k = 8; k <= 24; k += 2) {
        FormSpace s = basis_S(GroupLabel::Gamma0_4, k);
        if (s.dimension() == 0) continue;
        QMatrix a3 = operator_matrix(s, {OperatorLabel::Kind::Tp, 3}).entries;
        QMatrix a5 = operator_matrix(s, {OperatorLabel::Kind::Tp, 5}).entries;
        CHECK(mat_mul(a3, a5) == mat_mul(a5, a3));
    }
}

TEST_CASE("oldspace dimensions") {
    CHECK(oldspace_level4(6).dimension() == 0);
    CHECK(oldspace_level4(8).dimension() == 2);
    CHECK(oldspace_level4(12).dimension() == 3);
}

TEST_CASE("oldspace is T3-stable") {
    FormSpace old12 = oldspace_level4(12);
    FormSpace full12 = basis_S(GroupLabel::Gamma0_4, 12);
    for (const auto& f : old12.basis) {
        QExpansion image = apply_Tp(f, 12, 3, 4);
        auto coords = coordinates_in_basis(old12.basis, image, old12.sturm);
        CHECK(coords.has_value());
    }
    // old is contained in the full cusp space
    for (const auto& f : old12.basis)
        CHECK(coordinates_in_basis(full12.basis, f, full12.sturm).has_value());
}

TEST_CASE("newspace dimensions and golden basis") {
    FormSpace n6 = newspace_level4(6);
    REQUIRE(n6.dimension() == 1);
    const QExpansion& g = n6.basis[0];
    CHECK(g.coeff(1) == 1);
    CHECK(g.coeff(3) == -12);
    CHECK(g.coeff(5) == 54);
    CHECK(g.coeff(7) == -88);
    CHECK(g.coeff(9) == -99);
    CHECK(g.coeff(11) == 540);
    CHECK(g.coeff(13) == -418);

    CHECK(newspace_level4(8).dimension() == 0);
    CHECK(newspace_level4(4).dimension() == 0);

    long expected[] = {1, 0, 1, 1, 1, 1, 2, 1, 2, 2};
    for (long k = 6; k <= 24; k += 2) {
        FormSpace ns = newspace_level4(k);
        CHECK(ns.dimension() == expected[(k - 6) / 2]);
        CHECK(ns.dimension() + oldspace_level4(k).dimension() ==
              basis_S(GroupLabel::Gamma0_4, k).dimension());
    }
}

TEST_CASE("newspace and oldspace intersect trivially") {
    for (long k : {12L, 18L, 24L}) {
        FormSpace ns = newspace_level4(k);
        FormSpace old = oldspace_level4(k);
        std::vector<QExpansion> joint;
        for (const auto& f : ns.basis) joint.push_back(f);
        for (const auto& f : old.basis) joint.push_back(f);
        CHECK(static_cast<long>(echelonize(joint).size()) == ns.dimension() + old.dimension());
    }
}

TEST_CASE("verify_lemma_3_1 reports") {
    for (long k : {6L, 10L, 24L}) {
        CheckReport r = verify_lemma_3_1(k);
        CHECK(r.pass);
        CHECK(r.check == "lemma-3-1");
    }
    CheckReport r8 = verify_lemma_3_1(8);
    CHECK(r8.pass);
    CHECK(r8.details["regression_w8"]["odd_support"] == true);
    CHECK(r8.details["regression_w8"]["u2_annihilates"] == true);
    CHECK(r8.details["regression_w8"]["in_oldspace"] == true);
    CHECK(r8.details["regression_w8"]["in_newspace"] == false);
}

TEST_CASE("the weight-8 pitfall vector") {
    QExpansion w = odd_old_vector_weight8();
    CHECK(!w.is_zero());
    CHECK(apply_U2(w).is_zero());
    for (const auto& [m, v] : w.coeffs()) {
        (void)v;
        CHECK((m / 2) % 2 == 1);
    }
    // built from the level-2 newform with a2 = -8: w = h + 8 V2 h
    QExpansion h = eta_product({{1, 8}, {2, 8}}, w.precision());
    CHECK(h.coeff(2) == -8);
    QExpansion expected = add(truncate(h, w.precision()),
                              scalar_mul(Rational(8), truncate(rescale_variable(h, 2), w.precision())));
    CHECK(w == expected);
}

TEST_CASE("verify_theorem_1_2 passes for k in [6, 24]") {
    for (long k = 6; k <= 24; k += 2) {
        CheckReport r = verify_theorem_1_2(k);
        CHECK(r.pass);
        CHECK(r.details["dim_newspace"] == r.details["dim_M_k_minus_6"]);
    }
}

TEST_CASE("extract_rational_eigenforms on the weight-6 newspace") {
    FormSpace n6 = newspace_level4(6);
    EigenformExtraction ex = extract_rational_eigenforms(n6);
    REQUIRE(ex.eigenforms.size() == 1);
    CHECK(ex.descriptors.empty());
    const Eigenform& f = ex.eigenforms[0];
    CHECK(f.level == 4);
    CHECK(f.weight == 6);
    CHECK(f.eigenvalues.at(3) == -12);
    CHECK(f.eigenvalues.at(5) == 54);
    CHECK(f.a2 == 0);
    CHECK(f.coefficients.coeff(9) == -99);
    CHECK(f.coefficients.coeff(15) == -648);
}

TEST_CASE("extract_rational_eigenforms on S_8(Gamma0(2))") {
    FormSpace s8 = basis_S(GroupLabel::Gamma0_2, 8);
    EigenformExtraction ex = extract_rational_eigenforms(s8);
    REQUIRE(ex.eigenforms.size() == 1);
    const Eigenform& f = ex.eigenforms[0];
    CHECK(f.level == 2);
    CHECK(f.a2 == -8);
    CHECK(f.eigenvalues.at(3) == 12);
}

TEST_CASE("extract on an empty space") {
    FormSpace s4 = basis_S(GroupLabel::Gamma0_4, 4);
    EigenformExtraction ex = extract_rational_eigenforms(s4);
    CHECK(ex.eigenforms.empty());
    CHECK(ex.descriptors.empty());
}

TEST_CASE("repeated old eigenvalues come back as descriptors") {
    // S_12(Gamma0(4)) contains Delta, V2 Delta, V4 Delta sharing every odd
    // Hecke eigenvalue; T3 + c T5 cannot split them.
    FormSpace s12 = basis_S(GroupLabel::Gamma0_4, 12);
    EigenformExtraction ex = extract_rational_eigenforms(s12);
    bool found_triple = false;
    for (const auto& d : ex.descriptors)
        if (d.dim == 3) found_triple = true;
    CHECK(found_triple);
    // the genuine level-4 newform is still extracted
    REQUIRE(ex.eigenforms.size() == 1);
    CHECK(ex.eigenforms[0].a2 == 0);
}

TEST_CASE("eigenform Hecke invariants hold to the coefficient bound") {
    FormSpace n10 = newspace_level4(10);
    EigenformExtraction ex = extract_rational_eigenforms(n10);
    REQUIRE(ex.eigenforms.size() == 1);
    const Eigenform& f = ex.eigenforms[0];
    long bound = eigenform_coefficient_bound(f);
    for (long p = 3; p * p <= bound; p += 2) {
        if (!is_prime(p)) continue;
        CHECK(f.coefficients.coeff(p * p) ==
              f.coefficients.coeff(p) * f.coefficients.coeff(p) - rational_pow(Rational(p), 9));
    }
    // trivial eigenvalue bound |a_p| <= 2 p^{k/2} as a numeric screen
    for (const auto& [p, ap] : f.eigenvalues) {
        CHECK(std::abs(to_double(ap)) <= 2.0 * std::pow(static_cast<double>(p), 5.0));
    }
}
