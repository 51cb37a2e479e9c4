#pragma once

#include <complex>
#include <span>
#include <vector>

#include "mf/formspace.hpp"
#include "mf/qexpansion.hpp"
#include "mf/rational.hpp"
#include "mf/report.hpp"
#include "mf/sl2words.hpp"

namespace mf {

using Complex = std::complex<double>;

// Approximate value with a truncation-error bound.  abs_error covers the
// series tail only; machine rounding is absorbed by the tolerance headroom
// documented with each check.
struct NumericValue {
    Complex value{0.0, 0.0};
    double abs_error = 0.0;
};

// 2x2 rational matrix with positive determinant for the slash action;
// carries the det != 1 companions (W_N, V_N, T_{1/2}) kept out of Mat2.
struct GL2Q {
    Rational a, b, c, d;

    Rational det() const { return a * d - b * c; }
};

GL2Q gl2_from_mat2(const Mat2& m);
GL2Q fricke_matrix(long n);        // ((0,-1),(N,0))
GL2Q translation_half_matrix();    // ((1,1/2),(0,1))
GL2Q scaling_matrix(long n);       // ((N,0),(0,1))
GL2Q gl2_mul(const GL2Q& x, const GL2Q& y);

// Partial sum of f at tau (Im tau > 0) over q-exponents n <= terms
// (twice-exponent m <= 2*terms), with tail bound A * sum_{n > terms}
// n^{k/2} |q|^n where A = max |a_n| / n^{k/2} over the computed range.
NumericValue eval_series(const QExpansion& f, Complex tau, long terms, long weight);

// det(M)^{k/2} (c tau + d)^{-k} f(M tau), error propagated through the factor.
NumericValue slash_numeric(const QExpansion& f, long weight, const GL2Q& m, Complex tau, long terms);

// --- special functions -------------------------------------------------------

// Gamma(z) by the Lanczos approximation with reflection for Re z < 1/2;
// ~14 significant digits on the domain used here.
Complex complex_gamma(Complex z);

// Upper incomplete gamma Gamma(a, x) for real x >= 1 and complex a:
// Legendre continued fraction for x >= Re a + 1, else Gamma(a) minus the
// lower series.
Complex upper_incomplete_gamma(Complex a, double x);

// --- completed L-function ----------------------------------------------------

// pi^{-s} Gamma(s) sum_{n<=terms} a_n n^{-s}; requires Re s > k/2 + 3/2
// (OutsideConvergenceRegion otherwise).  Tail bound from the |a_n| <= A n^{k/2}
// envelope.
NumericValue lambda_direct(const QExpansion& g, long k, Complex s, long terms);
NumericValue lambda_direct(std::span<const long long> a, long k, Complex s, long terms);

// Rapidly convergent two-kernel form, valid for all complex s:
//   sum_n a_n [ (pi n)^{-s} Gamma(s, pi n) + eps i^k (pi n)^{s-k} Gamma(k-s, pi n) ]
// where eps is the sign in g|_k W_4 = eps g.
NumericValue lambda_incomplete_gamma(const QExpansion& g, long k, Complex s, int eps, long terms);
NumericValue lambda_incomplete_gamma(std::span<const long long> a, long k, Complex s, int eps, long terms);

// i^k for even k, exactly.
int i_pow_even(long k);

// --- verification reports ------------------------------------------------------

// Sample points for the Fricke check: both Im tau and Im(-1/(4 tau)) >= 0.35.
std::vector<Complex> default_fricke_samples();

// Relative residuals |(g|_k W_4)(tau) + g(tau)| for every newspace basis
// vector, plus the sign-flipped control which must stay large.
CheckReport verify_fricke(long k, const std::vector<Complex>& tau_samples, long terms, double tol);

// Residuals |(f|_k gamma)(tau) - chi(gamma) f(tau)| for f in basis_S_chi(k),
// gamma over S, T and seeded random short words (resampled until the moved
// point keeps a workable imaginary part).
CheckReport verify_chi_automorphy(long k, long num_random_words, long terms, double tol,
                                  std::uint64_t seed);

// Functional-equation residuals |Lambda(s) + i^k Lambda(k-s)| over the grid
// (eps = -1 on both sides), the eps = +1 control at s = 2, and the
// cross-method anchor against lambda_direct.
CheckReport verify_corollary_1_4(long k, const std::vector<Complex>& s_grid, double tol, long terms,
                                 long anchor_terms = 500000);

std::string complex_to_string(Complex z);
Complex complex_from_string(const std::string& text);

}  // namespace mf
