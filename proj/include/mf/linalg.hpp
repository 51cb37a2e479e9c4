#pragma once

#include <optional>
#include <vector>

#include "mf/rational.hpp"

namespace mf {

// Dense matrix over the rationals, row-major.
class QMatrix {
public:
    QMatrix() : rows_(0), cols_(0) {}
    QMatrix(long rows, long cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    long rows() const { return rows_; }
    long cols() const { return cols_; }

    Rational& at(long i, long j) { return data_[i * cols_ + j]; }
    const Rational& at(long i, long j) const { return data_[i * cols_ + j]; }

    static QMatrix identity(long n);

    bool operator==(const QMatrix& other) const = default;

private:
    long rows_, cols_;
    std::vector<Rational> data_;
};

QMatrix mat_mul(const QMatrix& a, const QMatrix& b);
QMatrix mat_add(const QMatrix& a, const QMatrix& b);
QMatrix mat_scale(const Rational& c, const QMatrix& a);

// In-place reduced row echelon form; returns the pivot column of each
// nonzero row, in row order.
std::vector<long> rref(QMatrix& m);

long rank(QMatrix m);

// Basis of the right kernel {v : m v = 0}.
std::vector<std::vector<Rational>> kernel_basis(const QMatrix& m);

// Polynomial with ascending coefficients; c[i] multiplies x^i.
struct Poly {
    std::vector<Rational> c;

    long degree() const { return static_cast<long>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    void normalize();  // strip leading zeros

    bool operator==(const Poly& other) const = default;
};

Poly poly_one();
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
// Exact division; throws Error if the remainder is nonzero.
Poly poly_divexact(const Poly& a, const Poly& b);
// Monic gcd over Q.
Poly poly_gcd(Poly a, Poly b);
Poly poly_derivative(const Poly& a);
Poly poly_monic(Poly a);
Rational poly_eval(const Poly& a, const Rational& x);
QMatrix poly_eval_matrix(const Poly& a, const QMatrix& m);
// a / gcd(a, a'): same roots without multiplicity.
Poly squarefree_part(const Poly& a);

// Characteristic polynomial det(xI - A), monic, by the Faddeev-LeVerrier
// recurrence (exact over Q).
Poly charpoly(const QMatrix& a);

// Exact integer roots with multiplicities, found by floating root candidates
// (Durand-Kerner) and verified/deflated in exact arithmetic.  Returns pairs
// (root, multiplicity) sorted by root.
std::vector<std::pair<Integer, long>> integer_roots(const Poly& p);

}  // namespace mf
