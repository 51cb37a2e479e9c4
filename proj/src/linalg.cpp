#include "mf/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "mf/errors.hpp"

namespace mf {

QMatrix QMatrix::identity(long n) {
    QMatrix m(n, n);
    for (long i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

QMatrix mat_mul(const QMatrix& a, const QMatrix& b) {
    if (a.cols() != b.rows()) throw Error("mat_mul: shape mismatch");
    QMatrix c(a.rows(), b.cols());
    for (long i = 0; i < a.rows(); ++i)
        for (long k = 0; k < a.cols(); ++k) {
            const Rational& aik = a.at(i, k);
            if (is_zero(aik)) continue;
            for (long j = 0; j < b.cols(); ++j) {
                const Rational& bkj = b.at(k, j);
                if (!is_zero(bkj)) c.at(i, j) += aik * bkj;
            }
        }
    return c;
}

QMatrix mat_add(const QMatrix& a, const QMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error("mat_add: shape mismatch");
    QMatrix c(a.rows(), a.cols());
    for (long i = 0; i < a.rows(); ++i)
        for (long j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j) + b.at(i, j);
    return c;
}

QMatrix mat_scale(const Rational& s, const QMatrix& a) {
    QMatrix c(a.rows(), a.cols());
    for (long i = 0; i < a.rows(); ++i)
        for (long j = 0; j < a.cols(); ++j) c.at(i, j) = s * a.at(i, j);
    return c;
}

std::vector<long> rref(QMatrix& m) {
    std::vector<long> pivots;
    long row = 0;
    for (long col = 0; col < m.cols() && row < m.rows(); ++col) {
        long sel = -1;
        for (long i = row; i < m.rows(); ++i)
            if (!is_zero(m.at(i, col))) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        if (sel != row)
            for (long j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(row, j));
        Rational inv = Rational(1) / m.at(row, col);
        for (long j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
        for (long i = 0; i < m.rows(); ++i) {
            if (i == row || is_zero(m.at(i, col))) continue;
            Rational f = m.at(i, col);
            for (long j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

long rank(QMatrix m) { return static_cast<long>(rref(m).size()); }

std::vector<std::vector<Rational>> kernel_basis(const QMatrix& m) {
    QMatrix r = m;
    std::vector<long> pivots = rref(r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (long p : pivots) is_pivot[p] = true;

    std::vector<std::vector<Rational>> basis;
    for (long free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(m.cols());
        v[free] = 1;
        for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r.at(static_cast<long>(i), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

void Poly::normalize() {
    while (!c.empty() && mf::is_zero(c.back())) c.pop_back();
}

Poly poly_one() { return Poly{{Rational(1)}}; }

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly{};
    Poly out;
    out.c.assign(a.c.size() + b.c.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (is_zero(a.c[i])) continue;
        for (size_t j = 0; j < b.c.size(); ++j) out.c[i + j] += a.c[i] * b.c[j];
    }
    out.normalize();
    return out;
}

Poly poly_sub(const Poly& a, const Poly& b) {
    Poly out = a;
    if (out.c.size() < b.c.size()) out.c.resize(b.c.size(), Rational(0));
    for (size_t i = 0; i < b.c.size(); ++i) out.c[i] -= b.c[i];
    out.normalize();
    return out;
}

Poly poly_divexact(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw Error("poly_divexact: division by zero polynomial");
    Poly rem = a;
    rem.normalize();
    Poly q;
    long db = b.degree();
    if (rem.degree() < db) {
        if (rem.is_zero()) return Poly{};
        throw Error("poly_divexact: inexact division");
    }
    q.c.assign(rem.degree() - db + 1, Rational(0));
    while (!rem.is_zero() && rem.degree() >= db) {
        long shift = rem.degree() - db;
        Rational f = rem.c.back() / b.c.back();
        q.c[shift] = f;
        for (long i = 0; i <= db; ++i) rem.c[shift + i] -= f * b.c[i];
        rem.normalize();
    }
    if (!rem.is_zero()) throw Error("poly_divexact: inexact division");
    q.normalize();
    return q;
}

Poly poly_monic(Poly a) {
    a.normalize();
    if (a.is_zero()) return a;
    Rational lead = a.c.back();
    for (auto& x : a.c) x /= lead;
    return a;
}

Poly poly_gcd(Poly a, Poly b) {
    a.normalize();
    b.normalize();
    while (!b.is_zero()) {
        // remainder of a by b
        Poly rem = a;
        long db = b.degree();
        while (!rem.is_zero() && rem.degree() >= db) {
            long shift = rem.degree() - db;
            Rational f = rem.c.back() / b.c.back();
            for (long i = 0; i <= db; ++i) rem.c[shift + i] -= f * b.c[i];
            rem.normalize();
        }
        a = b;
        b = rem;
    }
    return poly_monic(a);
}

Poly poly_derivative(const Poly& a) {
    Poly out;
    if (a.c.size() <= 1) return out;
    out.c.resize(a.c.size() - 1);
    for (size_t i = 1; i < a.c.size(); ++i) out.c[i - 1] = Rational(static_cast<long>(i)) * a.c[i];
    out.normalize();
    return out;
}

Rational poly_eval(const Poly& a, const Rational& x) {
    Rational acc(0);
    for (auto it = a.c.rbegin(); it != a.c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

QMatrix poly_eval_matrix(const Poly& a, const QMatrix& m) {
    long n = m.rows();
    QMatrix acc(n, n);
    for (auto it = a.c.rbegin(); it != a.c.rend(); ++it) {
        acc = mat_mul(acc, m);
        for (long i = 0; i < n; ++i) acc.at(i, i) += *it;
    }
    return acc;
}

Poly squarefree_part(const Poly& a) {
    Poly d = poly_derivative(a);
    if (d.is_zero()) return poly_monic(a);
    Poly g = poly_gcd(a, d);
    return poly_monic(poly_divexact(a, g));
}

Poly charpoly(const QMatrix& a) {
    if (a.rows() != a.cols()) throw Error("charpoly: matrix not square");
    long n = a.rows();
    Poly p;
    p.c.assign(n + 1, Rational(0));
    p.c[n] = 1;
    if (n == 0) return p;
    // Faddeev-LeVerrier: M_1 = A, c_{n-k} = -tr(M_k)/k, M_{k+1} = A(M_k + c_{n-k} I).
    QMatrix m = a;
    for (long k = 1; k <= n; ++k) {
        Rational tr(0);
        for (long i = 0; i < n; ++i) tr += m.at(i, i);
        p.c[n - k] = -tr / Rational(k);
        if (k < n) {
            QMatrix shifted = m;
            for (long i = 0; i < n; ++i) shifted.at(i, i) += p.c[n - k];
            m = mat_mul(a, shifted);
        }
    }
    return p;
}

namespace {

// Durand-Kerner root candidates in double precision; exactness comes from
// the verification step in integer_roots.
std::vector<std::complex<double>> float_roots(const Poly& p) {
    long n = p.degree();
    std::vector<std::complex<double>> coeff(n + 1);
    double lead = p.c[n].get_d();
    for (long i = 0; i <= n; ++i) coeff[i] = p.c[i].get_d() / lead;

    double radius = 1.0;
    for (long i = 0; i < n; ++i) radius = std::max(radius, 1.0 + std::abs(coeff[i]));
    std::vector<std::complex<double>> z(n);
    std::complex<double> seed(0.4, 0.9);
    std::complex<double> zk(1.0, 0.0);
    for (long i = 0; i < n; ++i) {
        zk *= seed;
        z[i] = radius * zk / std::abs(zk) * (0.5 + 0.5 * (i + 1.0) / n);
    }
    auto eval = [&](std::complex<double> x) {
        std::complex<double> acc(0.0, 0.0);
        for (long i = n; i >= 0; --i) acc = acc * x + coeff[i];
        return acc;
    };
    for (int iter = 0; iter < 500; ++iter) {
        double moved = 0.0;
        for (long i = 0; i < n; ++i) {
            std::complex<double> denom(1.0, 0.0);
            for (long j = 0; j < n; ++j)
                if (j != i) denom *= (z[i] - z[j]);
            if (std::abs(denom) == 0.0) continue;
            std::complex<double> step = eval(z[i]) / denom;
            z[i] -= step;
            moved = std::max(moved, std::abs(step));
        }
        if (moved < 1e-13 * radius) break;
    }
    return z;
}

}  // namespace

std::vector<std::pair<Integer, long>> integer_roots(const Poly& p) {
    Poly work = p;
    work.normalize();
    std::vector<std::pair<Integer, long>> out;
    if (work.degree() < 1) return out;

    std::vector<Integer> candidates;
    for (const auto& z : float_roots(work)) {
        if (std::abs(z.imag()) > 1e-4 * (1.0 + std::abs(z.real()))) continue;
        double r = z.real();
        for (double delta : {-1.0, 0.0, 1.0}) {
            double c = std::round(r) + delta;
            if (std::abs(c) < 9e18) candidates.emplace_back(static_cast<long>(c));
        }
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    for (const Integer& cand : candidates) {
        Rational x(cand);
        long mult = 0;
        while (work.degree() >= 1 && is_zero(poly_eval(work, x))) {
            Poly lin{{-x, Rational(1)}};  // (X - cand)
            work = poly_divexact(work, lin);
            ++mult;
        }
        if (mult > 0) out.emplace_back(cand, mult);
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

}  // namespace mf
