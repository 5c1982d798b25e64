#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "precis/errors.hpp"
#include "precis/numerics.hpp"
#include "precis/scalar.hpp"

namespace precis {

// Small dense row-major matrix over a complex scalar type.
template <class CT>
struct DenseMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<CT> entries;

    DenseMatrix() = default;
    DenseMatrix(int r, int c) : rows(r), cols(c), entries(static_cast<std::size_t>(r) * c) {
        if (r <= 0 || c <= 0) throw std::invalid_argument("DenseMatrix: nonpositive dimension");
    }

    CT& at(int r, int c) { return entries[static_cast<std::size_t>(r) * cols + c]; }
    const CT& at(int r, int c) const { return entries[static_cast<std::size_t>(r) * cols + c]; }

    static DenseMatrix identity(int n) {
        DenseMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = CT(1);
        return m;
    }
};

using Mat = DenseMatrix<Cx>;

struct ConditionReport {
    double kappa2 = 0.0;
    double kappa_inf = 0.0;
    double sigma_min = 0.0;
    double sigma_max = 0.0;
};

// Max absolute-row-sum operator norm.
template <class CT>
typename Scalar<CT>::Real inf_operator_norm(const DenseMatrix<CT>& a) {
    using S = Scalar<CT>;
    typename S::Real best(0);
    for (int r = 0; r < a.rows; ++r) {
        typename S::Real sum(0);
        for (int c = 0; c < a.cols; ++c) sum += S::modulus(a.at(r, c));
        if (sum > best) best = sum;
    }
    return best;
}

// LU factorization with partial pivoting by largest modulus.
// Singularity threshold: dim * unit-roundoff * ||A||_inf.
template <class CT>
struct LuFactors {
    DenseMatrix<CT> lu;
    std::vector<int> perm;
};

template <class CT>
LuFactors<CT> lu_factor(DenseMatrix<CT> a) {
    using S = Scalar<CT>;
    if (a.rows != a.cols) throw std::invalid_argument("lu_factor: matrix not square");
    const int n = a.rows;
    typename S::Real thresh = typename S::Real(n) * S::eps() * inf_operator_norm(a);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (int col = 0; col < n; ++col) {
        int piv = col;
        typename S::Real best = S::modulus(a.at(col, col));
        for (int r = col + 1; r < n; ++r) {
            typename S::Real m = S::modulus(a.at(r, col));
            if (m > best) {
                best = m;
                piv = r;
            }
        }
        if (!(best > thresh))
            throw SingularMatrixError(S::to_double(best),
                                      "lu_factor: pivot below singularity threshold");
        if (piv != col) {
            for (int c = 0; c < n; ++c) std::swap(a.at(col, c), a.at(piv, c));
            std::swap(perm[col], perm[piv]);
        }
        const CT d = a.at(col, col);
        for (int r = col + 1; r < n; ++r) {
            CT f = a.at(r, col) / d;
            a.at(r, col) = f;
            for (int c = col + 1; c < n; ++c) a.at(r, c) -= f * a.at(col, c);
        }
    }
    return {std::move(a), std::move(perm)};
}

template <class CT>
std::vector<CT> lu_solve(const LuFactors<CT>& f, std::span<const CT> b) {
    const int n = f.lu.rows;
    if (static_cast<int>(b.size()) != n) throw std::invalid_argument("lu_solve: size mismatch");
    std::vector<CT> x(n);
    for (int i = 0; i < n; ++i) x[i] = b[f.perm[i]];
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j) x[i] -= f.lu.at(i, j) * x[j];
    for (int i = n - 1; i >= 0; --i) {
        for (int j = i + 1; j < n; ++j) x[i] -= f.lu.at(i, j) * x[j];
        x[i] /= f.lu.at(i, i);
    }
    return x;
}

template <class CT>
std::vector<CT> solve_square(const DenseMatrix<CT>& a, std::span<const CT> b) {
    if (a.rows != a.cols) throw std::invalid_argument("solve_square: matrix not square");
    if (static_cast<int>(b.size()) != a.rows)
        throw std::invalid_argument("solve_square: rhs length mismatch");
    return lu_solve(lu_factor(a), b);
}

template <class CT>
std::vector<CT> solve_square(const DenseMatrix<CT>& a, const std::vector<CT>& b) {
    return solve_square(a, std::span<const CT>(b));
}

// One-sided Jacobi: rotate column pairs until all are mutually orthogonal.
// Column norms of the rotated matrix are the singular values. When
// `right_vectors` is given it accumulates the applied rotations, so its
// columns are the right singular vectors (works for wide matrices too,
// which is how the decoder extracts null vectors).
template <class CT>
std::vector<typename Scalar<CT>::Real> jacobi_singular_values(
    DenseMatrix<CT> a, DenseMatrix<CT>* right_vectors = nullptr) {
    using S = Scalar<CT>;
    using RT = typename S::Real;
    using std::sqrt;
    const int m = a.rows, n = a.cols;
    if (right_vectors) *right_vectors = DenseMatrix<CT>::identity(n);
    const RT tol = RT(32) * S::eps();
    const int max_sweeps = 60;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        bool rotated = false;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                RT app(0), aqq(0);
                CT apq(0);
                for (int r = 0; r < m; ++r) {
                    const CT& cp = a.at(r, p);
                    const CT& cq = a.at(r, q);
                    app += S::modulus(cp) * S::modulus(cp);
                    aqq += S::modulus(cq) * S::modulus(cq);
                    apq += conj(cp) * cq;
                }
                RT mag = S::modulus(apq);
                if (app == RT(0) || aqq == RT(0) || mag <= tol * sqrt(app) * sqrt(aqq))
                    continue;
                rotated = true;
                CT phase = apq / CT(mag);
                RT tau = (aqq - app) / (RT(2) * mag);
                RT t = (tau >= RT(0) ? RT(1) : RT(-1)) /
                       ((tau >= RT(0) ? tau : -tau) + sqrt(RT(1) + tau * tau));
                RT c = RT(1) / sqrt(RT(1) + t * t);
                RT s = c * t;
                const CT cc(c);
                const CT sp = CT(s) * phase;          // applied to the q-side
                const CT spc = CT(s) * conj(phase);   // applied to the p-side
                for (int r = 0; r < m; ++r) {
                    CT cp = a.at(r, p), cq = a.at(r, q);
                    a.at(r, p) = cc * cp - spc * cq;
                    a.at(r, q) = sp * cp + cc * cq;
                }
                if (right_vectors) {
                    for (int r = 0; r < n; ++r) {
                        CT vp = right_vectors->at(r, p), vq = right_vectors->at(r, q);
                        right_vectors->at(r, p) = cc * vp - spc * vq;
                        right_vectors->at(r, q) = sp * vp + cc * vq;
                    }
                }
            }
        }
        if (!rotated) break;
    }
    std::vector<RT> norms(n);
    for (int c = 0; c < n; ++c) {
        RT sum(0);
        for (int r = 0; r < m; ++r) sum += S::modulus(a.at(r, c)) * S::modulus(a.at(r, c));
        norms[c] = sqrt(sum);
    }
    // sort columns (and accumulated vectors) by descending singular value
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int i, int j) { return norms[i] > norms[j]; });
    std::vector<RT> sorted(n);
    for (int i = 0; i < n; ++i) sorted[i] = norms[order[i]];
    if (right_vectors) {
        DenseMatrix<CT> v(n, n);
        for (int c = 0; c < n; ++c)
            for (int r = 0; r < n; ++r) v.at(r, c) = right_vectors->at(r, order[c]);
        *right_vectors = std::move(v);
    }
    return sorted;
}

// Descending singular values; count = min(rows, cols).
template <class CT>
std::vector<typename Scalar<CT>::Real> singular_values_t(const DenseMatrix<CT>& a) {
    if (std::min(a.rows, a.cols) > 64)
        throw std::invalid_argument("singular_values: matrix larger than desk scale");
    auto sv = jacobi_singular_values(a);
    sv.resize(static_cast<std::size_t>(std::min(a.rows, a.cols)));
    return sv;
}

inline std::vector<double> singular_values(const Mat& a) { return singular_values_t(a); }

// kappa2 from the singular values, kappaInf = ||A||_inf * ||A^-1||_inf with
// the inverse computed column by column through the pivoted solve.
template <class CT>
ConditionReport condition_report_t(const DenseMatrix<CT>& a) {
    using S = Scalar<CT>;
    if (a.rows != a.cols) throw std::invalid_argument("condition_report: matrix not square");
    const int n = a.rows;
    auto sv = singular_values_t(a);
    ConditionReport rep;
    rep.sigma_max = S::to_double(sv.front());
    rep.sigma_min = S::to_double(sv.back());
    if (rep.sigma_min == 0.0)
        throw SingularMatrixError(0.0, "condition_report: singular matrix");
    rep.kappa2 = rep.sigma_max / rep.sigma_min;
    auto f = lu_factor(a);
    typename S::Real inv_norm(0);
    std::vector<typename S::Real> row_sums(n, typename S::Real(0));
    std::vector<CT> e(n, CT(0));
    for (int c = 0; c < n; ++c) {
        e[c] = CT(1);
        auto col = lu_solve(f, std::span<const CT>(e));
        e[c] = CT(0);
        for (int r = 0; r < n; ++r) row_sums[r] += S::modulus(col[r]);
    }
    for (int r = 0; r < n; ++r)
        if (row_sums[r] > inv_norm) inv_norm = row_sums[r];
    rep.kappa_inf = S::to_double(inf_operator_norm(a) * inv_norm);
    return rep;
}

inline ConditionReport condition_report(const Mat& a) { return condition_report_t(a); }

}  // namespace precis
