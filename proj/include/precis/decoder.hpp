#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "precis/errors.hpp"
#include "precis/linalg.hpp"
#include "precis/numerics.hpp"
#include "precis/sensing.hpp"

namespace precis {

// Coefficients h0..hk of the approximate error locator, h0 normalized to 1
// (the exact locator prod(1 - x*a_e) has constant term 1).
struct LocatorPolynomial {
    ComplexVector coeffs;
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

struct DecodeResult {
    SparseSignal signal;
    LocatorPolynomial locator;
    double hankel_kappa2 = 0.0;
    double hankel_kappa_inf = 0.0;
    double value_solve_kappa2 = 0.0;
    double residual = 0.0;            // ||A x_hat - y_hat||_inf / ||y_hat||_inf over all given syndromes
    double locator_separation = 0.0;  // (k+1)-st smallest root magnitude / k-th smallest
};

enum class PrecisionMode { Standard, Extended };

struct DecodeOptions {
    PrecisionMode precision = PrecisionMode::Standard;
    // Hankel solves above this kappa2 fall back to the null-vector route.
    double condition_fallback_threshold = 1e12;
    // |h0| below this times ||h||_inf means the support is smaller than assumed.
    double degenerate_h0_factor = 1e-12;
    // Allowed imaginary residue on recovered values, relative to their sup norm.
    double imaginary_tolerance = 1e-6;
    // Consistency acceptance uses tau = 2^(-bits + margin), scaled by the
    // syndrome extrapolation amplification of the candidate support (the
    // square value solve reproduces the first t syndromes exactly and
    // extrapolates quantization noise into the rest, so a flat 2^(-b+2)
    // rejects correct reconstructions whenever that operator norm exceeds ~4).
    int tau_margin_exp = 2;
    bool tau_extrapolation_scaling = true;
    // A candidate value below 2^(-bits + this) times the largest recovered
    // value is indistinguishable from zero at the given precision; the
    // candidate is rejected in favor of a smaller support size.
    int negligible_value_exp = 8;
};

struct HankelSystem {
    Mat matrix;
    ComplexVector rhs;
};

namespace detail {

template <class CT>
struct HankelSystemT {
    DenseMatrix<CT> matrix;
    std::vector<CT> rhs;
};

// B[i][j] = y_{i+j} (k x k), rhs_i = -y_{i+k}: the system obtained from the
// syndrome annihilation equations by pinning h0 = 1.
template <class CT>
HankelSystemT<CT> build_hankel_t(std::span<const CT> y, int k) {
    if (k < 1) throw std::invalid_argument("build_hankel: k must be positive");
    if (static_cast<int>(y.size()) < 2 * k)
        throw std::invalid_argument("build_hankel: need at least 2k syndromes");
    HankelSystemT<CT> sys{DenseMatrix<CT>(k, k), std::vector<CT>(k)};
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) sys.matrix.at(i, j) = y[i + j];
        sys.rhs[i] = -y[i + k];
    }
    return sys;
}

struct LocatorDiag {
    double hankel_kappa2 = 0.0;
    double hankel_kappa_inf = 0.0;
    bool used_fallback = false;
};

inline constexpr double kappa_cap = 1e300;

// Solve for the locator coefficients, h0 = 1 first. When the Hankel block is
// too ill conditioned, take the smallest right singular vector of the full
// k x (k+1) syndrome matrix and rescale it so h0 = 1.
template <class CT>
std::vector<CT> solve_locator_t(std::span<const CT> y, int k, const DecodeOptions& opts,
                                LocatorDiag* diag = nullptr) {
    using S = Scalar<CT>;
    if (static_cast<int>(y.size()) < 2 * k)
        throw std::invalid_argument("solve_locator: need at least 2k syndromes");
    typename S::Real ynorm(0);
    for (const CT& z : y.first(2 * k))
        if (S::modulus(z) > ynorm) ynorm = S::modulus(z);
    if (ynorm == typename S::Real(0))
        throw DegenerateLocatorError("solve_locator: zero syndromes, zero signal has empty support");

    auto sys = build_hankel_t(y, k);
    auto sv = jacobi_singular_values(sys.matrix);
    double smax = S::to_double(sv.front());
    double smin = S::to_double(sv.back());
    double kappa2 = smin > 0.0 ? std::min(smax / smin, kappa_cap) : kappa_cap;
    if (diag) {
        diag->hankel_kappa2 = kappa2;
        diag->hankel_kappa_inf = kappa_cap;
        diag->used_fallback = kappa2 > opts.condition_fallback_threshold;
    }

    std::vector<CT> h(k + 1);
    if (kappa2 <= opts.condition_fallback_threshold) {
        auto f = lu_factor(sys.matrix);
        auto u = lu_solve(f, std::span<const CT>(sys.rhs));  // (h_k, ..., h_1)
        h[0] = CT(1);
        for (int i = 1; i <= k; ++i) h[i] = u[k - i];
        if (diag) {
            using RT = typename S::Real;
            RT inv_norm(0);
            std::vector<RT> rows(k, RT(0));
            std::vector<CT> e(k, CT(0));
            for (int c = 0; c < k; ++c) {
                e[c] = CT(1);
                auto col = lu_solve(f, std::span<const CT>(e));
                e[c] = CT(0);
                for (int r = 0; r < k; ++r) rows[r] += S::modulus(col[r]);
            }
            for (int r = 0; r < k; ++r)
                if (rows[r] > inv_norm) inv_norm = rows[r];
            diag->hankel_kappa_inf =
                std::min(S::to_double(inf_operator_norm(sys.matrix) * inv_norm), kappa_cap);
        }
        return h;
    }

    DenseMatrix<CT> m(k, k + 1);  // columns multiply (h_k, ..., h_0)
    for (int i = 0; i < k; ++i)
        for (int c = 0; c <= k; ++c) m.at(i, c) = y[i + c];
    DenseMatrix<CT> v;
    jacobi_singular_values(m, &v);
    // last column of v = right singular vector for the smallest singular value
    std::vector<CT> w(k + 1);
    typename S::Real wnorm(0);
    for (int i = 0; i <= k; ++i) {
        w[i] = v.at(i, k);
        if (S::modulus(w[i]) > wnorm) wnorm = S::modulus(w[i]);
    }
    CT h0 = w[k];
    if (S::to_double(S::modulus(h0)) <
        opts.degenerate_h0_factor * S::to_double(wnorm))
        throw DegenerateLocatorError("solve_locator: |h0| negligible, support smaller than assumed");
    for (int i = 0; i <= k; ++i) h[i] = w[k - i] / h0;
    return h;
}

struct SupportSelection {
    std::vector<int> support;
    double separation = 0.0;
};

// Evaluate |h(conj(a_j))| for j = 1..n and keep the k smallest, ties broken
// by smaller index. The separation ratio (k+1-st / k-th smallest) is a
// confidence diagnostic, not a gate.
template <class CT>
SupportSelection find_support_t(std::span<const CT> h, int n, int k) {
    using S = Scalar<CT>;
    if (h.empty()) throw std::invalid_argument("find_support: empty locator");
    if (k < 1 || k > n) throw std::invalid_argument("find_support: bad k");
    std::vector<std::pair<double, int>> mags(n);
    for (int j = 1; j <= n; ++j) {
        CT w = conj(unit_root_power<CT>(n, j, 1));
        CT val(0);
        for (int c = static_cast<int>(h.size()) - 1; c >= 0; --c) val = val * w + h[c];
        mags[j - 1] = {S::to_double(S::modulus(val)), j};
    }
    std::sort(mags.begin(), mags.end());
    SupportSelection sel;
    sel.support.reserve(k);
    for (int i = 0; i < k; ++i) sel.support.push_back(mags[i].second);
    std::sort(sel.support.begin(), sel.support.end());
    if (k < n) {
        double kth = mags[k - 1].first, next = mags[k].first;
        sel.separation = kth > 0.0 ? next / kth
                                   : (next > 0.0 ? std::numeric_limits<double>::infinity() : 1.0);
    } else {
        sel.separation = std::numeric_limits<double>::infinity();
    }
    return sel;
}

// Solve the square system given by rows 0..t-1 of the measurement matrix
// restricted to the support columns; drop imaginary parts after checking the
// residue is roundoff-sized.
template <class CT>
std::vector<double> solve_values_t(std::span<const CT> y, std::span<const int> support, int n,
                                   const DecodeOptions& opts, double* kappa2 = nullptr) {
    using S = Scalar<CT>;
    const int t = static_cast<int>(support.size());
    if (t == 0) throw std::invalid_argument("solve_values: empty support");
    if (static_cast<int>(y.size()) < t)
        throw std::invalid_argument("solve_values: need at least |support| syndromes");
    auto v = vandermonde_submatrix<CT>(n, t, support);
    if (kappa2) {
        auto sv = jacobi_singular_values(v);
        double smin = S::to_double(sv.back());
        *kappa2 = smin > 0.0 ? std::min(S::to_double(sv.front()) / smin, kappa_cap) : kappa_cap;
    }
    auto x = solve_square(v, y.first(t));
    typename S::Real vmax(0), imax(0);
    for (const CT& z : x) {
        if (S::modulus(z) > vmax) vmax = S::modulus(z);
        using std::abs;
        if (abs(z.imag()) > imax) imax = abs(z.imag());
    }
    if (S::to_double(imax) > opts.imaginary_tolerance * S::to_double(vmax))
        throw InconsistentValuesError(S::to_double(imax),
                                      "solve_values: imaginary residue exceeds tolerance");
    std::vector<double> out(t);
    for (int i = 0; i < t; ++i) out[i] = S::to_double(x[i].real());
    return out;
}

template <class CT>
std::vector<CT> resynthesize(int n, std::span<const int> support, std::span<const double> values,
                             int rows) {
    std::vector<CT> y(rows, CT(0));
    for (int r = 0; r < rows; ++r)
        for (std::size_t i = 0; i < support.size(); ++i)
            y[r] += CT(typename Scalar<CT>::Real(values[i])) *
                    unit_root_power<CT>(n, support[i], r);
    return y;
}

template <class CT>
double relative_inf_error_t(std::span<const CT> approx, std::span<const CT> exact) {
    using S = Scalar<CT>;
    typename S::Real num(0), den(0);
    for (std::size_t i = 0; i < exact.size(); ++i) {
        if (S::modulus(exact[i]) > den) den = S::modulus(exact[i]);
        if (S::modulus(approx[i] - exact[i]) > num) num = S::modulus(approx[i] - exact[i]);
    }
    return den > typename S::Real(0) ? S::to_double(num / den)
                                     : std::numeric_limits<double>::infinity();
}

inline int dynamic_range_bits(std::span<const double> values) {
    if (values.empty()) return 0;
    return static_cast<int>(std::ceil(std::log2(dynamic_range(values))));
}

// Full pipeline assuming support size exactly k, on the first 2k syndromes.
template <class CT>
DecodeResult decode_t(std::span<const CT> y, int n, int k, const DecodeOptions& opts) {
    using S = Scalar<CT>;
    if (k < 1 || 2 * k > n) throw std::invalid_argument("decode: need 1 <= k <= n/2");
    if (static_cast<int>(y.size()) < 2 * k)
        throw std::invalid_argument("decode: need 2k syndromes");
    auto yk = y.first(2 * k);

    LocatorDiag diag;
    auto h = solve_locator_t(yk, k, opts, &diag);
    auto sel = find_support_t(std::span<const CT>(h), n, k);
    DecodeResult res;
    res.value_solve_kappa2 = 0.0;
    auto values = solve_values_t(yk, std::span<const int>(sel.support), n, opts,
                                 &res.value_solve_kappa2);

    res.signal.n = n;
    res.signal.support = sel.support;
    res.signal.values = values;
    bool all_zero = std::all_of(values.begin(), values.end(), [](double v) { return v == 0.0; });
    res.signal.ell = all_zero ? 0 : dynamic_range_bits(values);
    res.locator.coeffs.resize(h.size());
    for (std::size_t i = 0; i < h.size(); ++i) res.locator.coeffs[i] = S::to_complex(h[i]);
    res.hankel_kappa2 = diag.hankel_kappa2;
    res.hankel_kappa_inf = diag.hankel_kappa_inf;
    res.locator_separation = sel.separation;
    auto resyn = resynthesize<CT>(n, res.signal.support, res.signal.values, 2 * k);
    res.residual = relative_inf_error_t(std::span<const CT>(resyn), yk);
    return res;
}

// inf-norm of V_bot * V_top^{-1}: how hard the square value solve extrapolates
// the first t syndromes onto rows t..rows-1.
template <class CT>
double extrapolation_amplification(int n, std::span<const int> support, int rows) {
    using S = Scalar<CT>;
    const int t = static_cast<int>(support.size());
    if (t == 0 || rows <= t) return 0.0;
    auto vtop = vandermonde_submatrix<CT>(n, t, support);
    DenseMatrix<CT> vtop_tr(t, t);
    for (int r = 0; r < t; ++r)
        for (int c = 0; c < t; ++c) vtop_tr.at(r, c) = vtop.at(c, r);
    auto f = lu_factor(vtop_tr);
    typename S::Real best(0);
    std::vector<CT> row(t);
    for (int r = t; r < rows; ++r) {
        for (int c = 0; c < t; ++c) row[c] = unit_root_power<CT>(n, support[c], r);
        auto w = lu_solve(f, std::span<const CT>(row));
        typename S::Real sum(0);
        for (const CT& z : w) sum += S::modulus(z);
        if (sum > best) best = sum;
    }
    return S::to_double(best);
}

template <class CT>
DecodeResult decode_unknown_support_t(std::span<const CT> y, int n, int k, PrecisionSpec bits,
                                      const DecodeOptions& opts) {
    using S = Scalar<CT>;
    if (k < 1 || 2 * k > n)
        throw std::invalid_argument("decode_unknown_support: need 1 <= k <= n/2");
    if (static_cast<int>(y.size()) < 2 * k)
        throw std::invalid_argument("decode_unknown_support: need 2k syndromes");
    auto yfull = y.first(2 * k);

    typename S::Real ynorm(0);
    for (const CT& z : yfull)
        if (S::modulus(z) > ynorm) ynorm = S::modulus(z);
    if (ynorm == typename S::Real(0)) {
        DecodeResult zero;
        zero.signal.n = n;
        zero.locator.coeffs = {Cx(1)};
        zero.locator_separation = std::numeric_limits<double>::infinity();
        return zero;
    }

    const double tau_base = std::exp2(-bits.bits + opts.tau_margin_exp);
    const double negligible = std::exp2(-bits.bits + opts.negligible_value_exp);
    // The syndromes carry quantization noise of order 2^-bits, so the
    // imaginary residue of a correct value solve is noise-sized, not
    // roundoff-sized; the fixed roundoff tolerance would reject correct
    // reconstructions below ~20 bits.
    DecodeOptions attempt_opts = opts;
    attempt_opts.imaginary_tolerance =
        std::max(opts.imaginary_tolerance, std::exp2(-bits.bits + 6));
    std::vector<std::pair<int, double>> attempts;
    for (int t = k; t >= 1; --t) {
        DecodeResult cand;
        try {
            cand = decode_t(yfull.first(2 * t), n, t, attempt_opts);
        } catch (const DegenerateLocatorError&) {
            attempts.emplace_back(t, -1.0);
            continue;
        } catch (const SingularMatrixError&) {
            attempts.emplace_back(t, -1.0);
            continue;
        } catch (const InconsistentValuesError&) {
            attempts.emplace_back(t, -1.0);
            continue;
        }
        auto resyn = resynthesize<CT>(n, cand.signal.support, cand.signal.values, 2 * k);
        cand.residual = relative_inf_error_t(std::span<const CT>(resyn), yfull);
        attempts.emplace_back(t, cand.residual);
        double tau = tau_base;
        if (opts.tau_extrapolation_scaling)
            tau *= 1.0 + extrapolation_amplification<CT>(n, cand.signal.support, 2 * k);
        if (cand.residual > tau) continue;
        double vmax = 0.0, vmin = std::numeric_limits<double>::infinity();
        for (double v : cand.signal.values) {
            vmax = std::max(vmax, std::abs(v));
            vmin = std::min(vmin, std::abs(v));
        }
        if (vmin <= negligible * vmax) continue;  // support is smaller than t
        return cand;
    }
    std::string msg = "decode_unknown_support: no consistent reconstruction;";
    for (const auto& [t, r] : attempts)
        msg += " t=" + std::to_string(t) +
               (r < 0 ? std::string(" aborted") : " residual=" + std::to_string(r));
    throw ReconstructionFailureError(std::move(attempts), msg);
}

}  // namespace detail

inline HankelSystem build_hankel(const MeasurementVector& y, int k) {
    auto sys = detail::build_hankel_t<Cx>(std::span<const Cx>(y.syndromes), k);
    return {std::move(sys.matrix), std::move(sys.rhs)};
}

inline LocatorPolynomial solve_locator(const MeasurementVector& y, int k,
                                       const DecodeOptions& opts = {}) {
    auto h = detail::solve_locator_t<Cx>(std::span<const Cx>(y.syndromes), k, opts);
    return {ComplexVector(h.begin(), h.end())};
}

// Returns the selected 1-based support; `separation` (if given) receives the
// confidence ratio.
inline std::vector<int> find_support(const LocatorPolynomial& h, int n, int k,
                                     double* separation = nullptr) {
    auto sel = detail::find_support_t<Cx>(std::span<const Cx>(h.coeffs), n, k);
    if (separation) *separation = sel.separation;
    return sel.support;
}

inline std::vector<double> solve_values(const MeasurementVector& y, std::span<const int> support,
                                        int n, const DecodeOptions& opts = {}) {
    return detail::solve_values_t<Cx>(std::span<const Cx>(y.syndromes), support, n, opts);
}

DecodeResult decode(const MeasurementVector& y, int n, int k, const DecodeOptions& opts = {});

DecodeResult decode_unknown_support(const MeasurementVector& y, int n, int k, PrecisionSpec bits,
                                    const DecodeOptions& opts = {});

}  // namespace precis
