#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "precis/linalg.hpp"
#include "precis/numerics.hpp"
#include "precis/rng.hpp"

namespace precis {

// Entries are computed per element from the reduced angle 2*pi*((j*r) mod n)/n
// so |a_j^r| stays exactly 1 for any power.
template <class CT>
CT unit_root_power(int n, long long j, long long r) {
    using S = Scalar<CT>;
    long long e = (j % n) * (r % n) % n;
    return S::unit(typename S::Real(2) * S::pi() * typename S::Real(e) / typename S::Real(n));
}

// 2k x n style measurement matrix: row r, column j holds a_j^r with
// a_j = exp(j * 2*pi*i / n) for j = 1..n (so a_n = 1), matching the support
// index convention used throughout.
struct VandermondeMatrix {
    int n = 0;
    int m = 0;

    Cx root(int j) const { return unit_root_power<Cx>(n, j, 1); }
    Cx entry(int r, int j) const { return unit_root_power<Cx>(n, j, r); }

    Mat dense() const {
        Mat a(m, n);
        for (int r = 0; r < m; ++r)
            for (int j = 1; j <= n; ++j) a.at(r, j - 1) = entry(r, j);
        return a;
    }
};

inline VandermondeMatrix build_vandermonde(int n, int m) {
    if (n < 1) throw std::invalid_argument("build_vandermonde: n must be positive");
    if (m < 1 || m > n) throw std::invalid_argument("build_vandermonde: need 1 <= m <= n");
    return {n, m};
}

// Real n-vector with at most k nonzeros. `support` is strictly increasing,
// 1-based; `values` is aligned with it; `ell` is the declared dynamic-range
// exponent (dynamic_range(values) <= 2^ell).
struct SparseSignal {
    int n = 0;
    std::vector<int> support;
    std::vector<double> values;
    int ell = 0;
};

struct MeasurementVector {
    ComplexVector syndromes;
    std::optional<PrecisionSpec> bits;  // set when the syndromes are quantized
};

inline MeasurementVector measure(const VandermondeMatrix& a, const SparseSignal& x) {
    if (x.n != a.n) throw std::invalid_argument("measure: dimension mismatch");
    MeasurementVector y;
    y.syndromes.assign(a.m, Cx(0));
    for (int r = 0; r < a.m; ++r)
        for (std::size_t i = 0; i < x.support.size(); ++i)
            y.syndromes[r] += x.values[i] * a.entry(r, x.support[i]);
    return y;
}

inline MeasurementVector quantize(const MeasurementVector& y, PrecisionSpec spec) {
    return {quantize(std::span<const Cx>(y.syndromes), spec), spec};
}

// Random exactly-k-sparse test signal with dynamic range at most 2^ell:
// the smallest magnitude is normalized to 1, and with probability 1/2 the
// extremes 1 and 2^ell are both forced present to stress the bound.
inline SparseSignal gen_sparse_signal(int n, int k, int ell, std::uint64_t seed) {
    if (k < 1 || 2 * k > n)
        throw std::invalid_argument("gen_sparse_signal: need 1 <= k <= n/2");
    if (ell < 0) throw std::invalid_argument("gen_sparse_signal: negative ell");
    SplitMix64 rng(seed);
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i + 1;
    for (int i = 0; i < k; ++i)
        std::swap(idx[i], idx[i + static_cast<int>(rng.below(n - i))]);
    std::vector<int> support(idx.begin(), idx.begin() + k);
    std::sort(support.begin(), support.end());

    std::vector<double> mags(k);
    for (int i = 0; i < k; ++i) mags[i] = std::exp2(rng.uniform() * ell);
    if (rng.coin() && k >= 2) {
        int i1 = static_cast<int>(rng.below(k));
        int i2 = (i1 + 1 + static_cast<int>(rng.below(k - 1))) % k;
        mags[i1] = 1.0;
        mags[i2] = std::exp2(ell);
    }
    double lo = *std::min_element(mags.begin(), mags.end());
    SparseSignal x{n, std::move(support), {}, ell};
    x.values.resize(k);
    for (int i = 0; i < k; ++i) x.values[i] = (rng.coin() ? 1.0 : -1.0) * (mags[i] / lo);
    return x;
}

// k x k (or rows x |support|) slice of the measurement matrix, rows 0..rows-1,
// columns restricted to a 1-based support set.
template <class CT>
DenseMatrix<CT> vandermonde_submatrix(int n, int rows, std::span<const int> support) {
    DenseMatrix<CT> v(rows, static_cast<int>(support.size()));
    for (int r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < support.size(); ++c)
            v.at(r, static_cast<int>(c)) = unit_root_power<CT>(n, support[c], r);
    return v;
}

}  // namespace precis
