#pragma once

#include <algorithm>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

#include "precis/decoder.hpp"
#include "precis/sensing.hpp"

namespace precis {

struct OracleResult {
    SparseSignal signal;
    double residual = 0.0;  // relative sup-norm mismatch over all syndromes
    bool unique = true;     // no other support fits within a factor 2 of this residual
};

namespace detail {

inline double candidate_residual(int n, std::span<const int> support,
                                 std::span<const double> values,
                                 std::span<const Cx> y, double ynorm) {
    auto resyn = resynthesize<Cx>(n, support, values, static_cast<int>(y.size()));
    double num = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i)
        num = std::max(num, std::abs(resyn[i] - y[i]));
    return ynorm > 0.0 ? num / ynorm : num;
}

}  // namespace detail

// Exhaustive minimum-support reconstruction, the desk-scale ground truth.
// Every support of size <= k is fitted through the same square solve the
// decoder uses (rows 0..t-1), and scored by the full-syndrome residual.
//
// Candidate selection: when the measurement records its quantization bits,
// the candidates consistent with that noise level (residual within the same
// extrapolation-scaled tolerance the decoder uses) form the feasible class;
// otherwise supports whose residual is within a factor 2 of the global
// minimum do. Among the class the sparsest support wins, then lower
// residual, then lexicographic order. Without the noise-aware class a
// superset of the true support always overfits quantization noise and would
// beat the true fit on raw residual.
inline OracleResult l0_decode(const VandermondeMatrix& a, const MeasurementVector& yv, int k) {
    const int n = a.n;
    if (n > 16 || k > 3)
        throw std::invalid_argument("l0_decode: exhaustive search limited to n <= 16, k <= 3");
    if (k < 0) throw std::invalid_argument("l0_decode: negative k");
    std::span<const Cx> y(yv.syndromes);
    const int m = static_cast<int>(y.size());
    if (m < 1) throw std::invalid_argument("l0_decode: empty measurement");
    const double ynorm = inf_norm(y);

    struct Candidate {
        std::vector<int> support;
        std::vector<double> values;
        double residual;
    };
    std::vector<Candidate> cands;
    cands.push_back({{}, {}, ynorm > 0.0 ? 1.0 : 0.0});  // zero signal

    DecodeOptions lax;
    lax.imaginary_tolerance = std::numeric_limits<double>::infinity();
    std::vector<int> sup;
    for (int t = 1; t <= std::min(k, m); ++t) {
        sup.assign(t, 0);
        for (int i = 0; i < t; ++i) sup[i] = i + 1;
        while (true) {
            std::vector<double> vals;
            try {
                vals = detail::solve_values_t<Cx>(y, std::span<const int>(sup), n, lax);
                cands.push_back({sup, vals,
                                 detail::candidate_residual(n, sup, vals, y, ynorm)});
            } catch (const SingularMatrixError&) {
                // numerically unsolvable support: skip
            }
            int i = t - 1;
            while (i >= 0 && sup[i] == n - (t - 1 - i)) --i;
            if (i < 0) break;
            ++sup[i];
            for (int j = i + 1; j < t; ++j) sup[j] = sup[j - 1] + 1;
        }
    }

    // Relative residual below this is an exact fit at working precision;
    // treating it as zero keeps roundoff from outranking the true support.
    constexpr double exact_fit_floor = 1e-12;
    std::vector<char> in_class(cands.size(), 0);
    bool any = false;
    if (yv.bits) {
        const double tau_base = std::exp2(-yv.bits->bits + 2);
        for (std::size_t i = 0; i < cands.size(); ++i) {
            double tau = tau_base * (1.0 + detail::extrapolation_amplification<Cx>(
                                               n, cands[i].support, m));
            in_class[i] = cands[i].residual <= tau;
            any = any || in_class[i];
        }
    }
    if (!any) {
        double rstar = std::numeric_limits<double>::infinity();
        for (const auto& c : cands) rstar = std::min(rstar, c.residual);
        double thr = std::max(2.0 * rstar, exact_fit_floor);
        for (std::size_t i = 0; i < cands.size(); ++i)
            in_class[i] = cands[i].residual <= thr;
    }
    const Candidate* best = nullptr;
    for (std::size_t i = 0; i < cands.size(); ++i) {
        if (!in_class[i]) continue;
        const auto& c = cands[i];
        if (!best) {
            best = &c;
            continue;
        }
        if (std::make_tuple(c.support.size(), c.residual, std::cref(c.support)) <
            std::make_tuple(best->support.size(), best->residual, std::cref(best->support)))
            best = &c;
    }

    OracleResult out;
    out.signal.n = n;
    out.signal.support = best->support;
    out.signal.values = best->values;
    out.signal.ell = best->values.empty() ? 0 : detail::dynamic_range_bits(best->values);
    out.residual = best->residual;
    // unique: no candidate describing a different signal fits within a factor
    // 2. A superset whose extra values are negligible is the same signal.
    auto effective_support = [](const Candidate& c) {
        double vmax = 0.0;
        for (double v : c.values) vmax = std::max(vmax, std::abs(v));
        std::vector<int> sup;
        for (std::size_t i = 0; i < c.values.size(); ++i)
            if (std::abs(c.values[i]) > 1e-9 * vmax) sup.push_back(c.support[i]);
        return sup;
    };
    auto best_eff = effective_support(*best);
    out.unique = true;
    for (const auto& c : cands) {
        if (c.residual > 2.0 * best->residual) continue;
        if (effective_support(c) != best_eff) {
            out.unique = false;
            break;
        }
    }
    return out;
}

}  // namespace precis
