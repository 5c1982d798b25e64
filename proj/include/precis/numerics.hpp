#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace precis {

using Cx = std::complex<double>;
using ComplexVector = std::vector<Cx>;

// Count of accurate bits in the fixed-point model: a vector approximates
// another to `bits` accurate bits when the relative sup-norm error is
// strictly below 2^-bits.
struct PrecisionSpec {
    int bits = 0;
};

namespace detail {

inline void check_finite(std::span<const Cx> v, const char* who) {
    for (const Cx& z : v) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw std::invalid_argument(std::string(who) + ": non-finite entry");
    }
}

inline void check_bits(const PrecisionSpec& spec, const char* who) {
    if (spec.bits < 0)
        throw std::invalid_argument(std::string(who) + ": negative bit count");
}

}  // namespace detail

// Sup norm with the complex modulus per entry.
inline double inf_norm(std::span<const Cx> v) {
    double m = 0.0;
    for (const Cx& z : v) m = std::max(m, std::abs(z));
    return m;
}

inline double relative_inf_error(std::span<const Cx> approx, std::span<const Cx> exact) {
    if (approx.size() != exact.size())
        throw std::invalid_argument("relative_inf_error: length mismatch");
    detail::check_finite(approx, "relative_inf_error");
    detail::check_finite(exact, "relative_inf_error");
    double denom = inf_norm(exact);
    if (denom == 0.0)
        throw std::domain_error("relative_inf_error: exact vector is zero");
    double num = 0.0;
    for (std::size_t i = 0; i < exact.size(); ++i)
        num = std::max(num, std::abs(approx[i] - exact[i]));
    return num / denom;
}

inline bool meets_precision(std::span<const Cx> approx, std::span<const Cx> exact,
                            PrecisionSpec spec) {
    detail::check_bits(spec, "meets_precision");
    return relative_inf_error(approx, exact) < std::exp2(-spec.bits);
}

// Round real and imaginary parts to the nearest multiple of
// q = 2^-bits * ||v||_inf, ties away from zero. The per-part error is at most
// q/2, so the per-entry modulus error is at most q/sqrt(2) < 2^-bits*||v||_inf
// and the output always meets the requested precision.
inline ComplexVector quantize(std::span<const Cx> v, PrecisionSpec spec) {
    detail::check_bits(spec, "quantize");
    detail::check_finite(v, "quantize");
    double s = inf_norm(v);
    if (s == 0.0)
        throw std::domain_error("quantize: zero vector, step undefined");
    double q = std::exp2(-spec.bits) * s;
    ComplexVector out;
    out.reserve(v.size());
    for (const Cx& z : v)
        out.emplace_back(std::round(z.real() / q) * q, std::round(z.imag() / q) * q);
    return out;
}

// |largest nonzero| / |smallest nonzero|.
inline double dynamic_range(std::span<const double> x) {
    double lo = 0.0, hi = 0.0;
    for (double xi : x) {
        if (!std::isfinite(xi))
            throw std::invalid_argument("dynamic_range: non-finite entry");
        double a = std::abs(xi);
        if (a == 0.0) continue;
        if (lo == 0.0 || a < lo) lo = a;
        if (a > hi) hi = a;
    }
    if (hi == 0.0)
        throw std::domain_error("dynamic_range: all entries are zero");
    return hi / lo;
}

}  // namespace precis
