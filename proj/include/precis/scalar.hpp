#pragma once

#include <cmath>
#include <complex>
#include <limits>

namespace precis {

// Helpers shared by the templated numeric kernels. CT is a std::complex-like
// type: std::complex<double> in standard mode, a 113-bit-significand complex
// (boost cpp_complex_quad) in extended mode.
template <class CT>
struct Scalar {
    using Real = typename CT::value_type;

    static Real pi() {
        using std::acos;
        return acos(Real(-1));
    }

    static Real eps() { return std::numeric_limits<Real>::epsilon(); }

    static CT unit(const Real& angle) {
        using std::cos;
        using std::sin;
        return CT(cos(angle), sin(angle));
    }

    static Real modulus(const CT& z) {
        using std::abs;
        return abs(z);
    }

    static double to_double(const Real& x) { return static_cast<double>(x); }

    static CT from_complex(const std::complex<double>& z) {
        return CT(Real(z.real()), Real(z.imag()));
    }

    static std::complex<double> to_complex(const CT& z) {
        return {to_double(z.real()), to_double(z.imag())};
    }
};

}  // namespace precis
