#include "precis/decoder.hpp"

#include <boost/multiprecision/cpp_complex.hpp>

namespace precis {

namespace {

using QuadComplex = boost::multiprecision::cpp_complex_quad;

std::vector<QuadComplex> widen(std::span<const Cx> y) {
    std::vector<QuadComplex> out;
    out.reserve(y.size());
    for (const Cx& z : y) out.push_back(Scalar<QuadComplex>::from_complex(z));
    return out;
}

}  // namespace

DecodeResult decode(const MeasurementVector& y, int n, int k, const DecodeOptions& opts) {
    std::span<const Cx> s(y.syndromes);
    if (opts.precision == PrecisionMode::Standard) return detail::decode_t<Cx>(s, n, k, opts);
    auto wide = widen(s);
    return detail::decode_t<QuadComplex>(std::span<const QuadComplex>(wide), n, k, opts);
}

DecodeResult decode_unknown_support(const MeasurementVector& y, int n, int k, PrecisionSpec bits,
                                    const DecodeOptions& opts) {
    std::span<const Cx> s(y.syndromes);
    if (opts.precision == PrecisionMode::Standard)
        return detail::decode_unknown_support_t<Cx>(s, n, k, bits, opts);
    auto wide = widen(s);
    return detail::decode_unknown_support_t<QuadComplex>(std::span<const QuadComplex>(wide), n, k,
                                                         bits, opts);
}

}  // namespace precis
