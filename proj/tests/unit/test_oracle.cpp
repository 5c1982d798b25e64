#include <doctest.h>

#include <complex>

#include "precis/bounds.hpp"
#include "precis/oracle.hpp"
#include "precis/rng.hpp"

using namespace precis;

namespace {

const Cx I{0.0, 1.0};

}  // namespace

TEST_CASE("l0_decode examples") {
    auto a = build_vandermonde(4, 2);
    SUBCASE("exact 1-sparse instance") {
        auto y = measure(a, SparseSignal{4, {3}, {2.0}, 0});
        auto res = l0_decode(a, y, 1);
        CHECK(res.signal.support == std::vector<int>{3});
        CHECK(res.signal.values[0] == doctest::Approx(2.0));
        CHECK(res.residual <= 1e-10);
        CHECK(res.unique);
    }
    SUBCASE("zero measurement gives the empty signal") {
        MeasurementVector y{{0.0, 0.0}, std::nullopt};
        auto res = l0_decode(a, y, 1);
        CHECK(res.signal.support.empty());
        CHECK(res.residual == 0.0);
    }
    SUBCASE("instance size guard") {
        auto big = build_vandermonde(32, 4);
        MeasurementVector y{{1.0, 1.0, 1.0, 1.0}, std::nullopt};
        CHECK_THROWS_AS(l0_decode(big, y, 2), std::invalid_argument);
        CHECK_THROWS_AS(l0_decode(a, y, 4), std::invalid_argument);
    }
}

TEST_CASE("exact syndromes are uniquely decoded over exhaustive tiny supports") {
    for (int n : {6, 9, 12}) {
        const int k = 2;
        auto a = build_vandermonde(n, 2 * k);
        const double vals[] = {-2.0, -1.0, 1.0, 2.0};
        for (int e1 = 1; e1 <= n; ++e1) {
            for (double v1 : vals) {
                auto y = measure(a, SparseSignal{n, {e1}, {v1}, 1});
                auto res = l0_decode(a, y, k);
                REQUIRE(res.signal.support == std::vector<int>{e1});
                REQUIRE(std::abs(res.signal.values[0] - v1) <= 1e-10);
                REQUIRE(res.residual <= 1e-10);
                REQUIRE(res.unique);
            }
        }
        for (int e1 = 1; e1 <= n; ++e1)
            for (int e2 = e1 + 1; e2 <= n; ++e2)
                for (double v1 : vals)
                    for (double v2 : vals) {
                        auto y = measure(a, SparseSignal{n, {e1, e2}, {v1, v2}, 1});
                        auto res = l0_decode(a, y, k);
                        REQUIRE(res.signal.support == std::vector<int>{e1, e2});
                        REQUIRE(res.residual <= 1e-10);
                        REQUIRE(res.unique);
                    }
    }
}

TEST_CASE("oracle and decoder agree on random quantized instances") {
    SplitMix64 rng(314);
    const int n = 12, k = 2;
    auto a = build_vandermonde(n, 2 * k);
    int budget = theorem1_measurement_bits(n, k, 1, kDefaultCalibratedC0).per_measurement;
    for (int trial = 0; trial < 120; ++trial) {
        int size = 1 + static_cast<int>(rng.below(k));
        auto x = gen_sparse_signal(n, size, 1, rng.next());
        auto y = quantize(measure(a, x), {budget});
        auto oracle = l0_decode(a, y, k);
        auto dec = decode_unknown_support(y, n, k, {budget});
        REQUIRE(oracle.signal.support == x.support);
        REQUIRE(dec.signal.support == x.support);
    }
}
