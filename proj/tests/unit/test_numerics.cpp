#include <doctest.h>

#include <cmath>
#include <complex>

#include "precis/numerics.hpp"
#include "precis/rng.hpp"

using namespace precis;

namespace {

const Cx I{0.0, 1.0};

ComplexVector random_vector(SplitMix64& rng, int len, double scale = 1.0) {
    ComplexVector v(len);
    for (auto& z : v)
        z = Cx((rng.uniform() * 2 - 1) * scale, (rng.uniform() * 2 - 1) * scale);
    return v;
}

}  // namespace

TEST_CASE("relative_inf_error examples") {
    CHECK(relative_inf_error(ComplexVector{1.0, -2.0}, ComplexVector{1.0, -2.0}) == 0.0);
    CHECK(relative_inf_error(ComplexVector{1.0, 0.0}, ComplexVector{1.0, 0.25}) ==
          doctest::Approx(0.25).epsilon(1e-15));
    CHECK(relative_inf_error(ComplexVector{1.0 + I, 0.0}, ComplexVector{1.0, 0.0}) ==
          doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("relative_inf_error error paths") {
    CHECK_THROWS_AS(relative_inf_error(ComplexVector{1.0}, ComplexVector{1.0, 2.0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(relative_inf_error(ComplexVector{1.0}, ComplexVector{0.0}),
                    std::domain_error);
}

TEST_CASE("meets_precision strict inequality at the threshold") {
    ComplexVector exact{1.0, 0.25};
    ComplexVector off{1.0, 0.0};  // ratio exactly 0.25
    CHECK(meets_precision(exact, exact, {30}));
    CHECK_FALSE(meets_precision(off, exact, {2}));  // 0.25 < 0.25 is false
    ComplexVector close{1.0, 0.05};                 // ratio 0.2
    CHECK(meets_precision(close, exact, {2}));
    CHECK_THROWS_AS(meets_precision(off, exact, {-1}), std::invalid_argument);
}

TEST_CASE("quantize examples") {
    SUBCASE("grid-aligned input is a fixed point") {
        ComplexVector v{1.0, -0.5};
        auto q = quantize(v, {2});
        CHECK(q[0] == Cx(1.0, 0.0));
        CHECK(q[1] == Cx(-0.5, 0.0));
    }
    SUBCASE("rounding to step 0.125") {
        ComplexVector v{1.0, 0.37};
        auto q = quantize(v, {3});
        CHECK(q[0].real() == doctest::Approx(1.0));
        CHECK(q[1].real() == doctest::Approx(0.375));
        CHECK(relative_inf_error(q, v) == doctest::Approx(0.005).epsilon(1e-12));
    }
    SUBCASE("parts round independently on the modulus-scaled grid") {
        // Single entry 1 + 0.37i: the step is 2^-3 * |1 + 0.37i|, so the real
        // part lands on 8 steps and the imaginary part on 3.
        ComplexVector v{Cx(1.0, 0.37)};
        double step = std::exp2(-3) * std::abs(Cx(1.0, 0.37));
        auto q = quantize(v, {3});
        CHECK(q[0].real() == doctest::Approx(8 * step).epsilon(1e-15));
        CHECK(q[0].imag() == doctest::Approx(3 * step).epsilon(1e-15));
        CHECK(meets_precision(q, v, {3}));
    }
    SUBCASE("zero vector is a domain error") {
        CHECK_THROWS_AS(quantize(ComplexVector{0.0, 0.0}, {4}), std::domain_error);
    }
}

TEST_CASE("quantize meets the declared precision for all inputs") {
    SplitMix64 rng(2024);
    for (int trial = 0; trial < 3000; ++trial) {
        int len = 1 + static_cast<int>(rng.below(6));
        int bits = static_cast<int>(rng.below(13));
        double scale = std::exp2(static_cast<int>(rng.below(12)) - 6);
        auto v = random_vector(rng, len, scale);
        if (inf_norm(v) == 0.0) continue;
        auto q = quantize(v, {bits});
        REQUIRE(meets_precision(q, v, {bits}));
    }
}

TEST_CASE("quantize idempotence") {
    SplitMix64 rng(77);
    int norm_kept = 0, norm_changed = 0;
    for (int trial = 0; trial < 6000; ++trial) {
        int len = 1 + static_cast<int>(rng.below(6));
        int bits = 1 + static_cast<int>(rng.below(12));
        auto v = random_vector(rng, len);
        if (inf_norm(v) == 0.0) continue;
        auto q1 = quantize(v, {bits});
        if (inf_norm(q1) == 0.0) continue;
        auto q2 = quantize(q1, {bits});
        if (inf_norm(q1) == inf_norm(v)) {
            // same step: re-quantization must be exact
            ++norm_kept;
            for (std::size_t i = 0; i < q1.size(); ++i) REQUIRE(q1[i] == q2[i]);
        } else {
            // the step changed; the re-quantization error itself stays within
            // the declared precision relative to the original vector
            ++norm_changed;
            double move = 0.0;
            for (std::size_t i = 0; i < q1.size(); ++i)
                move = std::max(move, std::abs(q2[i] - q1[i]));
            REQUIRE(move / inf_norm(v) < std::exp2(-bits));
        }
    }
    CHECK(norm_kept > 100);
    CHECK(norm_changed > 100);
}

TEST_CASE("relative_inf_error is scale invariant") {
    SplitMix64 rng(5);
    for (int trial = 0; trial < 500; ++trial) {
        auto a = random_vector(rng, 4);
        auto b = random_vector(rng, 4);
        if (inf_norm(b) == 0.0) continue;
        double c = std::exp2(static_cast<int>(rng.below(20)) - 10) * (rng.coin() ? 1 : -1);
        ComplexVector as(a), bs(b);
        for (auto& z : as) z *= c;
        for (auto& z : bs) z *= c;
        CHECK(relative_inf_error(as, bs) ==
              doctest::Approx(relative_inf_error(a, b)).epsilon(1e-12));
    }
}

TEST_CASE("dynamic_range examples and invariances") {
    CHECK(dynamic_range(std::vector<double>{0, 5, 0}) == 1.0);
    CHECK(dynamic_range(std::vector<double>{0, 3, 0, -1.5}) == doctest::Approx(2.0));
    CHECK(dynamic_range(std::vector<double>{256.0, -1.0}) == doctest::Approx(256.0));
    CHECK_THROWS_AS(dynamic_range(std::vector<double>{0.0, 0.0}), std::domain_error);

    SplitMix64 rng(9);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<double> x(5);
        for (auto& xi : x) xi = rng.uniform() * 4 - 2;
        x[rng.below(5)] = 1.0;  // ensure a nonzero
        double base = dynamic_range(x);
        double c = std::exp2(static_cast<int>(rng.below(16)) - 8);
        std::vector<double> scaled(x), shuffled(x);
        for (auto& xi : scaled) xi *= c;
        std::swap(shuffled[0], shuffled[4]);
        std::swap(shuffled[1], shuffled[3]);
        CHECK(dynamic_range(scaled) == doctest::Approx(base).epsilon(1e-12));
        CHECK(dynamic_range(shuffled) == doctest::Approx(base).epsilon(1e-12));
    }
}
