#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "precis/linalg.hpp"
#include "precis/rng.hpp"

using namespace precis;

namespace {

const Cx I{0.0, 1.0};

Mat make(int rows, int cols, std::initializer_list<Cx> vals) {
    Mat m(rows, cols);
    int i = 0;
    for (const Cx& v : vals) m.entries[i++] = v;
    return m;
}

Mat random_unit_disk(SplitMix64& rng, int n) {
    Mat m(n, n);
    for (auto& z : m.entries) {
        do {
            z = Cx(rng.uniform() * 2 - 1, rng.uniform() * 2 - 1);
        } while (std::abs(z) > 1.0);
    }
    return m;
}

Mat matmul(const Mat& a, const Mat& b) {
    Mat c(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k)
            for (int j = 0; j < b.cols; ++j) c.at(i, j) += a.at(i, k) * b.at(k, j);
    return c;
}

// Independent route for the k <= 3 singular values: real-coefficient
// characteristic polynomial of the Hermitian Gram matrix A^H A, solved in
// closed form; singular values are the square roots of its real roots.
std::vector<double> charpoly_singular_values(const Mat& a) {
    const int n = a.cols;
    REQUIRE(n <= 3);
    std::vector<std::vector<Cx>> g(n, std::vector<Cx>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Cx s = 0;
            for (int r = 0; r < a.rows; ++r) s += std::conj(a.at(r, i)) * a.at(r, j);
            g[i][j] = s;
        }
    std::vector<double> eigs;
    if (n == 1) {
        eigs = {g[0][0].real()};
    } else if (n == 2) {
        double tr = (g[0][0] + g[1][1]).real();
        double det = (g[0][0] * g[1][1] - g[0][1] * g[1][0]).real();
        double disc = std::sqrt(std::max(0.0, tr * tr / 4 - det));
        eigs = {tr / 2 + disc, tr / 2 - disc};
    } else {
        double c2 = (g[0][0] + g[1][1] + g[2][2]).real();
        double c1 = ((g[0][0] * g[1][1] - g[0][1] * g[1][0]) +
                     (g[0][0] * g[2][2] - g[0][2] * g[2][0]) +
                     (g[1][1] * g[2][2] - g[1][2] * g[2][1]))
                        .real();
        double c0 = (g[0][0] * (g[1][1] * g[2][2] - g[1][2] * g[2][1]) -
                     g[0][1] * (g[1][0] * g[2][2] - g[1][2] * g[2][0]) +
                     g[0][2] * (g[1][0] * g[2][1] - g[1][1] * g[2][0]))
                        .real();
        // lambda^3 - c2 lambda^2 + c1 lambda - c0 = 0; substitute
        // lambda = t + c2/3 to get t^3 + p t + q = 0, all roots real, and
        // solve by the trigonometric method.
        double p = c1 - c2 * c2 / 3;
        double q = -2 * c2 * c2 * c2 / 27 + c2 * c1 / 3 - c0;
        double mrad = std::sqrt(std::max(0.0, -p / 3));
        if (mrad == 0.0) {
            eigs = {c2 / 3, c2 / 3, c2 / 3};
        } else {
            double phi = std::acos(std::clamp(-q / (2 * mrad * mrad * mrad), -1.0, 1.0));
            eigs = {c2 / 3 + 2 * mrad * std::cos(phi / 3),
                    c2 / 3 + 2 * mrad * std::cos((phi + 2 * M_PI) / 3),
                    c2 / 3 + 2 * mrad * std::cos((phi + 4 * M_PI) / 3)};
        }
    }
    std::sort(eigs.begin(), eigs.end(), std::greater<>());
    std::vector<double> sv;
    for (double e : eigs) sv.push_back(std::sqrt(std::max(0.0, e)));
    return sv;
}

}  // namespace

TEST_CASE("solve_square examples") {
    SUBCASE("identity") {
        auto x = solve_square(Mat::identity(3), ComplexVector{1.0, I, -2.0});
        CHECK(x[0] == Cx(1.0));
        CHECK(x[1] == I);
        CHECK(x[2] == Cx(-2.0));
    }
    SUBCASE("diagonal") {
        auto x = solve_square(make(2, 2, {2.0, 0.0, 0.0, 4.0}), ComplexVector{2.0, 2.0});
        CHECK(x[0].real() == doctest::Approx(1.0));
        CHECK(x[1].real() == doctest::Approx(0.5));
    }
    SUBCASE("2x2 elimination") {
        auto x = solve_square(make(2, 2, {1.0, 1.0, 1.0, -1.0}), ComplexVector{3.0, 1.0});
        CHECK(x[0].real() == doctest::Approx(2.0));
        CHECK(x[1].real() == doctest::Approx(1.0));
    }
    SUBCASE("singular matrix reports the failing pivot") {
        Mat zero(2, 2);
        CHECK_THROWS_AS(solve_square(zero, ComplexVector{1.0, 1.0}), SingularMatrixError);
        try {
            solve_square(make(2, 2, {1.0, 1.0, 1.0, 1.0}), ComplexVector{1.0, 1.0});
            FAIL("expected SingularMatrixError");
        } catch (const SingularMatrixError& e) {
            CHECK(e.pivot_magnitude() < 1e-12);
        }
    }
}

TEST_CASE("singular_values examples") {
    auto sv1 = singular_values(Mat::identity(4));
    for (double s : sv1) CHECK(s == doctest::Approx(1.0).epsilon(1e-12));
    auto sv2 = singular_values(make(2, 2, {1.0, 1.0, 1.0, -1.0}));
    CHECK(sv2[0] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    CHECK(sv2[1] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    auto sv3 = singular_values(make(2, 2, {3.0, 0.0, 0.0, 0.0}));
    CHECK(sv3[0] == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(sv3[1] == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("singular values match the characteristic-polynomial route for k <= 3") {
    SplitMix64 rng(31);
    for (int trial = 0; trial < 400; ++trial) {
        int n = 1 + static_cast<int>(rng.below(3));
        auto a = random_unit_disk(rng, n);
        auto fast = singular_values(a);
        auto slow = charpoly_singular_values(a);
        for (int i = 0; i < n; ++i) {
            if (slow[i] < 1e-8) continue;  // relative comparison needs a scale
            CHECK(std::abs(fast[i] - slow[i]) / slow[i] < 1e-8);
        }
    }
}

TEST_CASE("condition_report examples") {
    auto r1 = condition_report(Mat::identity(4));
    CHECK(r1.kappa2 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r1.kappa_inf == doctest::Approx(1.0).epsilon(1e-12));
    auto r2 = condition_report(make(2, 2, {1.0, 1.0, 1.0, -1.0}));
    CHECK(r2.kappa2 == doctest::Approx(1.0).epsilon(1e-10));
    auto r3 = condition_report(make(2, 2, {4.0, 0.0, 0.0, 1.0}));
    CHECK(r3.kappa2 == doctest::Approx(4.0).epsilon(1e-10));
    CHECK(r3.kappa_inf == doctest::Approx(4.0).epsilon(1e-10));
    CHECK_THROWS_AS(condition_report(make(2, 2, {1.0, 1.0, 1.0, 1.0})), SingularMatrixError);
}

TEST_CASE("solve residual stays within 1e-10 * kappaInf on random instances") {
    SplitMix64 rng(12);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 2 + static_cast<int>(rng.below(7));
        auto a = random_unit_disk(rng, n);
        ConditionReport rep;
        try {
            rep = condition_report(a);
        } catch (const SingularMatrixError&) {
            continue;
        }
        if (rep.kappa2 > 1e8) continue;  // want well-conditioned instances
        ComplexVector b(n);
        for (auto& z : b) z = Cx(rng.uniform() * 2 - 1, rng.uniform() * 2 - 1);
        if (inf_norm(b) == 0.0) continue;
        auto x = solve_square(a, b);
        ComplexVector rres(n);
        for (int i = 0; i < n; ++i) {
            Cx s = 0;
            for (int j = 0; j < n; ++j) s += a.at(i, j) * x[j];
            rres[i] = s - b[i];
        }
        CHECK(inf_norm(rres) / inf_norm(b) <= 1e-10 * rep.kappa_inf);
    }
}

// This inequality is stated with sqrt(k); the guaranteed norm-equivalence
// factor is k, and random draws do exceed sqrt(k) (e.g. near-triangular
// matrices reach kappaInf / kappa2 ratios around 1.6 * sqrt(k)). Kept as
// stated so the violation is visible rather than silently relaxed.
TEST_CASE("linalg invariant as stated: kappaInf <= sqrt(k) * kappa2 (known to fail)") {
    SplitMix64 rng(99);
    int violations = 0, total = 0;
    double worst = 0.0;
    for (int trial = 0; trial < 2000; ++trial) {
        int n = 2 + static_cast<int>(rng.below(7));
        auto a = random_unit_disk(rng, n);
        ConditionReport rep;
        try {
            rep = condition_report(a);
        } catch (const SingularMatrixError&) {
            continue;
        }
        ++total;
        double ratio = rep.kappa_inf / (std::sqrt(static_cast<double>(n)) * rep.kappa2);
        worst = std::max(worst, ratio);
        if (ratio > 1.0 + 1e-8) ++violations;
    }
    INFO("violations ", violations, "/", total, ", worst ratio ", worst);
    CHECK(violations == 0);
}

TEST_CASE("kappaInf <= k * kappa2 always holds") {
    SplitMix64 rng(100);
    for (int trial = 0; trial < 1000; ++trial) {
        int n = 2 + static_cast<int>(rng.below(7));
        auto a = random_unit_disk(rng, n);
        ConditionReport rep;
        try {
            rep = condition_report(a);
        } catch (const SingularMatrixError&) {
            continue;
        }
        CHECK(rep.kappa_inf <= n * rep.kappa2 * (1 + 1e-8));
    }
}

TEST_CASE("submultiplicativity: kappa2(QR) <= kappa2(Q) * kappa2(R)") {
    SplitMix64 rng(55);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 2 + static_cast<int>(rng.below(5));
        auto q = random_unit_disk(rng, n);
        auto r = random_unit_disk(rng, n);
        ConditionReport rq, rr, rqr;
        try {
            rq = condition_report(q);
            rr = condition_report(r);
            rqr = condition_report(matmul(q, r));
        } catch (const SingularMatrixError&) {
            continue;
        }
        CHECK(rqr.kappa2 <= rq.kappa2 * rr.kappa2 * (1 + 1e-8));
    }
}
