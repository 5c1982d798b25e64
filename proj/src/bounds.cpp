#include "precis/bounds.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

#include "precis/errors.hpp"

namespace precis {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_nk(int n, int k, const char* who) {
    if (n < 1 || k < 0 || 2 * k > n)
        throw std::invalid_argument(std::string(who) + ": need n >= 1 and 0 <= k <= n/2");
}

double log_factorial(int k) { return std::lgamma(static_cast<double>(k) + 1.0); }

}  // namespace

double locator_min_magnitude_paper(int n, int k) {
    check_nk(n, k, "locator_min_magnitude_paper");
    return std::exp(log_factorial(k) + k * std::log(2.0 * kPi / n));
}

double locator_min_magnitude_rigorous(int n, int k) {
    check_nk(n, k, "locator_min_magnitude_rigorous");
    return std::exp(k * std::log(4.0 / n) + log_factorial((k + 1) / 2) + log_factorial(k / 2));
}

namespace {

// Smallest nonnegative ell with k^2 * 2^-ell strictly below `log_bound` (given
// as a natural log), done in log2 space.
int bits_against(int k, double log_bound) {
    double l2 = (2.0 * std::log(static_cast<double>(k)) - log_bound) / std::log(2.0);
    if (l2 < 0.0) return 0;
    return static_cast<int>(std::floor(l2)) + 1;
}

}  // namespace

LocatorBitsReport required_locator_bits(int n, int k) {
    check_nk(n, k, "required_locator_bits");
    if (k == 0) return {0, 0};
    LocatorBitsReport rep;
    rep.paper_bits = bits_against(k, log_factorial(k) + k * std::log(2.0 * kPi / n));
    rep.rigorous_bits = bits_against(
        k, k * std::log(4.0 / n) + log_factorial((k + 1) / 2) + log_factorial(k / 2));
    return rep;
}

double toeplitz_condition_bound(int k, int ell) {
    if (k < 1 || ell < 0)
        throw std::invalid_argument("toeplitz_condition_bound: need k >= 1, ell >= 0");
    return k * std::exp2(ell + 1);
}

double perturbation_error_bound(double kappa_inf, double epsilon) {
    if (kappa_inf < 1.0 || epsilon < 0.0)
        throw std::invalid_argument("perturbation_error_bound: need kappaInf >= 1, epsilon >= 0");
    if (epsilon * kappa_inf > 0.5)
        throw std::domain_error(
            "perturbation_error_bound: epsilon * kappaInf exceeds 1/2, hypothesis fails");
    return 4.0 * epsilon * kappa_inf;
}

BitBudget theorem1_measurement_bits(int n, int k, int ell, int c0) {
    if (n < 1 || k < 1 || k > n || ell < 0)
        throw std::invalid_argument("theorem1_measurement_bits: bad parameters");
    int per = ell + static_cast<int>(std::ceil(k * std::log2(static_cast<double>(n) / k))) + c0;
    return {per, 2LL * k * per};
}

BitBudget rip_precision_budget(const RipParams& p) {
    if (p.m < 1 || p.k < 1 || p.ell < 0 || p.c < 1.0)
        throw std::invalid_argument("rip_precision_budget: bad parameters");
    int per = static_cast<int>(std::ceil(
                  p.ell + std::log2(p.c * p.k * std::sqrt(static_cast<double>(p.m))))) +
              1;
    return {per, static_cast<long long>(p.m) * per};
}

int counting_lower_bound(int n, int k, int ell) {
    if (n < 1 || k < 1 || k > n || ell < 0)
        throw std::invalid_argument("counting_lower_bound: need 1 <= k <= n, ell >= 0");
    double log_binom = log_factorial(n) - log_factorial(k) - log_factorial(n - k);
    if (log_binom <= 0.0) return 0;  // binom(n, n) = 1
    double log_states = ell > 500
                            ? std::log(static_cast<double>(k)) + (ell + 1) * std::log(2.0)
                            : std::log(k * std::exp2(ell + 1) + 1.0);
    return static_cast<int>(std::ceil(log_binom / log_states));
}

std::vector<long long> single_measurement_encode(const BinaryMatrix& a, int k) {
    if (k < 1) throw std::invalid_argument("single_measurement_encode: k must be positive");
    const int s = std::bit_width(static_cast<unsigned>(k));  // ceil(log2(k+1))
    if (static_cast<long long>(a.rows + 1) * s >= 62)
        throw std::invalid_argument("single_measurement_encode: weights overflow 64-bit range");
    std::vector<long long> w(a.cols, 0);
    for (int i = 0; i < a.cols; ++i)
        for (int j = 1; j <= a.rows; ++j)
            if (a.at(j - 1, i)) w[i] += 1LL << (j * s);
    return w;
}

std::vector<int> single_measurement_decode(long long dot, const BinaryMatrix& a, int k) {
    if (k < 1) throw std::invalid_argument("single_measurement_decode: k must be positive");
    const int s = std::bit_width(static_cast<unsigned>(k));
    std::vector<long long> digits(a.rows);
    for (int j = 1; j <= a.rows; ++j) digits[j - 1] = (dot >> (j * s)) & ((1LL << s) - 1);

    std::vector<int> match;
    int found = 0;
    // enumerate supports of size 0..k over the columns
    std::vector<int> sup;
    auto try_support = [&](const std::vector<int>& cols) {
        for (int j = 0; j < a.rows; ++j) {
            long long dj = 0;
            for (int c : cols) dj += a.at(j, c);
            if (dj != digits[j]) return;
        }
        ++found;
        if (found == 1) {
            match.assign(a.cols, 0);
            for (int c : cols) match[c] = 1;
        }
    };
    try_support({});
    for (int t = 1; t <= std::min(k, a.cols); ++t) {
        sup.assign(t, 0);
        for (int i = 0; i < t; ++i) sup[i] = i;
        while (true) {
            try_support(sup);
            int i = t - 1;
            while (i >= 0 && sup[i] == a.cols - (t - i)) --i;
            if (i < 0) break;
            ++sup[i];
            for (int j = i + 1; j < t; ++j) sup[j] = sup[j - 1] + 1;
        }
    }
    if (found == 0)
        throw InconsistencyError("single_measurement_decode: no k-sparse binary match");
    if (found > 1)
        throw AmbiguityError("single_measurement_decode: multiple matches, matrix too weak");
    return match;
}

}  // namespace precis
