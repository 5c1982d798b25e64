#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace precis {

// One evaluated closed-form budget, with the inputs that produced it.
struct BoundReport {
    std::string name;
    std::map<std::string, double> inputs;
    double value = 0.0;
    std::optional<int> bits;
};

struct RipParams {
    int m = 0;        // measurement count
    int k = 0;        // sparsity
    int ell = 0;      // dynamic-range bits
    double c = 10.0;  // stability constant of the l1 recovery guarantee
};

struct BitBudget {
    int per_measurement = 0;
    long long total = 0;
};

struct LocatorBitsReport {
    int rigorous_bits = 0;  // from the provable chord-product bound
    int paper_bits = 0;     // from the k!(2pi/n)^k bound as printed
};

// Additive constant of the sufficient-bits formula ell + ceil(k*log2(n/k)) + C0,
// as calibrated by the sweep harness (max observed 13 over the n=64 grid and
// 15 over the exhaustive tiny-scale grids, plus one bit of margin).
inline constexpr int kDefaultCalibratedC0 = 16;

// k! * (2pi/n)^k, the locator magnitude bound as printed. It overestimates
// chord lengths and can exceed the true minimum for small n (see the rigorous
// variant); evaluated in log space so large k cannot overflow.
double locator_min_magnitude_paper(int n, int k);

// (4/n)^k * ceil(k/2)! * floor(k/2)!, a provable lower bound on |L(w)| over
// nth roots of unity outside the zero set: each |1 - w*a_e| is a chord
// 2*sin(pi*d/n) >= 4d/n for folded distance d <= n/2, and at most two support
// elements share a folded distance.
double locator_min_magnitude_rigorous(int n, int k);

// Smallest ell_h with k^2 * 2^-ell_h strictly below the magnitude bound,
// computed for both bounds; threshold-type uses should take the rigorous one.
LocatorBitsReport required_locator_bits(int n, int k);

// k * 2^(ell+1): kappa(D)=1 times kappa(V_k)^2 <= 2k times kappa(X_k) <= 2^ell.
double toeplitz_condition_bound(int k, int ell);

// 4 * epsilon * kappaInf, valid only under epsilon * kappaInf <= 1/2.
double perturbation_error_bound(double kappa_inf, double epsilon);

// Per-measurement bits ell + ceil(k*log2(n/k)) + c0 and the 2k-measurement total.
BitBudget theorem1_measurement_bits(int n, int k, int ell, int c0);

// Per-measurement bits ceil(ell + log2(C*k*sqrt(m))) + 1 and the m-measurement
// total, from the quantization budget 2^-ell / (C k sqrt(m)).
BitBudget rip_precision_budget(const RipParams& p);

// ceil(log binom(n,k) / log(k*2^(ell+1) + 1)): the counting argument on
// integer matrices with entries in [-2^ell, 2^ell].
int counting_lower_bound(int n, int k, int ell);

// Row-major m x n binary matrix for the single-measurement construction.
struct BinaryMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::uint8_t> entries;

    BinaryMatrix() = default;
    BinaryMatrix(int r, int c) : rows(r), cols(c), entries(static_cast<std::size_t>(r) * c, 0) {}
    std::uint8_t& at(int r, int c) { return entries[static_cast<std::size_t>(r) * cols + c]; }
    std::uint8_t at(int r, int c) const { return entries[static_cast<std::size_t>(r) * cols + c]; }
};

// a_i = sum_j A(j,i) * 2^(j*s) with shift s = ceil(log2(k+1)), rows encoded
// with 1-based j so each row's contribution cannot carry into the next.
std::vector<long long> single_measurement_encode(const BinaryMatrix& a, int k);

// Extract the per-row digits of dot = a.x and recover the k-sparse binary x
// by exhaustive matching of A*x against the digit vector.
std::vector<int> single_measurement_decode(long long dot, const BinaryMatrix& a, int k);

}  // namespace precis
