#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "precis/bounds.hpp"
#include "precis/decoder.hpp"
#include "precis/sensing.hpp"

namespace precis {

struct TrialConfig {
    int n = 0;
    int k = 0;
    int ell = 0;
    PrecisionSpec bits;
    int trials = 1;
    std::uint64_t seed = 0;
    PrecisionMode precision_mode = PrecisionMode::Standard;
};

struct TrialOutcome {
    bool success = false;
    bool support_ok = false;
    bool precision_ok = false;
    std::optional<DecodeResult> result;  // absent when decoding failed outright
};

// One seeded trial: generate, measure, quantize at cfg.bits, decode through
// the unknown-support path. Success requires the exact support and ell-bit
// value precision. Decode failures are unsuccessful trials, not errors.
TrialOutcome run_trial(const TrialConfig& cfg, int trial_index);

struct CellStats {
    int n = 0, k = 0, ell = 0, bits = 0;
    int trials = 0;
    int successes = 0;
    int support_failures = 0;
    int precision_failures = 0;
    double mean_hankel_kappa2 = 0.0;
    double max_hankel_kappa2 = 0.0;
    int theoretical_bits = 0;
};

struct CellSummary {
    int n = 0, k = 0, ell = 0;
    int min_sufficient_bits = -1;  // -1: no stable window found in range
};

struct SweepConfig {
    int n = 0;
    std::vector<int> ks;
    std::vector<int> ells;
    int bits_min = 0;
    int bits_max = 0;
    int trials = 1;
    std::uint64_t seed = 0;
    PrecisionMode precision_mode = PrecisionMode::Standard;
    int window = 3;  // consecutive all-success bit counts required
    int c0_for_theoretical = kDefaultCalibratedC0;
    int jobs = 1;
};

struct SweepResult {
    SweepConfig config;
    std::vector<CellStats> rows;          // one row per (cell, bits)
    std::vector<CellSummary> summaries;   // min sufficient bits per cell
    std::optional<int> calibrated_c0;     // max over cells of minb - ell - ceil(k log2(n/k))
};

// Runs the bit grid; min_sufficient_bits is the smallest b whose `window`
// consecutive bit counts all succeed on every trial.
SweepResult sweep_min_bits(const SweepConfig& cfg);

enum class ReportFormat { Csv, Json };

// CSV columns: n,k,ell,bits,trials,successes,support_failures,
// precision_failures,mean_hankel_kappa2,max_hankel_kappa2,theoretical_bits.
// JSON mirrors the same fields plus the run header (rng, seed, window, c0).
void emit_report(const SweepResult& result, ReportFormat format,
                 const std::filesystem::path& path);

std::string render_report(const SweepResult& result, ReportFormat format);

}  // namespace precis
