#include "precis/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <thread>

#include "precis/errors.hpp"

namespace precis {

TrialOutcome run_trial(const TrialConfig& cfg, int trial_index) {
    if (cfg.n < 2 || cfg.k < 1 || 2 * cfg.k > cfg.n || cfg.trials < 1)
        throw std::invalid_argument("run_trial: invalid configuration");
    auto signal = gen_sparse_signal(cfg.n, cfg.k, cfg.ell,
                                    cfg.seed ^ static_cast<std::uint64_t>(trial_index));
    auto a = build_vandermonde(cfg.n, 2 * cfg.k);
    auto y = quantize(measure(a, signal), cfg.bits);

    DecodeOptions opts;
    opts.precision = cfg.precision_mode;
    TrialOutcome out;
    DecodeResult dec;
    try {
        dec = decode_unknown_support(y, cfg.n, cfg.k, cfg.bits, opts);
    } catch (const ReconstructionFailureError&) {
        return out;
    } catch (const std::runtime_error&) {
        return out;
    }
    out.result = dec;
    out.support_ok = dec.signal.support == signal.support;
    if (out.support_ok) {
        ComplexVector got(dec.signal.values.begin(), dec.signal.values.end());
        ComplexVector want(signal.values.begin(), signal.values.end());
        out.precision_ok = meets_precision(got, want, PrecisionSpec{cfg.ell});
    }
    out.success = out.support_ok && out.precision_ok;
    return out;
}

namespace {

CellStats run_cell(const SweepConfig& cfg, int k, int ell, int bits) {
    TrialConfig tc{cfg.n, k, ell, PrecisionSpec{bits}, cfg.trials, cfg.seed, cfg.precision_mode};
    CellStats cs;
    cs.n = cfg.n;
    cs.k = k;
    cs.ell = ell;
    cs.bits = bits;
    cs.trials = cfg.trials;
    cs.theoretical_bits =
        theorem1_measurement_bits(cfg.n, k, ell, cfg.c0_for_theoretical).per_measurement;

    std::vector<TrialOutcome> outcomes(cfg.trials);
    const int jobs = std::max(1, cfg.jobs);
    if (jobs == 1) {
        for (int t = 0; t < cfg.trials; ++t) outcomes[t] = run_trial(tc, t);
    } else {
        std::vector<std::thread> workers;
        workers.reserve(jobs);
        for (int w = 0; w < jobs; ++w)
            workers.emplace_back([&, w] {
                for (int t = w; t < cfg.trials; t += jobs) outcomes[t] = run_trial(tc, t);
            });
        for (auto& th : workers) th.join();
    }
    // order-independent aggregation: sums and maxima only
    double kappa_sum = 0.0;
    int kappa_count = 0;
    for (const auto& o : outcomes) {
        if (o.success) ++cs.successes;
        else if (!o.support_ok) ++cs.support_failures;
        else ++cs.precision_failures;
        if (o.result) {
            kappa_sum += o.result->hankel_kappa2;
            cs.max_hankel_kappa2 = std::max(cs.max_hankel_kappa2, o.result->hankel_kappa2);
            ++kappa_count;
        }
    }
    cs.mean_hankel_kappa2 = kappa_count > 0 ? kappa_sum / kappa_count : 0.0;
    return cs;
}

}  // namespace

SweepResult sweep_min_bits(const SweepConfig& cfg) {
    if (cfg.ks.empty() || cfg.ells.empty() || cfg.bits_max < cfg.bits_min || cfg.trials < 1)
        throw std::invalid_argument("sweep_min_bits: empty grid");
    SweepResult result;
    result.config = cfg;
    std::optional<int> c0;
    for (int k : cfg.ks) {
        for (int ell : cfg.ells) {
            std::vector<int> perfect;  // bit counts with all trials successful
            for (int b = cfg.bits_min; b <= cfg.bits_max; ++b) {
                CellStats cs = run_cell(cfg, k, ell, b);
                if (cs.successes == cs.trials) perfect.push_back(b);
                result.rows.push_back(cs);
            }
            CellSummary summary{cfg.n, k, ell, -1};
            for (std::size_t i = 0; i < perfect.size(); ++i) {
                bool stable = i + cfg.window <= perfect.size();
                for (int w = 1; stable && w < cfg.window; ++w)
                    stable = perfect[i + w] == perfect[i] + w;
                if (stable) {
                    summary.min_sufficient_bits = perfect[i];
                    break;
                }
            }
            result.summaries.push_back(summary);
            if (summary.min_sufficient_bits >= 0) {
                int klog = static_cast<int>(
                    std::ceil(k * std::log2(static_cast<double>(cfg.n) / k)));
                int cell_c0 = summary.min_sufficient_bits - ell - klog;
                c0 = c0 ? std::max(*c0, cell_c0) : cell_c0;
            }
        }
    }
    result.calibrated_c0 = c0;
    return result;
}

namespace detail_report {

namespace {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

}  // namespace

std::string render_csv_rows(const SweepResult& r) {
    std::string out =
        "n,k,ell,bits,trials,successes,support_failures,precision_failures,"
        "mean_hankel_kappa2,max_hankel_kappa2,theoretical_bits\n";
    for (const auto& c : r.rows) {
        out += std::to_string(c.n) + ',' + std::to_string(c.k) + ',' + std::to_string(c.ell) +
               ',' + std::to_string(c.bits) + ',' + std::to_string(c.trials) + ',' +
               std::to_string(c.successes) + ',' + std::to_string(c.support_failures) + ',' +
               std::to_string(c.precision_failures) + ',' + format_double(c.mean_hankel_kappa2) +
               ',' + format_double(c.max_hankel_kappa2) + ',' +
               std::to_string(c.theoretical_bits) + '\n';
    }
    return out;
}

}  // namespace detail_report

void emit_report(const SweepResult& result, ReportFormat format,
                 const std::filesystem::path& path) {
    if (result.rows.empty()) throw std::invalid_argument("emit_report: empty results");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("emit_report: cannot open " + path.string());
    out << render_report(result, format);
    if (!out) throw std::runtime_error("emit_report: write failed for " + path.string());
}

}  // namespace precis
