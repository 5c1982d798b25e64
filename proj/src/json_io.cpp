#include "precis/json_io.hpp"

#include <fstream>
#include <limits>

#include "precis/harness.hpp"

namespace precis {

namespace {

// JSON has no infinity; condition diagnostics are capped instead of dropped.
double clamp_for_json(double v) {
    return std::isfinite(v) ? v : 1e300;
}

}  // namespace

void to_json(json& j, const SparseSignal& s) {
    j = json{{"n", s.n}, {"support", s.support}, {"values", s.values}, {"ell", s.ell}};
}

void from_json(const json& j, SparseSignal& s) {
    j.at("n").get_to(s.n);
    j.at("support").get_to(s.support);
    j.at("values").get_to(s.values);
    s.ell = j.value("ell", 0);
    if (s.support.size() != s.values.size())
        throw std::invalid_argument("signal json: support/values length mismatch");
}

void to_json(json& j, const MeasurementVector& y) {
    j = json{{"syndromes", y.syndromes}};
    if (y.bits) j["bits"] = y.bits->bits;
}

void from_json(const json& j, MeasurementVector& y) {
    j.at("syndromes").get_to(y.syndromes);
    y.bits.reset();
    if (j.contains("bits") && !j.at("bits").is_null())
        y.bits = PrecisionSpec{j.at("bits").get<int>()};
}

void to_json(json& j, const DecodeResult& r) {
    j = json{{"signal", r.signal},
             {"locator", r.locator.coeffs},
             {"hankel_kappa2", clamp_for_json(r.hankel_kappa2)},
             {"hankel_kappa_inf", clamp_for_json(r.hankel_kappa_inf)},
             {"value_solve_kappa2", clamp_for_json(r.value_solve_kappa2)},
             {"residual", r.residual},
             {"locator_separation", clamp_for_json(r.locator_separation)}};
}

void to_json(json& j, const OracleResult& r) {
    j = json{{"signal", r.signal}, {"residual", r.residual}, {"unique", r.unique}};
}

void to_json(json& j, const BoundReport& r) {
    j = json{{"name", r.name}, {"inputs", r.inputs}, {"value", r.value}};
    if (r.bits) j["bits"] = *r.bits;
}

SparseSignal load_signal(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open signal file " + path.string());
    return json::parse(in).get<SparseSignal>();
}

MeasurementVector load_measurement(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open measurement file " + path.string());
    return json::parse(in).get<MeasurementVector>();
}

void save_json(const json& j, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << j.dump(2) << '\n';
}

namespace {

json cell_to_json(const CellStats& c) {
    return json{{"n", c.n},
                {"k", c.k},
                {"ell", c.ell},
                {"bits", c.bits},
                {"trials", c.trials},
                {"successes", c.successes},
                {"support_failures", c.support_failures},
                {"precision_failures", c.precision_failures},
                {"mean_hankel_kappa2", c.mean_hankel_kappa2},
                {"max_hankel_kappa2", c.max_hankel_kappa2},
                {"theoretical_bits", c.theoretical_bits}};
}

std::string render_json(const SweepResult& r) {
    json rows = json::array();
    for (const auto& c : r.rows) rows.push_back(cell_to_json(c));
    json summaries = json::array();
    for (const auto& s : r.summaries)
        summaries.push_back(json{{"n", s.n},
                                 {"k", s.k},
                                 {"ell", s.ell},
                                 {"min_sufficient_bits", s.min_sufficient_bits}});
    json j{{"header",
            {{"rng", "splitmix64"},
             {"seed", r.config.seed},
             {"trials", r.config.trials},
             {"window", r.config.window},
             {"c0_for_theoretical", r.config.c0_for_theoretical},
             {"precision_mode",
              r.config.precision_mode == PrecisionMode::Extended ? "extended" : "standard"}}},
           {"rows", rows},
           {"summaries", summaries}};
    if (r.calibrated_c0) j["calibrated_c0"] = *r.calibrated_c0;
    return j.dump(2) + "\n";
}

}  // namespace

}  // namespace precis

// render_report lives here so the CSV path stays free of the JSON dependency.
namespace precis {

namespace detail_report {
std::string render_csv_rows(const SweepResult& r);
}

std::string render_report(const SweepResult& r, ReportFormat format) {
    if (format == ReportFormat::Json) return render_json(r);
    return detail_report::render_csv_rows(r);
}

}  // namespace precis
