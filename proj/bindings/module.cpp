#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "precis/bounds.hpp"
#include "precis/harness.hpp"
#include "precis/json_io.hpp"
#include "precis/oracle.hpp"

namespace py = pybind11;
using namespace precis;

namespace {

DecodeOptions make_options(bool extended) {
    DecodeOptions opts;
    opts.precision = extended ? PrecisionMode::Extended : PrecisionMode::Standard;
    return opts;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Vandermonde compressed sensing with complex-field syndrome decoding";

    py::register_exception<SingularMatrixError>(m, "SingularMatrixError", PyExc_ArithmeticError);
    py::register_exception<DegenerateLocatorError>(m, "DegenerateLocatorError",
                                                   PyExc_ArithmeticError);
    py::register_exception<InconsistentValuesError>(m, "InconsistentValuesError",
                                                    PyExc_ArithmeticError);
    py::register_exception<ReconstructionFailureError>(m, "ReconstructionFailureError",
                                                       PyExc_RuntimeError);

    py::class_<PrecisionSpec>(m, "PrecisionSpec")
        .def(py::init<int>(), py::arg("bits"))
        .def_readwrite("bits", &PrecisionSpec::bits)
        .def("__repr__", [](const PrecisionSpec& p) {
            return "PrecisionSpec(bits=" + std::to_string(p.bits) + ")";
        });

    py::class_<SparseSignal>(m, "SparseSignal")
        .def(py::init([](int n, std::vector<int> support, std::vector<double> values, int ell) {
                 return SparseSignal{n, std::move(support), std::move(values), ell};
             }),
             py::arg("n"), py::arg("support"), py::arg("values"), py::arg("ell") = 0)
        .def_readonly("n", &SparseSignal::n)
        .def_readonly("support", &SparseSignal::support)
        .def_readonly("values", &SparseSignal::values)
        .def_readonly("ell", &SparseSignal::ell);

    py::class_<MeasurementVector>(m, "MeasurementVector")
        .def(py::init([](ComplexVector syndromes, std::optional<int> bits) {
                 MeasurementVector y{std::move(syndromes), std::nullopt};
                 if (bits) y.bits = PrecisionSpec{*bits};
                 return y;
             }),
             py::arg("syndromes"), py::arg("bits") = std::nullopt)
        .def_readonly("syndromes", &MeasurementVector::syndromes)
        .def_property_readonly("bits", [](const MeasurementVector& y) {
            return y.bits ? std::optional<int>(y.bits->bits) : std::nullopt;
        });

    py::class_<VandermondeMatrix>(m, "VandermondeMatrix")
        .def_readonly("n", &VandermondeMatrix::n)
        .def_readonly("m", &VandermondeMatrix::m)
        .def("root", &VandermondeMatrix::root, py::arg("j"))
        .def("entry", &VandermondeMatrix::entry, py::arg("r"), py::arg("j"))
        .def("rows", [](const VandermondeMatrix& a) {
            std::vector<ComplexVector> rows(a.m, ComplexVector(a.n));
            for (int r = 0; r < a.m; ++r)
                for (int j = 1; j <= a.n; ++j) rows[r][j - 1] = a.entry(r, j);
            return rows;
        });

    py::class_<LocatorPolynomial>(m, "LocatorPolynomial")
        .def_readonly("coeffs", &LocatorPolynomial::coeffs);

    py::class_<DecodeResult>(m, "DecodeResult")
        .def_readonly("signal", &DecodeResult::signal)
        .def_readonly("locator", &DecodeResult::locator)
        .def_readonly("hankel_kappa2", &DecodeResult::hankel_kappa2)
        .def_readonly("hankel_kappa_inf", &DecodeResult::hankel_kappa_inf)
        .def_readonly("value_solve_kappa2", &DecodeResult::value_solve_kappa2)
        .def_readonly("residual", &DecodeResult::residual)
        .def_readonly("locator_separation", &DecodeResult::locator_separation);

    py::class_<OracleResult>(m, "OracleResult")
        .def_readonly("signal", &OracleResult::signal)
        .def_readonly("residual", &OracleResult::residual)
        .def_readonly("unique", &OracleResult::unique);

    // core numerics
    m.def("relative_inf_error",
          [](const ComplexVector& a, const ComplexVector& b) { return relative_inf_error(a, b); },
          py::arg("approx"), py::arg("exact"));
    m.def("meets_precision",
          [](const ComplexVector& a, const ComplexVector& b, int bits) {
              return meets_precision(a, b, PrecisionSpec{bits});
          },
          py::arg("approx"), py::arg("exact"), py::arg("bits"));
    m.def("quantize",
          [](const ComplexVector& v, int bits) {
              return quantize(std::span<const Cx>(v), PrecisionSpec{bits});
          },
          py::arg("v"), py::arg("bits"));
    m.def("dynamic_range",
          [](const std::vector<double>& x) { return dynamic_range(x); }, py::arg("x"));

    // sensing
    m.def("build_vandermonde", &build_vandermonde, py::arg("n"), py::arg("m"));
    m.def("measure", &measure, py::arg("matrix"), py::arg("signal"));
    m.def("gen_sparse_signal", &gen_sparse_signal, py::arg("n"), py::arg("k"), py::arg("ell"),
          py::arg("seed"));
    m.def("quantize_measurement",
          [](const MeasurementVector& y, int bits) { return quantize(y, PrecisionSpec{bits}); },
          py::arg("measurement"), py::arg("bits"));

    // decoding
    m.def("decode",
          [](const MeasurementVector& y, int n, int k, bool extended) {
              return decode(y, n, k, make_options(extended));
          },
          py::arg("measurement"), py::arg("n"), py::arg("k"), py::arg("extended") = false);
    m.def("decode_unknown_support",
          [](const MeasurementVector& y, int n, int k, int bits, bool extended) {
              return decode_unknown_support(y, n, k, PrecisionSpec{bits},
                                            make_options(extended));
          },
          py::arg("measurement"), py::arg("n"), py::arg("k"), py::arg("bits"),
          py::arg("extended") = false);
    m.def("l0_decode", &l0_decode, py::arg("matrix"), py::arg("measurement"), py::arg("k"));

    // bound calculators
    m.def("locator_min_magnitude_paper", &locator_min_magnitude_paper, py::arg("n"), py::arg("k"));
    m.def("locator_min_magnitude_rigorous", &locator_min_magnitude_rigorous, py::arg("n"),
          py::arg("k"));
    m.def("required_locator_bits",
          [](int n, int k) {
              auto b = required_locator_bits(n, k);
              return py::make_tuple(b.rigorous_bits, b.paper_bits);
          },
          py::arg("n"), py::arg("k"), "returns (rigorous_bits, paper_bits)");
    m.def("toeplitz_condition_bound", &toeplitz_condition_bound, py::arg("k"), py::arg("ell"));
    m.def("perturbation_error_bound", &perturbation_error_bound, py::arg("kappa_inf"),
          py::arg("epsilon"));
    m.def("theorem1_measurement_bits",
          [](int n, int k, int ell, int c0) {
              auto b = theorem1_measurement_bits(n, k, ell, c0);
              return py::make_tuple(b.per_measurement, b.total);
          },
          py::arg("n"), py::arg("k"), py::arg("ell"), py::arg("c0") = kDefaultCalibratedC0,
          "returns (per_measurement_bits, total_bits)");
    m.def("rip_precision_budget",
          [](int mcount, int k, int ell, double c) {
              auto b = rip_precision_budget(RipParams{mcount, k, ell, c});
              return py::make_tuple(b.per_measurement, b.total);
          },
          py::arg("m"), py::arg("k"), py::arg("ell"), py::arg("C") = 10.0,
          "returns (per_measurement_bits, total_bits)");
    m.def("counting_lower_bound", &counting_lower_bound, py::arg("n"), py::arg("k"),
          py::arg("ell"));
    m.def("single_measurement_encode",
          [](const std::vector<std::vector<int>>& rows, int k) {
              if (rows.empty()) throw std::invalid_argument("empty matrix");
              BinaryMatrix a(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
              for (int r = 0; r < a.rows; ++r)
                  for (int c = 0; c < a.cols; ++c) a.at(r, c) = rows[r][c] ? 1 : 0;
              return single_measurement_encode(a, k);
          },
          py::arg("matrix"), py::arg("k"));
    m.def("single_measurement_decode",
          [](long long dot, const std::vector<std::vector<int>>& rows, int k) {
              if (rows.empty()) throw std::invalid_argument("empty matrix");
              BinaryMatrix a(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
              for (int r = 0; r < a.rows; ++r)
                  for (int c = 0; c < a.cols; ++c) a.at(r, c) = rows[r][c] ? 1 : 0;
              return single_measurement_decode(dot, a, k);
          },
          py::arg("dot"), py::arg("matrix"), py::arg("k"));

    // harness
    m.def("run_trial",
          [](int n, int k, int ell, int bits, std::uint64_t seed, int trial_index,
             bool extended) {
              TrialConfig cfg{n,    k,    ell, PrecisionSpec{bits}, 1, seed,
                              extended ? PrecisionMode::Extended : PrecisionMode::Standard};
              auto out = run_trial(cfg, trial_index);
              return py::make_tuple(out.success, out.support_ok, out.precision_ok);
          },
          py::arg("n"), py::arg("k"), py::arg("ell"), py::arg("bits"), py::arg("seed"),
          py::arg("trial_index") = 0, py::arg("extended") = false,
          "returns (success, support_ok, precision_ok)");

    m.attr("DEFAULT_CALIBRATED_C0") = kDefaultCalibratedC0;
    m.attr("__version__") = "0.1.0";
}
