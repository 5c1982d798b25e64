#pragma once

#include <complex>

#include <json.hpp>

#include "precis/bounds.hpp"
#include "precis/decoder.hpp"
#include "precis/oracle.hpp"
#include "precis/sensing.hpp"

// Complex numbers serialize as {"re": float, "im": float}; vectors as arrays.
namespace nlohmann {
template <>
struct adl_serializer<std::complex<double>> {
    static void to_json(json& j, const std::complex<double>& z) {
        j = json{{"re", z.real()}, {"im", z.imag()}};
    }
    static void from_json(const json& j, std::complex<double>& z) {
        z = {j.at("re").get<double>(), j.at("im").get<double>()};
    }
};
}  // namespace nlohmann

namespace precis {

using nlohmann::json;

void to_json(json& j, const SparseSignal& s);
void from_json(const json& j, SparseSignal& s);

void to_json(json& j, const MeasurementVector& y);
void from_json(const json& j, MeasurementVector& y);

void to_json(json& j, const DecodeResult& r);
void to_json(json& j, const OracleResult& r);
void to_json(json& j, const BoundReport& r);

SparseSignal load_signal(const std::filesystem::path& path);
MeasurementVector load_measurement(const std::filesystem::path& path);
void save_json(const json& j, const std::filesystem::path& path);

}  // namespace precis
