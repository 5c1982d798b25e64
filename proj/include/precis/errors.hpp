#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace precis {

// Matrix is singular to working precision; carries the failing pivot magnitude.
class SingularMatrixError : public std::runtime_error {
public:
    SingularMatrixError(double pivot, const std::string& what)
        : std::runtime_error(what), pivot_(pivot) {}
    double pivot_magnitude() const { return pivot_; }

private:
    double pivot_;
};

// Locator solve produced |h0| below threshold: the support is smaller than assumed.
class DegenerateLocatorError : public std::runtime_error {
public:
    explicit DegenerateLocatorError(const std::string& what) : std::runtime_error(what) {}
};

// Recovered values carry an imaginary residue too large for a real signal.
class InconsistentValuesError : public std::runtime_error {
public:
    InconsistentValuesError(double residue, const std::string& what)
        : std::runtime_error(what), residue_(residue) {}
    double imag_residue() const { return residue_; }

private:
    double residue_;
};

// No support size produced a quantization-consistent reconstruction.
// Residuals are listed per attempted support size t (negative = attempt aborted).
class ReconstructionFailureError : public std::runtime_error {
public:
    ReconstructionFailureError(std::vector<std::pair<int, double>> residuals,
                               const std::string& what)
        : std::runtime_error(what), residuals_(std::move(residuals)) {}
    const std::vector<std::pair<int, double>>& per_t_residuals() const { return residuals_; }

private:
    std::vector<std::pair<int, double>> residuals_;
};

// Single-measurement decode: no k-sparse binary vector matches the digits.
class InconsistencyError : public std::runtime_error {
public:
    explicit InconsistencyError(const std::string& what) : std::runtime_error(what) {}
};

// Single-measurement decode: more than one match (precondition violated).
class AmbiguityError : public std::runtime_error {
public:
    explicit AmbiguityError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace precis
