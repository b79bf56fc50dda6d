// coefficient.hpp — closed family of real scalar coefficient functions
// (constant, sinusoid, polynomial, tabulated) with exact derivatives and
// antiderivatives. Phase rates and magnitudes everywhere in the library
// are members of this family, so no numerical differentiation is needed.

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace su11 {

enum class CoeffFamily { constant, sinusoid, polynomial, table };

std::string to_string(CoeffFamily f);

class CoefficientFn {
public:
    static CoefficientFn constant(double value);
    // offset + amplitude * sin(angular_freq * t + phase)
    static CoefficientFn sinusoid(double offset, double amplitude, double angular_freq,
                                  double phase);
    // sum_k coeffs[k] * t^k
    static CoefficientFn polynomial(std::vector<double> coeffs);
    // linear interpolation on a strictly increasing grid; domain is the grid span
    static CoefficientFn table(std::vector<double> grid, std::vector<double> values);

    double operator()(double t) const;
    double derivative(double t) const;
    // ∫_0^t f(τ) dτ, exact per family
    double integral(double t) const;

    CoeffFamily family() const { return family_; }
    const std::vector<double>& params() const { return params_; }
    const std::vector<double>& grid() const { return grid_; }
    const std::vector<double>& values() const { return values_; }

    bool is_constant() const { return family_ == CoeffFamily::constant; }
    double constant_value() const;

    // scale*f + offset, staying inside the family
    CoefficientFn affine(double scale, double offset) const;

    // d/dt as a family member; empty for tables, whose piecewise-constant
    // slope has no representative in the family
    std::optional<CoefficientFn> derivative_fn() const;

    // sampled magnitude bound, used for integrator step-size defaults
    double max_abs_on(double lo, double hi, int samples = 512) const;

private:
    CoefficientFn() = default;

    void check_domain(double t, const char* op) const;

    CoeffFamily family_ = CoeffFamily::constant;
    std::vector<double> params_;
    std::vector<double> grid_;
    std::vector<double> values_;
    std::vector<double> cumulative_; // table: ∫ from grid_.front() to grid_[i]
};

} // namespace su11
