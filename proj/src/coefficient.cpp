#include "su11/coefficient.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace su11 {

std::string to_string(CoeffFamily f) {
    switch (f) {
        case CoeffFamily::constant: return "constant";
        case CoeffFamily::sinusoid: return "sinusoid";
        case CoeffFamily::polynomial: return "polynomial";
        case CoeffFamily::table: return "table";
    }
    return "?";
}

CoefficientFn CoefficientFn::constant(double value) {
    CoefficientFn f;
    f.family_ = CoeffFamily::constant;
    f.params_ = {value};
    return f;
}

CoefficientFn CoefficientFn::sinusoid(double offset, double amplitude, double angular_freq,
                                      double phase) {
    CoefficientFn f;
    f.family_ = CoeffFamily::sinusoid;
    f.params_ = {offset, amplitude, angular_freq, phase};
    return f;
}

CoefficientFn CoefficientFn::polynomial(std::vector<double> coeffs) {
    if (coeffs.empty()) coeffs.push_back(0.0);
    CoefficientFn f;
    f.family_ = CoeffFamily::polynomial;
    f.params_ = std::move(coeffs);
    return f;
}

CoefficientFn CoefficientFn::table(std::vector<double> grid, std::vector<double> values) {
    if (grid.size() < 2)
        throw std::invalid_argument("coefficient table: needs at least two samples");
    if (grid.size() != values.size())
        throw std::invalid_argument("coefficient table: grid and value sizes differ");
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (!(grid[i] > grid[i - 1]))
            throw std::invalid_argument("coefficient table: grid must be strictly increasing");
    CoefficientFn f;
    f.family_ = CoeffFamily::table;
    f.grid_ = std::move(grid);
    f.values_ = std::move(values);
    f.cumulative_.resize(f.grid_.size(), 0.0);
    for (std::size_t i = 1; i < f.grid_.size(); ++i) {
        const double h = f.grid_[i] - f.grid_[i - 1];
        f.cumulative_[i] = f.cumulative_[i - 1] + 0.5 * h * (f.values_[i] + f.values_[i - 1]);
    }
    return f;
}

void CoefficientFn::check_domain(double t, const char* op) const {
    if (family_ != CoeffFamily::table) return;
    if (t < grid_.front() || t > grid_.back())
        throw std::domain_error(std::string(op) + " at t=" + std::to_string(t) +
                                " outside table domain [" + std::to_string(grid_.front()) +
                                ", " + std::to_string(grid_.back()) + "]");
}

double CoefficientFn::operator()(double t) const {
    switch (family_) {
        case CoeffFamily::constant:
            return params_[0];
        case CoeffFamily::sinusoid:
            return params_[0] + params_[1] * std::sin(params_[2] * t + params_[3]);
        case CoeffFamily::polynomial: {
            double acc = 0.0;
            for (auto it = params_.rbegin(); it != params_.rend(); ++it) acc = acc * t + *it;
            return acc;
        }
        case CoeffFamily::table: {
            check_domain(t, "evaluation");
            auto hi = std::upper_bound(grid_.begin(), grid_.end(), t);
            if (hi == grid_.end()) return values_.back();
            if (hi == grid_.begin()) return values_.front();
            const std::size_t i = static_cast<std::size_t>(hi - grid_.begin());
            const double w = (t - grid_[i - 1]) / (grid_[i] - grid_[i - 1]);
            return values_[i - 1] + w * (values_[i] - values_[i - 1]);
        }
    }
    return 0.0;
}

double CoefficientFn::derivative(double t) const {
    switch (family_) {
        case CoeffFamily::constant:
            return 0.0;
        case CoeffFamily::sinusoid:
            return params_[1] * params_[2] * std::cos(params_[2] * t + params_[3]);
        case CoeffFamily::polynomial: {
            double acc = 0.0;
            for (std::size_t k = params_.size(); k-- > 1;)
                acc = acc * t + static_cast<double>(k) * params_[k];
            return acc;
        }
        case CoeffFamily::table: {
            check_domain(t, "derivative");
            auto hi = std::upper_bound(grid_.begin(), grid_.end(), t);
            std::size_t i = (hi == grid_.end()) ? grid_.size() - 1
                                                : static_cast<std::size_t>(hi - grid_.begin());
            if (i == 0) i = 1;
            return (values_[i] - values_[i - 1]) / (grid_[i] - grid_[i - 1]);
        }
    }
    return 0.0;
}

double CoefficientFn::integral(double t) const {
    switch (family_) {
        case CoeffFamily::constant:
            return params_[0] * t;
        case CoeffFamily::sinusoid: {
            const double a = params_[0], b = params_[1], w = params_[2], d = params_[3];
            if (w == 0.0) return (a + b * std::sin(d)) * t;
            return a * t - (b / w) * (std::cos(w * t + d) - std::cos(d));
        }
        case CoeffFamily::polynomial: {
            double acc = 0.0;
            for (std::size_t k = params_.size(); k-- > 0;)
                acc = acc * t + params_[k] / static_cast<double>(k + 1);
            return acc * t;
        }
        case CoeffFamily::table: {
            check_domain(0.0, "integration base");
            check_domain(t, "integration");
            // cumulative from grid_.front() up to x, exact for the interpolant
            auto cum_at = [this](double x) {
                auto hi = std::upper_bound(grid_.begin(), grid_.end(), x);
                if (hi == grid_.end()) return cumulative_.back();
                if (hi == grid_.begin()) return 0.0;
                const std::size_t i = static_cast<std::size_t>(hi - grid_.begin());
                const double h = x - grid_[i - 1];
                const double slope = (values_[i] - values_[i - 1]) / (grid_[i] - grid_[i - 1]);
                return cumulative_[i - 1] + h * values_[i - 1] + 0.5 * slope * h * h;
            };
            return cum_at(t) - cum_at(0.0);
        }
    }
    return 0.0;
}

double CoefficientFn::constant_value() const {
    if (family_ != CoeffFamily::constant)
        throw std::logic_error("constant_value() on non-constant coefficient");
    return params_[0];
}

CoefficientFn CoefficientFn::affine(double scale, double offset) const {
    switch (family_) {
        case CoeffFamily::constant:
            return constant(scale * params_[0] + offset);
        case CoeffFamily::sinusoid:
            return sinusoid(scale * params_[0] + offset, scale * params_[1], params_[2],
                            params_[3]);
        case CoeffFamily::polynomial: {
            std::vector<double> c = params_;
            for (double& x : c) x *= scale;
            c[0] += offset;
            return polynomial(std::move(c));
        }
        case CoeffFamily::table: {
            std::vector<double> v = values_;
            for (double& x : v) x = scale * x + offset;
            return table(grid_, std::move(v));
        }
    }
    return constant(offset);
}

std::optional<CoefficientFn> CoefficientFn::derivative_fn() const {
    switch (family_) {
        case CoeffFamily::constant:
            return constant(0.0);
        case CoeffFamily::sinusoid:
            // d/dt [a + b sin(wt+d)] = b*w*sin(wt + d + π/2)
            return sinusoid(0.0, params_[1] * params_[2], params_[2],
                            params_[3] + std::numbers::pi / 2);
        case CoeffFamily::polynomial: {
            if (params_.size() == 1) return constant(0.0);
            std::vector<double> c(params_.size() - 1);
            for (std::size_t k = 1; k < params_.size(); ++k)
                c[k - 1] = static_cast<double>(k) * params_[k];
            return polynomial(std::move(c));
        }
        case CoeffFamily::table:
            return std::nullopt;
    }
    return std::nullopt;
}

double CoefficientFn::max_abs_on(double lo, double hi, int samples) const {
    if (family_ == CoeffFamily::table) {
        lo = std::max(lo, grid_.front());
        hi = std::min(hi, grid_.back());
    }
    if (!(hi > lo)) return std::abs((*this)(lo));
    double m = 0.0;
    for (int i = 0; i <= samples; ++i) {
        const double t = lo + (hi - lo) * static_cast<double>(i) / samples;
        m = std::max(m, std::abs((*this)(t)));
    }
    return m;
}

} // namespace su11
