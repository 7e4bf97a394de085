#include "aromatic/integrator.hpp"

#include <algorithm>
#include <cmath>

namespace aromatic {

NumericField::NumericField(std::size_t dimension, Evaluator evaluate, Jacobian jacobian, bool divergence_free)
    : dimension(dimension), evaluate(std::move(evaluate)), jacobian(std::move(jacobian)),
      divergence_free(divergence_free)
{
    if (!divergence_free) return;
    if (!this->jacobian) throw std::invalid_argument("a divergence-free field needs a jacobian");
    for (int s = 0; s < 5; ++s) {
        Vector y(static_cast<Eigen::Index>(dimension));
        for (Eigen::Index i = 0; i < y.size(); ++i) y[i] = std::sin(1.3 * (s + 1) + 0.7 * static_cast<double>(i));
        const double trace = this->jacobian(y).trace();
        if (std::abs(trace) > 1e-12)
            throw std::invalid_argument("field is not divergence-free: trace(f') = " + std::to_string(trace));
    }
}

NumericField preprocess_field(const NumericField& f, double h)
{
    if (!f.jacobian) throw std::invalid_argument("preprocessing needs the jacobian of f");
    auto evaluate = [f, h](const Vector& y) -> Vector {
        const Vector fy = f.evaluate(y);
        const Matrix A = f.jacobian(y);
        const Matrix A2 = A * A;
        const Matrix I = Matrix::Identity(A.rows(), A.cols());
        return fy + h * h / 12.0 * ((0.5 * A2.trace()) * I - A2) * fy;
    };
    return NumericField(f.dimension, evaluate, {}, false);
}

Vector midpoint_step(const NumericField& F, const Vector& y, double h, double tol, int max_iter)
{
    Vector next = y + h * F.evaluate(y);
    for (int it = 0; it < max_iter; ++it) {
        const Vector updated = y + h * F.evaluate(0.5 * (y + next));
        const double change = (updated - next).norm();
        next = updated;
        if (change <= tol) return next;
    }
    throw ConvergenceError("midpoint fixed-point iteration did not converge in " + std::to_string(max_iter) +
                           " iterations (h = " + std::to_string(h) + ")");
}

Matrix flow_jacobian(const Stepper& step, const Vector& y)
{
    const double delta = std::max(1e-6, 1e-6 * y.norm());
    const auto n = y.size();
    Matrix J(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        Vector plus = y, minus = y;
        plus[j] += delta;
        minus[j] -= delta;
        J.col(j) = (step(plus) - step(minus)) / (2 * delta);
    }
    return J;
}

double fit_slope(const std::vector<double>& h, const std::vector<double>& error)
{
    if (h.size() != error.size() || h.size() < 2) throw std::invalid_argument("slope fit needs at least two points");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(h.size());
    for (std::size_t i = 0; i < h.size(); ++i) {
        if (h[i] <= 0 || error[i] <= 0) throw std::domain_error("slope fit needs positive step sizes and errors");
        const double x = std::log(h[i]), yv = std::log(error[i]);
        sx += x;
        sy += yv;
        sxx += x * x;
        sxy += x * yv;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

std::vector<double> step_sizes(double hmin, double hmax, std::size_t count)
{
    if (!(hmin > 0 && hmax > hmin) || count < 2) throw std::invalid_argument("need 0 < hmin < hmax and at least 2 steps");
    std::vector<double> out;
    for (std::size_t k = 0; k < count; ++k)
        out.push_back(hmax * std::pow(hmin / hmax, static_cast<double>(k) / static_cast<double>(count - 1)));
    return out;
}

namespace {

Stepper make_stepper(const NumericField& f, double h, bool preprocess)
{
    if (preprocess) {
        auto F = preprocess_field(f, h);
        return [F, h](const Vector& y) { return midpoint_step(F, y, h); };
    }
    return [f, h](const Vector& y) { return midpoint_step(f, y, h); };
}

void check_list(const std::vector<double>& h_list)
{
    if (h_list.empty()) throw std::invalid_argument("empty step-size list");
    for (std::size_t i = 1; i < h_list.size(); ++i)
        if (!(h_list[i] < h_list[i - 1])) throw std::invalid_argument("step sizes must be strictly decreasing");
}

void finish(ExperimentResult& r, double floor)
{
    for (double e : r.error)
        if (!(e > floor)) r.degenerate = true;
    if (!r.degenerate) r.slope = fit_slope(r.h, r.error);
}

std::size_t steps_for(double T, double h) { return std::max<std::size_t>(1, static_cast<std::size_t>(std::lround(T / h))); }

Vector rk4(const NumericField& f, Vector y, double T, std::size_t n)
{
    const double h = T / static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Vector k1 = f.evaluate(y);
        const Vector k2 = f.evaluate(y + 0.5 * h * k1);
        const Vector k3 = f.evaluate(y + 0.5 * h * k2);
        const Vector k4 = f.evaluate(y + h * k3);
        y += h / 6 * (k1 + 2 * k2 + 2 * k3 + k4);
    }
    return y;
}

}  // namespace

ExperimentResult volume_error_experiment(const NumericField& f, const Vector& y0, const std::vector<double>& h_list,
                                         bool preprocess)
{
    check_list(h_list);
    ExperimentResult r;
    r.preprocessed = preprocess;
    for (double h : h_list) {
        r.h.push_back(h);
        r.error.push_back(std::abs(flow_jacobian(make_stepper(f, h, preprocess), y0).determinant() - 1));
    }
    finish(r, volume_noise_floor);
    return r;
}

ExperimentResult global_volume_error_experiment(const NumericField& f, const Vector& y0,
                                                const std::vector<double>& h_list, bool preprocess, double T)
{
    check_list(h_list);
    ExperimentResult r;
    r.preprocessed = preprocess;
    for (double h0 : h_list) {
        const std::size_t n = steps_for(T, h0);
        const double h = T / static_cast<double>(n);
        const auto one = make_stepper(f, h, preprocess);
        const Stepper flow = [&](const Vector& y) {
            Vector z = y;
            for (std::size_t i = 0; i < n; ++i) z = one(z);
            return z;
        };
        r.h.push_back(h);
        r.error.push_back(std::abs(flow_jacobian(flow, y0).determinant() - 1));
    }
    finish(r, volume_noise_floor);
    return r;
}

ExperimentResult trajectory_error_experiment(const NumericField& f, const Vector& y0,
                                             const std::vector<double>& h_list, bool preprocess, double T)
{
    check_list(h_list);
    const Vector reference = rk4(f, y0, T, 20000);
    ExperimentResult r;
    r.preprocessed = preprocess;
    for (double h0 : h_list) {
        const std::size_t n = steps_for(T, h0);
        const double h = T / static_cast<double>(n);
        const auto one = make_stepper(f, h, preprocess);
        Vector y = y0;
        for (std::size_t i = 0; i < n; ++i) y = one(y);
        r.h.push_back(h);
        r.error.push_back((y - reference).norm());
    }
    finish(r, 1e-13);
    return r;
}

// ---------------------------------------------------------------------------

std::vector<std::string> field_names() { return {"cubic", "pendulum", "linear", "abc", "poly3"}; }

NamedField named_field(const std::string& name)
{
    auto vec = [](std::initializer_list<double> v) {
        Vector out(static_cast<Eigen::Index>(v.size()));
        Eigen::Index i = 0;
        for (double x : v) out[i++] = x;
        return out;
    };
    if (name == "cubic") {
        // H = x^2 y + y^3/3 + x^4/4, f = (-H_y, H_x)
        NumericField f(
            2, [](const Vector& y) { return Vector{{-(y[0] * y[0] + y[1] * y[1]), 2 * y[0] * y[1] + y[0] * y[0] * y[0]}}; },
            [](const Vector& y) {
                Matrix J(2, 2);
                J << -2 * y[0], -2 * y[1], 2 * y[1] + 3 * y[0] * y[0], 2 * y[0];
                return J;
            },
            true);
        return {name, "2-D Hamiltonian H = x^2 y + y^3/3 + x^4/4", f, vec({0.6, 0.4})};
    }
    if (name == "pendulum") {
        NumericField f(
            2, [](const Vector& y) { return Vector{{y[1], -std::sin(y[0])}}; },
            [](const Vector& y) {
                Matrix J(2, 2);
                J << 0, 1, -std::cos(y[0]), 0;
                return J;
            },
            true);
        return {name, "2-D pendulum (y, -sin x)", f, vec({1.0, 0.5})};
    }
    if (name == "linear") {
        NumericField f(
            2, [](const Vector& y) { return Vector{{0.3 * y[0] + y[1], -0.5 * y[0] - 0.3 * y[1]}}; },
            [](const Vector&) {
                Matrix J(2, 2);
                J << 0.3, 1, -0.5, -0.3;
                return J;
            },
            true);
        return {name, "2-D linear traceless field", f, vec({0.5, 0.5})};
    }
    if (name == "abc") {
        // A = 1, B = sqrt(2/3), C = sqrt(1/3)
        const double A = 1, B = std::sqrt(2.0 / 3), C = std::sqrt(1.0 / 3);
        NumericField f(
            3,
            [=](const Vector& y) {
                return Vector{{A * std::sin(y[2]) + C * std::cos(y[1]), B * std::sin(y[0]) + A * std::cos(y[2]),
                               C * std::sin(y[1]) + B * std::cos(y[0])}};
            },
            [=](const Vector& y) {
                Matrix J(3, 3);
                J << 0, -C * std::sin(y[1]), A * std::cos(y[2]), B * std::cos(y[0]), 0, -A * std::sin(y[2]),
                    -B * std::sin(y[0]), C * std::cos(y[1]), 0;
                return J;
            },
            true);
        return {name, "3-D ABC flow", f, vec({0.3, 0.7, 0.2})};
    }
    if (name == "poly3") {
        NumericField f(
            3,
            [](const Vector& y) {
                return Vector{{std::sin(y[1]) + y[2] * y[2], std::cos(y[2]) + y[0] * y[0], y[0] * y[1]}};
            },
            [](const Vector& y) {
                Matrix J(3, 3);
                J << 0, std::cos(y[1]), 2 * y[2], 2 * y[0], 0, -std::sin(y[2]), y[1], y[0], 0;
                return J;
            },
            true);
        return {name, "3-D field (sin y + z^2, cos z + x^2, x y)", f, vec({0.4, 0.3, 0.5})};
    }
    throw std::invalid_argument("unknown field '" + name + "'");
}

}  // namespace aromatic
