#pragma once

// Implicit midpoint with and without the h^2 preprocessing of the vector
// field, and step-size sweeps measuring volume and trajectory errors.

#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace aromatic {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

struct NumericField {
    using Evaluator = std::function<Vector(const Vector&)>;
    using Jacobian = std::function<Matrix(const Vector&)>;

    /// With divergence_free set, trace(jacobian) is checked at a few sample
    /// points (|trace| <= 1e-12, else std::invalid_argument).
    NumericField(std::size_t dimension, Evaluator evaluate, Jacobian jacobian, bool divergence_free);

    std::size_t dimension;
    Evaluator evaluate;
    Jacobian jacobian;  // may be empty
    bool divergence_free;
};

/// F(y) = f(y) + h^2/12 (1/2 tr(f'(y)^2) I - f'(y)^2) f(y).
NumericField preprocess_field(const NumericField& f, double h);

class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// y' = y + h F((y + y')/2) by fixed-point iteration; throws ConvergenceError.
Vector midpoint_step(const NumericField& F, const Vector& y, double h, double tol = 1e-13, int max_iter = 100);

using Stepper = std::function<Vector(const Vector&)>;

/// Central differences of the step map, delta = max(1e-6, 1e-6 |y|).
Matrix flow_jacobian(const Stepper& step, const Vector& y);

/// Volume errors below this cannot be told apart from finite-difference noise.
inline constexpr double volume_noise_floor = 1e-10;

struct ExperimentResult {
    std::vector<double> h;      // strictly decreasing
    std::vector<double> error;  // one per h
    bool preprocessed = false;
    bool degenerate = false;    // some error at or below the noise floor; slope not meaningful
    double slope = std::numeric_limits<double>::quiet_NaN();
};

/// Least-squares slope of log(error) against log(h).
double fit_slope(const std::vector<double>& h, const std::vector<double>& error);

/// `count` step sizes from hmax down to hmin, geometrically spaced.
std::vector<double> step_sizes(double hmin, double hmax, std::size_t count);

/// One step from y0 per h; error |det(flow_jacobian) - 1|.
ExperimentResult volume_error_experiment(const NumericField& f, const Vector& y0, const std::vector<double>& h_list,
                                         bool preprocess);

/// |det - 1| for the map over [0, T] made of round(T/h) steps.
ExperimentResult global_volume_error_experiment(const NumericField& f, const Vector& y0,
                                                const std::vector<double>& h_list, bool preprocess, double T);

/// |y_N - y(T)| with N = round(T/h) steps, against a fine RK4 reference.
ExperimentResult trajectory_error_experiment(const NumericField& f, const Vector& y0,
                                             const std::vector<double>& h_list, bool preprocess, double T);

struct NamedField {
    std::string name;
    std::string description;
    NumericField field;
    Vector start;
};

/// "cubic" (2-D Hamiltonian), "pendulum" (2-D), "linear" (2-D), "abc" (3-D),
/// "poly3" (3-D); throws std::invalid_argument for other names.
NamedField named_field(const std::string& name);
std::vector<std::string> field_names();

}  // namespace aromatic
