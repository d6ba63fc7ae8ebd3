#pragma once

#include <Eigen/Dense>
#include <iosfwd>
#include <vector>

#include "spins/knot_grid.hpp"

namespace spins {

/// Degree-q spline stored as one local coefficient row per interval:
/// S_i(x) = sum_k coeffs(i, k) (x - x_i)^k. Immutable after construction.
class PiecewisePolynomial {
public:
    PiecewisePolynomial(KnotGrid grid, int degree, Eigen::MatrixXd coeffs);

    const KnotGrid& grid() const { return grid_; }
    int degree() const { return degree_; }
    const Eigen::MatrixXd& coeffs() const { return coeffs_; }

    /// Value of the order-th derivative at x (order 0 is the value itself).
    /// The interval is located by binary search; x == b uses the last piece.
    double eval(double x, int order = 0) const;

    /// Derivative of order `order` on interval i, at local offset t = x - x_i.
    double eval_local(int interval, double t, int order) const;

    /// All roots of S^(order) strictly inside (a, b), sorted ascending.
    /// Roots closer than 1e-8 (b - a) are merged; order must be 1 or 2.
    std::vector<double> derivative_roots(int order) const;

    /// S evaluated at the knots of new_grid (which must lie within [a, b]).
    std::vector<double> resample(const KnotGrid& new_grid) const;

    /// Knot values y_i (spline evaluated at its own knots).
    std::vector<double> knot_values() const;

private:
    KnotGrid grid_;
    int degree_;
    Eigen::MatrixXd coeffs_;  // interval_count x (degree + 1)
};

/// Linear combination sum_j weights_j splines_j on a shared grid/degree.
PiecewisePolynomial combine(const std::vector<const PiecewisePolynomial*>& splines,
                            const std::vector<double>& weights);

/// CSV dump with header x,s0,...,s<max_order>: value and derivatives at
/// `samples` uniformly spaced points. Floats use 17 significant digits.
void write_sample_csv(std::ostream& os, const PiecewisePolynomial& spline, int samples,
                      int max_order);

}  // namespace spins
