#pragma once

#include <vector>

#include "spins/piecewise_polynomial.hpp"

namespace spins {

/// Boundary-derivative record for a clamped spline: cubic prescribes
/// (v0, vn) = S'(a), S'(b); quintic additionally (w0, wn) = S''(a), S''(b).
struct EndDerivatives {
    int degree = 3;
    double v0 = 0.0, w0 = 0.0, vn = 0.0, wn = 0.0;

    static EndDerivatives cubic(double v0, double vn) { return {3, v0, 0.0, vn, 0.0}; }
    static EndDerivatives quintic(double v0, double w0, double vn, double wn) {
        return {5, v0, w0, vn, wn};
    }
};

/// Spline built forward from prescribed derivatives at x_0: interpolates
/// all (x_i, y_i), starts with the given initial derivatives, and is
/// C^{q-1} at interior knots. init_derivs holds (v0, w0) for cubic and
/// (S', S'', S''', S'''') at x_0 for quintic.
PiecewisePolynomial build_recursive(const KnotGrid& grid, const std::vector<double>& y,
                                    const std::vector<double>& init_derivs, int degree);

/// Clamped interpolating spline with the prescribed end derivatives.
/// Cubic: combination of two recursive splines; quintic: forward recursion
/// with the free initial third/fourth derivatives matched to the right-end
/// conditions through a 2x2 linear solve.
PiecewisePolynomial build_clamped(const KnotGrid& grid, const std::vector<double>& y,
                                  const EndDerivatives& ends);

/// The basic clamped spline functions on a shared data set: cubic
/// W(0,0), W(1,0), W(0,1); quintic W(0,0,0,0) .. W(0,0,0,1), where the
/// lone 1 walks through the end-derivative slots.
struct SplineBasisSet {
    int degree;
    std::vector<PiecewisePolynomial> members;  // W_0 .. W_2 or W_0 .. W_4

    int alpha_count() const { return static_cast<int>(members.size()) - 1; }
};

SplineBasisSet basic_clamped_set(const KnotGrid& grid, const std::vector<double>& y, int degree);

/// S = (1 - sum alpha_l) W_0 + sum alpha_l W_l. The resulting spline keeps
/// the shared knot values and has end derivatives equal to the alphas:
/// cubic S'(a)=a1, S'(b)=a2; quintic S'(a)=a1, S''(a)=a2, S'(b)=a3, S''(b)=a4.
PiecewisePolynomial combine_basis(const SplineBasisSet& basis, const std::vector<double>& alphas);

}  // namespace spins
