#include "spins/piecewise_polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

namespace spins {

namespace {

// falling factorial c (c-1) ... (c-k+1), i.e. the d^k/dx^k factor on x^c
double perm(int c, int k) {
    double p = 1.0;
    for (int j = 0; j < k; ++j) p *= static_cast<double>(c - j);
    return p;
}

void format17(char* buf, size_t n, double v) { std::snprintf(buf, n, "%.17g", v); }

}  // namespace

PiecewisePolynomial::PiecewisePolynomial(KnotGrid grid, int degree, Eigen::MatrixXd coeffs)
    : grid_(std::move(grid)), degree_(degree), coeffs_(std::move(coeffs)) {
    if (degree_ != 3 && degree_ != 5) {
        throw DimensionError("PiecewisePolynomial: degree must be 3 or 5, got " +
                             std::to_string(degree_));
    }
    if (coeffs_.rows() != grid_.interval_count() || coeffs_.cols() != degree_ + 1) {
        throw DimensionError("PiecewisePolynomial: expected " +
                             std::to_string(grid_.interval_count()) + "x" +
                             std::to_string(degree_ + 1) + " coefficient rows, got " +
                             std::to_string(coeffs_.rows()) + "x" + std::to_string(coeffs_.cols()));
    }
}

double PiecewisePolynomial::eval(double x, int order) const {
    if (order < 0 || order > degree_) {
        throw OrderError("derivative order " + std::to_string(order) + " not in [0, " +
                         std::to_string(degree_) + "]");
    }
    const int i = grid_.find_interval(x);
    return eval_local(i, x - grid_.knot(i), order);
}

double PiecewisePolynomial::eval_local(int interval, double t, int order) const {
    double acc = 0.0;
    for (int c = degree_; c >= order; --c) {
        acc = acc * t + coeffs_(interval, c) * perm(c, order);
    }
    return acc;
}

std::vector<double> PiecewisePolynomial::derivative_roots(int order) const {
    if (order < 1 || order > degree_ - 1) {
        throw OrderError("derivative_roots: order must be in [1, " + std::to_string(degree_ - 1) +
                         "]");
    }
    const double span = grid_.b() - grid_.a();
    const double merge_tol = 1e-8 * span;
    std::vector<double> roots;

    for (int i = 0; i < grid_.interval_count(); ++i) {
        const double h = grid_.spacing(i);
        const int d = degree_ - order;  // degree of S^(order) on this interval
        // local polynomial p(t) = sum_{c=order}^{q} coeffs(i,c) perm(c,order) t^{c-order}
        std::vector<double> p(static_cast<size_t>(d) + 1);
        for (int c = order; c <= degree_; ++c) {
            p[static_cast<size_t>(c - order)] = coeffs_(i, c) * perm(c, order);
        }
        auto pv = [&](double t) {
            double acc = 0.0;
            for (int c = d; c >= 0; --c) acc = acc * t + p[static_cast<size_t>(c)];
            return acc;
        };
        auto pdv = [&](double t) {
            double acc = 0.0;
            for (int c = d; c >= 1; --c) acc = acc * t + c * p[static_cast<size_t>(c)];
            return acc;
        };

        std::vector<double> local;
        const double scale = std::max({std::abs(p[0]), std::abs(pv(h)), 1e-300});
        if (d <= 0) continue;
        if (d == 1) {
            if (p[1] != 0.0) local.push_back(-p[0] / p[1]);
        } else if (d == 2) {
            const double a2 = p[2], b1 = p[1], c0 = p[0];
            if (std::abs(a2) * h * h < 1e-14 * scale) {
                if (b1 != 0.0) local.push_back(-c0 / b1);
            } else {
                const double disc = b1 * b1 - 4.0 * a2 * c0;
                if (disc >= 0.0) {
                    const double s = std::sqrt(disc);
                    const double q = -0.5 * (b1 + (b1 >= 0.0 ? s : -s));
                    if (q != 0.0) {
                        local.push_back(q / a2);
                        local.push_back(c0 / q);
                    } else {
                        local.push_back(0.0);
                    }
                }
            }
        } else {
            // bracketed bisection with a Newton polish on each sign change
            const int samples = 48;
            double prev_t = 0.0;
            double prev_v = pv(0.0);
            for (int s = 1; s <= samples; ++s) {
                const double t = h * s / samples;
                const double v = pv(t);
                if (prev_v == 0.0) local.push_back(prev_t);
                if ((prev_v < 0.0 && v > 0.0) || (prev_v > 0.0 && v < 0.0)) {
                    double lo = prev_t, hi = t, flo = prev_v;
                    for (int it = 0; it < 60; ++it) {
                        const double mid = 0.5 * (lo + hi);
                        const double fm = pv(mid);
                        if ((flo < 0.0) == (fm < 0.0)) {
                            lo = mid;
                            flo = fm;
                        } else {
                            hi = mid;
                        }
                    }
                    double r = 0.5 * (lo + hi);
                    for (int it = 0; it < 3; ++it) {
                        const double dr = pdv(r);
                        if (dr == 0.0) break;
                        const double step = pv(r) / dr;
                        const double rn = r - step;
                        if (rn >= lo - 1e-15 * h && rn <= hi + 1e-15 * h) r = rn;
                    }
                    local.push_back(r);
                }
                prev_t = t;
                prev_v = v;
            }
            if (prev_v == 0.0) local.push_back(h);
        }
        for (double t : local) {
            if (t >= -merge_tol && t <= h + merge_tol) {
                roots.push_back(grid_.knot(i) + std::clamp(t, 0.0, h));
            }
        }
    }

    std::sort(roots.begin(), roots.end());
    std::vector<double> merged;
    for (double r : roots) {
        if (r <= grid_.a() + merge_tol || r >= grid_.b() - merge_tol) continue;
        if (merged.empty() || r - merged.back() > merge_tol) merged.push_back(r);
    }
    return merged;
}

std::vector<double> PiecewisePolynomial::resample(const KnotGrid& new_grid) const {
    std::vector<double> out(static_cast<size_t>(new_grid.size()));
    for (int i = 0; i < new_grid.size(); ++i) {
        out[static_cast<size_t>(i)] = eval(new_grid.knot(i), 0);
    }
    return out;
}

std::vector<double> PiecewisePolynomial::knot_values() const { return resample(grid_); }

PiecewisePolynomial combine(const std::vector<const PiecewisePolynomial*>& splines,
                            const std::vector<double>& weights) {
    if (splines.empty() || splines.size() != weights.size()) {
        throw DimensionError("combine: need matching non-empty spline/weight lists");
    }
    Eigen::MatrixXd c = weights[0] * splines[0]->coeffs();
    for (size_t j = 1; j < splines.size(); ++j) {
        if (!(splines[j]->grid() == splines[0]->grid()) ||
            splines[j]->degree() != splines[0]->degree()) {
            throw DimensionError("combine: splines must share grid and degree");
        }
        c += weights[j] * splines[j]->coeffs();
    }
    return PiecewisePolynomial(splines[0]->grid(), splines[0]->degree(), std::move(c));
}

void write_sample_csv(std::ostream& os, const PiecewisePolynomial& spline, int samples,
                      int max_order) {
    os << "x";
    for (int k = 0; k <= max_order; ++k) os << ",s" << k;
    os << "\n";
    char buf[64];
    const double a = spline.grid().a();
    const double b = spline.grid().b();
    for (int j = 0; j < samples; ++j) {
        const double x = samples == 1 ? a : a + (b - a) * j / (samples - 1);
        format17(buf, sizeof buf, x);
        os << buf;
        for (int k = 0; k <= max_order; ++k) {
            format17(buf, sizeof buf, spline.eval(x, k));
            os << "," << buf;
        }
        os << "\n";
    }
}

}  // namespace spins
