#include "spins/knot_grid.hpp"

#include <algorithm>
#include <cmath>

namespace spins {

KnotGrid::KnotGrid(std::vector<double> knots) : knots_(std::move(knots)) {
    if (knots_.size() < 2) {
        throw InvalidDomainError("KnotGrid needs at least 2 knots, got " +
                                 std::to_string(knots_.size()));
    }
    spacings_.resize(knots_.size() - 1);
    for (size_t i = 0; i + 1 < knots_.size(); ++i) {
        spacings_[i] = knots_[i + 1] - knots_[i];
        if (!(spacings_[i] > 0.0)) {
            throw InvalidDomainError("knots must be strictly increasing (violation at index " +
                                     std::to_string(i) + ")");
        }
    }
}

int KnotGrid::find_interval(double x) const {
    if (x < a() || x > b()) {
        throw OutOfDomainError("x = " + std::to_string(x) + " outside [" + std::to_string(a()) +
                               ", " + std::to_string(b()) + "]");
    }
    if (x >= knots_[knots_.size() - 2]) return interval_count() - 1;
    auto it = std::upper_bound(knots_.begin(), knots_.end(), x);
    return static_cast<int>(it - knots_.begin()) - 1;
}

KnotGrid make_knots(double a, double b, int n, KnotMode mode) {
    if (!(a < b)) {
        throw InvalidDomainError("make_knots: need a < b, got a = " + std::to_string(a) +
                                 ", b = " + std::to_string(b));
    }
    if (n < 1) {
        throw InvalidDomainError("make_knots: need n >= 1 intervals, got " + std::to_string(n));
    }
    std::vector<double> xs(static_cast<size_t>(n) + 1);
    switch (mode) {
        case KnotMode::Uniform:
            for (int i = 0; i <= n; ++i) xs[static_cast<size_t>(i)] = a + (b - a) * i / n;
            break;
        case KnotMode::Chebyshev: {
            const double mid = 0.5 * (a + b);
            const double half = 0.5 * (b - a);
            for (int i = 0; i <= n; ++i) {
                xs[static_cast<size_t>(i)] = mid - half * std::cos(M_PI * i / n);
            }
            break;
        }
    }
    xs.front() = a;
    xs.back() = b;
    return KnotGrid(std::move(xs));
}

}  // namespace spins
