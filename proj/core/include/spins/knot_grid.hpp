#pragma once

#include <vector>

#include "spins/errors.hpp"

namespace spins {

enum class KnotMode { Uniform, Chebyshev };

/// Strictly increasing knot coordinates x_0..x_n with cached spacings
/// h_i = x_{i+1} - x_i. Immutable after construction.
class KnotGrid {
public:
    /// Takes ownership of an explicit, strictly increasing knot list.
    explicit KnotGrid(std::vector<double> knots);

    double a() const { return knots_.front(); }
    double b() const { return knots_.back(); }
    int interval_count() const { return static_cast<int>(knots_.size()) - 1; }
    int size() const { return static_cast<int>(knots_.size()); }

    double knot(int i) const { return knots_[static_cast<size_t>(i)]; }
    double spacing(int i) const { return spacings_[static_cast<size_t>(i)]; }
    const std::vector<double>& knots() const { return knots_; }
    const std::vector<double>& spacings() const { return spacings_; }

    /// Index i with x in [x_i, x_{i+1}); x == b maps to the last interval.
    /// Throws OutOfDomainError outside [a, b].
    int find_interval(double x) const;

    bool operator==(const KnotGrid& other) const { return knots_ == other.knots_; }

private:
    std::vector<double> knots_;
    std::vector<double> spacings_;
};

/// n+1 knots on [a, b]. Uniform: x_i = a + i(b-a)/n. Chebyshev:
/// Lobatto points x_i = (a+b)/2 - (b-a)/2 cos(i pi / n), ascending,
/// with the endpoints exactly a and b.
KnotGrid make_knots(double a, double b, int n, KnotMode mode);

}  // namespace spins
