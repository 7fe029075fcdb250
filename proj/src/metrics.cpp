#include "gahp/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gahp/errors.hpp"

namespace gahp {

namespace {

void require_same_length(std::span<const double> u, std::span<const double> v) {
    if (u.size() != v.size()) {
        throw ShapeError("ranking vectors differ in length (" + std::to_string(u.size()) +
                         " vs " + std::to_string(v.size()) + ")");
    }
}

int sign(double x) { return (x > 0.0) - (x < 0.0); }

} // namespace

double manhattan(std::span<const double> u, std::span<const double> v) {
    require_same_length(u, v);
    double d = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) d += std::abs(u[i] - v[i]);
    return d;
}

double manhattan_mean(std::span<const double> u, std::span<const double> v) {
    require_same_length(u, v);
    if (u.empty()) return 0.0;
    return manhattan(u, v) / static_cast<double>(u.size());
}

double euclidean(std::span<const double> u, std::span<const double> v) {
    require_same_length(u, v);
    double d = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) d += (u[i] - v[i]) * (u[i] - v[i]);
    return std::sqrt(d);
}

double chebyshev(std::span<const double> u, std::span<const double> v) {
    require_same_length(u, v);
    double d = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) d = std::max(d, std::abs(u[i] - v[i]));
    return d;
}

std::size_t kendall_tau_distance(std::span<const double> u, std::span<const double> v) {
    require_same_length(u, v);
    std::size_t count = 0;
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = i + 1; j < u.size(); ++j)
            if (sign(u[i] - u[j]) != sign(v[i] - v[j])) ++count;
    return count;
}

double kendall_tau_normalized(std::span<const double> u, std::span<const double> v) {
    const std::size_t d = kendall_tau_distance(u, v);
    const std::size_t n = u.size();
    if (n < 2) return 0.0;
    return 2.0 * static_cast<double>(d) / static_cast<double>(n * (n - 1));
}

} // namespace gahp
