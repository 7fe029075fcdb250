#ifndef GAHP_METRICS_HPP
#define GAHP_METRICS_HPP

#include <cstddef>
#include <span>

namespace gahp {

// Distances between ranking vectors. All of them take plain spans so they
// apply to normalized PriorityVectors and to raw aggregate scores alike;
// a length mismatch throws ShapeError.

/// Sum of absolute differences. At most 2 for unit-sum inputs.
double manhattan(std::span<const double> u, std::span<const double> v);

/// manhattan / n, the per-alternative form used in experiment reports.
double manhattan_mean(std::span<const double> u, std::span<const double> v);

double euclidean(std::span<const double> u, std::span<const double> v);

double chebyshev(std::span<const double> u, std::span<const double> v);

/// Number of pairs i < j whose order differs between u and v. The sign of a
/// difference has three classes (-, 0, +), so a pair tied in one vector and
/// strictly ordered in the other counts as a disagreement.
std::size_t kendall_tau_distance(std::span<const double> u, std::span<const double> v);

/// kendall_tau_distance scaled by n(n-1)/2 into [0, 1].
double kendall_tau_normalized(std::span<const double> u, std::span<const double> v);

} // namespace gahp

#endif
