#ifndef GAHP_INCONSISTENCY_HPP
#define GAHP_INCONSISTENCY_HPP

#include "gahp/core.hpp"

namespace gahp {

/// Saaty's consistency index (lambda_max - n) / (n - 1). Rounding noise
/// below zero is clamped to 0.
double saaty_ci(const PCMatrix& c);

/// Koczkodaj's index: the worst triad deviation
/// max_{i<j<k} min(|1 - c_ik c_kj / c_ij|, |1 - c_ij / (c_ik c_kj)|).
/// Requires n >= 3.
double koczkodaj_k(const PCMatrix& c);

/// Arithmetic mean of saaty_ci over the panel.
double panel_mean_ci(const ExpertPanel& panel);

} // namespace gahp

#endif
