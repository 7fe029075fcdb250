#ifndef GAHP_TESTS_SUPPORT_HPP
#define GAHP_TESTS_SUPPORT_HPP

// Test-only helpers: fixture loading, random inputs, and independent
// reference implementations that the library results are checked against.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <filesystem>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "gahp/core.hpp"
#include "gahp/io.hpp"

namespace testing {

inline std::filesystem::path data_path(const std::string& name) {
    return std::filesystem::path(GAHP_SOURCE_DIR) / "data" / name;
}

inline std::filesystem::path fixture_path(const std::string& name) {
    return std::filesystem::path(GAHP_SOURCE_DIR) / "tests" / "data" / name;
}

inline gahp::ExpertPanel load_panel(const std::string& name) {
    return gahp::read_panel(data_path(name)).panel;
}

inline bool near_all(std::span<const double> a, std::span<const double> b, double tol) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (std::abs(a[i] - b[i]) > tol) return false;
    return true;
}

// Random positive reciprocal matrix with upper entries log-uniform in [1/9, 9].
inline gahp::PCMatrix random_matrix(std::size_t n, std::mt19937& gen) {
    std::uniform_real_distribution<double> u(-std::log(9.0), std::log(9.0));
    std::vector<double> upper(n * (n - 1) / 2);
    for (auto& x : upper) x = std::exp(u(gen));
    return gahp::PCMatrix::from_upper_triangle(n, upper);
}

inline gahp::ExpertPanel random_panel(std::size_t k, std::size_t n, std::mt19937& gen) {
    std::vector<gahp::PCMatrix> m;
    for (std::size_t q = 0; q < k; ++q) m.push_back(random_matrix(n, gen));
    return gahp::ExpertPanel(std::move(m));
}

inline std::vector<double> random_weights(std::size_t k, std::mt19937& gen) {
    std::uniform_real_distribution<double> u(0.05, 1.0);
    std::vector<double> r(k);
    for (auto& x : r) x = u(gen);
    return r;
}

// ---- reference implementations ------------------------------------------

// Row geometric means through products and pow, normalized.
inline std::vector<double> oracle_gmm(const gahp::PCMatrix& c) {
    const std::size_t n = c.size();
    std::vector<double> g(n);
    double sum = 0;
    for (std::size_t i = 0; i < n; ++i) {
        double p = 1;
        for (std::size_t j = 0; j < n; ++j) p *= c(i, j);
        g[i] = std::pow(p, 1.0 / static_cast<double>(n));
        sum += g[i];
    }
    for (auto& x : g) x /= sum;
    return g;
}

// Closed-form principal eigenvalue of a 3x3 reciprocal matrix.
inline double oracle_lambda_3x3(const gahp::PCMatrix& c) {
    const double t = c(0, 2) / (c(0, 1) * c(1, 2));
    return 1.0 + std::cbrt(t) + std::cbrt(1.0 / t);
}

// Counts inversions by bubble-sorting v's ranking into u's order.
// Valid for tie-free inputs.
inline std::size_t oracle_kendall(std::span<const double> u, std::span<const double> v) {
    const std::size_t n = u.size();
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return u[a] > u[b]; });
    std::vector<double> seq(n);
    for (std::size_t i = 0; i < n; ++i) seq[i] = v[order[i]];
    std::size_t swaps = 0;
    for (std::size_t pass = 0; pass < n; ++pass)
        for (std::size_t i = 0; i + 1 < n; ++i)
            if (seq[i] < seq[i + 1]) {
                std::swap(seq[i], seq[i + 1]);
                ++swaps;
            }
    return swaps;
}

// Koczkodaj index over every ordered triple.
inline double oracle_koczkodaj(const gahp::PCMatrix& c) {
    double k = 0;
    const std::size_t n = c.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t l = 0; l < n; ++l) {
                if (i == j || j == l || i == l) continue;
                const double r = c(i, l) * c(l, j) / c(i, j);
                k = std::max(k, std::min(std::abs(1 - r), std::abs(1 - 1 / r)));
            }
    return k;
}

} // namespace testing

#endif
