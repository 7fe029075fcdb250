#include "gahp/core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace gahp {

namespace {

constexpr double kSumTolerance = 1e-12;

bool positive_finite(double x) { return std::isfinite(x) && x > 0.0; }

std::string cell(std::size_t i, std::size_t j) {
    return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

void require_unit_sum(std::span<const double> v, const char* what) {
    if (v.empty()) {
        throw ShapeError(std::string(what) + " must not be empty");
    }
    for (double x : v) {
        if (!positive_finite(x)) {
            throw DomainError(std::string(what) + " entries must be positive, got " +
                              std::to_string(x));
        }
    }
    const double sum = std::accumulate(v.begin(), v.end(), 0.0);
    if (std::abs(sum - 1.0) > kSumTolerance) {
        throw DomainError(std::string(what) + " must sum to 1, got " + std::to_string(sum));
    }
}

std::vector<double> divide_by_sum(std::vector<double> v, const char* what) {
    if (v.empty()) {
        throw ShapeError(std::string(what) + " must not be empty");
    }
    for (double x : v) {
        if (!positive_finite(x)) {
            throw DomainError(std::string(what) + " entries must be positive, got " +
                              std::to_string(x));
        }
    }
    const double sum = std::accumulate(v.begin(), v.end(), 0.0);
    for (double& x : v) x /= sum;
    return v;
}

} // namespace

PCMatrix PCMatrix::from_upper_triangle(std::size_t n, std::span<const double> upper) {
    if (n < 2) {
        throw ShapeError("a PC matrix needs at least 2 alternatives, got " + std::to_string(n));
    }
    if (upper.size() != n * (n - 1) / 2) {
        throw ShapeError("upper triangle of a " + std::to_string(n) + "x" + std::to_string(n) +
                         " matrix has " + std::to_string(n * (n - 1) / 2) + " entries, got " +
                         std::to_string(upper.size()));
    }
    std::vector<double> c(n * n, 1.0);
    std::size_t t = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j, ++t) {
            const double v = upper[t];
            if (!positive_finite(v)) {
                throw DomainError("entry " + cell(i, j) + " must be positive, got " +
                                  std::to_string(v));
            }
            c[i * n + j] = v;
            c[j * n + i] = 1.0 / v;
        }
    }
    return PCMatrix(n, std::move(c));
}

PCMatrix PCMatrix::from_rows(std::size_t n, std::span<const double> rows, double reciprocity_tol) {
    if (rows.size() != n * n) {
        throw ShapeError("expected " + std::to_string(n * n) + " entries, got " +
                         std::to_string(rows.size()));
    }
    std::vector<double> upper;
    upper.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double v = rows[i * n + j];
            if (!positive_finite(v)) {
                throw DomainError("entry " + cell(i, j) + " must be positive, got " +
                                  std::to_string(v));
            }
            if (i == j && std::abs(v - 1.0) > reciprocity_tol) {
                throw DomainError("diagonal entry " + cell(i, i) + " must be 1, got " +
                                  std::to_string(v));
            }
            if (j > i) {
                const double product = v * rows[j * n + i];
                if (std::abs(product - 1.0) > reciprocity_tol) {
                    throw DomainError("entries " + cell(i, j) + " and " + cell(j, i) +
                                      " are not reciprocal (product " + std::to_string(product) +
                                      ")");
                }
                upper.push_back(v);
            }
        }
    }
    return from_upper_triangle(n, upper);
}

PCMatrix PCMatrix::from_rows(const std::vector<std::vector<double>>& rows, double reciprocity_tol) {
    const std::size_t n = rows.size();
    std::vector<double> flat;
    flat.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n) {
            throw ShapeError("row " + std::to_string(i + 1) + " has " +
                             std::to_string(rows[i].size()) + " entries, expected " +
                             std::to_string(n));
        }
        flat.insert(flat.end(), rows[i].begin(), rows[i].end());
    }
    return from_rows(n, flat, reciprocity_tol);
}

PCMatrix PCMatrix::indifference(std::size_t n) {
    std::vector<double> ones(n < 2 ? 0 : n * (n - 1) / 2, 1.0);
    return from_upper_triangle(n, ones);
}

std::vector<double> PCMatrix::upper_triangle() const {
    std::vector<double> out;
    out.reserve(n_ * (n_ - 1) / 2);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j) out.push_back((*this)(i, j));
    return out;
}

PriorityVector::PriorityVector(std::vector<double> weights) : w_(std::move(weights)) {
    require_unit_sum(w_, "priority vector");
}

PriorityVector PriorityVector::normalize(std::vector<double> scores) {
    return PriorityVector(divide_by_sum(std::move(scores), "priority vector"), Trusted{});
}

PriorityVector PriorityVector::uniform(std::size_t n) {
    if (n == 0) throw ShapeError("priority vector must not be empty");
    return PriorityVector(std::vector<double>(n, 1.0 / static_cast<double>(n)), Trusted{});
}

ExpertPanel::ExpertPanel(std::vector<PCMatrix> matrices) : m_(std::move(matrices)) {
    if (m_.empty()) throw ShapeError("an expert panel needs at least one matrix");
    const std::size_t n = m_.front().size();
    for (std::size_t q = 1; q < m_.size(); ++q) {
        if (m_[q].size() != n) {
            throw ShapeError("expert " + std::to_string(q + 1) + " compares " +
                             std::to_string(m_[q].size()) + " alternatives, expected " +
                             std::to_string(n));
        }
    }
}

ExpertPanel ExpertPanel::with_matrix(std::size_t q, PCMatrix replacement) const {
    if (q >= m_.size()) throw ShapeError("expert index out of range");
    auto copy = m_;
    copy[q] = std::move(replacement);
    return ExpertPanel(std::move(copy));
}

ExpertWeights::ExpertWeights(std::vector<double> r) : r_(std::move(r)) {
    require_unit_sum(r_, "expert weights");
}

ExpertWeights ExpertWeights::uniform(std::size_t k) {
    if (k == 0) throw ShapeError("expert weights must not be empty");
    return ExpertWeights(std::vector<double>(k, 1.0 / static_cast<double>(k)));
}

ExpertWeights ExpertWeights::normalize(std::vector<double> raw) {
    return ExpertWeights(divide_by_sum(std::move(raw), "expert weights"));
}

PCMatrix consistent_matrix_from_priorities(const PriorityVector& w) {
    const std::size_t n = w.size();
    std::vector<double> upper;
    upper.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) upper.push_back(w[i] / w[j]);
    return PCMatrix::from_upper_triangle(n, upper);
}

std::size_t argmax(std::span<const double> v) {
    return static_cast<std::size_t>(std::max_element(v.begin(), v.end()) - v.begin());
}

std::vector<std::size_t> ranking_order(std::span<const double> v) {
    std::vector<std::size_t> idx(v.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return v[a] > v[b]; });
    return idx;
}

} // namespace gahp
