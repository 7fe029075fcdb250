#ifndef GAHP_CORE_HPP
#define GAHP_CORE_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "gahp/errors.hpp"

namespace gahp {

/// Positive reciprocal n x n matrix of one expert's pairwise judgments.
///
/// Entries are stored row-major. The lower triangle is always the exact
/// reciprocal of the upper triangle, so c(i,j) * c(j,i) == 1 up to a single
/// rounding of the division.
class PCMatrix {
public:
    /// Builds the matrix from the strict upper triangle, listed row by row
    /// (c_12, c_13, ..., c_1n, c_23, ...). Throws ShapeError on a wrong
    /// length and DomainError on a non-positive or non-finite value.
    static PCMatrix from_upper_triangle(std::size_t n, std::span<const double> upper);

    /// Builds the matrix from a full row-major table. The diagonal must be 1
    /// and every pair must satisfy |c_ij * c_ji - 1| <= reciprocity_tol; the
    /// lower triangle is then rebuilt as 1 / upper.
    static PCMatrix from_rows(std::size_t n, std::span<const double> rows,
                              double reciprocity_tol = 1e-9);

    static PCMatrix from_rows(const std::vector<std::vector<double>>& rows,
                              double reciprocity_tol = 1e-9);

    /// The n x n matrix of ones (all alternatives equally preferred).
    static PCMatrix indifference(std::size_t n);

    std::size_t size() const noexcept { return n_; }
    double operator()(std::size_t i, std::size_t j) const noexcept { return c_[i * n_ + j]; }
    std::span<const double> row(std::size_t i) const noexcept {
        return {c_.data() + i * n_, n_};
    }
    std::span<const double> data() const noexcept { return c_; }

    /// Upper triangle in the order accepted by from_upper_triangle.
    std::vector<double> upper_triangle() const;

    friend bool operator==(const PCMatrix&, const PCMatrix&) = default;

private:
    PCMatrix(std::size_t n, std::vector<double> c) : n_(n), c_(std::move(c)) {}

    std::size_t n_ = 0;
    std::vector<double> c_;
};

/// Strictly positive weights over n alternatives that sum to one.
class PriorityVector {
public:
    /// Validates positivity and sum == 1 within 1e-12.
    explicit PriorityVector(std::vector<double> weights);

    /// Divides positive scores by their sum.
    static PriorityVector normalize(std::vector<double> scores);
    static PriorityVector uniform(std::size_t n);

    std::size_t size() const noexcept { return w_.size(); }
    double operator[](std::size_t i) const noexcept { return w_[i]; }
    std::span<const double> values() const noexcept { return w_; }
    operator std::span<const double>() const noexcept { return w_; }

    auto begin() const noexcept { return w_.begin(); }
    auto end() const noexcept { return w_.end(); }

    friend bool operator==(const PriorityVector&, const PriorityVector&) = default;

private:
    struct Trusted {};
    PriorityVector(std::vector<double> w, Trusted) : w_(std::move(w)) {}

    std::vector<double> w_;
};

/// k expert matrices over the same n alternatives.
class ExpertPanel {
public:
    explicit ExpertPanel(std::vector<PCMatrix> matrices);

    std::size_t experts() const noexcept { return m_.size(); }
    std::size_t alternatives() const noexcept { return m_.front().size(); }
    const PCMatrix& operator[](std::size_t q) const noexcept { return m_[q]; }
    std::span<const PCMatrix> matrices() const noexcept { return m_; }

    auto begin() const noexcept { return m_.begin(); }
    auto end() const noexcept { return m_.end(); }

    /// Copy of this panel with expert q's matrix replaced.
    ExpertPanel with_matrix(std::size_t q, PCMatrix replacement) const;

    friend bool operator==(const ExpertPanel&, const ExpertPanel&) = default;

private:
    std::vector<PCMatrix> m_;
};

/// Strictly positive expert weights r_1..r_k summing to one.
class ExpertWeights {
public:
    explicit ExpertWeights(std::vector<double> r);

    static ExpertWeights uniform(std::size_t k);
    static ExpertWeights normalize(std::vector<double> raw);

    std::size_t size() const noexcept { return r_.size(); }
    double operator[](std::size_t q) const noexcept { return r_[q]; }
    std::span<const double> values() const noexcept { return r_; }

    auto begin() const noexcept { return r_.begin(); }
    auto end() const noexcept { return r_.end(); }

    friend bool operator==(const ExpertWeights&, const ExpertWeights&) = default;

private:
    std::vector<double> r_;
};

/// The unique consistent matrix c_ij = w_i / w_j generated by w.
PCMatrix consistent_matrix_from_priorities(const PriorityVector& w);

/// Index of the largest entry; ties resolve to the lowest index.
std::size_t argmax(std::span<const double> v);

/// Alternatives sorted by decreasing score; ties keep index order.
std::vector<std::size_t> ranking_order(std::span<const double> v);

} // namespace gahp

#endif
