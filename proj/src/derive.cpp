#include "gahp/derive.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace gahp {

namespace {

std::vector<double> row_geometric_means(const PCMatrix& c) {
    const std::size_t n = c.size();
    std::vector<double> s(n);
    for (std::size_t i = 0; i < n; ++i) {
        double log_sum = 0.0;
        for (double x : c.row(i)) log_sum += std::log(x);
        s[i] = std::exp(log_sum / static_cast<double>(n));
    }
    return s;
}

void multiply(const PCMatrix& c, const std::vector<double>& x, std::vector<double>& y) {
    const std::size_t n = c.size();
    for (std::size_t i = 0; i < n; ++i) {
        const auto r = c.row(i);
        y[i] = std::inner_product(r.begin(), r.end(), x.begin(), 0.0);
    }
}

void scale_to_unit_sum(std::vector<double>& v) {
    const double s = std::accumulate(v.begin(), v.end(), 0.0);
    for (double& x : v) x /= s;
}

} // namespace

PriorityVector gmm_priorities(const PCMatrix& c) {
    return PriorityVector::normalize(row_geometric_means(c));
}

EigenResult evm_priorities(const PCMatrix& c, double tol, int max_iter) {
    if (!(tol > 0.0)) throw DomainError("power iteration tolerance must be positive");
    const std::size_t n = c.size();

    std::vector<double> w = row_geometric_means(c);
    scale_to_unit_sum(w);
    std::vector<double> next(n);

    for (int it = 1; it <= max_iter; ++it) {
        multiply(c, w, next);
        scale_to_unit_sum(next);
        double delta = 0.0;
        for (std::size_t i = 0; i < n; ++i) delta = std::max(delta, std::abs(next[i] - w[i]));
        w.swap(next);
        if (delta < tol) {
            multiply(c, w, next);
            double ratio_sum = 0.0;
            for (std::size_t i = 0; i < n; ++i) ratio_sum += next[i] / w[i];
            const double lambda = ratio_sum / static_cast<double>(n);
            return {PriorityVector::normalize(std::move(w)), lambda, it};
        }
    }
    throw ConvergenceError("power iteration did not converge in " + std::to_string(max_iter) +
                           " steps");
}

} // namespace gahp
