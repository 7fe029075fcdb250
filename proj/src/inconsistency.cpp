#include "gahp/inconsistency.hpp"

#include <algorithm>
#include <cmath>

#include "gahp/derive.hpp"

namespace gahp {

double saaty_ci(const PCMatrix& c) {
    const double n = static_cast<double>(c.size());
    const double ci = (evm_priorities(c).lambda_max - n) / (n - 1.0);
    return std::max(ci, 0.0);
}

double koczkodaj_k(const PCMatrix& c) {
    const std::size_t n = c.size();
    if (n < 3) throw DomainError("Koczkodaj's index needs at least 3 alternatives");
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t k = j + 1; k < n; ++k) {
                const double ratio = c(i, k) * c(k, j) / c(i, j);
                const double triad = std::min(std::abs(1.0 - ratio), std::abs(1.0 - 1.0 / ratio));
                worst = std::max(worst, triad);
            }
        }
    }
    return worst;
}

double panel_mean_ci(const ExpertPanel& panel) {
    double sum = 0.0;
    for (const auto& m : panel) sum += saaty_ci(m);
    return sum / static_cast<double>(panel.experts());
}

} // namespace gahp
