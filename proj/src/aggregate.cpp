#include "gahp/aggregate.hpp"

#include <cmath>
#include <string>

#include "gahp/derive.hpp"

namespace gahp {

namespace {

void require_expert_count(std::size_t have, const ExpertWeights& r) {
    if (have != r.size()) {
        throw ShapeError("got " + std::to_string(have) + " experts but " +
                         std::to_string(r.size()) + " weights");
    }
}

} // namespace

PCMatrix aij(const ExpertPanel& panel, const ExpertWeights& r) {
    require_expert_count(panel.experts(), r);
    const std::size_t n = panel.alternatives();
    std::vector<double> upper;
    upper.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            double log_sum = 0.0;
            for (std::size_t q = 0; q < panel.experts(); ++q)
                log_sum += r[q] * std::log(panel[q](i, j));
            upper.push_back(std::exp(log_sum));
        }
    }
    return PCMatrix::from_upper_triangle(n, upper);
}

std::vector<double> weighted_geometric_scores(std::span<const PriorityVector> vectors,
                                              const ExpertWeights& r) {
    require_expert_count(vectors.size(), r);
    const std::size_t n = vectors.front().size();
    for (const auto& v : vectors) {
        if (v.size() != n) throw ShapeError("priority vectors differ in length");
    }
    std::vector<double> scores(n);
    for (std::size_t i = 0; i < n; ++i) {
        double log_sum = 0.0;
        for (std::size_t q = 0; q < vectors.size(); ++q) log_sum += r[q] * std::log(vectors[q][i]);
        scores[i] = std::exp(log_sum);
    }
    return scores;
}

PriorityVector aip(std::span<const PriorityVector> vectors, const ExpertWeights& r) {
    return PriorityVector::normalize(weighted_geometric_scores(vectors, r));
}

std::vector<PriorityVector> individual_priorities(const ExpertPanel& panel) {
    std::vector<PriorityVector> out;
    out.reserve(panel.experts());
    for (const auto& m : panel) out.push_back(gmm_priorities(m));
    return out;
}

PriorityVector aggregate_panel(const ExpertPanel& panel, const ExpertWeights& r) {
    require_expert_count(panel.experts(), r);
    return aip(individual_priorities(panel), r);
}

PriorityVector aggregate_panel(const ExpertPanel& panel) {
    return aggregate_panel(panel, ExpertWeights::uniform(panel.experts()));
}

std::vector<double> aggregate_scores(std::span<const PriorityVector> vectors,
                                     const ExpertWeights& r, AggregateScale scale) {
    auto raw = weighted_geometric_scores(vectors, r);
    if (scale == AggregateScale::raw) return raw;
    const auto normalized = PriorityVector::normalize(std::move(raw));
    return {normalized.begin(), normalized.end()};
}

} // namespace gahp
