#include "gahp/attack.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "gahp/aggregate.hpp"
#include "gahp/derive.hpp"

namespace gahp {

namespace {

bool strictly_first(std::span<const double> w, std::size_t a) {
    for (std::size_t i = 0; i < w.size(); ++i)
        if (i != a && w[i] >= w[a]) return false;
    return true;
}

std::size_t leader_except(std::span<const double> w, std::size_t skip) {
    std::size_t best = skip == 0 ? 1 : 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        if (i != skip && w[i] > w[best]) best = i;
    return best;
}

// Unbribed experts ordered by decreasing support for `leader`, ties by index.
std::vector<std::size_t> supporters(std::span<const PriorityVector> priorities,
                                    const std::vector<bool>& bribed, std::size_t leader) {
    std::vector<std::size_t> order;
    for (std::size_t q = 0; q < priorities.size(); ++q)
        if (!bribed[q]) order.push_back(q);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return priorities[a][leader] > priorities[b][leader];
    });
    return order;
}

} // namespace

PCMatrix bribe_matrix(const PCMatrix& c, std::size_t promoted, std::size_t demoted,
                      double saturation) {
    const std::size_t n = c.size();
    if (promoted >= n || demoted >= n) {
        throw ShapeError("alternative index out of range for a " + std::to_string(n) + "x" +
                         std::to_string(n) + " matrix");
    }
    if (promoted == demoted) throw DomainError("promoted and demoted alternatives must differ");
    if (!(saturation > 1.0)) throw DomainError("saturation must exceed 1");

    auto upper = c.upper_triangle();
    std::size_t t = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j, ++t) {
            if (i == promoted) upper[t] = saturation;
            else if (j == promoted) upper[t] = 1.0 / saturation;
            else if (i == demoted) upper[t] = 1.0 / saturation;
            else if (j == demoted) upper[t] = saturation;
        }
    }
    return PCMatrix::from_upper_triangle(n, upper);
}

AttackOutcome run_attack(const ExpertPanel& panel, const AttackConfig& config) {
    return run_attack(panel, individual_priorities(panel), config);
}

AttackOutcome run_attack(const ExpertPanel& panel, std::span<const PriorityVector> priorities,
                         const AttackConfig& config) {
    const std::size_t n = panel.alternatives();
    const std::size_t k = panel.experts();
    if (n < 2) throw ShapeError("an attack needs at least 2 alternatives");
    if (priorities.size() != k) throw ShapeError("priorities do not match the panel");

    const auto uniform = ExpertWeights::uniform(k);
    const auto honest = aip(priorities, uniform);
    const auto order = ranking_order(honest);
    const std::size_t winner = order[0];
    const std::size_t promoted = order[1];
    const std::size_t budget = std::min(config.max_bribes.value_or(k), k);

    std::vector<PriorityVector> current(priorities.begin(), priorities.end());
    std::vector<PCMatrix> matrices(panel.begin(), panel.end());
    std::vector<bool> is_bribed(k, false);
    std::vector<std::size_t> bribed;
    PriorityVector ranking = honest;

    const auto honest_support = supporters(priorities, is_bribed, winner);
    std::size_t next_honest = 0;

    while (!strictly_first(ranking, promoted) && bribed.size() < budget) {
        std::size_t leader = winner;
        std::size_t target;
        if (config.recompute_support) {
            leader = leader_except(ranking, promoted);
            target = supporters(current, is_bribed, leader).front();
        } else {
            target = honest_support[next_honest++];
        }
        matrices[target] = bribe_matrix(matrices[target], promoted, leader, config.saturation);
        current[target] = gmm_priorities(matrices[target]);
        is_bribed[target] = true;
        bribed.push_back(target);
        ranking = aip(current, uniform);
    }

    const bool succeeded = strictly_first(ranking, promoted);
    return AttackOutcome{std::move(bribed),
                         ExpertPanel(std::move(matrices)),
                         succeeded,
                         std::move(ranking),
                         honest,
                         winner,
                         promoted};
}

} // namespace gahp
