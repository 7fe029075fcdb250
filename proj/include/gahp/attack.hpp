#ifndef GAHP_ATTACK_HPP
#define GAHP_ATTACK_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "gahp/core.hpp"

namespace gahp {

// Bribery model: a grafter wants the honest runner-up to win. Bribed experts
// replace their matrix with one where the promoted alternative beats every
// other at `saturation` and the honest leader loses to every other at
// 1/saturation. Experts are bribed in decreasing order of their individual
// GMM support for the leader until the promoted alternative is first.

struct AttackConfig {
    double saturation = 9.0;
    /// Upper bound on bribed experts; every expert when empty.
    std::optional<std::size_t> max_bribes;
    /// Re-pick the leader to demote (and re-rank supporters) from the
    /// manipulated aggregate after each bribe instead of keeping the honest
    /// leader and honest support order.
    bool recompute_support = false;
};

struct AttackOutcome {
    std::vector<std::size_t> bribed;  // expert indices, in bribery order
    ExpertPanel manipulated_panel;
    bool succeeded;
    PriorityVector manipulated_ranking;
    PriorityVector honest_ranking;
    std::size_t winner;     // honest leader
    std::size_t runner_up;  // honest second, the promoted alternative
};

/// Saturates `promoted` against every other alternative and `demoted`
/// against every alternative except `promoted`. Other entries are kept.
PCMatrix bribe_matrix(const PCMatrix& c, std::size_t promoted, std::size_t demoted,
                      double saturation = 9.0);

AttackOutcome run_attack(const ExpertPanel& panel, const AttackConfig& config = {});

/// Variant reusing already derived GMM priorities of the honest panel.
AttackOutcome run_attack(const ExpertPanel& panel, std::span<const PriorityVector> priorities,
                         const AttackConfig& config = {});

} // namespace gahp

#endif
