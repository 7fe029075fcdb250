#ifndef GAHP_AGGREGATE_HPP
#define GAHP_AGGREGATE_HPP

#include <span>
#include <vector>

#include "gahp/core.hpp"

namespace gahp {

/// Which scale an aggregate is reported on. `raw` is the weighted geometric
/// mean prod_q w_q(a_i)^r_q itself (its entries sum to at most 1);
/// `normalized` divides it by its sum. Both give the same order.
enum class AggregateScale { raw, normalized };

/// Aggregation of individual judgments: entry (i,j) = prod_q c_ijq^r_q.
PCMatrix aij(const ExpertPanel& panel, const ExpertWeights& r);

/// Weighted geometric mean of the vectors, not normalized.
std::vector<double> weighted_geometric_scores(std::span<const PriorityVector> vectors,
                                              const ExpertWeights& r);

/// Aggregation of individual priorities: the weighted geometric mean
/// divided by its sum.
PriorityVector aip(std::span<const PriorityVector> vectors, const ExpertWeights& r);

/// GMM priorities of every expert, in panel order. Experts are processed
/// independently.
std::vector<PriorityVector> individual_priorities(const ExpertPanel& panel);

/// GMM per expert followed by aip. Equal weights when none are given.
PriorityVector aggregate_panel(const ExpertPanel& panel, const ExpertWeights& r);
PriorityVector aggregate_panel(const ExpertPanel& panel);

/// Same aggregate as aggregate_panel on the requested scale.
std::vector<double> aggregate_scores(std::span<const PriorityVector> vectors,
                                     const ExpertWeights& r, AggregateScale scale);

} // namespace gahp

#endif
