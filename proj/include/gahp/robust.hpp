#ifndef GAHP_ROBUST_HPP
#define GAHP_ROBUST_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "gahp/aggregate.hpp"
#include "gahp/core.hpp"

namespace gahp {

// Manipulation-resistant expert prioritization.
//
// Each scheme turns a per-expert distance into a raw credibility score
// through a piecewise-linear map anchored at trusted/untrusted experts, and
// rescales the scores into ExpertWeights for a weighted AIP:
//
//   APDD  distance of the expert's priority vector from the group aggregate;
//         the closest expert is anchored at h, the farthest at l.
//   AID   signed deviation of the expert's CI from the panel's mean CI;
//         the most consistent expert is anchored at h, the one nearest the
//         mean at m, the least consistent at l. Negative deviations use the
//         h-m segment, non-negative ones the m-l segment.
//   MX    beta * APDD + (1 - beta) * AID.
//
// Degenerate profiles (APDD distances equal within 1e-12, or AID anchors
// that share an abscissa) yield uniform weights so batch runs never abort.

enum class DistanceMetric { manhattan, euclidean, chebyshev };

enum class Method { classic, apdd, aid, mx };

/// Anchor weights for the most (h) and least (l) trusted expert; h > l > 0.
struct CredibilityScale2 {
    double h = 5.0;
    double l = 1.0;

    CredibilityScale2() = default;
    CredibilityScale2(double high, double low);
};

/// Anchor weights for the minimal, middle and maximal inconsistency
/// experts; h >= m >= l > 0.
struct CredibilityScale3 {
    double h;
    double m;
    double l;

    CredibilityScale3(double high, double mid, double low);

    /// Normalizes h:m:l to sum 1.
    static CredibilityScale3 from_ratios(double high, double mid, double low);
};

/// Per-expert distances. APDD profiles are non-negative; AID profiles are
/// centered (they sum to zero).
struct DistanceProfile {
    std::vector<double> d;
};

struct Point {
    double x;
    double y;
};

/// Per-expert quantities every scheme needs, computed once per panel.
struct PanelSummary {
    std::vector<PriorityVector> priorities;  // GMM, one per expert
    std::vector<double> ci;                  // Saaty CI, one per expert

    static PanelSummary of(const ExpertPanel& panel);
    std::size_t experts() const noexcept { return priorities.size(); }
};

struct ApddConfig {
    CredibilityScale2 scale{};
    DistanceMetric metric = DistanceMetric::manhattan;
    /// Scale of the group vector the distances are measured from.
    AggregateScale reference = AggregateScale::raw;
};

/// Credibility anchors derived from the panel's own CI extremes.
struct ProceduralCredibility {
    double gain = 1.0;
};

struct AidConfig {
    std::variant<CredibilityScale3, ProceduralCredibility> credibility =
        CredibilityScale3::from_ratios(9.0, 4.0, 1.0);
};

struct RobustConfig {
    ApddConfig apdd{};
    AidConfig aid{};
    double beta = 0.5;
};

/// Value at x of the line through X and Y. Exact at both abscissae.
/// Throws DegenerateMapError when X.x == Y.x.
double linear_map(Point X, Point Y, double x);

DistanceProfile preferential_distances(const PanelSummary& summary, DistanceMetric metric,
                                       AggregateScale reference = AggregateScale::raw);
DistanceProfile preferential_distances(const ExpertPanel& panel,
                                       DistanceMetric metric = DistanceMetric::manhattan);

/// d_i = I_i - mean(I).
DistanceProfile inconsistency_distances(std::span<const double> inconsistency);

/// Raw APDD scores f(d_i) before rescaling.
std::vector<double> apdd_scores(const PanelSummary& summary, const ApddConfig& config);
ExpertWeights apdd_weights(const PanelSummary& summary, const ApddConfig& config);
ExpertWeights apdd_weights(const ExpertPanel& panel, const ApddConfig& config = {});

/// (h, m, l) = GMM priorities of the 3x3 credibility matrix whose rows are
/// the min-, mid- and max-inconsistency experts. Throws
/// CredibilityOrderError unless h > m > l.
CredibilityScale3 credibility_from_matrix(const PCMatrix& credibility);

/// The 3x3 credibility matrix with judgments c_min,mid = 2, c_min,max = 7,
/// c_mid,max = 4.
PCMatrix example_credibility_matrix();

/// (gain * I_max / I_min, gain * I_mid / I_min, 1), normalized to sum 1.
/// Requires 0 < I_min <= I_mid <= I_max and gain >= 1.
CredibilityScale3 procedural_credibility(double i_min, double i_mid, double i_max,
                                         double gain = 1.0);

/// Anchors chosen by AID for a given CI profile.
struct AidAnchors {
    std::size_t min_expert;
    std::size_t mid_expert;
    std::size_t max_expert;
    Point a;  // (d_min, h)
    Point b;  // (d_mid, m)
    Point c;  // (d_max, l)
};

/// Empty when the three anchors do not have pairwise distinct abscissae.
std::optional<AidAnchors> aid_anchors(std::span<const double> inconsistency,
                                      const AidConfig& config);

/// Raw AID scores f(d_i) before rescaling.
std::vector<double> aid_scores(std::span<const double> inconsistency, const AidConfig& config);
ExpertWeights aid_weights(const PanelSummary& summary, const AidConfig& config);
ExpertWeights aid_weights(const ExpertPanel& panel, const CredibilityScale3& scale);

ExpertWeights mx_weights(const PanelSummary& summary, const RobustConfig& config);
ExpertWeights mx_weights(const ExpertPanel& panel, const RobustConfig& config = {});

/// Expert weights for the method (uniform for classic).
ExpertWeights robust_weights(const PanelSummary& summary, Method method,
                             const RobustConfig& config);

/// Weighted AIP of the per-expert GMM vectors under the method's weights.
PriorityVector robust_aggregate(const ExpertPanel& panel, Method method,
                                const RobustConfig& config = {});
std::vector<double> robust_scores(const PanelSummary& summary, Method method,
                                  const RobustConfig& config, AggregateScale scale);

} // namespace gahp

#endif
