#include "gahp/robust.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "gahp/derive.hpp"
#include "gahp/inconsistency.hpp"
#include "gahp/metrics.hpp"

namespace gahp {

namespace {

std::vector<double> uniform_scores(std::size_t k) { return std::vector<double>(k, 1.0); }

double distance(DistanceMetric metric, std::span<const double> u, std::span<const double> v) {
    switch (metric) {
    case DistanceMetric::manhattan: return manhattan(u, v);
    case DistanceMetric::euclidean: return euclidean(u, v);
    case DistanceMetric::chebyshev: return chebyshev(u, v);
    }
    return manhattan(u, v);
}

std::size_t index_of_min(std::span<const double> v) {
    return static_cast<std::size_t>(std::min_element(v.begin(), v.end()) - v.begin());
}

std::size_t index_of_max(std::span<const double> v) {
    return static_cast<std::size_t>(std::max_element(v.begin(), v.end()) - v.begin());
}

CredibilityScale3 resolve_scale(const AidConfig& config, std::span<const double> inconsistency,
                                std::size_t min_expert, std::size_t mid_expert,
                                std::size_t max_expert) {
    if (const auto* fixed = std::get_if<CredibilityScale3>(&config.credibility)) return *fixed;
    const auto& proc = std::get<ProceduralCredibility>(config.credibility);
    return procedural_credibility(inconsistency[min_expert], inconsistency[mid_expert],
                                  inconsistency[max_expert], proc.gain);
}

} // namespace

CredibilityScale2::CredibilityScale2(double high, double low) : h(high), l(low) {
    if (!(l > 0.0) || !(h > l) || !std::isfinite(h)) {
        throw DomainError("credibility scale needs h > l > 0, got h=" + std::to_string(h) +
                          " l=" + std::to_string(l));
    }
}

CredibilityScale3::CredibilityScale3(double high, double mid, double low) : h(high), m(mid), l(low) {
    if (!(l > 0.0) || !(m >= l) || !(h >= m) || !std::isfinite(h)) {
        throw DomainError("credibility scale needs h >= m >= l > 0, got h=" + std::to_string(h) +
                          " m=" + std::to_string(m) + " l=" + std::to_string(l));
    }
}

CredibilityScale3 CredibilityScale3::from_ratios(double high, double mid, double low) {
    const double sum = high + mid + low;
    return {high / sum, mid / sum, low / sum};
}

PanelSummary PanelSummary::of(const ExpertPanel& panel) {
    PanelSummary s;
    s.priorities.reserve(panel.experts());
    s.ci.reserve(panel.experts());
    for (const auto& m : panel) {
        s.priorities.push_back(gmm_priorities(m));
        s.ci.push_back(saaty_ci(m));
    }
    return s;
}

double linear_map(Point X, Point Y, double x) {
    if (X.x == Y.x) {
        throw DegenerateMapError("cannot draw a line through two points with abscissa " +
                                 std::to_string(X.x));
    }
    const double t = (x - X.x) / (Y.x - X.x);
    return (1.0 - t) * X.y + t * Y.y;
}

DistanceProfile preferential_distances(const PanelSummary& summary, DistanceMetric metric,
                                       AggregateScale reference) {
    const auto k = summary.experts();
    const auto group = aggregate_scores(summary.priorities, ExpertWeights::uniform(k), reference);
    DistanceProfile profile;
    profile.d.reserve(k);
    for (const auto& w : summary.priorities) profile.d.push_back(distance(metric, group, w));
    return profile;
}

DistanceProfile preferential_distances(const ExpertPanel& panel, DistanceMetric metric) {
    PanelSummary s;
    s.priorities = individual_priorities(panel);
    return preferential_distances(s, metric);
}

DistanceProfile inconsistency_distances(std::span<const double> inconsistency) {
    if (inconsistency.empty()) return {};
    const double mean = std::accumulate(inconsistency.begin(), inconsistency.end(), 0.0) /
                        static_cast<double>(inconsistency.size());
    DistanceProfile profile;
    profile.d.reserve(inconsistency.size());
    for (double i : inconsistency) profile.d.push_back(i - mean);
    return profile;
}

std::vector<double> apdd_scores(const PanelSummary& summary, const ApddConfig& config) {
    const auto profile = preferential_distances(summary, config.metric, config.reference);
    const auto& d = profile.d;
    const double d_min = *std::min_element(d.begin(), d.end());
    const double d_max = *std::max_element(d.begin(), d.end());
    // identical experts can differ in the last bit after aggregation
    if (!(d_max - d_min > 1e-12)) return uniform_scores(d.size());

    const Point closest{d_min, config.scale.h};
    const Point farthest{d_max, config.scale.l};
    std::vector<double> f;
    f.reserve(d.size());
    for (double x : d) f.push_back(linear_map(closest, farthest, x));
    return f;
}

ExpertWeights apdd_weights(const PanelSummary& summary, const ApddConfig& config) {
    return ExpertWeights::normalize(apdd_scores(summary, config));
}

ExpertWeights apdd_weights(const ExpertPanel& panel, const ApddConfig& config) {
    PanelSummary s;
    s.priorities = individual_priorities(panel);
    return apdd_weights(s, config);
}

CredibilityScale3 credibility_from_matrix(const PCMatrix& credibility) {
    if (credibility.size() != 3) {
        throw ShapeError("a credibility matrix is 3x3, got " + std::to_string(credibility.size()));
    }
    const auto w = gmm_priorities(credibility);
    if (!(w[0] > w[1] && w[1] > w[2])) {
        throw CredibilityOrderError("credibility matrix must rank min > mid > max inconsistency "
                                    "experts, got (" +
                                    std::to_string(w[0]) + ", " + std::to_string(w[1]) + ", " +
                                    std::to_string(w[2]) + ")");
    }
    return {w[0], w[1], w[2]};
}

PCMatrix example_credibility_matrix() {
    const double upper[] = {2.0, 7.0, 4.0};
    return PCMatrix::from_upper_triangle(3, upper);
}

CredibilityScale3 procedural_credibility(double i_min, double i_mid, double i_max, double gain) {
    if (!(i_min > 0.0)) {
        throw DomainError("procedural credibility needs a positive minimal inconsistency");
    }
    if (!(i_min <= i_mid && i_mid <= i_max)) {
        throw DomainError("procedural credibility needs I_min <= I_mid <= I_max");
    }
    if (!(gain >= 1.0)) throw DomainError("procedural credibility gain must be >= 1");
    return CredibilityScale3::from_ratios(gain * i_max / i_min, gain * i_mid / i_min, 1.0);
}

std::optional<AidAnchors> aid_anchors(std::span<const double> inconsistency,
                                      const AidConfig& config) {
    if (inconsistency.empty()) return std::nullopt;
    const auto d = inconsistency_distances(inconsistency).d;
    const std::size_t lo = index_of_min(d);
    const std::size_t hi = index_of_max(d);
    std::size_t mid = 0;
    for (std::size_t i = 1; i < d.size(); ++i)
        if (std::abs(d[i]) < std::abs(d[mid])) mid = i;

    if (d[lo] == d[mid] || d[mid] == d[hi] || d[lo] == d[hi]) return std::nullopt;

    const auto scale = resolve_scale(config, inconsistency, lo, mid, hi);
    return AidAnchors{lo, mid, hi, {d[lo], scale.h}, {d[mid], scale.m}, {d[hi], scale.l}};
}

std::vector<double> aid_scores(std::span<const double> inconsistency, const AidConfig& config) {
    const auto anchors = aid_anchors(inconsistency, config);
    if (!anchors) return uniform_scores(inconsistency.size());
    const auto d = inconsistency_distances(inconsistency).d;
    std::vector<double> f;
    f.reserve(d.size());
    for (double x : d) {
        f.push_back(x < 0.0 ? linear_map(anchors->a, anchors->b, x)
                            : linear_map(anchors->b, anchors->c, x));
    }
    return f;
}

ExpertWeights aid_weights(const PanelSummary& summary, const AidConfig& config) {
    return ExpertWeights::normalize(aid_scores(summary.ci, config));
}

ExpertWeights aid_weights(const ExpertPanel& panel, const CredibilityScale3& scale) {
    std::vector<double> ci;
    ci.reserve(panel.experts());
    for (const auto& m : panel) ci.push_back(saaty_ci(m));
    return ExpertWeights::normalize(aid_scores(ci, AidConfig{scale}));
}

ExpertWeights mx_weights(const PanelSummary& summary, const RobustConfig& config) {
    const double beta = config.beta;
    if (!(beta >= 0.0 && beta <= 1.0)) {
        throw DomainError("mixing coefficient beta must lie in [0, 1], got " + std::to_string(beta));
    }
    const auto r1 = apdd_weights(summary, config.apdd);
    const auto r2 = aid_weights(summary, config.aid);
    std::vector<double> r(r1.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = beta * r1[i] + (1.0 - beta) * r2[i];
    return ExpertWeights(std::move(r));
}

ExpertWeights mx_weights(const ExpertPanel& panel, const RobustConfig& config) {
    return mx_weights(PanelSummary::of(panel), config);
}

ExpertWeights robust_weights(const PanelSummary& summary, Method method,
                             const RobustConfig& config) {
    switch (method) {
    case Method::classic: return ExpertWeights::uniform(summary.experts());
    case Method::apdd: return apdd_weights(summary, config.apdd);
    case Method::aid: return aid_weights(summary, config.aid);
    case Method::mx: return mx_weights(summary, config);
    }
    return ExpertWeights::uniform(summary.experts());
}

PriorityVector robust_aggregate(const ExpertPanel& panel, Method method, const RobustConfig& config) {
    const auto summary = PanelSummary::of(panel);
    return aip(summary.priorities, robust_weights(summary, method, config));
}

std::vector<double> robust_scores(const PanelSummary& summary, Method method,
                                  const RobustConfig& config, AggregateScale scale) {
    return aggregate_scores(summary.priorities, robust_weights(summary, method, config), scale);
}

} // namespace gahp
