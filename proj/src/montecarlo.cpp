#include "gahp/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <map>
#include <optional>
#include <stdexcept>
#include <tuple>

#include "gahp/derive.hpp"
#include "gahp/inconsistency.hpp"
#include "gahp/metrics.hpp"

namespace gahp {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

double top_gap(const PriorityVector& w) {
    const auto order = ranking_order(w);
    return w[order[0]] - w[order[1]];
}

// Runs body(i) for i in [0, count). The parallel path only changes which
// thread handles an index; every index writes its own slot. An exception
// may not leave an OpenMP region, so the first one is carried out and
// rethrown.
template <class Body>
void for_each_index(std::size_t count, Execution exec, Body&& body) {
    const auto total = static_cast<std::ptrdiff_t>(count);
    if (exec == Execution::serial) {
        for (std::ptrdiff_t i = 0; i < total; ++i) body(static_cast<std::size_t>(i));
        return;
    }
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 4)
    for (std::ptrdiff_t i = 0; i < total; ++i) {
        try {
            body(static_cast<std::size_t>(i));
        } catch (...) {
#pragma omp critical(gahp_failure)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
}

template <class T>
std::vector<T> unwrap(std::vector<std::optional<T>>&& slots) {
    std::vector<T> out;
    out.reserve(slots.size());
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

PanelSummary replace_experts(PanelSummary summary, const ExpertPanel& panel,
                             std::span<const std::size_t> changed) {
    for (std::size_t q : changed) {
        summary.priorities[q] = gmm_priorities(panel[q]);
        summary.ci[q] = saaty_ci(panel[q]);
    }
    return summary;
}

bool same_top_two(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    return a[0] == b[0] && a[1] == b[1];
}

} // namespace

Rng Rng::substream(std::uint64_t seed, std::uint64_t stream) {
    return Rng(splitmix64(splitmix64(seed) ^ splitmix64(stream + 0x632be59bd9b4e019ULL)));
}

double Rng::uniform01() {
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
}

PriorityVector random_priority_vector(std::size_t n, Rng& rng) {
    if (n < 2) throw ShapeError("a random priority vector needs at least 2 alternatives");
    std::vector<double> e(n);
    for (double& x : e) x = -std::log(rng.uniform01());
    return PriorityVector::normalize(std::move(e));
}

PCMatrix perturb(const PCMatrix& c, double alpha, Rng& rng, EpsilonDistribution dist) {
    if (!(alpha >= 1.0)) throw DomainError("disturbance bound alpha must be >= 1");
    auto upper = c.upper_triangle();
    const double log_alpha = std::log(alpha);
    for (double& x : upper) {
        const double u = rng.uniform01();
        const double eps = dist == EpsilonDistribution::log_uniform
                               ? std::exp((2.0 * u - 1.0) * log_alpha)
                               : 1.0 / alpha + u * (alpha - 1.0 / alpha);
        x *= eps;
    }
    return PCMatrix::from_upper_triangle(c.size(), upper);
}

std::vector<double> alpha_grid(double start, double stop, double step) {
    if (!(step > 0.0) || stop < start) throw DomainError("invalid alpha grid");
    const auto steps = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9));
    std::vector<double> grid;
    grid.reserve(steps + 1);
    for (std::size_t i = 0; i <= steps; ++i) {
        // Round to 12 decimals so 1.1 + 3 * 0.1 prints as 1.4.
        grid.push_back(std::round((start + static_cast<double>(i) * step) * 1e12) / 1e12);
    }
    return grid;
}

std::vector<Scenario> generate_corpus(const CorpusConfig& config, Execution exec) {
    if (config.panel_size == 0) throw DomainError("panel size must be positive");
    if (config.alphas.empty()) throw DomainError("alpha grid must not be empty");

    Rng base_rng(config.seed);
    std::vector<PriorityVector> bases;
    for (const auto& [n, count] : config.counts) {
        for (std::size_t c = 0; c < count; ++c) {
            auto w = random_priority_vector(n, base_rng);
            while (top_gap(w) < config.min_top_gap) w = random_priority_vector(n, base_rng);
            bases.push_back(std::move(w));
        }
    }

    const std::size_t per_base = config.alphas.size();
    std::vector<std::optional<Scenario>> slots(bases.size() * per_base);
    for_each_index(slots.size(), exec, [&](std::size_t id) {
        const std::size_t b = id / per_base;
        const double alpha = config.alphas[id % per_base];
        Rng rng = Rng::substream(config.seed, id);
        const auto consistent = consistent_matrix_from_priorities(bases[b]);
        std::vector<PCMatrix> matrices;
        matrices.reserve(config.panel_size);
        for (std::size_t q = 0; q < config.panel_size; ++q)
            matrices.push_back(perturb(consistent, alpha, rng, config.epsilon));
        ExpertPanel panel(std::move(matrices));
        const double mean_ci = panel_mean_ci(panel);
        slots[id].emplace(Scenario{id, b, bases[b], alpha, std::move(panel), mean_ci});
    });
    return unwrap(std::move(slots));
}

std::string to_string(Method m) {
    switch (m) {
    case Method::classic: return "classic";
    case Method::apdd: return "apdd";
    case Method::aid: return "aid";
    case Method::mx: return "mx";
    }
    return "unknown";
}

std::string to_string(Restoration r) {
    switch (r) {
    case Restoration::failure: return "failure";
    case Restoration::winner: return "wr";
    case Restoration::ranking: return "rr";
    }
    return "unknown";
}

Experiment1Record run_experiment1(const Scenario& scenario, const ExperimentConfig& config) {
    const auto honest_summary = PanelSummary::of(scenario.panel);
    const auto uniform = ExpertWeights::uniform(scenario.panel.experts());
    const auto honest =
        aggregate_scores(honest_summary.priorities, uniform, config.compare_scale);
    const auto honest_order = ranking_order(honest);

    const auto attack = run_attack(scenario.panel, honest_summary.priorities, config.attack);
    const auto manipulated =
        replace_experts(honest_summary, attack.manipulated_panel, attack.bribed);

    Experiment1Record rec{scenario.id,
                          scenario.panel.alternatives(),
                          scenario.alpha,
                          scenario.mean_ci,
                          attack.succeeded,
                          attack.succeeded && attack.bribed.empty(),
                          attack.bribed.size(),
                          {}};
    for (std::size_t m = 0; m < kRobustMethods.size(); ++m) {
        auto restored =
            robust_scores(manipulated, kRobustMethods[m], config.robust, config.compare_scale);
        const auto order = ranking_order(restored);
        auto& out = rec.methods[m];
        out.winner_restored = same_top_two(order, honest_order);
        out.ranking_restored = order == honest_order;
        out.distance = manhattan_mean(honest, restored);
        out.restored = std::move(restored);
    }
    return rec;
}

std::vector<Experiment1Record> experiment1(std::span<const Scenario> scenarios,
                                           const ExperimentConfig& config, Execution exec) {
    std::vector<std::optional<Experiment1Record>> slots(scenarios.size());
    for_each_index(scenarios.size(), exec,
                   [&](std::size_t i) { slots[i].emplace(run_experiment1(scenarios[i], config)); });
    return unwrap(std::move(slots));
}

Experiment2Record run_experiment2(const Scenario& scenario, const ExperimentConfig& config) {
    const auto summary = PanelSummary::of(scenario.panel);
    const auto honest = aggregate_scores(
        summary.priorities, ExpertWeights::uniform(scenario.panel.experts()), config.compare_scale);
    Experiment2Record rec{scenario.id, scenario.panel.alternatives(), scenario.alpha,
                          scenario.mean_ci, {}};
    for (std::size_t m = 0; m < kRobustMethods.size(); ++m) {
        const auto robust =
            robust_scores(summary, kRobustMethods[m], config.robust, config.compare_scale);
        rec.methods[m] = {manhattan_mean(honest, robust), kendall_tau_distance(honest, robust)};
    }
    return rec;
}

std::vector<Experiment2Record> experiment2(std::span<const Scenario> scenarios,
                                           const ExperimentConfig& config, Execution exec) {
    std::vector<std::optional<Experiment2Record>> slots(scenarios.size());
    for_each_index(scenarios.size(), exec,
                   [&](std::size_t i) { slots[i].emplace(run_experiment2(scenarios[i], config)); });
    return unwrap(std::move(slots));
}

double bucket_upper_edge(double ci, double width) {
    const double idx = std::max(1.0, std::ceil(ci / width - 1e-9));
    return std::round(idx * width * 1e12) / 1e12;
}

namespace {

struct Mean {
    double sum = 0.0;
    std::size_t count = 0;
    void add(double x) {
        sum += x;
        ++count;
    }
    double value() const { return count ? sum / static_cast<double>(count) : 0.0; }
};

class RowSink {
public:
    void add(double bucket, const std::string& method, const std::string& metric, const Mean& m) {
        rows_.push_back({bucket, method, metric, m.value(), m.count});
    }

    std::vector<SummaryRow> sorted() && {
        std::sort(rows_.begin(), rows_.end(), [](const SummaryRow& a, const SummaryRow& b) {
            return std::tie(a.metric, a.method, a.bucket_ci) <
                   std::tie(b.metric, b.method, b.bucket_ci);
        });
        return std::move(rows_);
    }

private:
    std::vector<SummaryRow> rows_;
};

} // namespace

std::vector<SummaryRow> summarize(std::span<const Experiment1Record> records,
                                  const SummaryConfig& config) {
    if (records.empty()) throw EmptyReportError("no experiment 1 records to summarize");

    struct Stats {
        Mean wr, rr, distance;
    };
    constexpr std::size_t kMethods = kRobustMethods.size();
    std::map<double, std::array<Stats, kMethods>> buckets;
    std::array<Stats, kMethods> cumulative{}, whole{};
    Mean success, bribes, bribes_small;
    std::map<std::size_t, std::size_t> bribe_hist;
    std::size_t successes = 0;

    for (const auto& r : records) {
        success.add(r.attack_succeeded ? 1.0 : 0.0);
        if (r.attack_succeeded) {
            ++successes;
            bribes.add(static_cast<double>(r.bribes_used));
            bribes_small.add(r.bribes_used <= 3 ? 1.0 : 0.0);
            ++bribe_hist[r.bribes_used];
        }
        if (r.vacuous) continue;
        auto& bucket = buckets[bucket_upper_edge(r.mean_ci, config.bucket_width)];
        for (std::size_t m = 0; m < kMethods; ++m) {
            const auto& o = r.methods[m];
            for (auto* s : {&bucket[m], &whole[m]}) {
                s->wr.add(o.winner_restored ? 1.0 : 0.0);
                s->rr.add(o.ranking_restored ? 1.0 : 0.0);
                s->distance.add(o.distance);
            }
            if (r.mean_ci <= config.threshold) {
                cumulative[m].wr.add(o.winner_restored ? 1.0 : 0.0);
                cumulative[m].rr.add(o.ranking_restored ? 1.0 : 0.0);
                cumulative[m].distance.add(o.distance);
            }
        }
    }

    RowSink sink;
    for (std::size_t m = 0; m < kMethods; ++m) {
        const auto method = to_string(kRobustMethods[m]);
        for (const auto& [edge, stats] : buckets) {
            sink.add(edge, method, "wr_rate", stats[m].wr);
            sink.add(edge, method, "rr_rate", stats[m].rr);
            sink.add(edge, method, "restored_manhattan", stats[m].distance);
        }
        sink.add(config.threshold, method, "wr_rate_cum", cumulative[m].wr);
        sink.add(config.threshold, method, "rr_rate_cum", cumulative[m].rr);
        sink.add(config.threshold, method, "restored_manhattan_cum", cumulative[m].distance);
        sink.add(kWholeCorpus, method, "wr_rate", whole[m].wr);
        sink.add(kWholeCorpus, method, "rr_rate", whole[m].rr);
        sink.add(kWholeCorpus, method, "restored_manhattan", whole[m].distance);
    }
    sink.add(kWholeCorpus, "attack", "success_rate", success);
    sink.add(kWholeCorpus, "attack", "bribes_mean", bribes);
    sink.add(kWholeCorpus, "attack", "bribes_le3_rate", bribes_small);
    for (const auto& [b, count] : bribe_hist) {
        Mean share;
        share.sum = static_cast<double>(count);
        share.count = successes;
        sink.add(kWholeCorpus, "attack", "bribes_eq_" + std::to_string(b), share);
    }
    return std::move(sink).sorted();
}

std::vector<SummaryRow> summarize(std::span<const Experiment2Record> records,
                                  const SummaryConfig& config) {
    if (records.empty()) throw EmptyReportError("no experiment 2 records to summarize");

    struct Stats {
        Mean distance, kendall_zero;
    };
    constexpr std::size_t kMethods = kRobustMethods.size();
    std::map<double, std::array<Stats, kMethods>> buckets;
    std::array<Stats, kMethods> cumulative{}, whole{};
    std::array<std::map<std::size_t, std::size_t>, kMethods> kendall_hist;
    std::size_t cumulative_count = 0;
    std::size_t max_pairs = 0;

    for (const auto& r : records) {
        max_pairs = std::max(max_pairs, r.alternatives * (r.alternatives - 1) / 2);
        auto& bucket = buckets[bucket_upper_edge(r.mean_ci, config.bucket_width)];
        const bool in_cumulative = r.mean_ci <= config.threshold;
        if (in_cumulative) ++cumulative_count;
        for (std::size_t m = 0; m < kMethods; ++m) {
            const auto& o = r.methods[m];
            std::vector<Stats*> targets{&bucket[m], &whole[m]};
            if (in_cumulative) {
                targets.push_back(&cumulative[m]);
                ++kendall_hist[m][o.kendall];
            }
            for (auto* s : targets) {
                s->distance.add(o.distance);
                s->kendall_zero.add(o.kendall == 0 ? 1.0 : 0.0);
            }
        }
    }

    RowSink sink;
    for (std::size_t m = 0; m < kMethods; ++m) {
        const auto method = to_string(kRobustMethods[m]);
        for (const auto& [edge, stats] : buckets) {
            sink.add(edge, method, "manhattan", stats[m].distance);
            sink.add(edge, method, "kendall_zero_rate", stats[m].kendall_zero);
        }
        sink.add(config.threshold, method, "manhattan_cum", cumulative[m].distance);
        sink.add(config.threshold, method, "kendall_zero_rate_cum", cumulative[m].kendall_zero);
        for (std::size_t d = 0; d <= max_pairs; ++d) {
            Mean share;
            const auto it = kendall_hist[m].find(d);
            share.sum = it == kendall_hist[m].end() ? 0.0 : static_cast<double>(it->second);
            share.count = cumulative_count;
            sink.add(config.threshold, method, "kendall_eq_" + std::to_string(d), share);
        }
        sink.add(kWholeCorpus, method, "manhattan", whole[m].distance);
        sink.add(kWholeCorpus, method, "kendall_zero_rate", whole[m].kendall_zero);
    }
    return std::move(sink).sorted();
}

const SummaryRow& find_row(std::span<const SummaryRow> rows, const std::string& metric,
                           const std::string& method, double bucket_ci) {
    for (const auto& r : rows) {
        if (r.metric != metric || r.method != method) continue;
        const bool both_whole = std::isinf(r.bucket_ci) && std::isinf(bucket_ci);
        if (both_whole || std::abs(r.bucket_ci - bucket_ci) < 1e-9) return r;
    }
    throw std::out_of_range("no summary row " + metric + "/" + method);
}

} // namespace gahp
