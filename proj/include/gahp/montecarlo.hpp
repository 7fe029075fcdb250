#ifndef GAHP_MONTECARLO_HPP
#define GAHP_MONTECARLO_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gahp/aggregate.hpp"
#include "gahp/attack.hpp"
#include "gahp/core.hpp"
#include "gahp/robust.hpp"

namespace gahp {

/// Seeded 64-bit generator with a platform-independent uniform draw.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Independent stream for item `stream` of a run seeded with `seed`.
    static Rng substream(std::uint64_t seed, std::uint64_t stream);

    /// Uniform on the open interval (0, 1), 53 bits.
    double uniform01();

private:
    std::mt19937_64 engine_;
};

enum class EpsilonDistribution { log_uniform, uniform };

/// How scenario loops are run. `serial` is the reference path; `parallel`
/// spreads scenarios over OpenMP threads and produces identical output.
enum class Execution { serial, parallel };

/// Flat Dirichlet draw (normalized unit exponentials).
PriorityVector random_priority_vector(std::size_t n, Rng& rng);

/// Multiplies every upper-triangle entry by an independent factor in
/// [1/alpha, alpha] and rebuilds the lower triangle as its reciprocal.
PCMatrix perturb(const PCMatrix& c, double alpha, Rng& rng,
                 EpsilonDistribution dist = EpsilonDistribution::log_uniform);

/// start, start + step, ..., stop (inclusive), free of accumulated drift.
std::vector<double> alpha_grid(double start, double stop, double step);

struct CorpusConfig {
    std::uint64_t seed = 20240101;
    /// (alternatives, number of base vectors), in generation order.
    std::vector<std::pair<std::size_t, std::size_t>> counts{{5, 34}, {6, 33}, {7, 33}};
    std::vector<double> alphas = alpha_grid(1.1, 5.0, 0.1);
    std::size_t panel_size = 20;
    EpsilonDistribution epsilon = EpsilonDistribution::log_uniform;
    /// Base vectors whose two largest priorities are closer than this are redrawn.
    double min_top_gap = 1e-6;
};

struct Scenario {
    std::size_t id;
    std::size_t base_id;
    PriorityVector base_vector;
    double alpha;
    ExpertPanel panel;
    double mean_ci;
};

/// One scenario per (base vector, alpha) pair, ordered by base vector then
/// alpha; id = base_id * alphas.size() + alpha index.
std::vector<Scenario> generate_corpus(const CorpusConfig& config,
                                      Execution exec = Execution::parallel);

inline constexpr std::array<Method, 3> kRobustMethods{Method::apdd, Method::aid, Method::mx};

std::string to_string(Method m);

struct ExperimentConfig {
    RobustConfig robust{};
    AttackConfig attack{};
    /// Scale on which aggregates are compared.
    AggregateScale compare_scale = AggregateScale::normalized;
};

enum class Restoration { failure, winner, ranking };

std::string to_string(Restoration r);

struct DefenseOutcome {
    bool winner_restored;   // WR: top two in honest order
    bool ranking_restored;  // RR: whole order as honest
    std::vector<double> restored;
    double distance;  // manhattan_mean(honest, restored)

    Restoration restoration() const noexcept {
        if (ranking_restored) return Restoration::ranking;
        return winner_restored ? Restoration::winner : Restoration::failure;
    }
};

struct Experiment1Record {
    std::size_t scenario_id;
    std::size_t alternatives;
    double alpha;
    double mean_ci;
    bool attack_succeeded;
    bool vacuous;  // honest runner-up already first; excluded from rates
    std::size_t bribes_used;
    std::array<DefenseOutcome, 3> methods;  // indexed like kRobustMethods
};

struct DisturbanceOutcome {
    double distance;  // manhattan_mean(honest, robust)
    std::size_t kendall;
};

struct Experiment2Record {
    std::size_t scenario_id;
    std::size_t alternatives;
    double alpha;
    double mean_ci;
    std::array<DisturbanceOutcome, 3> methods;
};

/// Attack every scenario, then defend the manipulated panel with APDD, AID
/// and MX. Records come back in scenario order.
std::vector<Experiment1Record> experiment1(std::span<const Scenario> scenarios,
                                           const ExperimentConfig& config,
                                           Execution exec = Execution::parallel);

Experiment1Record run_experiment1(const Scenario& scenario, const ExperimentConfig& config);

/// Compare the classic aggregate of each honest panel with its APDD, AID and
/// MX aggregates.
std::vector<Experiment2Record> experiment2(std::span<const Scenario> scenarios,
                                           const ExperimentConfig& config,
                                           Execution exec = Execution::parallel);

Experiment2Record run_experiment2(const Scenario& scenario, const ExperimentConfig& config);

/// One row of a summary table. `bucket_ci` is the upper edge of a CI
/// bucket, the cumulative threshold for `*_cum` metrics, and +inf for
/// whole-corpus rows.
struct SummaryRow {
    double bucket_ci;
    std::string method;
    std::string metric;
    double value;
    std::size_t count;
};

struct SummaryConfig {
    double bucket_width = 0.01;
    double threshold = 0.1;
};

inline constexpr double kWholeCorpus = std::numeric_limits<double>::infinity();

/// Upper edge of the bucket holding `ci`.
double bucket_upper_edge(double ci, double width);

/// Rows sorted by (metric, method, bucket). Throws EmptyReportError on no input.
std::vector<SummaryRow> summarize(std::span<const Experiment1Record> records,
                                  const SummaryConfig& config = {});
std::vector<SummaryRow> summarize(std::span<const Experiment2Record> records,
                                  const SummaryConfig& config = {});

/// Looks up a row; throws std::out_of_range when absent.
const SummaryRow& find_row(std::span<const SummaryRow> rows, const std::string& metric,
                           const std::string& method, double bucket_ci);

} // namespace gahp

#endif
