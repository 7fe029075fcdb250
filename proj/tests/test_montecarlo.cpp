#include <doctest.h>

#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

#include "gahp/inconsistency.hpp"
#include "gahp/io.hpp"
#include "gahp/montecarlo.hpp"
#include "support.hpp"

using namespace gahp;

namespace {

CorpusConfig small_corpus(std::uint64_t seed = 99) {
    CorpusConfig cfg;
    cfg.seed = seed;
    cfg.counts = {{5, 4}, {6, 3}, {7, 3}};
    cfg.alphas = alpha_grid(1.1, 2.0, 0.1);
    cfg.panel_size = 8;
    return cfg;
}

} // namespace

TEST_CASE("uniform01 stays in the open unit interval and is reproducible") {
    Rng a(5), b(5);
    for (int i = 0; i < 10000; ++i) {
        const double x = a.uniform01();
        CHECK(x > 0.0);
        CHECK(x < 1.0);
        CHECK(x == b.uniform01());
    }
    auto s1 = Rng::substream(5, 1), s2 = Rng::substream(5, 2), s1b = Rng::substream(5, 1);
    const double x1 = s1.uniform01();
    CHECK(x1 == s1b.uniform01());
    CHECK(x1 != s2.uniform01());
}

TEST_CASE("random priority vectors are flat Dirichlet draws") {
    Rng rng(13);
    std::vector<double> mean(5, 0.0);
    const int draws = 10000;
    for (int t = 0; t < draws; ++t) {
        const auto w = random_priority_vector(5, rng);
        CHECK(std::abs(std::accumulate(w.begin(), w.end(), 0.0) - 1) <= 1e-12);
        for (std::size_t i = 0; i < 5; ++i) mean[i] += w[i] / draws;
    }
    for (double m : mean) CHECK(std::abs(m - 0.2) <= 0.01);
    Rng r1(3), r2(3);
    CHECK(random_priority_vector(6, r1) == random_priority_vector(6, r2));
    CHECK_THROWS_AS(random_priority_vector(1, r1), ShapeError);
}

TEST_CASE("perturbation stays within the disturbance bound") {
    Rng rng(17);
    const auto c = consistent_matrix_from_priorities(PriorityVector({0.4, 0.3, 0.2, 0.1}));
    CHECK(perturb(c, 1.0, rng) == c);
    for (double alpha : {1.1, 2.0, 5.0})
        for (auto dist : {EpsilonDistribution::log_uniform, EpsilonDistribution::uniform}) {
            const auto p = perturb(c, alpha, rng, dist);
            for (std::size_t i = 0; i < 4; ++i)
                for (std::size_t j = 0; j < 4; ++j) {
                    const double e = p(i, j) / c(i, j);
                    CHECK(e >= 1 / alpha - 1e-12);
                    CHECK(e <= alpha + 1e-12);
                }
        }
    CHECK_THROWS_AS(perturb(c, 0.9, rng), DomainError);
}

TEST_CASE("alpha grid") {
    const auto a = alpha_grid(1.1, 5.0, 0.1);
    CHECK(a.size() == 40);
    CHECK(a.front() == 1.1);
    CHECK(a[9] == 2.0);
    CHECK(a.back() == 5.0);
}

TEST_CASE("corpus shape and determinism") {
    const auto cfg = small_corpus();
    const auto corpus = generate_corpus(cfg, Execution::serial);
    CHECK(corpus.size() == 100);
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const auto& s = corpus[i];
        CHECK(s.id == i);
        CHECK(s.panel.experts() == 8);
        CHECK(s.mean_ci == panel_mean_ci(s.panel));
        const auto order = ranking_order(s.base_vector);
        CHECK(s.base_vector[order[0]] - s.base_vector[order[1]] >= cfg.min_top_gap);
        const auto base = consistent_matrix_from_priorities(s.base_vector);
        for (const auto& m : s.panel)
            for (std::size_t a = 0; a < m.size(); ++a)
                for (std::size_t b = 0; b < m.size(); ++b) {
                    CHECK(m(a, b) / base(a, b) <= s.alpha * (1 + 1e-12));
                    CHECK(m(a, b) / base(a, b) >= (1 - 1e-12) / s.alpha);
                }
    }
    CHECK(corpus[0].base_vector.size() == 5);
    CHECK(corpus[99].base_vector.size() == 7);

    const auto again = generate_corpus(cfg, Execution::parallel);
    REQUIRE(again.size() == corpus.size());
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        CHECK(again[i].panel == corpus[i].panel);
        CHECK(again[i].base_vector == corpus[i].base_vector);
    }
}

TEST_CASE("default corpus has 4000 scenarios") {
    CorpusConfig cfg;
    cfg.panel_size = 1;
    CHECK(generate_corpus(cfg).size() == 4000);
}

TEST_CASE("mean CI grows with alpha") {
    CorpusConfig cfg = small_corpus(5);
    cfg.counts = {{5, 10}, {6, 10}, {7, 10}};
    cfg.alphas = {1.1, 1.5, 2.0, 3.0, 4.0, 5.0};
    const auto corpus = generate_corpus(cfg);
    std::map<double, double> avg;
    for (const auto& s : corpus) avg[s.alpha] += s.mean_ci / 30.0;
    double prev = -1;
    for (const auto& [alpha, ci] : avg) {
        CHECK(ci > prev);
        prev = ci;
    }
}

TEST_CASE("experiment 1 records") {
    const auto corpus = generate_corpus(small_corpus());
    const auto recs = experiment1(corpus, {});
    REQUIRE(recs.size() == corpus.size());
    for (const auto& r : recs) {
        CHECK(r.attack_succeeded);
        CHECK_FALSE(r.vacuous);
        CHECK(r.bribes_used >= 1);
        for (const auto& m : r.methods) {
            if (m.ranking_restored) CHECK(m.winner_restored);
            CHECK(m.distance >= 0.0);
        }
    }
    const auto serial = experiment1(corpus, {}, Execution::serial);
    for (std::size_t i = 0; i < recs.size(); ++i) {
        CHECK(serial[i].bribes_used == recs[i].bribes_used);
        for (std::size_t m = 0; m < 3; ++m) CHECK(serial[i].methods[m].restored == recs[i].methods[m].restored);
    }
}

TEST_CASE("zero disturbance: the bribed expert is the outlier and APDD restores the winner") {
    const auto c = consistent_matrix_from_priorities(PriorityVector({0.5, 0.3, 0.2}));
    const Scenario s{0, 0, PriorityVector({0.5, 0.3, 0.2}), 1.0, ExpertPanel({c, c, c}), 0.0};
    const auto r = run_experiment1(s, {});
    CHECK(r.attack_succeeded);
    CHECK(r.methods[0].winner_restored);
}

TEST_CASE("experiment 2 records") {
    const auto corpus = generate_corpus(small_corpus());
    const auto recs = experiment2(corpus, {});
    const auto serial = experiment2(corpus, {}, Execution::serial);
    REQUIRE(recs.size() == corpus.size());
    for (std::size_t i = 0; i < recs.size(); ++i)
        for (std::size_t m = 0; m < 3; ++m) {
            CHECK(recs[i].methods[m].distance >= 0.0);
            CHECK(recs[i].methods[m].distance == serial[i].methods[m].distance);
            CHECK(recs[i].methods[m].kendall == serial[i].methods[m].kendall);
        }

    const auto c = consistent_matrix_from_priorities(PriorityVector({0.5, 0.3, 0.2}));
    const Scenario same{0, 0, PriorityVector({0.5, 0.3, 0.2}), 1.0, ExpertPanel({c, c, c}), 0.0};
    for (const auto& m : run_experiment2(same, {}).methods) {
        CHECK(m.distance == 0.0);
        CHECK(m.kendall == 0);
    }
}

TEST_CASE("bucket edges") {
    CHECK(bucket_upper_edge(0.0, 0.01) == doctest::Approx(0.01));
    CHECK(bucket_upper_edge(0.004, 0.01) == doctest::Approx(0.01));
    CHECK(bucket_upper_edge(0.01, 0.01) == doctest::Approx(0.01));
    CHECK(bucket_upper_edge(0.0101, 0.01) == doctest::Approx(0.02));
    CHECK(bucket_upper_edge(0.095, 0.01) == doctest::Approx(0.1));
}

TEST_CASE("summaries") {
    const auto corpus = generate_corpus(small_corpus());
    const auto r1 = experiment1(corpus, {});
    const auto rows = summarize(r1);
    for (const auto& row : rows)
        if (row.metric.find("rate") != std::string::npos) {
            CHECK(row.value >= 0.0);
            CHECK(row.value <= 1.0);
        }
    for (const auto& row : rows)
        if (row.metric == "wr_rate")
            CHECK(row.value >= find_row(rows, "rr_rate", row.method, row.bucket_ci).value);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto& a = rows[i - 1];
        const auto& b = rows[i];
        CHECK(std::tie(a.metric, a.method, a.bucket_ci) < std::tie(b.metric, b.method, b.bucket_ci));
    }
    CHECK(find_row(rows, "success_rate", "attack", kWholeCorpus).value == 1.0);
    CHECK_THROWS_AS(find_row(rows, "nope", "apdd", kWholeCorpus), std::out_of_range);
    CHECK_THROWS_AS(summarize(std::span<const Experiment1Record>{}), EmptyReportError);
    CHECK_THROWS_AS(summarize(std::span<const Experiment2Record>{}), EmptyReportError);

    // all records in one bucket: one row per metric and method there
    SummaryConfig wide;
    wide.bucket_width = 10.0;
    wide.threshold = 10.0;
    const auto r2 = experiment2(corpus, {});
    const auto one = summarize(r2, wide);
    std::size_t per_bucket = 0;
    for (const auto& row : one)
        if (row.metric == "manhattan" && row.bucket_ci == 10.0) ++per_bucket;
    CHECK(per_bucket == 3);
}

TEST_CASE("seeded runs produce identical CSV") {
    auto run = [] {
        const auto corpus = generate_corpus(small_corpus(1234));
        std::ostringstream a, b;
        const auto r1 = experiment1(corpus, {});
        write_records_csv(a, r1);
        write_summary_csv(a, summarize(r1));
        const auto r2 = experiment2(corpus, {});
        write_records_csv(b, r2);
        write_summary_csv(b, summarize(r2));
        return a.str() + b.str();
    };
    CHECK(run() == run());
}
