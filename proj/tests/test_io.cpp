#include <doctest.h>

#include <filesystem>
#include <random>
#include <sstream>

#include "gahp/io.hpp"
#include "support.hpp"

using namespace gahp;

TEST_CASE("panel files load and re-symmetrize") {
    const auto f = read_panel(testing::data_path("lobbying_panel.json"));
    CHECK(f.ids.size() == 8);
    CHECK(f.ids[6] == "e7");
    CHECK(f.panel.alternatives() == 4);
    CHECK(f.panel[0](1, 0) == 1.0 / 1.322);
}

TEST_CASE("panel round trip") {
    std::mt19937 gen(113);
    const auto panel = testing::random_panel(6, 5, gen);
    const std::vector<std::string> ids{"a", "b", "c", "d", "e", "f"};
    const auto back = parse_panel(format_panel(panel, ids));
    CHECK(back.ids == ids);
    for (std::size_t q = 0; q < 6; ++q)
        CHECK(testing::near_all(back.panel[q].data(), panel[q].data(), 1e-12));

    const auto path = std::filesystem::temp_directory_path() / "gahp_round_trip.json";
    write_panel(path, panel, ids);
    CHECK(read_panel(path).panel == back.panel);
    std::filesystem::remove(path);
}

TEST_CASE("panel parse errors") {
    CHECK_THROWS_AS(parse_panel("{"), ParseError);
    CHECK_THROWS_AS(parse_panel(R"({"n": 2})"), ParseError);
    CHECK_THROWS_AS(parse_panel(R"({"n": 2, "experts": []})"), ParseError);
    CHECK_THROWS_AS(parse_panel(R"({"n": 2, "experts": [{"id": "x", "matrix": [[1, 2]]}]})"),
                    ParseError);
    CHECK_THROWS_AS(parse_panel(R"({"n": 2, "experts": [{"id": "x", "matrix": [[1, "a"], [1, 1]]}]})"),
                    ParseError);
    CHECK_THROWS_AS(
        parse_panel(R"({"n": 2, "experts": [{"id": "x", "matrix": [[1, 2], [0.5, 1]]},
                                            {"id": "x", "matrix": [[1, 2], [0.5, 1]]}]})"),
        ParseError);
    CHECK_THROWS_AS(read_panel(testing::fixture_path("malformed.json")), ParseError);
    CHECK_THROWS_AS(read_panel(testing::fixture_path("wrong_shape.json")), ParseError);
    CHECK_THROWS_AS(read_panel(testing::fixture_path("does_not_exist.json")), IoError);
}

TEST_CASE("panel domain errors name the expert and cell") {
    try {
        read_panel(testing::fixture_path("non_reciprocal.json"));
        FAIL("expected a domain error");
    } catch (const DomainError& e) {
        const std::string msg = e.what();
        CHECK(msg.find("e1") != std::string::npos);
        CHECK(msg.find("(1,2)") != std::string::npos);
    }
    CHECK_THROWS_AS(read_panel(testing::fixture_path("negative_entry.json")), DomainError);
}

TEST_CASE("config parsing") {
    const auto cfg = read_config(testing::data_path("full_config.json"));
    CHECK(cfg.corpus.alphas.size() == 40);
    CHECK(cfg.corpus.counts.size() == 3);
    CHECK(cfg.corpus.panel_size == 20);

    const auto c = parse_config(R"({
        "seed": 5, "alphas": [1.5, 2.5], "metric": "chebyshev", "h": 4, "l": 2,
        "credibility": {"matrix": [2, 7, 4]}, "beta": 0.25, "saturation": 7,
        "max_bribes": 3, "recompute_support": true, "epsilon_distribution": "uniform",
        "compare_scale": "raw", "apdd_reference": "normalized", "workers": 2})");
    CHECK(c.corpus.seed == 5);
    CHECK(c.corpus.alphas == std::vector<double>{1.5, 2.5});
    CHECK(c.experiment.robust.apdd.metric == DistanceMetric::chebyshev);
    CHECK(c.experiment.robust.apdd.scale.h == 4);
    CHECK(c.experiment.robust.beta == 0.25);
    CHECK(c.experiment.attack.saturation == 7);
    CHECK(c.experiment.attack.max_bribes == std::optional<std::size_t>(3));
    CHECK(c.experiment.attack.recompute_support);
    CHECK(c.corpus.epsilon == EpsilonDistribution::uniform);
    CHECK(c.experiment.compare_scale == AggregateScale::raw);
    CHECK(c.workers == 2);
    const auto& s = std::get<CredibilityScale3>(c.experiment.robust.aid.credibility);
    CHECK(std::abs(s.h - 0.603) <= 1e-3);

    const auto p = parse_config(R"({"credibility": {"procedural_gain": 2}})");
    CHECK(std::get<ProceduralCredibility>(p.experiment.robust.aid.credibility).gain == 2);

    CHECK_THROWS_AS(parse_config(R"({"bogus": 1})"), ParseError);
    CHECK_THROWS_AS(parse_config(R"({"seed": "x"})"), ParseError);
    CHECK_THROWS_AS(parse_config(R"({"metric": "cosine"})"), ParseError);
    CHECK_THROWS_AS(parse_config(R"({"beta": 2})"), DomainError);
    CHECK_THROWS_AS(parse_config(R"({"h": 1, "l": 5})"), DomainError);
    CHECK_THROWS_AS(parse_config(R"({"credibility": {"matrix": [1, 1, 1]}})"), CredibilityOrderError);
    CHECK_THROWS_AS(parse_config("[1"), ParseError);
}

TEST_CASE("method names") {
    CHECK(parse_method("APDD") == Method::apdd);
    CHECK(parse_method("mx") == Method::mx);
    CHECK_THROWS_AS(parse_method("median"), ParseError);
}

TEST_CASE("number formatting") {
    CHECK(format_number(0.0336123456) == "0.0336123");
    CHECK(format_number(kWholeCorpus) == "all");
}

TEST_CASE("summary CSV header") {
    std::ostringstream os;
    const std::vector<SummaryRow> rows{{0.1, "apdd", "wr_rate_cum", 0.5, 10}};
    write_summary_csv(os, rows);
    CHECK(os.str() == "bucket_ci,method,metric,value,count\n0.1,apdd,wr_rate_cum,0.5,10\n");
}
