// gahp: command-line front end for manipulation-resistant group AHP.
//
//   gahp aggregate  --input panel.json [--method classic|apdd|aid|mx] [--config cfg.json]
//   gahp attack     --input panel.json [--config cfg.json] [--out manipulated.json]
//   gahp experiment 1|2 [--config cfg.json] --out DIR [--seed S]
//   gahp gen        [--config cfg.json] --out corpus.jsonl [--seed S]
//   gahp inspect    --input panel.json
//
// Exit codes: 0 success, 2 parse error, 3 domain invariant violated, 4 I/O.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <omp.h>

#include "gahp/aggregate.hpp"
#include "gahp/attack.hpp"
#include "gahp/derive.hpp"
#include "gahp/inconsistency.hpp"
#include "gahp/io.hpp"
#include "gahp/montecarlo.hpp"
#include "gahp/robust.hpp"

namespace fs = std::filesystem;
using namespace gahp;

namespace {

enum ExitCode { kOk = 0, kParse = 2, kDomain = 3, kIo = 4 };

struct Options {
    std::string input;
    std::string config;
    std::string method = "classic";
    std::string out;
    std::optional<std::uint64_t> seed;
    int workers = 0;
    int which = 1;
};

RunConfig load_config(const Options& opt) {
    RunConfig cfg = opt.config.empty() ? RunConfig{} : read_config(opt.config);
    if (opt.seed) cfg.corpus.seed = *opt.seed;
    if (opt.workers > 0) cfg.workers = opt.workers;
    if (cfg.workers > 0) omp_set_num_threads(cfg.workers);
    return cfg;
}

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return buf;
}

void print_vector(std::ostream& os, std::span<const double> v) {
    os << '[';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << fmt(v[i]);
    os << ']';
}

std::string alt(std::size_t i) { return "a" + std::to_string(i + 1); }

int cmd_aggregate(const Options& opt) {
    const auto cfg = load_config(opt);
    const auto file = read_panel(opt.input);
    const auto method = parse_method(opt.method);
    const auto summary = PanelSummary::of(file.panel);
    const auto weights = robust_weights(summary, method, cfg.experiment.robust);

    std::cout << "alternatives: " << file.panel.alternatives()
              << "  experts: " << file.panel.experts() << "  method: " << to_string(method)
              << '\n';
    for (std::size_t q = 0; q < file.panel.experts(); ++q) {
        std::cout << "expert " << file.ids[q] << "  CI " << fmt(summary.ci[q]) << "  weight "
                  << fmt(weights[q]) << "  priorities ";
        print_vector(std::cout, summary.priorities[q]);
        std::cout << '\n';
    }
    const auto raw = weighted_geometric_scores(summary.priorities, weights);
    const auto normalized = PriorityVector::normalize(raw);
    std::cout << "aggregate (geometric mean): ";
    print_vector(std::cout, raw);
    std::cout << "\naggregate (normalized):     ";
    print_vector(std::cout, normalized);
    const auto w = argmax(raw);
    std::cout << "\nwinner: " << alt(w) << " score " << fmt(raw[w]) << " priority "
              << fmt(normalized[w]) << '\n';
    return kOk;
}

int cmd_attack(const Options& opt) {
    const auto cfg = load_config(opt);
    const auto file = read_panel(opt.input);
    const auto outcome = run_attack(file.panel, cfg.experiment.attack);

    const auto honest_priorities = individual_priorities(file.panel);
    const auto uniform = ExpertWeights::uniform(file.panel.experts());
    std::cout << "honest ranking:      ";
    print_vector(std::cout, weighted_geometric_scores(honest_priorities, uniform));
    std::cout << "\nwinner: " << alt(outcome.winner) << "  promoted: " << alt(outcome.runner_up)
              << "\nbribed: [";
    for (std::size_t i = 0; i < outcome.bribed.size(); ++i)
        std::cout << (i ? ", " : "") << outcome.bribed[i] + 1;
    std::cout << "]\nmanipulated ranking: ";
    print_vector(std::cout, weighted_geometric_scores(
                                individual_priorities(outcome.manipulated_panel), uniform));
    std::cout << "\nsuccess: " << (outcome.succeeded ? "true" : "false") << '\n';
    if (!opt.out.empty()) write_panel(opt.out, outcome.manipulated_panel, file.ids);
    return kOk;
}

void write_file(const fs::path& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path.string());
    out << contents;
    if (!out) throw IoError("failed writing " + path.string());
}

void ensure_directory(const fs::path& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec || !fs::is_directory(dir)) throw IoError("cannot create output directory " + dir.string());
}

void print_headline(const std::vector<SummaryRow>& rows, const std::string& metric,
                    double bucket) {
    for (auto m : kRobustMethods) {
        const auto& r = find_row(rows, metric, to_string(m), bucket);
        std::cout << to_string(m) << ' ' << metric << ' ' << format_number(r.value) << " (n="
                  << r.count << ")\n";
    }
}

int cmd_experiment(const Options& opt) {
    if (opt.out.empty()) throw ParseError("--out is required");
    const auto cfg = load_config(opt);
    ensure_directory(opt.out);

    const auto start = std::chrono::steady_clock::now();
    const auto corpus = generate_corpus(cfg.corpus);
    std::ostringstream records, summary;
    std::vector<SummaryRow> rows;
    if (opt.which == 1) {
        const auto recs = experiment1(corpus, cfg.experiment);
        rows = summarize(recs, cfg.summary);
        write_records_csv(records, recs);
    } else {
        const auto recs = experiment2(corpus, cfg.experiment);
        rows = summarize(recs, cfg.summary);
        write_records_csv(records, recs);
    }
    write_summary_csv(summary, rows);
    write_file(fs::path(opt.out) / "records.csv", records.str());
    write_file(fs::path(opt.out) / "summary.csv", summary.str());
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    std::cout << "experiment " << opt.which << ": " << corpus.size() << " scenarios in "
              << fmt(secs) << " s\n";
    const double t = cfg.summary.threshold;
    if (opt.which == 1) {
        print_headline(rows, "wr_rate_cum", t);
        print_headline(rows, "rr_rate_cum", t);
        print_headline(rows, "restored_manhattan_cum", t);
        const auto& success = find_row(rows, "success_rate", "attack", kWholeCorpus);
        const auto& small = find_row(rows, "bribes_le3_rate", "attack", kWholeCorpus);
        std::cout << "attack success_rate " << format_number(success.value)
                  << "  bribes_le3_rate " << format_number(small.value) << '\n';
    } else {
        print_headline(rows, "manhattan", kWholeCorpus);
        print_headline(rows, "kendall_zero_rate_cum", t);
    }
    return kOk;
}

int cmd_gen(const Options& opt) {
    if (opt.out.empty()) throw ParseError("--out is required");
    const auto cfg = load_config(opt);
    const auto corpus = generate_corpus(cfg.corpus);
    std::ostringstream os;
    write_corpus_jsonl(os, corpus);
    write_file(opt.out, os.str());
    std::cout << "wrote " << corpus.size() << " scenarios to " << opt.out << '\n';
    return kOk;
}

int cmd_inspect(const Options& opt) {
    const auto file = read_panel(opt.input);
    std::cout << "alternatives: " << file.panel.alternatives()
              << "  experts: " << file.panel.experts() << '\n';
    for (std::size_t q = 0; q < file.panel.experts(); ++q) {
        const auto& m = file.panel[q];
        const auto eig = evm_priorities(m);
        std::cout << "expert " << file.ids[q] << "  lambda_max " << fmt(eig.lambda_max) << "  CI "
                  << fmt(saaty_ci(m));
        if (m.size() >= 3) std::cout << "  K " << fmt(koczkodaj_k(m));
        std::cout << "\n  gmm ";
        print_vector(std::cout, gmm_priorities(m));
        std::cout << "\n  evm ";
        print_vector(std::cout, eig.priorities);
        std::cout << '\n';
    }
    std::cout << "mean CI " << fmt(panel_mean_ci(file.panel)) << '\n';
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Manipulation-resistant aggregation of pairwise-comparison panels"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--workers", opt.workers, "OpenMP threads for experiments (0 = default)");

    auto* aggregate = app.add_subcommand("aggregate", "aggregate a panel file");
    aggregate->add_option("--input", opt.input, "panel JSON file")->required();
    aggregate->add_option("--method", opt.method, "classic, apdd, aid or mx");
    aggregate->add_option("--config", opt.config, "config JSON file");

    auto* attack = app.add_subcommand("attack", "run the bribery attack on a panel file");
    attack->add_option("--input", opt.input, "panel JSON file")->required();
    attack->add_option("--config", opt.config, "config JSON file");
    attack->add_option("--out", opt.out, "write the manipulated panel here");

    auto* experiment = app.add_subcommand("experiment", "run Monte Carlo experiment 1 or 2");
    experiment->add_option("which", opt.which, "1 (attack/defense) or 2 (disturbance)")
        ->required()
        ->check(CLI::IsMember({1, 2}));
    experiment->add_option("--config", opt.config, "config JSON file");
    experiment->add_option("--out", opt.out, "output directory")->required();
    experiment->add_option("--seed", opt.seed, "override the corpus seed");
    experiment->add_option("--workers", opt.workers, "OpenMP threads");

    auto* gen = app.add_subcommand("gen", "write the scenario corpus as JSON lines");
    gen->add_option("--config", opt.config, "config JSON file");
    gen->add_option("--out", opt.out, "output file")->required();
    gen->add_option("--seed", opt.seed, "override the corpus seed");

    auto* inspect = app.add_subcommand("inspect", "per-matrix CI, Koczkodaj index and priorities");
    inspect->add_option("--input", opt.input, "panel JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kParse;
    }

    try {
        if (*aggregate) return cmd_aggregate(opt);
        if (*attack) return cmd_attack(opt);
        if (*experiment) return cmd_experiment(opt);
        if (*gen) return cmd_gen(opt);
        if (*inspect) return cmd_inspect(opt);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kParse;
    } catch (const IoError& e) {
        std::cerr << "i/o error: " << e.what() << '\n';
        return kIo;
    } catch (const Error& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return kDomain;
    }
    return kOk;
}
