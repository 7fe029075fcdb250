// Serial reference vs OpenMP kernels on the full default corpus.
//
//   gahp_bench [repeats]
//
// Prints wall time per stage for both paths and checks that they agree.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <omp.h>

#include "gahp/montecarlo.hpp"

using namespace gahp;

namespace {

double best_of(int repeats, const std::function<void()>& f) {
    double best = 1e300;
    for (int r = 0; r < repeats; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        f();
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (s < best) best = s;
    }
    return best;
}

void row(const char* stage, double serial, double parallel) {
    std::printf("%-14s %10.4f %10.4f %8.2fx\n", stage, serial, parallel, serial / parallel);
}

} // namespace

int main(int argc, char** argv) {
    const int repeats = argc > 1 ? std::max(1, std::atoi(argv[1])) : 3;
    const CorpusConfig corpus_cfg;
    const ExperimentConfig exp_cfg;
    std::printf("threads: %d  repeats: %d\n", omp_get_max_threads(), repeats);
    std::printf("%-14s %10s %10s %9s\n", "stage", "serial s", "openmp s", "speedup");

    std::vector<Scenario> a, b;
    const double gs = best_of(repeats, [&] { a = generate_corpus(corpus_cfg, Execution::serial); });
    const double gp = best_of(repeats, [&] { b = generate_corpus(corpus_cfg, Execution::parallel); });
    row("corpus", gs, gp);

    std::vector<Experiment1Record> e1s, e1p;
    const double s1 = best_of(repeats, [&] { e1s = experiment1(a, exp_cfg, Execution::serial); });
    const double p1 = best_of(repeats, [&] { e1p = experiment1(a, exp_cfg, Execution::parallel); });
    row("experiment 1", s1, p1);

    std::vector<Experiment2Record> e2s, e2p;
    const double s2 = best_of(repeats, [&] { e2s = experiment2(a, exp_cfg, Execution::serial); });
    const double p2 = best_of(repeats, [&] { e2p = experiment2(a, exp_cfg, Execution::parallel); });
    row("experiment 2", s2, p2);

    bool same = a.size() == b.size();
    for (std::size_t i = 0; same && i < a.size(); ++i) same = a[i].panel == b[i].panel;
    for (std::size_t i = 0; same && i < e1s.size(); ++i)
        for (std::size_t m = 0; m < 3; ++m)
            same = same && e1s[i].methods[m].restored == e1p[i].methods[m].restored;
    for (std::size_t i = 0; same && i < e2s.size(); ++i)
        for (std::size_t m = 0; m < 3; ++m)
            same = same && e2s[i].methods[m].distance == e2p[i].methods[m].distance;
    std::printf("serial and parallel results %s\n", same ? "identical" : "DIFFER");
    return same ? 0 : 1;
}
