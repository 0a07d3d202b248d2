// Benchmarks the OpenMP experiment kernels against their serial reference
// drivers and checks that both produce identical counts.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <string>

#include "roadgames/montecarlo.hpp"

namespace rg = roadgames;

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

template <typename Serial, typename Parallel>
int compare(const char* name, Serial run_serial, Parallel run_parallel) {
    auto t0 = std::chrono::steady_clock::now();
    const auto serial = run_serial();
    const double serial_s = seconds_since(t0);
    t0 = std::chrono::steady_clock::now();
    const auto parallel = run_parallel();
    const double parallel_s = seconds_since(t0);
    const bool same = serial == parallel;
    std::printf("%-10s serial %.3fs  openmp %.3fs  speedup %.2fx  identical: %s\n", name,
                serial_s, parallel_s, serial_s / parallel_s, same ? "yes" : "NO");
    return same ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    std::uint64_t iterations = 2'000'000;
    int workers = omp_get_max_threads();
    for (int i = 1; i + 1 < argc; i += 2) {
        const std::string flag = argv[i];
        if (flag == "--iterations")
            iterations = std::stoull(argv[i + 1]);
        else if (flag == "--workers")
            workers = std::stoi(argv[i + 1]);
        else {
            std::fprintf(stderr, "usage: mc_bench [--iterations N] [--workers N]\n");
            return 2;
        }
    }
    std::printf("iterations %llu, workers %d\n", static_cast<unsigned long long>(iterations),
                workers);

    int failures = 0;

    rg::SweepConfig sweep;
    sweep.iterations = iterations;
    sweep.workers = workers;
    sweep.speed_classes = {rg::SpeedClassLabel::medium};
    sweep.av_share_grid = {0.0, 0.5, 1.0};
    failures += compare(
        "sweep",
        [&] {
            std::vector<std::uint64_t> counts;
            for (const auto& p : rg::sweep_av_share_serial(sweep).points)
                counts.push_back(p.collisions);
            return counts;
        },
        [&] {
            std::vector<std::uint64_t> counts;
            for (const auto& p : rg::sweep_av_share(sweep).points)
                counts.push_back(p.collisions);
            return counts;
        });

    rg::EntryConfig entry;
    entry.iterations = iterations;
    entry.workers = workers;
    failures += compare(
        "entry",
        [&] { return rg::histogram_csv(rg::entry_histogram_serial(entry)); },
        [&] { return rg::histogram_csv(rg::entry_histogram(entry)); });

    rg::MisjudgeConfig misjudge;
    misjudge.iterations = iterations;
    misjudge.workers = workers;
    failures += compare(
        "misjudge",
        [&] { return rg::histogram_csv({rg::misjudgment_experiment_serial(misjudge)}); },
        [&] { return rg::histogram_csv({rg::misjudgment_experiment(misjudge)}); });

    return failures == 0 ? 0 : 1;
}
