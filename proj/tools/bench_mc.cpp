// Benchmark: the OpenMP Monte Carlo kernel against the serial reference
// implementation on a fixed workload, verifying bitwise agreement.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "betapoly/mc.hpp"

using namespace betapoly;

namespace {

double seconds(std::chrono::steady_clock::time_point a, std::chrono::steady_clock::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

}  // namespace

int main(int argc, char** argv) {
    long samples = argc > 1 ? std::atol(argv[1]) : 50000;
    const std::uint64_t seed = 0xBE7ABE7Aull;

    struct Workload {
        const char* name;
        Model model;
        PolytopeKind kind;
        int n;
        FunctionalSpec functional;
    };
    const Workload workloads[] = {
        {"volume  beta(3,1) S n=8", Model::beta_ball(3, 1.0), PolytopeKind::Symmetric, 8,
         FunctionalSpec::volume()},
        {"facets  sphere(3) P n=10", Model::sphere(3), PolytopeKind::Plain, 10,
         FunctionalSpec::facets()},
        {"meanwid beta(2,0) P n=6", Model::beta_ball(2, 0.0), PolytopeKind::Plain, 6,
         FunctionalSpec::mean_width()},
    };

    std::printf("%-26s %12s %12s %9s %8s\n", "workload", "serial s/s", "openmp s/s", "speedup",
                "match");
    for (const auto& w : workloads) {
        const auto t0 = std::chrono::steady_clock::now();
        const auto serial = mc::estimate_serial(w.functional, w.model, w.kind, w.n, samples, seed);
        const auto t1 = std::chrono::steady_clock::now();
        const auto parallel = mc::estimate(w.functional, w.model, w.kind, w.n, samples, seed);
        const auto t2 = std::chrono::steady_clock::now();

        const double ts = seconds(t0, t1);
        const double tp = seconds(t1, t2);
        const bool match = serial.mean == parallel.mean && serial.std_error == parallel.std_error;
        std::printf("%-26s %12.0f %12.0f %8.2fx %8s\n", w.name, samples / ts, samples / tp,
                    ts / tp, match ? "bitwise" : "MISMATCH");
        if (!match) return 1;
    }
    return 0;
}
