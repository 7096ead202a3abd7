// Copyright 2026 the semitopo developers. Licensed under the Apache License,
// Version 2.0. See the LICENSE file at the root of this distribution or at
// http://www.apache.org/licenses/LICENSE-2.0

// Compares the serial reference kernels against the OpenMP ones on the two
// hot sweeps: the union-closed family bitmap and the SAT-reduction battery.

#include <chrono>
#include <cstdio>
#include <random>

#include "semitopo/enumerate.hpp"
#include "semitopo/solvers.hpp"

using namespace semitopo;

namespace {

template <typename F>
double time_ms(F&& fn) {
    auto start = std::chrono::steady_clock::now();
    fn();
    auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(stop - start).count();
}

Cnf random_cnf(std::mt19937_64& rng, int vars, int clauses) {
    Cnf cnf;
    cnf.num_vars = vars;
    std::uniform_int_distribution<int> var_dist(1, vars);
    std::uniform_int_distribution<int> sign_dist(0, 1);
    for (int i = 0; i < clauses; ++i) {
        std::vector<int> c;
        for (int j = 0; j < 3; ++j) {
            int lit = var_dist(rng);
            c.push_back(sign_dist(rng) ? lit : -lit);
        }
        cnf.clauses.push_back(c);
    }
    return cnf;
}

}  // namespace

int main() {
    std::printf("kernel                              serial(ms)  parallel(ms)  agree\n");

    {
        std::vector<bool> serial, parallel;
        double ts = time_ms([&] { serial = union_closed_bitmap_serial(4); });
        double tp = time_ms([&] { parallel = union_closed_bitmap_parallel(4); });
        std::printf("union-closed families on 4 points   %9.1f  %11.1f  %s\n", ts, tp,
                    serial == parallel ? "yes" : "NO");
    }
    {
        std::uint64_t serial = 0, parallel = 0;
        double ts = time_ms([&] { serial = count_intersection_closed_serial(4); });
        double tp = time_ms([&] { parallel = count_intersection_closed_parallel(4); });
        std::printf("intersection-closed count, 4 points %9.1f  %11.1f  %s\n", ts, tp,
                    serial == parallel ? "yes" : "NO");
    }
    {
        std::mt19937_64 rng(7);
        std::vector<Cnf> batch;
        for (int i = 0; i < 24; ++i) batch.push_back(random_cnf(rng, 4, 5));
        std::vector<char> serial(batch.size()), parallel(batch.size());
        double ts = time_ms([&] {
            for (size_t i = 0; i < batch.size(); ++i)
                serial[i] = sat_check(batch[i], SatMethod::reduction);
        });
        double tp = time_ms([&] {
#ifdef SEMITOPO_OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
            for (std::int64_t i = 0; i < static_cast<std::int64_t>(batch.size()); ++i)
                parallel[i] = sat_check(batch[i], SatMethod::reduction);
        });
        std::printf("SAT reduction battery (24 x 4v5c)   %9.1f  %11.1f  %s\n", ts, tp,
                    serial == parallel ? "yes" : "NO");
    }
    return 0;
}
