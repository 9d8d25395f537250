// Wall-clock comparison of the serial reference enumeration against the
// OpenMP counting engines, plus the two collinearity census engines.
//
//   eszlab_bench [--max-n N] [--reps R]

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include <omp.h>

#include "eszlab/applications.hpp"
#include "eszlab/counting.hpp"
#include "eszlab/poly_parse.hpp"

using namespace eszlab;

namespace {

double best_ms(int reps, const std::function<std::size_t()>& fn, std::size_t& result)
{
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        auto t0 = std::chrono::steady_clock::now();
        result = fn();
        auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

} // namespace

int main(int argc, char** argv)
{
    std::size_t max_n = 64;
    int reps = 3;
    for (int i = 1; i + 1 < argc; i += 2) {
        std::string flag = argv[i];
        if (flag == "--max-n") max_n = std::strtoul(argv[i + 1], nullptr, 10);
        else if (flag == "--reps") reps = std::atoi(argv[i + 1]);
        else {
            std::fprintf(stderr, "unknown flag %s\n", argv[i]);
            return 1;
        }
    }

    std::printf("threads: %d\n\n", omp_get_max_threads());
    std::printf("%-22s %5s %-22s %10s %12s %8s\n", "poly", "n", "engine", "M", "best_ms", "speedup");

    const std::vector<std::string> polys{"x + y + z", "z - x^2 - x*y + 3*y^2", "x*y*z - x^3 + y - 2*z^2"};
    for (const auto& text : polys) {
        MPoly F = parse_poly(text, {"x", "y", "z"});
        for (std::size_t n = 16; n <= max_n; n *= 2) {
            auto sets = sweep_sets(SweepFamily::random_integer, n, 7, 0, {0, 0, 0});
            const auto& [A, B, C] = sets;
            std::size_t m = 0;
            double ref = best_ms(reps, [&] { return find_zeros_reference(F, A, B, C).size(); }, m);
            std::printf("%-22s %5zu %-22s %10zu %12.2f %8s\n", text.c_str(), n, "reference", m, ref, "1.00");
            for (Engine e : {Engine::triple_loop, Engine::pair_loop}) {
                for (int primes : {0, 3}) {
                    CountOptions opt;
                    opt.engine = e;
                    opt.primes = primes;
                    double ms = best_ms(reps, [&] { return find_zeros(F, A, B, C, opt).size(); }, m);
                    std::string label = to_string(e) + (primes ? "+mod" : "");
                    std::printf("%-22s %5zu %-22s %10zu %12.2f %8.2f\n", text.c_str(), n, label.c_str(), m, ms,
                                ref / ms);
                }
            }
        }
    }

    std::printf("\n%-22s %5s %-22s %10s %12s\n", "census", "n", "engine", "triples", "best_ms");
    for (std::size_t n = 16; n <= max_n; n *= 2) {
        std::vector<GaussRat> params;
        for (std::size_t k = 0; k < n; ++k) params.emplace_back(static_cast<long>(k) - static_cast<long>(n / 2));
        auto cubic = CurvePointSet::on_cubic(params);
        for (auto engine : {CensusEngine::brute_force, CensusEngine::slopes}) {
            std::size_t t = 0;
            double ms = best_ms(reps, [&] { return collinear_triples(cubic, cubic, cubic, engine); }, t);
            std::printf("%-22s %5zu %-22s %10zu %12.2f\n", "cubic", n,
                        engine == CensusEngine::slopes ? "slopes" : "brute_force", t, ms);
        }
    }
    return 0;
}
