#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "eszlab/grid.hpp"
#include "eszlab/mpoly.hpp"

namespace eszlab {

enum class Engine { triple_loop, pair_loop };

std::string to_string(Engine e);
Engine engine_from_string(const std::string& s);

struct CountOptions {
    Engine engine = Engine::pair_loop;
    // Number of random 62-bit primes for the modular pruning pass; 0
    // disables it. Only rational instances use it.
    int primes = 3;
    std::uint64_t seed = 0xE5CAB0;
    // 0 keeps the OpenMP default.
    int threads = 0;
    // Also compute Q, R and the witness-fiber histogram.
    bool quadruples = true;
    // Record wall time; off keeps reports byte-reproducible.
    bool timing = false;
};

// Indices into A, B, C of one zero of F.
struct ZeroTriple {
    std::uint32_t a, b, c;
    friend auto operator<=>(const ZeroTriple&, const ZeroTriple&) = default;
};

// Zeros of F (variables in role order A, B, C) on A x B x C, sorted.
// F must have exactly three variables and be nonzero.
std::vector<ZeroTriple> find_zeros(const MPoly& F, const GridSet& A, const GridSet& B, const GridSet& C,
                                   const CountOptions& options = {});

// Serial exact triple enumeration with no pruning; the oracle the engines
// are tested against.
std::vector<ZeroTriple> find_zeros_reference(const MPoly& F, const GridSet& A, const GridSet& B, const GridSet& C);

struct ReferenceBounds {
    // d times the product of the two largest sizes; a hard bound. Equals
    // d min(|A||B|, |A||C|, |B||C|) when the sizes agree.
    std::uint64_t sz_bound = 0;
    // Reference scalings with all implied constants set to 1; never asserted.
    double thm11_reference = 0.0;
    double thm12_reference = 0.0;
};

ReferenceBounds reference_bounds(int d, std::size_t nA, std::size_t nB, std::size_t nC);

struct QuadrupleStats {
    std::uint64_t Q = 0;
    std::uint64_t R = 0;
    // witness count k -> number of quadruples with exactly k witnesses in A
    std::map<std::uint64_t, std::uint64_t> fiber_histogram;
};

QuadrupleStats quadruple_stats_from_zeros(const std::vector<ZeroTriple>& zeros, std::size_t nB, std::size_t nC);
QuadrupleStats quadruple_stats(const MPoly& F, const GridSet& A, const GridSet& B, const GridSet& C,
                               const CountOptions& options = {});

class CountReport {
public:
    // Asserts M <= sz_bound and, when R is present, M^2 <= |A| R.
    CountReport(std::uint64_t M, std::optional<QuadrupleStats> stats, std::optional<std::uint64_t> s_hits, int degree,
                std::array<std::size_t, 3> sizes, Engine engine, double elapsed_ms);

    std::uint64_t M() const { return M_; }
    std::optional<std::uint64_t> Q() const;
    std::optional<std::uint64_t> R() const;
    std::optional<std::uint64_t> S_hits() const { return s_hits_; }
    const std::optional<QuadrupleStats>& stats() const { return stats_; }
    int degree() const { return degree_; }
    const std::array<std::size_t, 3>& sizes() const { return sizes_; }
    std::uint64_t sz_bound() const { return bounds_.sz_bound; }
    // sqrt(|A| R), present with R.
    std::optional<double> cs_bound() const;
    double thm11_reference() const { return bounds_.thm11_reference; }
    double thm12_reference() const { return bounds_.thm12_reference; }
    // R - d Q, recorded but never asserted.
    std::optional<long long> r_excess() const;
    Engine engine() const { return engine_; }
    double elapsed_ms() const { return elapsed_ms_; }

private:
    std::uint64_t M_;
    std::optional<QuadrupleStats> stats_;
    std::optional<std::uint64_t> s_hits_;
    int degree_;
    std::array<std::size_t, 3> sizes_;
    ReferenceBounds bounds_;
    Engine engine_;
    double elapsed_ms_;
};

CountReport count_zeros(const MPoly& F, const GridSet& A, const GridSet& B, const GridSet& C,
                        const CountOptions& options = {});

struct CsVerdict {
    bool holds = false;
    // |A| R - M^2
    long double slack = 0;
};

// M^2 <= |A| R in exact integers. Throws InputError when the report has no
// R or was built for a different |A|.
CsVerdict cs_chain_check(const CountReport& report, std::size_t nA);

struct FiberViolation {
    GaussRat b, b2, c, c2;
    std::uint64_t witnesses = 0;
    // Every a in A is a witness.
    bool all_of_A = false;
    // F(x, b, c) and F(x, b', c') vanish identically in x.
    bool first_identically_zero = false;
    bool second_identically_zero = false;
};

// Quadruples with more than d witnesses in A.
std::vector<FiberViolation> witness_fiber_check(const MPoly& F, const GridSet& A, const GridSet& B, const GridSet& C,
                                                int d, const CountOptions& options = {});

enum class SweepFamily { extremal, random_integer, arithmetic_progression };
std::string to_string(SweepFamily f);
SweepFamily sweep_family_from_string(const std::string& s);

struct SweepConfig {
    SweepFamily family = SweepFamily::extremal;
    std::vector<std::size_t> n_list;
    std::uint64_t seed = 0xE5CAB0;
    // Half-width of the random-integer range; 0 means 2n.
    long long random_range = 0;
    // Per-set centers of the random-integer ranges.
    std::array<long long, 3> random_offsets{0, 0, 0};
    CountOptions count;
};

struct SweepRow {
    std::size_t n = 0;
    CountReport report;
};

struct SweepResult {
    std::vector<SweepRow> rows;
    // Least-squares slope of log M against log n over rows with M > 0;
    // absent with fewer than three such rows.
    std::optional<double> fitted_exponent;
};

std::array<GridSet, 3> sweep_sets(SweepFamily family, std::size_t n, std::uint64_t seed, long long random_range,
                                  const std::array<long long, 3>& offsets);
SweepResult scaling_sweep(const MPoly& F, const SweepConfig& config);
std::string sweep_csv(const SweepResult& result);

std::optional<double> fit_log_slope(const std::vector<std::pair<double, double>>& n_and_m);

} // namespace eszlab
