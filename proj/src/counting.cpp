#include "eszlab/counting.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <set>
#include <unordered_map>

#include "eszlab/errors.hpp"

namespace eszlab {

std::string to_string(Engine e)
{
    return e == Engine::triple_loop ? "triple_loop" : "pair_loop";
}

Engine engine_from_string(const std::string& s)
{
    if (s == "triple_loop" || s == "triple") return Engine::triple_loop;
    if (s == "pair_loop" || s == "pair") return Engine::pair_loop;
    throw InputError("unknown engine '" + s + "' (expected triple_loop or pair_loop)");
}

ReferenceBounds reference_bounds(int d, std::size_t nA, std::size_t nB, std::size_t nC)
{
    if (d < 1) throw InputError("reference_bounds: degree must be >= 1");
    ReferenceBounds out;
    const std::uint64_t a = nA, b = nB, c = nC;
    // Product-set Schwartz-Zippel: d |A||B||C| / min(|A|,|B|,|C|).
    out.sz_bound = static_cast<std::uint64_t>(d) * std::max({a * b, a * c, b * c});

    const double dd = d;
    const double n = static_cast<double>(std::max({nA, nB, nC}));
    out.thm11_reference = std::pow(dd, 6.5) * std::pow(n, 11.0 / 6.0);

    auto term = [&](double x, double y, double z) {
        return std::pow(dd, 6.5) * std::sqrt(x) * std::cbrt(y * y) * std::cbrt(z * z) +
               std::pow(dd, 8.5) * std::sqrt(x) * (std::sqrt(x) + y + z);
    };
    const double fa = static_cast<double>(nA), fb = static_cast<double>(nB), fc = static_cast<double>(nC);
    out.thm12_reference = std::min({term(fa, fb, fc), term(fb, fa, fc), term(fc, fa, fb)});
    return out;
}

namespace {

std::uint64_t quadruple_key_space(std::size_t nB, std::size_t nC)
{
    const std::uint64_t cells = static_cast<std::uint64_t>(nB) * nC;
    if (cells >= (std::uint64_t{1} << 32)) throw InputError("grid too large for quadruple statistics");
    return cells;
}

// Witness count for every quadruple (b, b', c, c'), keyed by
// (b*|C|+c) * |B||C| + (b'*|C|+c').
std::unordered_map<std::uint64_t, std::uint64_t> witness_counts(const std::vector<ZeroTriple>& zeros, std::size_t nB,
                                                                std::size_t nC)
{
    const std::uint64_t cells = quadruple_key_space(nB, nC);
    std::unordered_map<std::uint64_t, std::uint64_t> counts;
    std::size_t start = 0;
    while (start < zeros.size()) {
        std::size_t end = start;
        while (end < zeros.size() && zeros[end].a == zeros[start].a) ++end;
        for (std::size_t i = start; i < end; ++i) {
            const std::uint64_t f1 = static_cast<std::uint64_t>(zeros[i].b) * nC + zeros[i].c;
            for (std::size_t j = start; j < end; ++j) {
                const std::uint64_t f2 = static_cast<std::uint64_t>(zeros[j].b) * nC + zeros[j].c;
                ++counts[f1 * cells + f2];
            }
        }
        start = end;
    }
    return counts;
}

double elapsed_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

} // namespace

QuadrupleStats quadruple_stats_from_zeros(const std::vector<ZeroTriple>& zeros, std::size_t nB, std::size_t nC)
{
    QuadrupleStats out;
    auto counts = witness_counts(zeros, nB, nC);
    out.Q = counts.size();
    for (const auto& [key, k] : counts) {
        out.R += k;
        ++out.fiber_histogram[k];
    }
    return out;
}

QuadrupleStats quadruple_stats(const MPoly& F, const GridSet& A, const GridSet& B, const GridSet& C,
                               const CountOptions& options)
{
    return quadruple_stats_from_zeros(find_zeros(F, A, B, C, options), B.size(), C.size());
}

CountReport::CountReport(std::uint64_t M, std::optional<QuadrupleStats> stats, std::optional<std::uint64_t> s_hits,
                         int degree, std::array<std::size_t, 3> sizes, Engine engine, double elapsed_ms)
    : M_(M), stats_(std::move(stats)), s_hits_(s_hits), degree_(degree), sizes_(sizes),
      bounds_(reference_bounds(std::max(degree, 1), sizes[0], sizes[1], sizes[2])), engine_(engine),
      elapsed_ms_(elapsed_ms)
{
    ensure_invariant(M_ <= bounds_.sz_bound, "Schwartz-Zippel bound violated: M=" + std::to_string(M_) +
                                                 " > " + std::to_string(bounds_.sz_bound));
    if (stats_) {
        const unsigned __int128 lhs = static_cast<unsigned __int128>(M_) * M_;
        const unsigned __int128 rhs = static_cast<unsigned __int128>(sizes_[0]) * stats_->R;
        ensure_invariant(lhs <= rhs, "Cauchy-Schwarz chain violated: M^2 > |A| R");
    }
}

std::optional<std::uint64_t> CountReport::Q() const
{
    if (!stats_) return std::nullopt;
    return stats_->Q;
}

std::optional<std::uint64_t> CountReport::R() const
{
    if (!stats_) return std::nullopt;
    return stats_->R;
}

std::optional<double> CountReport::cs_bound() const
{
    if (!stats_) return std::nullopt;
    return std::sqrt(static_cast<double>(sizes_[0]) * static_cast<double>(stats_->R));
}

std::optional<long long> CountReport::r_excess() const
{
    if (!stats_) return std::nullopt;
    return static_cast<long long>(stats_->R) - static_cast<long long>(degree_) * static_cast<long long>(stats_->Q);
}

CountReport count_zeros(const MPoly& F, const GridSet& A, const GridSet& B, const GridSet& C,
                        const CountOptions& options)
{
    const auto t0 = std::chrono::steady_clock::now();
    auto zeros = find_zeros(F, A, B, C, options);
    std::optional<QuadrupleStats> stats;
    std::optional<std::uint64_t> s_hits;
    const int d = F.degree();
    if (options.quadruples) {
        auto counts = witness_counts(zeros, B.size(), C.size());
        QuadrupleStats qs;
        qs.Q = counts.size();
        std::uint64_t hits = 0;
        for (const auto& [key, k] : counts) {
            qs.R += k;
            ++qs.fiber_histogram[k];
            if (k > static_cast<std::uint64_t>(d)) ++hits;
        }
        stats = std::move(qs);
        s_hits = hits;
    }
    const double ms = options.timing ? elapsed_since(t0) : 0.0;
    return CountReport(zeros.size(), std::move(stats), s_hits, d, {A.size(), B.size(), C.size()}, options.engine, ms);
}

CsVerdict cs_chain_check(const CountReport& report, std::size_t nA)
{
    if (!report.R()) throw InputError("cs_chain_check: report carries no quadruple statistics");
    if (report.sizes()[0] != nA) throw InputError("cs_chain_check: |A| does not match the report's instance");
    const __int128 lhs = static_cast<__int128>(report.M()) * static_cast<__int128>(report.M());
    const __int128 rhs = static_cast<__int128>(nA) * static_cast<__int128>(*report.R());
    return {lhs <= rhs, static_cast<long double>(rhs - lhs)};
}

std::vector<FiberViolation> witness_fiber_check(const MPoly& F, const GridSet& A, const GridSet& B, const GridSet& C,
                                                int d, const CountOptions& options)
{
    auto zeros = find_zeros(F, A, B, C, options);
    auto counts = witness_counts(zeros, B.size(), C.size());
    const std::uint64_t cells = quadruple_key_space(B.size(), C.size());
    std::vector<std::uint64_t> keys;
    for (const auto& [key, k] : counts) {
        if (k > static_cast<std::uint64_t>(d)) keys.push_back(key);
    }
    std::sort(keys.begin(), keys.end());

    const std::string& y = F.vars()[1];
    const std::string& z = F.vars()[2];
    std::vector<FiberViolation> out;
    for (auto key : keys) {
        const std::uint64_t f1 = key / cells, f2 = key % cells;
        FiberViolation v;
        v.b = B[f1 / C.size()];
        v.c = C[f1 % C.size()];
        v.b2 = B[f2 / C.size()];
        v.c2 = C[f2 % C.size()];
        v.witnesses = counts[key];
        v.all_of_A = v.witnesses == A.size();
        v.first_identically_zero = F.eval({{y, v.b}, {z, v.c}}).is_zero();
        v.second_identically_zero = F.eval({{y, v.b2}, {z, v.c2}}).is_zero();
        out.push_back(std::move(v));
    }
    return out;
}

std::string to_string(SweepFamily f)
{
    switch (f) {
    case SweepFamily::extremal: return "extremal";
    case SweepFamily::random_integer: return "random-integer";
    case SweepFamily::arithmetic_progression: return "arithmetic-progression";
    }
    return "?";
}

SweepFamily sweep_family_from_string(const std::string& s)
{
    if (s == "extremal") return SweepFamily::extremal;
    if (s == "random-integer" || s == "random_integer") return SweepFamily::random_integer;
    if (s == "arithmetic-progression" || s == "arithmetic_progression") return SweepFamily::arithmetic_progression;
    throw InputError("unknown sweep family '" + s + "'");
}

std::array<GridSet, 3> sweep_sets(SweepFamily family, std::size_t n, std::uint64_t seed, long long random_range,
                                  const std::array<long long, 3>& offsets)
{
    const long count = static_cast<long>(n);
    switch (family) {
    case SweepFamily::extremal:
        return {GridSet::integers(0, count), GridSet::integers(0, count), GridSet::integers(0, count, -1)};
    case SweepFamily::arithmetic_progression: {
        GridSet ap = GridSet::integers(-count / 2, count);
        return {ap, ap, ap};
    }
    case SweepFamily::random_integer: {
        const long long range = random_range > 0 ? random_range : static_cast<long long>(2 * n);
        if (static_cast<unsigned long long>(2 * range + 1) < n) {
            throw InputError("random-integer family: range too small for " + std::to_string(n) + " distinct values");
        }
        std::mt19937_64 gen(seed ^ (0x9E3779B97F4A7C15ULL * (n + 1)));
        std::array<GridSet, 3> out;
        for (std::size_t r = 0; r < 3; ++r) {
            std::uniform_int_distribution<long long> dist(offsets[r] - range, offsets[r] + range);
            std::set<long long> picked;
            while (picked.size() < n) picked.insert(dist(gen));
            std::vector<GaussRat> vals;
            for (auto v : picked) vals.emplace_back(mpq_class(mpz_class(std::to_string(v))));
            out[r] = GridSet(std::move(vals));
        }
        return out;
    }
    }
    throw InputError("unknown sweep family");
}

std::optional<double> fit_log_slope(const std::vector<std::pair<double, double>>& n_and_m)
{
    std::vector<std::pair<double, double>> pts;
    for (const auto& [n, m] : n_and_m) {
        if (m > 0 && n > 0) pts.emplace_back(std::log(n), std::log(m));
    }
    if (pts.size() < 3) return std::nullopt;
    double sx = 0, sy = 0;
    for (const auto& [x, y] : pts) {
        sx += x;
        sy += y;
    }
    const double mx = sx / static_cast<double>(pts.size()), my = sy / static_cast<double>(pts.size());
    double sxx = 0, sxy = 0;
    for (const auto& [x, y] : pts) {
        sxx += (x - mx) * (x - mx);
        sxy += (x - mx) * (y - my);
    }
    if (sxx == 0) return std::nullopt;
    return sxy / sxx;
}

SweepResult scaling_sweep(const MPoly& F, const SweepConfig& config)
{
    if (!std::is_sorted(config.n_list.begin(), config.n_list.end())) {
        throw InputError("scaling_sweep: n_list must be ascending");
    }
    SweepResult out;
    std::vector<std::pair<double, double>> samples;
    for (auto n : config.n_list) {
        auto sets = sweep_sets(config.family, n, config.seed, config.random_range, config.random_offsets);
        CountOptions opts = config.count;
        opts.quadruples = true;
        auto report = count_zeros(F, sets[0], sets[1], sets[2], opts);
        samples.emplace_back(static_cast<double>(n), static_cast<double>(report.M()));
        out.rows.push_back({n, std::move(report)});
    }
    out.fitted_exponent = fit_log_slope(samples);
    return out;
}

std::string sweep_csv(const SweepResult& result)
{
    std::string out = "n,M,Q,R,sz_bound,cs_bound,thm12_reference,engine,elapsed_ms\n";
    char buf[512];
    for (const auto& row : result.rows) {
        const auto& r = row.report;
        std::snprintf(buf, sizeof(buf), "%zu,%llu,%llu,%llu,%llu,%.6f,%.6f,%s,%.3f\n", row.n,
                      static_cast<unsigned long long>(r.M()), static_cast<unsigned long long>(r.Q().value_or(0)),
                      static_cast<unsigned long long>(r.R().value_or(0)), static_cast<unsigned long long>(r.sz_bound()),
                      r.cs_bound().value_or(0.0), r.thm12_reference(), to_string(r.engine()).c_str(), r.elapsed_ms());
        out += buf;
    }
    return out;
}

} // namespace eszlab
