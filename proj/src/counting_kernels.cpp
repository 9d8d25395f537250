// Parallel zero-finding engines for F on A x B x C.
//
// Both engines are data-parallel over disjoint chunks of the outer grid(s);
// each thread collects zeros locally and the merged list is sorted, so the
// output does not depend on the schedule.

#include <algorithm>
#include <array>
#include <optional>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "eszlab/counting.hpp"
#include "eszlab/errors.hpp"
#include "eszlab/modular.hpp"

namespace eszlab {

namespace {

using modular::add_mod;
using modular::mul_mod;

template <std::size_t N>
struct Term {
    std::array<std::uint32_t, N> e;
    GaussRat c;
};

template <std::size_t N>
struct ModTerm {
    std::array<std::uint32_t, N> e;
    std::uint64_t c;
};

template <std::size_t N>
std::vector<Term<N>> compile(const MPoly& p)
{
    std::vector<Term<N>> out;
    for (const auto& [e, c] : p.terms()) {
        Term<N> t{{}, c};
        for (std::size_t k = 0; k < N; ++k) t.e[k] = e[k];
        out.push_back(std::move(t));
    }
    return out;
}

// powers[i][j] = grid[i]^j for j <= max_exp.
std::vector<std::vector<GaussRat>> power_table(const GridSet& grid, std::uint32_t max_exp)
{
    std::vector<std::vector<GaussRat>> out(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        out[i].reserve(max_exp + 1);
        out[i].emplace_back(1);
        for (std::uint32_t j = 1; j <= max_exp; ++j) out[i].push_back(out[i].back() * grid[i]);
    }
    return out;
}

std::vector<std::vector<std::uint64_t>> power_table_mod(const std::vector<std::uint64_t>& values, std::uint32_t max_exp,
                                                        std::uint64_t p)
{
    std::vector<std::vector<std::uint64_t>> out(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        out[i].reserve(max_exp + 1);
        out[i].push_back(1);
        for (std::uint32_t j = 1; j <= max_exp; ++j) out[i].push_back(mul_mod(out[i].back(), values[i], p));
    }
    return out;
}

// Residues of every coefficient and grid value modulo a set of primes;
// primes whose reduction hits a zero denominator are replaced.
struct ModularContext {
    std::vector<std::uint64_t> primes;
    // values[prime][role][index]
    std::vector<std::array<std::vector<std::uint64_t>, 3>> values;
};

std::optional<ModularContext> make_modular_context(const MPoly& F, const std::array<const GridSet*, 3>& grids,
                                                   const CountOptions& options)
{
    if (options.primes <= 0) return std::nullopt;
    for (const auto& [e, c] : F.terms()) {
        if (!c.is_real()) return std::nullopt;
    }
    for (auto* g : grids) {
        if (!g->all_real()) return std::nullopt;
    }
    ModularContext ctx;
    std::uint64_t draw_seed = options.seed;
    std::size_t attempts = 0;
    while (ctx.primes.size() < static_cast<std::size_t>(options.primes) && attempts < 64) {
        ++attempts;
        auto candidates = modular::random_primes(1, draw_seed++);
        std::uint64_t p = candidates.front();
        if (std::find(ctx.primes.begin(), ctx.primes.end(), p) != ctx.primes.end()) continue;
        bool ok = true;
        for (const auto& [e, c] : F.terms()) {
            if (!modular::reduce(c.re(), p)) ok = false;
        }
        std::array<std::vector<std::uint64_t>, 3> vals;
        for (std::size_t r = 0; r < 3 && ok; ++r) {
            for (const auto& v : *grids[r]) {
                auto m = modular::reduce(v.re(), p);
                if (!m) {
                    ok = false;
                    break;
                }
                vals[r].push_back(*m);
            }
        }
        if (!ok) continue;
        ctx.primes.push_back(p);
        ctx.values.push_back(std::move(vals));
    }
    if (ctx.primes.empty()) return std::nullopt;
    return ctx;
}

template <std::size_t N>
std::vector<ModTerm<N>> compile_mod(const std::vector<Term<N>>& terms, std::uint64_t p)
{
    std::vector<ModTerm<N>> out;
    out.reserve(terms.size());
    for (const auto& t : terms) out.push_back({t.e, *modular::reduce(t.c.re(), p)});
    return out;
}

int thread_count(const CountOptions& options)
{
#ifdef _OPENMP
    return options.threads > 0 ? options.threads : omp_get_max_threads();
#else
    (void)options;
    return 1;
#endif
}

void merge_local(std::vector<ZeroTriple>& into, std::vector<ZeroTriple>& local)
{
#ifdef _OPENMP
#pragma omp critical(eszlab_merge_zeros)
#endif
    into.insert(into.end(), local.begin(), local.end());
}

std::vector<ZeroTriple> triple_loop(const MPoly& F, const GridSet& A, const GridSet& B, const GridSet& C,
                                    const CountOptions& options)
{
    const auto terms = compile<3>(F);
    const std::array<const GridSet*, 3> grids{&A, &B, &C};
    std::array<std::uint32_t, 3> max_exp{0, 0, 0};
    for (const auto& t : terms) {
        for (std::size_t r = 0; r < 3; ++r) max_exp[r] = std::max(max_exp[r], t.e[r]);
    }
    std::array<std::vector<std::vector<GaussRat>>, 3> pw;
    for (std::size_t r = 0; r < 3; ++r) pw[r] = power_table(*grids[r], max_exp[r]);

    const auto ctx = make_modular_context(F, grids, options);
    std::vector<std::vector<ModTerm<3>>> mterms;
    std::vector<std::array<std::vector<std::vector<std::uint64_t>>, 3>> mpw;
    if (ctx) {
        for (std::size_t q = 0; q < ctx->primes.size(); ++q) {
            mterms.push_back(compile_mod(terms, ctx->primes[q]));
            std::array<std::vector<std::vector<std::uint64_t>>, 3> tables;
            for (std::size_t r = 0; r < 3; ++r) tables[r] = power_table_mod(ctx->values[q][r], max_exp[r], ctx->primes[q]);
            mpw.push_back(std::move(tables));
        }
    }

    auto exact_zero = [&](std::size_t ia, std::size_t ib, std::size_t ic) {
        GaussRat sum(0);
        for (const auto& t : terms) sum += t.c * pw[0][ia][t.e[0]] * pw[1][ib][t.e[1]] * pw[2][ic][t.e[2]];
        return sum.is_zero();
    };
    auto modular_zero = [&](std::size_t ia, std::size_t ib, std::size_t ic) {
        for (std::size_t q = 0; q < mterms.size(); ++q) {
            const std::uint64_t p = ctx->primes[q];
            std::uint64_t sum = 0;
            for (const auto& t : mterms[q]) {
                std::uint64_t v = mul_mod(t.c, mpw[q][0][ia][t.e[0]], p);
                v = mul_mod(v, mpw[q][1][ib][t.e[1]], p);
                v = mul_mod(v, mpw[q][2][ic][t.e[2]], p);
                sum = add_mod(sum, v, p);
            }
            if (sum != 0) return false;
        }
        return true;
    };

    std::vector<ZeroTriple> zeros;
    const long long nA = static_cast<long long>(A.size());
#ifdef _OPENMP
#pragma omp parallel num_threads(thread_count(options))
#endif
    {
        std::vector<ZeroTriple> local;
#ifdef _OPENMP
#pragma omp for schedule(dynamic)
#endif
        for (long long sa = 0; sa < nA; ++sa) {
            const auto ia = static_cast<std::size_t>(sa);
            for (std::size_t ib = 0; ib < B.size(); ++ib) {
                for (std::size_t ic = 0; ic < C.size(); ++ic) {
                    if (ctx && !modular_zero(ia, ib, ic)) continue;
                    if (exact_zero(ia, ib, ic)) {
                        local.push_back({static_cast<std::uint32_t>(ia), static_cast<std::uint32_t>(ib),
                                         static_cast<std::uint32_t>(ic)});
                    }
                }
            }
        }
        merge_local(zeros, local);
    }
    return zeros;
}

std::vector<ZeroTriple> pair_loop(const MPoly& F, const GridSet& A, const GridSet& B, const GridSet& C,
                                  const CountOptions& options)
{
    const std::array<const GridSet*, 3> grids{&A, &B, &C};
    // Membership role: the smallest grid, ties going to the later role.
    std::size_t w = 2;
    for (std::size_t r = 3; r-- > 0;) {
        if (grids[r]->size() < grids[w]->size()) w = r;
    }
    std::array<std::size_t, 2> uv{};
    for (std::size_t r = 0, k = 0; r < 3; ++r) {
        if (r != w) uv[k++] = r;
    }
    const GridSet& U = *grids[uv[0]];
    const GridSet& V = *grids[uv[1]];
    const GridSet& W = *grids[w];

    // alpha[k](u, v) is the coefficient of w^k.
    const auto coeff_polys = F.coefficients_in(F.vars()[w]);
    std::vector<std::vector<Term<2>>> alpha;
    std::array<std::uint32_t, 2> max_exp{0, 0};
    for (const auto& cp : coeff_polys) {
        alpha.push_back(compile<2>(cp));
        for (const auto& t : alpha.back()) {
            max_exp[0] = std::max(max_exp[0], t.e[0]);
            max_exp[1] = std::max(max_exp[1], t.e[1]);
        }
    }
    const std::size_t K = alpha.size();
    const auto pu = power_table(U, max_exp[0]);
    const auto pv = power_table(V, max_exp[1]);

    const auto ctx = make_modular_context(F, grids, options);
    std::vector<std::vector<std::vector<ModTerm<2>>>> malpha;  // [prime][k]
    std::vector<std::array<std::vector<std::vector<std::uint64_t>>, 2>> mpw;
    if (ctx) {
        for (std::size_t q = 0; q < ctx->primes.size(); ++q) {
            std::vector<std::vector<ModTerm<2>>> per_k;
            for (const auto& a : alpha) per_k.push_back(compile_mod(a, ctx->primes[q]));
            malpha.push_back(std::move(per_k));
            mpw.push_back({power_table_mod(ctx->values[q][uv[0]], max_exp[0], ctx->primes[q]),
                           power_table_mod(ctx->values[q][uv[1]], max_exp[1], ctx->primes[q])});
        }
    }

    std::vector<ZeroTriple> zeros;
    const long long total = static_cast<long long>(U.size() * V.size());
#ifdef _OPENMP
#pragma omp parallel num_threads(thread_count(options))
#endif
    {
        std::vector<ZeroTriple> local;
        std::vector<GaussRat> exact(K);
        std::vector<std::vector<std::uint64_t>> mod_coeffs(ctx ? ctx->primes.size() : 0, std::vector<std::uint64_t>(K));
        auto emit = [&](std::size_t iu, std::size_t iv, std::size_t iw) {
            std::array<std::uint32_t, 3> idx{};
            idx[uv[0]] = static_cast<std::uint32_t>(iu);
            idx[uv[1]] = static_cast<std::uint32_t>(iv);
            idx[w] = static_cast<std::uint32_t>(iw);
            local.push_back({idx[0], idx[1], idx[2]});
        };
        auto exact_horner_zero = [&](std::size_t iw) {
            GaussRat acc(0);
            for (std::size_t k = K; k-- > 0;) acc = acc * W[iw] + exact[k];
            return acc.is_zero();
        };
#ifdef _OPENMP
#pragma omp for schedule(dynamic, 16)
#endif
        for (long long flat = 0; flat < total; ++flat) {
            const auto iu = static_cast<std::size_t>(flat) / V.size();
            const auto iv = static_cast<std::size_t>(flat) % V.size();
            bool have_exact = false;
            auto compute_exact = [&]() {
                if (have_exact) return;
                for (std::size_t k = 0; k < K; ++k) {
                    GaussRat s(0);
                    for (const auto& t : alpha[k]) s += t.c * pu[iu][t.e[0]] * pv[iv][t.e[1]];
                    exact[k] = std::move(s);
                }
                have_exact = true;
            };

            if (ctx) {
                bool all_zero_mod = true;
                for (std::size_t q = 0; q < ctx->primes.size(); ++q) {
                    const std::uint64_t p = ctx->primes[q];
                    for (std::size_t k = 0; k < K; ++k) {
                        std::uint64_t s = 0;
                        for (const auto& t : malpha[q][k]) {
                            s = add_mod(s, mul_mod(t.c, mul_mod(mpw[q][0][iu][t.e[0]], mpw[q][1][iv][t.e[1]], p), p), p);
                        }
                        mod_coeffs[q][k] = s;
                        if (s != 0) all_zero_mod = false;
                    }
                }
                if (all_zero_mod) {
                    compute_exact();
                    bool vanishes = std::all_of(exact.begin(), exact.end(), [](const GaussRat& c) { return c.is_zero(); });
                    for (std::size_t iw = 0; iw < W.size(); ++iw) {
                        if (vanishes || exact_horner_zero(iw)) emit(iu, iv, iw);
                    }
                    continue;
                }
                for (std::size_t iw = 0; iw < W.size(); ++iw) {
                    bool candidate = true;
                    for (std::size_t q = 0; q < ctx->primes.size() && candidate; ++q) {
                        const std::uint64_t p = ctx->primes[q];
                        const std::uint64_t x = ctx->values[q][w][iw];
                        std::uint64_t acc = 0;
                        for (std::size_t k = K; k-- > 0;) acc = add_mod(mul_mod(acc, x, p), mod_coeffs[q][k], p);
                        candidate = acc == 0;
                    }
                    if (!candidate) continue;
                    compute_exact();
                    if (exact_horner_zero(iw)) emit(iu, iv, iw);
                }
                continue;
            }

            compute_exact();
            std::size_t top = K;
            while (top > 0 && exact[top - 1].is_zero()) --top;
            if (top == 0) {
                // F(u, v, w) vanishes for every w.
                for (std::size_t iw = 0; iw < W.size(); ++iw) emit(iu, iv, iw);
            } else if (top == 1) {
                // Nonzero constant in w.
            } else if (top == 2) {
                auto hit = W.index_of(-exact[0] / exact[1]);
                if (hit) emit(iu, iv, *hit);
            } else {
                for (std::size_t iw = 0; iw < W.size(); ++iw) {
                    if (exact_horner_zero(iw)) emit(iu, iv, iw);
                }
            }
        }
        merge_local(zeros, local);
    }
    return zeros;
}

void check_instance(const MPoly& F)
{
    if (F.is_zero()) throw InputError("count_zeros: F is identically zero");
    if (F.num_vars() != 3) {
        throw InputError("count_zeros: F must be declared over exactly three variables, got " +
                         std::to_string(F.num_vars()));
    }
}

} // namespace

std::vector<ZeroTriple> find_zeros(const MPoly& F, const GridSet& A, const GridSet& B, const GridSet& C,
                                   const CountOptions& options)
{
    check_instance(F);
    if (A.empty() || B.empty() || C.empty()) return {};
    auto zeros = options.engine == Engine::triple_loop ? triple_loop(F, A, B, C, options) : pair_loop(F, A, B, C, options);
    std::sort(zeros.begin(), zeros.end());
    return zeros;
}

} // namespace eszlab
