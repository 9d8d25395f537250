#include "eszlab/modular.hpp"

#include <algorithm>
#include <random>

namespace eszlab::modular {

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p)
{
    std::uint64_t result = 1 % p;
    base %= p;
    while (exp) {
        if (exp & 1) result = mul_mod(result, base, p);
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    return result;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p)
{
    return pow_mod(a, p - 2, p);
}

bool is_prime(std::uint64_t n)
{
    if (n < 2) return false;
    static constexpr std::uint64_t small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (auto q : small) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (auto a : small) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<std::uint64_t> random_primes(std::size_t count, std::uint64_t seed)
{
    std::mt19937_64 gen(seed);
    std::vector<std::uint64_t> out;
    constexpr std::uint64_t lo = std::uint64_t{1} << 61;
    while (out.size() < count) {
        std::uint64_t candidate = (lo | (gen() & (lo - 1))) | 1;
        if (is_prime(candidate) && std::find(out.begin(), out.end(), candidate) == out.end()) {
            out.push_back(candidate);
        }
    }
    return out;
}

std::optional<std::uint64_t> reduce(const mpq_class& q, std::uint64_t p)
{
    // mpz_fdiv_ui takes unsigned long, 64 bits on LP64 targets.
    static_assert(sizeof(unsigned long) == 8);
    std::uint64_t den = mpz_fdiv_ui(q.get_den_mpz_t(), p);
    if (den == 0) return std::nullopt;
    std::uint64_t num = mpz_fdiv_ui(q.get_num_mpz_t(), p);
    return mul_mod(num, inv_mod(den, p), p);
}

} // namespace eszlab::modular
